#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "jacq/curves.hpp"

using namespace jacq;

TEST_CASE("parsing") {
  CurveSpec c = parse_curve("y^3 = x(x^5-1)");
  CHECK(c.m == 3);
  REQUIRE(c.factors.size() == 2);
  CHECK(c.factors[0].c == 0);
  CHECK(c.factors[0].e == 1);
  CHECK(c.factors[1].k == 5);
  CHECK(c.factors[1].c == 1);
  // round-trips through the formatter
  for (const char* s : {"y^3 = x(x^5-1)", "y^2 = x(x^2-1)(x^2-a^2)",
                        "y^7 = x(x-1)^2", "y^2 = (x^2+1)(x^2-4)"}) {
    CurveSpec a = parse_curve(s);
    CurveSpec b = parse_curve(format_curve(a));
    CHECK(format_curve(a) == format_curve(b));
    CHECK(curve_genus(a) == curve_genus(b));
  }
  CHECK(parse_curve("y^2=x^8-1").factors.size() == 1);
  CHECK(parse_curve("y^2=x^8-1").factors[0].k == 8);
  CHECK(parse_curve("y^2 = x^3").factors[0].e == 3);
  CHECK(parse_curve("y^2=(x^2-a^2)x").factors[1].c == 0);
  CHECK_THROWS_AS(parse_curve("z^2 = x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_curve("y^2 = (x^2-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_curve("y^1 = x"), std::invalid_argument);
}

TEST_CASE("automorphism parsing") {
  MonomialAutomorphism g = parse_automorphism("(z^3*x, z*y) @ N=15");
  CHECK(g.N == 15);
  CHECK(g.a == 3);
  CHECK(g.b == 1);
  g = parse_automorphism("(-x, i*y) @ N=4");
  CHECK(g.a == 2);
  CHECK(g.b == 1);
  g = parse_automorphism("(x, z*y) @ N=7");
  CHECK(g.a == 0);
  CHECK(g.b == 1);
  CHECK(parse_automorphism(format_automorphism(g)).b == 1);
  CHECK_THROWS_AS(parse_automorphism("(z*x, z*y)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_automorphism("(i*x, y) @ N=6"), std::invalid_argument);
}

TEST_CASE("genus of the named models") {
  CHECK(curve_genus(parse_curve("y^3 = x(x^5-1)")) == 4);
  CHECK(curve_genus(parse_curve("y^2 = x(x^8-1)")) == 4);
  CHECK(curve_genus(parse_curve("y^2 = x(x^9-1)")) == 4);
  CHECK(curve_genus(parse_curve("y^3 = x(x^3-1)")) == 3);
  CHECK(curve_genus(parse_curve("y^2 = x(x^7-1)")) == 3);
  CHECK(curve_genus(parse_curve("y^2 = x^8-1")) == 3);
  CHECK(curve_genus(parse_curve("y^7 = x(x-1)^2")) == 3);
  CHECK(curve_genus(parse_curve("y^2 = x(x^2-1)(x^2-a^2)")) == 2);
  CHECK(curve_genus(parse_curve("y^2 = (x^2-1)(x^2-4)(x^2-9)(x^2-a^2)")) == 3);
}

TEST_CASE("differential bases match the tabulated ones") {
  auto names = [](const char* model) {
    CurveSpec c = parse_curve(model);
    std::vector<std::string> out;
    for (const BasisDifferential& w : differential_basis(c))
      out.push_back(format_differential(c, w));
    return out;
  };
  CHECK(names("y^2 = x(x^9-1)") ==
        std::vector<std::string>{"dx/y", "x dx/y", "x^2 dx/y", "x^3 dx/y"});
  CHECK(names("y^2 = x^8-1") ==
        std::vector<std::string>{"dx/y", "x dx/y", "x^2 dx/y"});
  CHECK(names("y^3 = x(x^5-1)") ==
        std::vector<std::string>{"dx/y", "dx/y^2", "x dx/y^2", "x^2 dx/y^2"});
}

TEST_CASE("eigenvalue exponents of the named models") {
  auto exps = [](const char* model, const char* autom) {
    return exponents(eigencharacter(parse_curve(model), parse_automorphism(autom)));
  };
  CHECK(exps("y^3 = x(x^5-1)", "(z^3*x, z*y) @ N=15") == std::vector<int>{1, 2, 4, 7});
  CHECK(exps("y^2 = x(x^8-1)", "(z^2*x, z*y) @ N=16") == std::vector<int>{1, 3, 5, 7});
  CHECK(exps("y^2 = x(x^9-1)", "(z^2*x, z*y) @ N=18") == std::vector<int>{1, 3, 5, 7});
  CHECK(exps("y^3 = x(x^3-1)", "(z^3*x, z*y) @ N=9") == std::vector<int>{1, 2, 4});
  CHECK(exps("y^2 = x(x^7-1)", "(z^2*x, z*y) @ N=14") == std::vector<int>{1, 3, 5});
  CHECK(exps("y^2 = x^8-1", "(z*x, y) @ N=8") == std::vector<int>{1, 2, 3});
  // superelliptic order-7 model: a Galois relabeling of {1,2,4}
  CHECK(exps("y^7 = x(x-1)^2", "(x, z*y) @ N=7") == std::vector<int>{1, 2, 4});
  // the genus-2 and genus-3 witness families (a-independent)
  CHECK(exps("y^2 = x(x^2-1)(x^2-a^2)", "(-x, i*y) @ N=4") == std::vector<int>{1, 3});
  CHECK(exps("y^2 = (x^2-1)(x^2-4)(x^2-9)(x^2-a^2)", "(z*x, z*y) @ N=2") ==
        std::vector<int>{0, 0, 1});
}

TEST_CASE("incompatible automorphisms are rejected") {
  CurveSpec c = parse_curve("y^3 = x(x^5-1)");
  // a = 1 does not fix the branch set of x^5 - 1 modulo 15
  CHECK_THROWS_AS(eigencharacter(c, parse_automorphism("(z*x, z*y) @ N=15")),
                  std::domain_error);
  // wrong weight on y
  CHECK_THROWS_AS(eigencharacter(c, parse_automorphism("(z^3*x, z^2*y) @ N=15")),
                  std::domain_error);
  // order on the curve smaller than the stated N
  CHECK_THROWS_AS(eigencharacter(parse_curve("y^2 = x^8-1"),
                                 parse_automorphism("(z^2*x, y) @ N=8")),
                  std::domain_error);
}

TEST_CASE("basis length equals genus on a random family") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> m_d(2, 9), nf_d(0, 3), k_d(1, 3), e_d(1, 8),
      e0_d(0, 4), c_d(1, 20);
  int done = 0;
  while (done < 400) {
    int m = m_d(rng);
    CurveSpec curve;
    curve.m = m;
    int e0 = e0_d(rng);
    if (e0 > 0) curve.factors.push_back({1, Rat(0), false, e0});
    int nf = nf_d(rng);
    std::set<int> used;
    for (int i = 0; i < nf; ++i) {
      int c = c_d(rng);
      if (!used.insert(c).second) continue;  // keep roots distinct
      int e = e_d(rng);
      if (e % m == 0) e = 1;  // a multiple of m would be an unramified unit
      curve.factors.push_back({k_d(rng), Rat(c), false, e});
    }
    if (curve.factors.empty()) continue;
    // irreducibility of the cover: the local exponents and the degree
    long g = total_degree(curve);
    for (const CurveFactor& f : curve.factors)
      g = std::gcd(g, static_cast<long>(f.e));
    if (std::gcd(g, static_cast<long>(m)) != 1) continue;
    long genus;
    try {
      genus = curve_genus(curve);
    } catch (const std::invalid_argument&) {
      continue;
    }
    CHECK(static_cast<long>(differential_basis(curve).size()) == genus);
    ++done;
  }
}

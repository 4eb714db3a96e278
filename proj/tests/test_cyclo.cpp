#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "jacq/cyclo.hpp"

using namespace jacq;

TEST_CASE("euler phi") {
  CHECK(phi(1) == 1);
  CHECK(phi(2) == 1);
  CHECK(phi(12) == 4);
  CHECK(phi(15) == 8);
  CHECK(phi(18) == 6);
  CHECK(phi(360) == 96);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == std::vector<Int>{-1, 1});
  CHECK(cyclotomic_poly(2) == std::vector<Int>{1, 1});
  CHECK(cyclotomic_poly(6) == std::vector<Int>{1, -1, 1});
  CHECK(cyclotomic_poly(12) == std::vector<Int>{1, 0, -1, 0, 1});
  // degree is phi(n) and the polynomial is monic
  for (int n = 1; n <= 40; ++n) {
    const auto& f = cyclotomic_poly(n);
    CHECK(static_cast<int>(f.size()) == phi(n) + 1);
    CHECK(f.back() == 1);
  }
}

TEST_CASE("roots satisfy their minimal polynomial") {
  for (int n = 2; n <= 30; ++n) {
    Cyc z = Cyc::root(n, 1);
    Cyc acc = Cyc::rational(n, Rat(0));
    Cyc p = Cyc::rational(n, Rat(1));
    const auto& f = cyclotomic_poly(n);
    for (size_t i = 0; i < f.size(); ++i) {
      acc = acc + Cyc::rational(n, Rat(f[i])) * p;
      p = p * z;
    }
    CHECK(acc.is_zero());
  }
}

TEST_CASE("root power arithmetic") {
  for (int n : {5, 8, 12, 15}) {
    CHECK(Cyc::root(n, n) == Cyc::rational(n, Rat(1)));
    CHECK(Cyc::root(n, -1) == Cyc::root(n, n - 1));
    CHECK(Cyc::root(n, 2) == Cyc::root(n, 1) * Cyc::root(n, 1));
    // full root sum vanishes
    Cyc sum(n);
    for (int k = 0; k < n; ++k) sum = sum + Cyc::root(n, k);
    CHECK(sum.is_zero());
  }
  // embedding identities across fields
  CHECK(Cyc::root(3, 1) == Cyc::root(6, 2));
  CHECK(Cyc::root(2, 1) == Cyc::rational(1, Rat(-1)));
  Cyc z6 = Cyc::root(6, 1);
  CHECK(z6 / (Cyc::rational(6, Rat(1)) - z6) == Cyc::root(3, 1));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int n : {5, 8, 12}) {
    for (int trial = 0; trial < 25; ++trial) {
      auto rand_elt = [&] {
        Cyc x(n);
        for (int k = 0; k < n; ++k)
          x = x + Cyc::rational(n, Rat(coef(rng))) * Cyc::root(n, k);
        return x;
      };
      Cyc a = rand_elt(), b = rand_elt(), c = rand_elt();
      CHECK((a + b) * c == a * c + b * c);
      CHECK(a * b == b * a);
      CHECK(a.conj().conj() == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      if (!a.is_zero()) {
        CHECK(a * a.inverse() == Cyc::rational(n, Rat(1)));
        CHECK((b / a) * a == b);
      }
    }
  }
}

TEST_CASE("rational detection") {
  Cyc s(5);
  for (int k = 1; k < 5; ++k) s = s + Cyc::root(5, k);
  auto q = s.as_rational();
  REQUIRE(q.has_value());
  CHECK(*q == -1);
  CHECK(!Cyc::root(5, 1).as_rational().has_value());
}

TEST_CASE("sign of real elements") {
  // 2cos(2 pi/8) = sqrt(2) > 0
  Cyc r = Cyc::root(8, 1) + Cyc::root(8, -1);
  CHECK(r.sign_real() == 1);
  CHECK((-r).sign_real() == -1);
  // 2cos(2 pi 5/12) < 0 is false: cos(150 deg) < 0 -> yes negative
  Cyc s = Cyc::root(12, 5) + Cyc::root(12, -5);
  CHECK(s.sign_real() == -1);
  CHECK(Cyc::rational(12, Rat(0)).sign_real() == 0);
  CHECK_THROWS(Cyc::root(5, 1).sign_real());  // not real

  // oracle: compare with double evaluation on random real combinations
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int n : {7, 9, 16, 15}) {
    for (int trial = 0; trial < 40; ++trial) {
      Cyc x(n);
      double approx = 0;
      for (int k = 0; k < n; ++k) {
        int c = coef(rng);
        x = x + Cyc::rational(n, Rat(c)) * (Cyc::root(n, k) + Cyc::root(n, -k));
        approx += 2.0 * c * std::cos(2 * M_PI * k / n);
      }
      if (std::abs(approx) < 1e-6) continue;  // double precision too coarse
      CHECK(x.sign_real() == (approx > 0 ? 1 : -1));
    }
  }
}

TEST_CASE("linear solver") {
  // unique: x + y = 3, x - y = 1
  {
    auto sol = solve_linear({{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}}, {Rat(3), Rat(1)});
    REQUIRE(sol.kind == LinearSolution::kUnique);
    CHECK(sol.particular == std::vector<Rat>{Rat(2), Rat(1)});
  }
  // infeasible
  {
    auto sol = solve_linear({{Rat(1), Rat(2)}}, {Rat(1), Rat(3)});
    CHECK(sol.kind == LinearSolution::kInfeasible);
  }
  // family: x + y = 2 in two unknowns; nullspace must solve the homogeneous system
  {
    auto sol = solve_linear({{Rat(1)}, {Rat(1)}}, {Rat(2)});
    REQUIRE(sol.kind == LinearSolution::kFamily);
    REQUIRE(sol.nullspace.size() == 1);
    CHECK(sol.particular[0] + sol.particular[1] == 2);
    CHECK(sol.nullspace[0][0] + sol.nullspace[0][1] == 0);
  }
  // random square systems, checked by substitution
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 3;
    std::vector<std::vector<Rat>> cols(n, std::vector<Rat>(n));
    std::vector<Rat> x(n), rhs(n, Rat(0));
    for (int j = 0; j < n; ++j) {
      x[j] = coef(rng);
      for (int i = 0; i < n; ++i) cols[j][i] = coef(rng);
    }
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) rhs[i] += cols[j][i] * x[j];
    auto sol = solve_linear(cols, rhs);
    REQUIRE(sol.kind != LinearSolution::kInfeasible);
    // substitute the particular solution back
    std::vector<Rat> back(n, Rat(0));
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) back[i] += cols[j][i] * sol.particular[j];
    CHECK(back == rhs);
  }
}

TEST_CASE("cyclotomic linear solver overload") {
  // z6/(1-z6) has coefficients solving c0 + c1*z6 = z3
  Cyc z6 = Cyc::root(6, 1);
  auto sol = solve_linear({Cyc::rational(6, Rat(1)), z6}, Cyc::root(3, 1));
  REQUIRE(sol.kind == LinearSolution::kUnique);
  CHECK(sol.particular == std::vector<Rat>{Rat(-1), Rat(1)});
}

TEST_CASE("prime-root rationality forces equal coefficients") {
  // for prime p, sum k_i zeta_p^i rational implies k_1 = ... = k_{p-1}
  for (int p : {3, 5, 7}) {
    int span = (p == 7) ? 2 : 3;
    std::vector<int> k(p - 1, -span);
    while (true) {
      Cyc v(p);
      for (int i = 1; i < p; ++i)
        v = v + Cyc::rational(p, Rat(k[i - 1])) * Cyc::root(p, i);
      bool all_equal = true;
      for (int i = 1; i < p - 1; ++i)
        if (k[i] != k[0]) all_equal = false;
      CHECK(v.as_rational().has_value() == all_equal);
      int j = 0;
      while (j < p - 1 && ++k[j] > span) k[j++] = -span;
      if (j == p - 1) break;
    }
  }
}

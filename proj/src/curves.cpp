#include "jacq/curves.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jacq {

namespace {

[[noreturn]] void bad_curve(const std::string& text, const std::string& why) {
  throw std::invalid_argument("cannot parse curve '" + text + "': " + why);
}

long ceil_div(long a, long b) {  // b > 0
  long q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

// "x", "x^5", "x^2-1", "x^2+1", "x^2-a^2" (pos points past the factor on return)
CurveFactor parse_poly(const std::string& s, size_t& pos, const std::string& whole) {
  CurveFactor f;
  if (pos >= s.size() || s[pos] != 'x') bad_curve(whole, "expected x");
  ++pos;
  long k = 1;
  if (pos < s.size() && s[pos] == '^') {
    ++pos;
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) bad_curve(whole, "expected exponent digits");
    k = std::stol(s.substr(start, pos - start));
  }
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    bool minus = s[pos] == '-';
    ++pos;
    f.k = static_cast<int>(k);
    if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos])) && s[pos] != 'x') {
      // symbolic parameter, e.g. "a" or "a^2"
      ++pos;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      }
      f.symbolic = true;
      f.c = 1;  // placeholder; symbolic roots are generic and pairwise distinct
    } else {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) bad_curve(whole, "expected constant term");
      f.c = Rat(Int(s.substr(start, pos - start)));
    }
    if (minus == false) f.c = -f.c;  // x^k + C == x^k - (-C)
    if (f.c == 0 && !f.symbolic) bad_curve(whole, "zero constant in branch factor");
  } else {
    // plain power of x
    f.k = 1;
    f.c = 0;
    f.e = static_cast<int>(k);
  }
  return f;
}

}  // namespace

CurveSpec parse_curve(const std::string& text) {
  std::string s = strip_spaces(text);
  if (s.size() < 4 || s[0] != 'y') bad_curve(text, "expected y^m = ...");
  size_t pos = 1;
  long m = 2;
  if (s[pos] == '^') {
    ++pos;
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) bad_curve(text, "expected exponent of y");
    m = std::stol(s.substr(start, pos - start));
  }
  if (pos >= s.size() || s[pos] != '=') bad_curve(text, "expected '='");
  ++pos;
  if (m < 2) bad_curve(text, "exponent of y must be >= 2");

  CurveSpec curve;
  curve.m = static_cast<int>(m);
  while (pos < s.size()) {
    CurveFactor f;
    if (s[pos] == '(') {
      size_t close = s.find(')', pos);
      if (close == std::string::npos) bad_curve(text, "unbalanced parenthesis");
      size_t inner = pos + 1;
      f = parse_poly(s, inner, text);
      if (inner != close) bad_curve(text, "trailing characters in factor");
      pos = close + 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) bad_curve(text, "expected multiplicity digits");
        f.e = std::stoi(s.substr(start, pos - start));
      }
    } else {
      // bare run up to the next '(' -- a power of x, or a whole polynomial
      // like "x^8-1" when there are no parentheses at all
      f = parse_poly(s, pos, text);
    }
    if (f.e < 1) bad_curve(text, "multiplicity must be >= 1");
    curve.factors.push_back(f);
  }
  if (curve.factors.empty()) bad_curve(text, "no right-hand side");
  return curve;
}

std::string format_curve(const CurveSpec& curve) {
  std::string out = "y";
  out += "^" + std::to_string(curve.m) + " = ";
  for (const CurveFactor& f : curve.factors) {
    if (f.c == 0 && !f.symbolic) {
      out += "x";
      if (f.e != 1) out += "^" + std::to_string(f.e);
      continue;
    }
    std::string inner = "x";
    if (f.k != 1) inner += "^" + std::to_string(f.k);
    if (f.symbolic) {
      inner += "-a^2";
    } else if (f.c > 0) {
      inner += "-" + f.c.str();
    } else {
      inner += "+" + Rat(-f.c).str();
    }
    out += "(" + inner + ")";
    if (f.e != 1) out += "^" + std::to_string(f.e);
  }
  return out;
}

long total_degree(const CurveSpec& curve) {
  long d = 0;
  for (const CurveFactor& f : curve.factors)
    d += (f.c == 0 && !f.symbolic) ? f.e : long(f.k) * f.e;
  return d;
}

long curve_genus(const CurveSpec& curve) {
  const long m = curve.m;
  const long D = total_degree(curve);
  long ram = 0;  // sum over branch points of (m - gcd(m, local exponent))
  long e0 = 0;
  for (const CurveFactor& f : curve.factors) {
    if (f.c == 0 && !f.symbolic) {
      e0 += f.e;
    } else {
      ram += long(f.k) * (m - std::gcd(m, long(f.e)));
    }
  }
  if (e0 > 0) ram += m - std::gcd(m, e0);
  if (D % m != 0) ram += m - std::gcd(m, D);
  long twice = -2 * m + ram + 2;  // 2g
  if (twice < 0 || twice % 2 != 0)
    throw std::invalid_argument("curve is singular or disconnected as given");
  return twice / 2;
}

std::vector<BasisDifferential> differential_basis(const CurveSpec& curve) {
  const long m = curve.m;
  const long D = total_degree(curve);
  std::vector<BasisDifferential> basis;

  // merge all plain x-powers into one local exponent at x = 0
  long e0 = 0;
  for (const CurveFactor& f : curve.factors)
    if (f.c == 0 && !f.symbolic) e0 += f.e;

  for (int l = 1; l < m; ++l) {
    std::vector<long> gamma;
    long weighted = 0;  // sum k_j * gamma_j
    bool first_x_power = true;
    for (const CurveFactor& f : curve.factors) {
      long e = (f.c == 0 && !f.symbolic) ? e0 : f.e;
      long k = (f.c == 0 && !f.symbolic) ? 1 : f.k;
      long g = 0;
      if (f.c == 0 && !f.symbolic && !first_x_power) {
        gamma.push_back(0);  // the merged exponent sits on the first x factor
        continue;
      }
      if (f.c == 0 && !f.symbolic) first_x_power = false;
      // holomorphy at the branch points of this factor:
      //   gamma >= l*e/m - 1 + 1/r  with r = m / gcd(m, e)
      long r = m / std::gcd(m, e);
      long num = long(l) * e / std::gcd(m, e) - r + 1;
      g = std::max(0L, ceil_div(num, r));
      gamma.push_back(g);
      weighted += k * g;
    }
    // largest admissible extra power of x, from holomorphy over x = infinity
    long B;
    if (D % m != 0) {
      long r_inf = m / std::gcd(m, D);
      long top = long(l) * (D / std::gcd(m, D)) - r_inf - 1;  // r_inf * bound
      B = top / r_inf;
      if (top < 0 && top % r_inf != 0) --B;  // floor for negative values
      B -= weighted;
    } else {
      B = long(l) * D / m - 2 - weighted;
    }
    for (long beta = 0; beta <= B; ++beta)
      basis.push_back({l, beta, gamma});
  }

  if (static_cast<long>(basis.size()) != curve_genus(curve))
    throw std::logic_error("differential basis length disagrees with genus");
  return basis;
}

std::string format_differential(const CurveSpec& curve, const BasisDifferential& w) {
  long x_power = w.beta;
  std::string out;
  for (size_t j = 0; j < curve.factors.size(); ++j) {
    const CurveFactor& f = curve.factors[j];
    if (f.c == 0 && !f.symbolic) {
      x_power += w.gamma[j];
      continue;
    }
    if (w.gamma[j] == 0) continue;
    std::string inner = "x";
    if (f.k != 1) inner += "^" + std::to_string(f.k);
    if (f.symbolic)
      inner += "-a^2";
    else if (f.c > 0)
      inner += "-" + f.c.str();
    else
      inner += "+" + Rat(-f.c).str();
    out += "(" + inner + ")";
    if (w.gamma[j] != 1) out += "^" + std::to_string(w.gamma[j]);
    out += " ";
  }
  if (x_power > 0) {
    std::string xs = "x";
    if (x_power != 1) xs += "^" + std::to_string(x_power);
    out = xs + " " + out;
  }
  out += "dx/y";
  if (w.l != 1) out += "^" + std::to_string(w.l);
  return out;
}

MonomialAutomorphism parse_automorphism(const std::string& text) {
  std::string s = strip_spaces(text);
  auto at = s.find('@');
  if (at == std::string::npos || s.compare(at + 1, 2, "N=") != 0)
    throw std::invalid_argument("automorphism must end with '@ N=<order>'");
  int N = std::stoi(s.substr(at + 3));
  if (N < 1) throw std::invalid_argument("automorphism order must be positive");
  std::string body = s.substr(0, at);
  if (body.size() < 5 || body.front() != '(' || body.back() != ')')
    throw std::invalid_argument("automorphism must be of the form (..x, ..y)");
  body = body.substr(1, body.size() - 2);
  auto comma = body.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("automorphism must have two components");

  auto parse_coeff = [&](std::string part, char var) -> int {
    if (part.empty() || part.back() != var)
      throw std::invalid_argument(std::string("component must act on ") + var);
    part.pop_back();
    if (!part.empty() && part.back() == '*') part.pop_back();
    if (part.empty()) return 0;
    if (part == "-") {
      if (N % 2 != 0) throw std::invalid_argument("'-' requires even order");
      return N / 2;
    }
    if (part == "i") {
      if (N % 4 != 0) throw std::invalid_argument("'i' requires order divisible by 4");
      return N / 4;
    }
    if (part == "z") return 1;
    if (part.size() >= 2 && part[0] == 'z' && part[1] == '^')
      return std::stoi(part.substr(2)) % N;
    throw std::invalid_argument("cannot parse coefficient '" + part + "'");
  };

  MonomialAutomorphism g;
  g.N = N;
  g.a = parse_coeff(body.substr(0, comma), 'x');
  g.b = parse_coeff(body.substr(comma + 1), 'y');
  return g;
}

std::string format_automorphism(const MonomialAutomorphism& g) {
  auto coeff = [&](int c, char var) -> std::string {
    if (c % g.N == 0) return std::string(1, var);
    if (c == 1) return std::string("z*") + var;
    return "z^" + std::to_string(c) + "*" + var;
  };
  return "(" + coeff(g.a, 'x') + ", " + coeff(g.b, 'y') + ") @ N=" + std::to_string(g.N);
}

CharacterSpec eigencharacter(const CurveSpec& curve, const MonomialAutomorphism& g) {
  const long N = g.N;
  const long m = curve.m;
  long a = ((g.a % N) + N) % N;
  long b = ((g.b % N) + N) % N;
  if (std::gcd(std::gcd(a, b), N) != 1)
    throw std::domain_error("automorphism has order smaller than the stated N");

  long e0 = 0;
  for (const CurveFactor& f : curve.factors) {
    if (f.c == 0 && !f.symbolic) {
      e0 += f.e;
    } else if ((a * f.k) % N != 0) {
      throw std::domain_error("automorphism does not preserve the branch locus");
    }
  }
  if ((a * e0 - m * b) % N != 0)
    throw std::domain_error("automorphism does not preserve the curve equation");

  std::vector<BasisDifferential> basis = differential_basis(curve);
  std::vector<int> exps;
  for (const BasisDifferential& w : basis) {
    long x_power = w.beta;  // total power of x in the numerator
    for (size_t j = 0; j < curve.factors.size(); ++j)
      if (curve.factors[j].c == 0 && !curve.factors[j].symbolic)
        x_power += w.gamma[j];
    long e = ((a * (x_power + 1) - b * w.l) % N + N) % N;
    exps.push_back(static_cast<int>(e));
  }
  return character_from_exponents(static_cast<int>(N), exps);
}

}  // namespace jacq

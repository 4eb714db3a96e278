#pragma once

// Superelliptic models y^m = f(x) with f a product of an x-power and factors
// (x^k - c)^e: genus, an explicit basis of holomorphic differentials, and the
// eigenvalue exponents of a monomial automorphism (z^a x, z^b y) acting on
// that basis.

#include <optional>
#include <string>
#include <vector>

#include "jacq/character.hpp"

namespace jacq {

struct CurveFactor {
  int k = 1;        // x^k - c
  Rat c = 0;        // c == 0 encodes a plain x^k factor
  bool symbolic = false;  // c is an unspecified parameter ("a", "a^2", ...)
  int e = 1;        // multiplicity
};

struct CurveSpec {
  int m = 2;  // exponent of y
  std::vector<CurveFactor> factors;
};

// "y^3 = x(x^5-1)", "y^2 = (x^2-1)(x^2-4)(x^2-a^2)", "y^2 = x^8-1", ...
CurveSpec parse_curve(const std::string& text);
std::string format_curve(const CurveSpec& curve);

long total_degree(const CurveSpec& curve);
long curve_genus(const CurveSpec& curve);

// One basis differential x^beta * prod_j (x^{k_j} - c_j)^{gamma_j} dx / y^l.
struct BasisDifferential {
  int l = 1;
  long beta = 0;              // extra power of x
  std::vector<long> gamma;    // one entry per curve factor
};

// Basis of H^0(C, K_C); its length equals the genus.
std::vector<BasisDifferential> differential_basis(const CurveSpec& curve);

// e.g. "x^2 (x^5-1) dx/y^2"
std::string format_differential(const CurveSpec& curve, const BasisDifferential& w);

struct MonomialAutomorphism {
  int N = 1;  // z = zeta_N
  int a = 0;  // x -> z^a x
  int b = 0;  // y -> z^b y
};

// "(z^3*x, z*y) @ N=15"; also accepts "-x" and "i*y" shorthands.
MonomialAutomorphism parse_automorphism(const std::string& text);
std::string format_automorphism(const MonomialAutomorphism& g);

// Character of the automorphism on the differential basis.  Throws
// std::domain_error when the map does not preserve the curve (a*k != 0
// mod N for some branch factor with c != 0, or a*e0 != m*b mod N for the
// x-power factor) or when its order on the curve is smaller than N.
CharacterSpec eigencharacter(const CurveSpec& curve, const MonomialAutomorphism& g);

}  // namespace jacq

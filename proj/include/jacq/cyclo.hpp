#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_n).
//
// Elements are stored in the power basis {1, z, ..., z^(phi(n)-1)} reduced
// modulo the n-th cyclotomic polynomial, so structural equality of the
// coefficient vector is field-element equality.  No floating point is used
// in any decision; the only numeric routine (sign_real) carries a proof
// sketch of why its precision is sufficient.

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace jacq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

int phi(int n);

// Monic n-th cyclotomic polynomial over Z, ascending coefficients,
// computed by the divisor recurrence Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d.
const std::vector<Int>& cyclotomic_poly(int n);

class Cyc {
 public:
  explicit Cyc(int order = 1);           // zero element of Q(zeta_order)
  static Cyc root(int n, long k);        // zeta_n^k
  static Cyc rational(int n, const Rat& q);

  int order() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool operator==(const Cyc& o) const;   // embeds into lcm field if needed

  Cyc embed(int m) const;                // n | m required
  Cyc conj() const;                      // zeta -> zeta^{-1}
  Cyc inverse() const;                   // throws on zero
  std::optional<Rat> as_rational() const;

  Cyc operator-() const;
  friend Cyc operator+(const Cyc& a, const Cyc& b);
  friend Cyc operator-(const Cyc& a, const Cyc& b);
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  friend Cyc operator/(const Cyc& a, const Cyc& b);

  // Sign of a real element (conj(a) == a required).  Exact rational values
  // are decided exactly.  Irrational values are decided by a 100-digit
  // evaluation: a nonzero element with integer coefficients bounded by B in
  // a field of conductor n <= 360 is an algebraic number whose norm is a
  // nonzero rational with bounded denominator, giving |a| >> 1e-80, far
  // above the evaluation error.  Inputs outside that envelope are rejected.
  int sign_real() const;

 private:
  int n_;
  std::vector<Rat> c_;
};

// Exact Gaussian elimination over Q.  The matrix is given column-wise.
struct LinearSolution {
  enum Kind { kUnique, kInfeasible, kFamily } kind;
  std::vector<Rat> particular;             // valid for kUnique / kFamily
  std::vector<std::vector<Rat>> nullspace; // basis, kFamily only
};

LinearSolution solve_linear(const std::vector<std::vector<Rat>>& columns,
                            const std::vector<Rat>& rhs);

// Convenience overload: columns and right-hand side in a common field; each
// cyclotomic equation expands to phi(m) scalar equations.
LinearSolution solve_linear(const std::vector<Cyc>& columns, const Cyc& rhs);

bool is_integer(const Rat& q);
long to_long(const Rat& q);  // requires is_integer and long range

}  // namespace jacq

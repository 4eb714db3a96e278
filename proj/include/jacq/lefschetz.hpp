#pragma once

// Fixed-point counts from the Lefschetz formula, the prime-order existence
// filters, and the Riemann-Hurwitz quotient genus for cyclic actions.

#include <map>
#include <optional>

#include "jacq/character.hpp"

namespace jacq {

// 2 - trace_h1(chi), returned iff it is a rational integer >= 0; an empty
// result means the automorphism is impossible.
std::optional<long> fixed_points(const CharacterSpec& chi);

enum class PrimeFilter {
  kPass,
  kRejectSingleFixedPoint,   // prime order with exactly one fixed point
  kRejectOrderRange,         // p not in {<=g, g+1, 2g+1}
};
PrimeFilter prime_filters(const CharacterSpec& chi);  // order must be prime

struct FixProfile {
  int order = 1;
  // subgroup order e (> 1, e | N) -> |Fix(sigma^{N/e})|
  std::map<int, long> fix;
  // points whose stabilizer has order exactly e (Moebius over the divisor
  // lattice); all entries are non-negative
  std::map<int, long> exact_stabilizer;
};

std::optional<FixProfile> build_fix_profile(const CharacterSpec& chi);

// Solves 2g - 2 = N(2g' - 2) + sum_e exact(e) * (e - 1); returns g' iff it
// is a non-negative integer.
std::optional<long> quotient_genus(const FixProfile& profile, int g, int N);

bool is_prime(int n);

}  // namespace jacq

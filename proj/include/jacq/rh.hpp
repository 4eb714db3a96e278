#pragma once

// Condition RH~ for cyclic groups: search for an admissible system of
// ramification vectors whose derived r*/l values are non-negative integers.
// Realizability of a character as an actual surface action is equivalent to
// this condition.

#include <map>
#include <optional>
#include <string>

#include "jacq/eichler.hpp"

namespace jacq {

// For sigma = tau^s nontrivial in the cyclic group of order N: one chosen
// generator (subgroup order e, exponent t) of every cyclic subgroup that
// properly contains <sigma>, with (tau^t)^(e/|sigma|) = sigma.  The
// canonical choice is the smallest valid t; the generator set itself is not
// unique, so an alternate (largest t) choice is available for invariance
// tests.
std::vector<std::pair<int, int>> cy_generators(int N, int s, bool alternate = false);

struct RhViolation {
  int element_exponent;  // s with sigma = tau^s
  int element_order;
  int residue;           // u
  long r_star;           // the offending value
};

struct RhResult {
  bool realizable = false;
  std::string reason;
  // chosen ramification vector and derived r* for the canonical generator
  // tau^{N/e} of each subgroup order e, indexed by coprime_residues(e);
  // for a realizable character this is the accepting admissible system,
  // otherwise the first candidate assignment searched
  std::map<int, std::vector<long>> r_canonical;
  std::map<int, std::vector<long>> r_star_canonical;
  std::optional<RhViolation> violation;  // present when not realizable
};

RhResult rh_check(const CharacterSpec& chi, bool alternate_generators = false);

}  // namespace jacq

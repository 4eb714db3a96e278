#pragma once

// Condition E~: exact non-negative-integer feasibility of
//   chi(sigma) = 1 + sum_{u in I(m)} f_u * zeta^u / (1 - zeta^u).

#include <vector>

#include "jacq/character.hpp"

namespace jacq {

// positive integers < m coprime to m, ascending
std::vector<int> coprime_residues(int m);

struct ETildeResult {
  enum Kind {
    kFeasible,
    kInfeasibleNegative,   // rational solutions exist but none is a valid f
    kInfeasibleNoRational  // no rational solution at all
  } kind;
  // all non-negative integer solutions, each indexed by coprime_residues(m);
  // every solution sums to the fixed-point count
  std::vector<std::vector<long>> solutions;
  // unique rational solution, as a witness, when kind == kInfeasibleNegative
  // and the linear system is determined
  std::vector<Rat> rational_witness;
};

// fix_count bounds the search in underdetermined systems: sum f_u is forced
// to equal the Lefschetz fixed-point count of the element.
ETildeResult e_tilde_solve(const Cyc& chi_value, int m, long fix_count);

struct ETildeSweep {
  bool pass = true;
  long reject_power = 0;  // smallest d with sigma^d failing, when !pass
};

// Runs e_tilde_solve on every nontrivial power of the generator.  The fix
// profile must already be valid (integral fixed-point counts everywhere).
ETildeSweep e_tilde_all_powers(const CharacterSpec& chi);

}  // namespace jacq

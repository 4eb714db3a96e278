#pragma once

// Eigenvalue data of an order-N automorphism acting on holomorphic
// differentials H^0(C, K_C), stored as multiplicity counts of zeta_N^a.

#include <string>
#include <vector>

#include "jacq/cyclo.hpp"

namespace jacq {

struct CharacterSpec {
  int order = 1;            // N
  int genus = 0;            // sum of counts
  std::vector<int> counts;  // counts[a] = multiplicity of zeta_N^a, size N

  bool operator==(const CharacterSpec&) const = default;
  bool operator<(const CharacterSpec& o) const;
};

CharacterSpec character_from_exponents(int order, std::vector<int> exponents);
std::vector<int> exponents(const CharacterSpec& chi);  // sorted multiset

// Character of sigma^d: exponents map a -> d*a mod N, then exponent and
// order are divided by gcd(N, d).
CharacterSpec power(const CharacterSpec& chi, long d);

CharacterSpec conjugate(const CharacterSpec& chi);  // a -> N - a

Cyc trace_h01(const CharacterSpec& chi);  // sum k_a zeta^a
Cyc trace_h1(const CharacterSpec& chi);   // trace_h01 + conjugate

// True iff the diagonal action has exact order N.
bool is_faithful(const CharacterSpec& chi);

// Reid-Tai age (sum of a * k_a) / N; the local Reid condition is age >= 1.
Rat age(const CharacterSpec& chi);

// Text syntax "N=12:[1,3,5]" used by the CLI.
CharacterSpec parse_character(const std::string& text);
std::string format_character(const CharacterSpec& chi);

}  // namespace jacq

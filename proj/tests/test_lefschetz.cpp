#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacq/lefschetz.hpp"

using namespace jacq;

TEST_CASE("primality helper") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK(!is_prime(1));
  CHECK(!is_prime(15));
}

TEST_CASE("fixed point counts") {
  // exponents {0,1,2,3} at order 7: the nontrivial roots sum to -1, giving
  // trace 1 on H^1 and a single fixed point
  CharacterSpec chi = character_from_exponents(7, {0, 1, 2, 3});
  auto f = fixed_points(chi);
  REQUIRE(f.has_value());
  CHECK(*f == 1);

  // order 4, counts (3,0,0,1): trace 6 on H^1 -> Fix = -4 -> invalid
  CHECK(!fixed_points(CharacterSpec{4, 4, {3, 0, 0, 1}}).has_value());

  // irrational trace -> invalid
  CHECK(!fixed_points(character_from_exponents(8, {1, 2, 6})).has_value());

  // the 4g+2 extremal character: trace 1 on H^1, a single fixed point
  CHECK(fixed_points(character_from_exponents(18, {1, 3, 5, 7})) == 1);
}

TEST_CASE("prime order filters") {
  // one fixed point rejects even when the order range would also reject
  CHECK(prime_filters(character_from_exponents(7, {0, 1, 2, 3})) ==
        PrimeFilter::kRejectSingleFixedPoint);
  // 7 at genus 3 = 2g+1 passes the range
  CHECK(prime_filters(character_from_exponents(7, {1, 2, 3})) == PrimeFilter::kPass);
  // 7 at genus 4: 7 is not <= 4, not 5, not 9
  CHECK(prime_filters(character_from_exponents(7, {1, 2, 3, 4})) ==
        PrimeFilter::kRejectOrderRange);
  CHECK_THROWS(prime_filters(character_from_exponents(6, {1, 2, 3})));
}

TEST_CASE("fix profile") {
  // order 12, exponents {1,3,5}
  CharacterSpec chi = character_from_exponents(12, {1, 3, 5});
  auto profile = build_fix_profile(chi);
  REQUIRE(profile.has_value());
  CHECK(profile->fix.at(12) == 2);
  CHECK(profile->fix.at(2) == 8);
  // summing exact-stabilizer counts over the divisor lattice recovers fix
  for (const auto& [e, f] : profile->fix) {
    long total = 0;
    for (const auto& [e2, cnt] : profile->exact_stabilizer)
      if (e2 % e == 0) total += cnt;
    CHECK(total == f);
  }
  auto g = quotient_genus(*profile, 3, 12);
  REQUIRE(g.has_value());
  CHECK(*g == 0);

  // eigenvalues {-omega, omega^2, omega^2} at order 6: sigma fixes 3 points
  // but sigma^3 fixes none, so the exact-stabilizer count goes negative
  CHECK(!build_fix_profile(character_from_exponents(6, {5, 4, 4})).has_value());
}

TEST_CASE("quotient genus rejects non-integral solutions") {
  FixProfile p;
  p.order = 4;
  p.fix = {{2, 1}, {4, 1}};
  p.exact_stabilizer = {{4, 1}, {2, 0}};
  // 2g - 2 - ram = 2 - 3 = -1, not divisible by 4
  CHECK(!quotient_genus(p, 2, 4).has_value());
  // genus 4, order 6, counts (0,3,1,0,0,0) yields quotient genus 0
  auto profile = build_fix_profile(CharacterSpec{6, 4, {0, 3, 1, 0, 0, 0}});
  REQUIRE(profile.has_value());
  CHECK(quotient_genus(*profile, 4, 6) == 0);
}

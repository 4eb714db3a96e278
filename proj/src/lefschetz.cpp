#include "jacq/lefschetz.hpp"

#include <stdexcept>

namespace jacq {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<long> fixed_points(const CharacterSpec& chi) {
  Cyc t = Cyc::rational(chi.order, Rat(2)) - trace_h1(chi);
  auto q = t.as_rational();
  if (!q || !is_integer(*q)) return std::nullopt;
  long v = to_long(*q);
  if (v < 0) return std::nullopt;
  return v;
}

PrimeFilter prime_filters(const CharacterSpec& chi) {
  int p = chi.order;
  int g = chi.genus;
  if (!is_prime(p)) throw std::invalid_argument("prime_filters: order is composite");
  auto f = fixed_points(chi);
  if (f && *f == 1) return PrimeFilter::kRejectSingleFixedPoint;
  if (!(p <= g || p == g + 1 || p == 2 * g + 1)) return PrimeFilter::kRejectOrderRange;
  return PrimeFilter::kPass;
}

std::optional<FixProfile> build_fix_profile(const CharacterSpec& chi) {
  int N = chi.order;
  FixProfile profile;
  profile.order = N;
  for (int e = 2; e <= N; ++e) {
    if (N % e != 0) continue;
    auto f = fixed_points(power(chi, N / e));
    if (!f) return std::nullopt;
    profile.fix[e] = *f;
  }
  // exact-stabilizer counts, top of the lattice downwards
  for (auto it = profile.fix.rbegin(); it != profile.fix.rend(); ++it) {
    int e = it->first;
    long exact = it->second;
    for (const auto& [e2, cnt] : profile.exact_stabilizer)
      if (e2 > e && e2 % e == 0) exact -= cnt;
    if (exact < 0) return std::nullopt;
    profile.exact_stabilizer[e] = exact;
  }
  return profile;
}

std::optional<long> quotient_genus(const FixProfile& profile, int g, int N) {
  long ram = 0;
  for (const auto& [e, cnt] : profile.exact_stabilizer) ram += cnt * (e - 1);
  long lhs = 2L * g - 2 - ram;  // = N * (2g' - 2)
  if (lhs % N != 0) return std::nullopt;
  long twice = lhs / N + 2;
  if (twice % 2 != 0 || twice < 0) return std::nullopt;
  return twice / 2;
}

}  // namespace jacq

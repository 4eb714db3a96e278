#include "jacq/rh.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "jacq/lefschetz.hpp"

namespace jacq {

namespace {

int element_order(int N, int s) { return N / std::gcd(N, s); }

long mod_inverse(long a, long m) {
  long t = 0, nt = 1, r = m, nr = ((a % m) + m) % m;
  while (nr != 0) {
    long q = r / nr;
    t -= q * nt; std::swap(t, nt);
    r -= q * nr; std::swap(r, nr);
  }
  if (r != 1) throw std::logic_error("mod_inverse: arguments not coprime");
  return ((t % m) + m) % m;
}

}  // namespace

std::vector<std::pair<int, int>> cy_generators(int N, int s, bool alternate) {
  s = ((s % N) + N) % N;
  if (s == 0) throw std::invalid_argument("cy_generators: identity element");
  int ord = element_order(N, s);
  std::vector<std::pair<int, int>> out;
  for (int e = 2 * ord; e <= N; e += ord) {
    if (N % e != 0) continue;
    int chosen = -1;
    for (int t = 0; t < N; ++t) {
      if (std::gcd(N, t) != N / e) continue;            // tau^t must have order e
      if ((long(t) * (e / ord)) % N != s) continue;     // and power down to sigma
      chosen = t;
      if (!alternate) break;
    }
    if (chosen < 0) throw std::logic_error("cy_generators: no generator found");
    out.emplace_back(e, chosen);
  }
  return out;
}

namespace {

// Ramification vector of tau^s, order e, derived from the vector R_e chosen
// for the canonical generator tau^{N/e} via the Galois consistency rule
// r_{tau^s}(u) = R_e(u * w^{-1} mod e) with tau^s = (tau^{N/e})^w.
std::vector<long> transformed_r(const std::vector<long>& canonical, int N, int s) {
  int e = element_order(N, s);
  long w = (long(s) / (N / e)) % e;
  long winv = mod_inverse(w, e);
  std::vector<int> res = coprime_residues(e);
  std::vector<long> out(res.size());
  for (size_t i = 0; i < res.size(); ++i) {
    long v = (res[i] * winv) % e;
    auto it = std::lower_bound(res.begin(), res.end(), int(v));
    out[i] = canonical[it - res.begin()];
  }
  return out;
}

}  // namespace

RhResult rh_check(const CharacterSpec& chi, bool alternate_generators) {
  const int N = chi.order;
  if (N < 2) throw std::invalid_argument("rh_check: order must be >= 2");

  // E~-feasible ramification vectors for the canonical generator of each
  // cyclic subgroup, keyed by subgroup order.  Fixed-point counts are taken
  // per subgroup; cross-subgroup consistency is exactly what the r* values
  // test, so it is not assumed here.
  std::vector<int> subgroup_orders;
  std::vector<std::vector<std::vector<long>>> feasible;
  for (int e = 2; e <= N; ++e) {
    if (N % e != 0) continue;
    CharacterSpec chi_e = power(chi, N / e);
    auto fix = fixed_points(chi_e);
    if (!fix) {
      RhResult out;
      out.reason = "invalid trace for subgroup order " + std::to_string(e);
      return out;
    }
    ETildeResult r = e_tilde_solve(trace_h01(chi_e), e, *fix);
    if (r.kind != ETildeResult::kFeasible) {
      RhResult out;
      out.reason = "no ramification vector for subgroup order " + std::to_string(e);
      return out;
    }
    subgroup_orders.push_back(e);
    feasible.push_back(std::move(r.solutions));
  }

  // Elements by decreasing order; the r* recursion only consults elements of
  // strictly larger order, which are then already computed.
  std::vector<int> elements;
  for (int s = 1; s < N; ++s) elements.push_back(s);
  std::sort(elements.begin(), elements.end(), [&](int a, int b) {
    return element_order(N, a) > element_order(N, b);
  });

  const size_t k = subgroup_orders.size();
  std::vector<size_t> pick(k, 0);
  RhResult first_candidate;
  bool have_first = false;

  while (true) {
    std::map<int, const std::vector<long>*> assignment;
    for (size_t i = 0; i < k; ++i)
      assignment[subgroup_orders[i]] = &feasible[i][pick[i]];

    std::vector<std::vector<long>> r_star(N);  // by element exponent s
    bool admissible = true;
    std::optional<RhViolation> violation;

    for (int s : elements) {
      int ord = element_order(N, s);
      std::vector<int> res = coprime_residues(ord);
      std::vector<long> rs = transformed_r(*assignment.at(ord), N, s);
      for (auto [e, t] : cy_generators(N, s, alternate_generators)) {
        const std::vector<long>& upstream = r_star[t];
        std::vector<int> res_e = coprime_residues(e);
        for (size_t i = 0; i < res.size(); ++i)
          for (size_t j = 0; j < res_e.size(); ++j)
            if (res_e[j] % ord == res[i]) rs[i] -= upstream[j];
      }
      // l = r* * |sigma| / N must be a non-negative integer for every u
      for (size_t i = 0; i < res.size(); ++i) {
        if (rs[i] < 0 || (rs[i] * ord) % N != 0) {
          admissible = false;
          if (!violation) violation = RhViolation{s, ord, res[i], rs[i]};
        }
      }
      r_star[s] = std::move(rs);
      if (admissible == false && have_first) break;  // keep full data once
    }

    RhResult out;
    out.realizable = admissible;
    for (size_t i = 0; i < k; ++i) {
      int e = subgroup_orders[i];
      out.r_canonical[e] = feasible[i][pick[i]];
      if (!r_star[N / e].empty()) out.r_star_canonical[e] = r_star[N / e];
    }
    if (admissible) return out;
    out.violation = violation;
    if (!have_first) {
      first_candidate = std::move(out);
      have_first = true;
    }

    // next point of the Cartesian product
    size_t i = 0;
    while (i < k && ++pick[i] == feasible[i].size()) pick[i++] = 0;
    if (i == k) break;
  }

  first_candidate.reason = "no admissible assignment of ramification vectors";
  return first_candidate;
}

}  // namespace jacq

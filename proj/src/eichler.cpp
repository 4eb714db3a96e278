#include "jacq/eichler.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>

#include "jacq/lefschetz.hpp"

namespace jacq {

std::vector<int> coprime_residues(int m) {
  std::vector<int> out;
  for (int u = 1; u < m; ++u)
    if (std::gcd(u, m) == 1) out.push_back(u);
  if (m == 1) out.push_back(0);  // unused; guarded by callers
  return out;
}

namespace {

std::vector<Cyc> eichler_columns(int m) {
  std::vector<Cyc> cols;
  for (int u : coprime_residues(m)) {
    Cyc zu = Cyc::root(m, u);
    cols.push_back(zu / (Cyc::rational(m, Rat(1)) - zu));
  }
  return cols;
}

// all non-negative integer vectors of the given length summing to total
void compositions(int length, long total, std::vector<long>& current,
                  const std::function<void(const std::vector<long>&)>& emit) {
  if (length == 1) {
    current.push_back(total);
    emit(current);
    current.pop_back();
    return;
  }
  for (long v = 0; v <= total; ++v) {
    current.push_back(v);
    compositions(length - 1, total - v, current, emit);
    current.pop_back();
  }
}

}  // namespace

ETildeResult e_tilde_solve(const Cyc& chi_value, int m, long fix_count) {
  if (m < 2) throw std::invalid_argument("e_tilde_solve: order must be >= 2");
  std::vector<Cyc> cols = eichler_columns(m);
  Cyc rhs = chi_value - Cyc::rational(m, Rat(1));
  LinearSolution lin = solve_linear(cols, rhs);

  ETildeResult out;
  if (lin.kind == LinearSolution::kInfeasible) {
    out.kind = ETildeResult::kInfeasibleNoRational;
    return out;
  }
  if (lin.kind == LinearSolution::kUnique) {
    bool ok = true;
    std::vector<long> f;
    long sum = 0;
    for (const Rat& q : lin.particular) {
      if (!is_integer(q) || q < 0) { ok = false; break; }
      f.push_back(to_long(q));
      sum += f.back();
    }
    if (!ok) {
      out.kind = ETildeResult::kInfeasibleNegative;
      out.rational_witness = lin.particular;
      return out;
    }
    if (sum != fix_count)
      throw std::logic_error("e_tilde_solve: solution sum disagrees with fixed-point count");
    out.kind = ETildeResult::kFeasible;
    out.solutions.push_back(std::move(f));
    return out;
  }

  // underdetermined: sum f_u is forced to the fixed-point count, so the
  // search space is a finite simplex
  int width = static_cast<int>(cols.size());
  std::vector<long> current;
  compositions(width, fix_count, current, [&](const std::vector<long>& f) {
    Cyc acc(m);
    for (int i = 0; i < width; ++i)
      if (f[i] != 0) acc = acc + Cyc::rational(m, Rat(f[i])) * cols[i];
    if (acc == rhs) out.solutions.push_back(f);
  });
  if (out.solutions.empty()) {
    out.kind = ETildeResult::kInfeasibleNegative;
    out.rational_witness = lin.particular;
  } else {
    out.kind = ETildeResult::kFeasible;
  }
  return out;
}

ETildeSweep e_tilde_all_powers(const CharacterSpec& chi) {
  int N = chi.order;
  for (long d = 1; d < N; ++d) {
    CharacterSpec chi_d = power(chi, d);
    if (chi_d.order < 2) continue;
    auto fix = fixed_points(chi_d);
    if (!fix) return {false, d};  // impossible trace; callers normally pre-filter
    ETildeResult r = e_tilde_solve(trace_h01(chi_d), chi_d.order, *fix);
    if (r.kind != ETildeResult::kFeasible) return {false, d};
  }
  return {true, 0};
}

}  // namespace jacq

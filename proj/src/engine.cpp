#include "jacq/engine.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "jacq/curves.hpp"
#include "jacq/lefschetz.hpp"

namespace jacq {

FilterSet all_filters() {
  return {Filter::kTrace, Filter::kPrime, Filter::kQuotientGenus,
          Filter::kETilde, Filter::kRh};
}

std::string filter_name(Filter f) {
  switch (f) {
    case Filter::kTrace: return "trace";
    case Filter::kPrime: return "prime";
    case Filter::kQuotientGenus: return "genus";
    case Filter::kETilde: return "etilde";
    case Filter::kRh: return "rh";
  }
  return "?";
}

std::optional<Filter> filter_from_name(const std::string& name) {
  for (Filter f : {Filter::kTrace, Filter::kPrime, Filter::kQuotientGenus,
                   Filter::kETilde, Filter::kRh})
    if (filter_name(f) == name) return f;
  return std::nullopt;
}

std::string status_name(Status s) {
  switch (s) {
    case Status::kRejectedTrace: return "rejected-trace";
    case Status::kRejectedPrimeFilter: return "rejected-prime-filter";
    case Status::kRejectedQuotientGenus: return "rejected-quotient-genus";
    case Status::kRejectedETilde: return "rejected-etilde";
    case Status::kRejectedRh: return "rejected-rh";
    case Status::kReidPass: return "reid-pass";
    case Status::kUniruled: return "uniruled";
  }
  return "?";
}

namespace {

// all count vectors with the given sum, lexicographically ascending
void each_composition(int slots, int total,
                      const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> counts(slots, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == slots - 1) {
      counts[pos] = left;
      emit(counts);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      counts[pos] = v;
      rec(pos + 1, left - v);
    }
    counts[pos] = 0;
  };
  rec(0, total);
}

}  // namespace

std::vector<CharacterSpec> enumerate_candidates(int genus, int order) {
  if (genus < 1 || order < 2)
    throw std::invalid_argument("enumerate_candidates: bad genus or order");
  std::vector<CharacterSpec> out;
  each_composition(order, genus, [&](const std::vector<int>& counts) {
    CharacterSpec chi{order, genus, counts};
    if (is_faithful(chi)) out.push_back(std::move(chi));
  });
  return out;
}

Verdict classify(const CharacterSpec& chi, const FilterSet& filters) {
  Verdict v;
  v.chi = chi;
  const int N = chi.order;

  auto profile = build_fix_profile(chi);
  if (filters.count(Filter::kTrace) && !profile) {
    v.status = Status::kRejectedTrace;
    return v;
  }
  if (filters.count(Filter::kPrime) && is_prime(N)) {
    PrimeFilter pf = prime_filters(chi);
    if (pf != PrimeFilter::kPass) {
      v.status = Status::kRejectedPrimeFilter;
      v.notes.push_back(pf == PrimeFilter::kRejectSingleFixedPoint
                            ? "exactly one fixed point"
                            : "prime order outside the admissible range");
      return v;
    }
  }
  if (filters.count(Filter::kQuotientGenus) && profile &&
      !quotient_genus(*profile, chi.genus, N)) {
    v.status = Status::kRejectedQuotientGenus;
    return v;
  }
  if (filters.count(Filter::kETilde)) {
    ETildeSweep sweep = e_tilde_all_powers(chi);
    if (!sweep.pass) {
      v.status = Status::kRejectedETilde;
      v.detail = sweep.reject_power;
      return v;
    }
  }
  if (filters.count(Filter::kRh)) {
    RhResult rh = rh_check(chi);
    if (!rh.realizable) {
      v.status = Status::kRejectedRh;
      if (!rh.reason.empty()) v.notes.push_back(rh.reason);
      return v;
    }
  }

  // global Reid condition over every nontrivial power
  for (long d = 1; d < N; ++d) {
    CharacterSpec chi_d = power(chi, d);
    if (chi_d.order < 2) continue;
    if (age(chi_d) < 1) {
      v.status = Status::kUniruled;
      v.detail = d;
      return v;
    }
  }
  v.status = Status::kReidPass;
  return v;
}

std::vector<int> canonical_exponents(const CharacterSpec& chi) {
  std::vector<int> base = exponents(chi);
  if (chi.order < 2) return base;
  std::vector<int> best;
  for (int t = 1; t < chi.order; ++t) {
    if (std::gcd(t, chi.order) != 1) continue;
    std::vector<int> e;
    e.reserve(base.size());
    for (int a : base) e.push_back(static_cast<int>(long(a) * t % chi.order));
    std::sort(e.begin(), e.end());
    if (best.empty() || e < best) best = std::move(e);
  }
  return best;
}

std::optional<KnownCurve> known_curve(int genus, int order) {
  static const std::vector<KnownCurve> table = {
      {4, 18, true, "y^2 = x(x^9-1)", "(z^2*x, z*y) @ N=18", {1, 3, 5, 7}},
      {4, 16, true, "y^2 = x(x^8-1)", "(z^2*x, z*y) @ N=16", {1, 3, 5, 7}},
      {4, 15, true, "y^3 = x(x^5-1)", "(z^3*x, z*y) @ N=15", {1, 2, 4, 7}},
      {4, 14, false, "", "", {}},
      {3, 14, true, "y^2 = x(x^7-1)", "(z^2*x, z*y) @ N=14", {1, 3, 5}},
      {3, 9, true, "y^3 = x(x^3-1)", "(z^3*x, z*y) @ N=9", {1, 2, 4}},
      {3, 10, false, "", "", {}},
  };
  for (const KnownCurve& kc : table)
    if (kc.genus == genus && kc.order == order) return kc;
  return std::nullopt;
}

namespace {

long reid_witness_power(const CharacterSpec& chi) {
  for (long d = 1; d < chi.order; ++d) {
    CharacterSpec chi_d = power(chi, d);
    if (chi_d.order < 2) continue;
    if (age(chi_d) < 1) return d;
  }
  return 0;
}

void add_note_once(std::vector<std::string>& notes, const std::string& note) {
  if (std::find(notes.begin(), notes.end(), note) == notes.end())
    notes.push_back(note);
}

}  // namespace

namespace {

// deterministic parallel map: verdicts land at their candidate's index
std::vector<Verdict> classify_all(const std::vector<CharacterSpec>& cands,
                                  const FilterSet& filters, int threads) {
  std::vector<Verdict> verdicts(cands.size());
  if (threads <= 1 || cands.size() < 2) {
    for (size_t i = 0; i < cands.size(); ++i) verdicts[i] = classify(cands[i], filters);
    return verdicts;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < cands.size(); i = next++)
      verdicts[i] = classify(cands[i], filters);
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return verdicts;
}

}  // namespace

ClassificationReport classify_genus(int genus, std::optional<int> only_order,
                                    const FilterSet& filters, int threads) {
  if (genus < 2) throw std::invalid_argument("classify_genus: genus must be >= 2");
  ClassificationReport report;
  report.genus = genus;
  report.only_order = only_order;

  int lo = only_order.value_or(2);
  int hi = only_order.value_or(4 * genus + 2);
  for (int N = lo; N <= hi; ++N) {
    OrderSummary os;
    os.order = N;
    std::set<std::vector<int>> seen_uni, seen_reid;
    std::vector<CharacterSpec> cands = enumerate_candidates(genus, N);
    os.candidates = static_cast<long>(cands.size());
    std::vector<Verdict> verdicts = classify_all(cands, filters, threads);
    for (size_t ci = 0; ci < cands.size(); ++ci) {
      const CharacterSpec& chi = cands[ci];
      const Verdict& v = verdicts[ci];
      ++os.tally[v.status];
      if (v.status == Status::kUniruled) {
        std::vector<int> ce = canonical_exponents(v.chi);
        if (seen_uni.insert(ce).second) {
          WitnessReport w;
          w.order = N;
          w.exponents = ce;
          w.power = reid_witness_power(character_from_exponents(N, ce));
          if (auto kc = known_curve(genus, N); kc && kc->exists) {
            CharacterSpec ref = character_from_exponents(N, kc->exponents);
            if (canonical_exponents(ref) == ce) w.curve_model = kc->model;
          }
          os.uniruled.push_back(std::move(w));
        }
        if (genus == 3 && N == 12 && ce == std::vector<int>{1, 3, 5})
          add_note_once(os.notes,
                        "admissible system for exponents {1,3,5} is forced; its "
                        "derived values at the order-2 and order-3 elements differ "
                        "from the reference tabulation");
      } else if (v.status == Status::kReidPass) {
        std::vector<int> ce = canonical_exponents(v.chi);
        if (seen_reid.insert(ce).second) os.reid_pass.push_back(ce);
        if (genus == 2 && N == 4 && ce == std::vector<int>{1, 3})
          add_note_once(os.notes,
                        "Reid-passing order-4 character {1,3} is absent from the "
                        "reference order list {2,3,6}, although the reference's own "
                        "genus-2 family construction realizes it");
        if (genus == 4 && N == 16)
          add_note_once(os.notes,
                        "exponent sum equals the group order, so the global Reid "
                        "condition holds; the reference text asserts the opposite "
                        "while reaching the same not-uniruled verdict");
      } else if (v.status == Status::kRejectedETilde && genus == 4 && N == 6 &&
                 chi.counts == std::vector<int>{0, 3, 1, 0, 0, 0}) {
        add_note_once(os.notes,
                      "counts (0,3,1,0,0,0) are rejected at the order-6 element; "
                      "the reference tabulation attributes the rejection to the "
                      "order-3 power, whose equation is feasible");
      }
    }
    // cross-check against the tabulated extremal curve, when one exists
    if (auto kc = known_curve(genus, N); kc && kc->exists) {
      CharacterSpec derived =
          eigencharacter(parse_curve(kc->model), parse_automorphism(kc->automorphism));
      std::vector<int> ce = canonical_exponents(derived);
      if (seen_uni.count(ce) || seen_reid.count(ce))
        os.notes.push_back("extremal model " + kc->model +
                           " reproduces a realizable character");
      else
        os.notes.push_back("extremal model " + kc->model +
                           " character missing from realizable verdicts");
    }
    report.orders.push_back(std::move(os));
  }
  return report;
}

std::vector<TableRow> table_rows(int genus, int order, bool full_universe) {
  if (genus < 2 || order < 2) throw std::invalid_argument("table_rows: bad arguments");
  const bool restrict_traces = !(genus == 4 && order == 4);
  std::vector<TableRow> rows;
  each_composition(order, genus, [&](const std::vector<int>& counts) {
    CharacterSpec chi{order, genus, counts};
    if (!full_universe) {
      // the reference universe: sets failing the global Reid bound at sigma
      long weighted = 0;
      for (int a = 0; a < order; ++a) weighted += long(a) * counts[a];
      if (weighted >= order) return;
    }
    if (restrict_traces) {
      // the printed inequality systems: trace on H^1 at most 2 for sigma and
      // all proper powers along the divisor lattice
      for (int d = 1; d < order; ++d) {
        if (order % d != 0) continue;
        Cyc slack = Cyc::rational(1, Rat(2)) - trace_h1(power(chi, d));
        if (slack.sign_real() < 0) return;
      }
    }
    TableRow row;
    row.counts = counts;
    row.fix = fixed_points(chi);
    row.survivor = row.fix.has_value();
    rows.push_back(std::move(row));
  });
  return rows;
}

// --- analytic bound ---------------------------------------------------------

namespace {
using Big = boost::multiprecision::cpp_bin_float_50;

Big to_big(const Rat& q) {
  return Big(numerator(q).str()) / Big(denominator(q).str());
}

Big margin_fn(const Big& x) {
  return cos(x) - 1 + Big(10) * x / 13;
}
}  // namespace

BoundCertificate bound_certificate(int genus) {
  if (genus < 2) throw std::invalid_argument("bound_certificate: genus must be >= 2");
  BoundCertificate cert;
  cert.threshold_low = Rat(5833, 1000);
  cert.threshold_high = Rat(5834, 1000);
  Big threshold = 1 + 20 * boost::math::constants::pi<Big>() / 13;
  if (!(to_big(cert.threshold_low) < threshold && threshold < to_big(cert.threshold_high)))
    throw std::logic_error("bound_certificate: threshold bracket failed");
  cert.kind = genus >= 6 ? BoundCertificate::kCertified
                         : BoundCertificate::kRequiresExhaustive;
  return cert;
}

CosLemmaResult verify_cos_lemma(const Rat& step, const Rat& range_end) {
  if (step <= 0) throw std::invalid_argument("verify_cos_lemma: step must be positive");
  const Big lipschitz = 1 + Big(10) / 13;  // |f'| <= 1 + 10/13

  std::vector<Big> grid;
  Rat x = step;
  while (x < range_end) {
    grid.push_back(to_big(x));
    x += step;
  }
  grid.push_back(to_big(range_end));

  CosLemmaResult out;
  out.certified = true;

  // near zero: cos x >= 1 - x^2/2 gives f(x) >= x*(10/13 - x/2) > 0 up to 20/13
  if (!(grid.front() < Big(20) / 13)) out.certified = false;

  Big min_value = margin_fn(grid.front());
  Big prev_x = grid.front(), prev_f = min_value;
  for (size_t i = 1; i < grid.size(); ++i) {
    Big f = margin_fn(grid[i]);
    if (f < min_value) min_value = f;
    // on [a,b]: f >= (f(a)+f(b))/2 - L*(b-a)/2
    if ((prev_f + f) / 2 - lipschitz * (grid[i] - prev_x) / 2 < 0) out.certified = false;
    prev_x = grid[i];
    prev_f = f;
  }
  // interior critical points of f
  for (Big c : {asin(Big(10) / 13),
                boost::math::constants::pi<Big>() - asin(Big(10) / 13)}) {
    if (c <= 0 || c > to_big(range_end)) continue;
    Big f = margin_fn(c);
    if (f < min_value) min_value = f;
    if (f < 0) out.certified = false;
  }

  out.min_margin = static_cast<double>(min_value);
  out.min_margin_text = min_value.str(40);
  return out;
}

// --- CLI-facing orchestration -----------------------------------------------

CurveReport verify_curve(const std::string& model, const std::string& automorphism) {
  CurveSpec curve = parse_curve(model);
  MonomialAutomorphism g = parse_automorphism(automorphism);

  CurveReport rep;
  rep.model = format_curve(curve);
  rep.automorphism = format_automorphism(g);
  rep.genus = curve_genus(curve);
  for (const BasisDifferential& w : differential_basis(curve))
    rep.basis.push_back(format_differential(curve, w));

  CharacterSpec chi = eigencharacter(curve, g);
  rep.exponents = exponents(chi);
  for (long d = 1; d < g.N; ++d) {
    CharacterSpec chi_d = power(chi, d);
    if (chi_d.order < 2) continue;
    Rat a = age(chi_d);
    rep.ages.emplace_back(d, a.str());
    if (a < 1 && rep.witness_power == 0) {
      rep.uniruled = true;
      rep.witness_power = d;
    }
  }
  if (!build_fix_profile(chi))
    rep.notes.push_back("eigencharacter fails the fixed-point profile check");
  return rep;
}

GroupOrdersReport group_orders(int genus, const std::vector<int>& orders) {
  for (int n : orders)
    if (n < 1) throw std::invalid_argument("group_orders: orders must be positive");

  GroupOrdersReport rep;
  rep.genus = genus;
  rep.orders = orders;

  ClassificationReport sweep = classify_genus(genus);
  for (const OrderSummary& os : sweep.orders) {
    if (os.uniruled.empty()) continue;
    if (std::find(orders.begin(), orders.end(), os.order) == orders.end()) continue;
    for (const WitnessReport& w : os.uniruled) rep.flagged.push_back(w);
  }
  if (rep.flagged.empty()) {
    rep.verdict = "not-uniruled";
    rep.notes.push_back("no uniruled witness possible at the supplied orders");
    return rep;
  }

  // order-level coincidences that can still be ruled out
  std::set<int> unresolved;
  for (const WitnessReport& w : rep.flagged) unresolved.insert(w.order);
  if (genus == 3 && unresolved.count(7)) {
    // the unique order-7 action on a genus-3 curve: both Galois orbit
    // representatives of its eigencharacter have age >= 1
    CharacterSpec klein = eigencharacter(parse_curve("y^7 = x(x-1)^2"),
                                         parse_automorphism("(x, z*y) @ N=7"));
    bool all_ge_1 = true;
    for (long d = 1; d < 7; ++d)
      if (age(power(klein, d)) < 1) all_ge_1 = false;
    if (all_ge_1) {
      unresolved.erase(7);
      rep.resolved.push_back(7);
      rep.notes.push_back(
          "order 7: the order-7 curve action has age >= 1 for every power "
          "(both Galois representatives of the plane-model eigenvalues), so "
          "the order-7 witness set is not realized here");
    }
  }
  if (genus == 3 && unresolved.count(2)) {
    for (const WitnessReport& w : rep.flagged) {
      if (w.order != 2) continue;
      CharacterSpec chi = character_from_exponents(2, w.exponents);
      auto fix = fixed_points(chi);
      if (fix && *fix == 0) {
        unresolved.erase(2);
        rep.resolved.push_back(2);
        rep.notes.push_back(
            "order 2: the witness has Lefschetz fixed-point count 0, but an "
            "order-2 automorphism of a non-hyperelliptic genus-3 curve fixes "
            "a line section pointwise, so the witness is excluded");
      }
    }
  }

  rep.verdict = unresolved.empty() ? "not-uniruled" : "requires-eigenvalue-check";
  if (!unresolved.empty()) {
    std::string note = "eigenvalue-level check needed at orders:";
    for (int n : unresolved) note += " " + std::to_string(n);
    rep.notes.push_back(note);
  }
  return rep;
}

}  // namespace jacq

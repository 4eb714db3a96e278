#pragma once

// Candidate enumeration and the full classification pipeline, plus the
// analytic bound certificate that covers every genus >= 6.

#include <optional>
#include <set>
#include <string>

#include "jacq/rh.hpp"

namespace jacq {

// Pipeline stages that can be switched off for ablation runs.
enum class Filter { kTrace, kPrime, kQuotientGenus, kETilde, kRh };
using FilterSet = std::set<Filter>;
FilterSet all_filters();
std::optional<Filter> filter_from_name(const std::string& name);
std::string filter_name(Filter f);

enum class Status {
  kRejectedTrace,          // some power has a non-integral or negative trace
  kRejectedPrimeFilter,
  kRejectedQuotientGenus,
  kRejectedETilde,
  kRejectedRh,
  kReidPass,               // realizable, every nontrivial power has age >= 1
  kUniruled,               // realizable, some power has age < 1
};
std::string status_name(Status s);

struct Verdict {
  CharacterSpec chi;
  Status status = Status::kRejectedTrace;
  long detail = 0;  // rejecting power (E~) or smallest age < 1 witness power
  std::vector<std::string> notes;

  bool operator==(const Verdict&) const = default;
};

// All faithful count vectors of the given genus and order, lexicographic.
std::vector<CharacterSpec> enumerate_candidates(int genus, int order);

Verdict classify(const CharacterSpec& chi, const FilterSet& filters = all_filters());

// Lexicographically smallest exponent multiset in the Galois orbit of chi
// (simultaneous multiplication of all exponents by units mod N).
std::vector<int> canonical_exponents(const CharacterSpec& chi);

struct KnownCurve {
  int genus = 0;
  int order = 0;
  bool exists = true;           // false: no automorphism of this order at all
  std::string model;            // curve text syntax
  std::string automorphism;     // automorphism text syntax
  std::vector<int> exponents;   // reference eigenvalue exponents
};
std::optional<KnownCurve> known_curve(int genus, int order);

struct WitnessReport {
  int order = 0;
  std::vector<int> exponents;   // canonical representative of the orbit
  long power = 0;               // witness power with age < 1
  std::string curve_model;      // empty if no tabulated extremal model

  bool operator==(const WitnessReport&) const = default;
};

struct OrderSummary {
  int order = 0;
  long candidates = 0;
  std::map<Status, long> tally;
  std::vector<WitnessReport> uniruled;       // one entry per Galois orbit
  std::vector<std::vector<int>> reid_pass;   // canonical exponent multisets
  std::vector<std::string> notes;

  bool operator==(const OrderSummary&) const = default;
};

struct ClassificationReport {
  int genus = 0;
  std::optional<int> only_order;
  std::vector<OrderSummary> orders;
  std::vector<std::string> notes;

  bool operator==(const ClassificationReport&) const = default;
};

// Runs classify over all faithful candidates for every order in 2 .. 4g+2
// (or just only_order), cross-checking tabulated extremal curves.  threads
// splits each order's candidate list across worker threads; results are
// merged in candidate order, so reports are identical for any thread count.
ClassificationReport classify_genus(int genus, std::optional<int> only_order = {},
                                    const FilterSet& filters = all_filters(),
                                    int threads = 1);

// --- intermediate candidate tables -----------------------------------------

struct TableRow {
  std::vector<int> counts;
  std::optional<long> fix;  // empty when the trace is not a valid count
  bool survivor = false;    // fix.has_value()

  bool operator==(const TableRow&) const = default;
};

// The reference row universe: all count vectors of the genus (faithful or
// not) that fail the global Reid condition, i.e. sum a*k_a < N.  For every
// (genus, order) except (4, 4) the universe is further restricted to rows
// whose proper-power traces stay <= 2 (the printed inequality systems).
// full_universe disables the Reid restriction.
std::vector<TableRow> table_rows(int genus, int order, bool full_universe = false);

// --- analytic bound ---------------------------------------------------------

struct BoundCertificate {
  enum Kind { kCertified, kRequiresExhaustive } kind;
  // exact rational bracket of the threshold 1 + 20*pi/13
  Rat threshold_low, threshold_high;
};
// Certified iff the genus lies strictly above the threshold (g >= 6); every
// smaller genus is handled by the exhaustive sweeps.
BoundCertificate bound_certificate(int genus);

struct CosLemmaResult {
  bool certified = false;
  // minimum of cos x - 1 + 10x/13 over the grid and the critical points
  double min_margin = 0.0;
  std::string min_margin_text;  // high-precision decimal form
};
// Certifies cos x >= 1 - 10x/13 on (0, range_end] by a Lipschitz-slack grid
// scan (|f'| <= 1 + 10/13) plus a quadratic bound near zero.
CosLemmaResult verify_cos_lemma(const Rat& step, const Rat& range_end);

// --- CLI-facing orchestration -----------------------------------------------

struct CurveReport {
  std::string model;
  std::string automorphism;
  long genus = 0;
  std::vector<std::string> basis;              // rendered differentials
  std::vector<int> exponents;
  std::vector<std::pair<long, std::string>> ages;  // power -> exact age "p/q"
  bool uniruled = false;
  long witness_power = 0;
  std::vector<std::string> notes;

  bool operator==(const CurveReport&) const = default;
};
// Parsers may throw std::invalid_argument (malformed text); an automorphism
// that parses but does not act on the curve raises std::domain_error.
CurveReport verify_curve(const std::string& model, const std::string& automorphism);

struct GroupOrdersReport {
  int genus = 0;
  std::vector<int> orders;
  // uniruled witness orders present in the supplied list, with witness sets
  std::vector<WitnessReport> flagged;
  // flagged orders ruled out anyway (curve computation or encoded argument)
  std::vector<int> resolved;
  std::string verdict;  // "not-uniruled" or "requires-eigenvalue-check"
  std::vector<std::string> notes;

  bool operator==(const GroupOrdersReport&) const = default;
};
GroupOrdersReport group_orders(int genus, const std::vector<int>& orders);

}  // namespace jacq

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "jacq/report.hpp"

using namespace jacq;

namespace {

int thread_count() {
  const char* env = std::getenv("JACQ_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  return n >= 1 ? n : 1;
}

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string exp_set(const std::vector<int>& v) { return "{" + join_ints(v) + "}"; }

// --format/--out plumbing shared by every subcommand
struct Output {
  std::string format = "text";
  std::string out_path;

  void add_flags(CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", out_path, "write the report to a file");
  }

  void emit(const std::string& command, const Json& payload, const std::string& text,
            const std::string& csv) const {
    std::string rendered;
    if (format == "json") {
      Json doc{{"schema_version", 1}, {"command", command}, {"report", payload}};
      rendered = doc.dump(2) + "\n";
    } else if (format == "csv") {
      rendered = csv;
    } else {
      rendered = text;
    }
    if (out_path.empty()) {
      std::cout << rendered;
    } else {
      std::ofstream f(out_path);
      if (!f) throw std::domain_error("cannot open output file: " + out_path);
      f << rendered;
    }
  }
};

FilterSet parse_filters(const std::string& spec) {
  if (spec.empty()) return all_filters();
  FilterSet out;
  std::stringstream ss(spec);
  std::string name;
  while (std::getline(ss, name, ',')) {
    auto f = filter_from_name(name);
    if (!f) throw std::invalid_argument("unknown filter: " + name);
    out.insert(*f);
  }
  return out;
}

std::string classify_text(const ClassificationReport& rep) {
  std::ostringstream os;
  os << "genus " << rep.genus << " classification\n";
  std::vector<int> witness_orders;
  for (const OrderSummary& s : rep.orders) {
    os << "order " << s.order << ": " << s.candidates << " candidates";
    for (const auto& [status, count] : s.tally)
      os << "  " << status_name(status) << "=" << count;
    os << "\n";
    for (const WitnessReport& w : s.uniruled) {
      os << "  uniruled " << exp_set(w.exponents) << "  witness power " << w.power;
      if (!w.curve_model.empty()) os << "  curve " << w.curve_model;
      os << "\n";
    }
    for (const auto& rp : s.reid_pass) os << "  reid-pass " << exp_set(rp) << "\n";
    for (const std::string& n : s.notes) os << "  note: " << n << "\n";
    if (!s.uniruled.empty()) witness_orders.push_back(s.order);
  }
  for (const std::string& n : rep.notes) os << "note: " << n << "\n";
  if (witness_orders.empty())
    os << "uniruled witnesses: none\n";
  else
    os << "uniruled witness orders: " << join_ints(witness_orders, " ") << "\n";
  return os.str();
}

std::string classify_csv(const ClassificationReport& rep) {
  std::ostringstream os;
  os << "kind,order,exponents,power,curve_model\n";
  for (const OrderSummary& s : rep.orders) {
    for (const WitnessReport& w : s.uniruled)
      os << "uniruled," << s.order << "," << join_ints(w.exponents, " ") << ","
         << w.power << "," << w.curve_model << "\n";
    for (const auto& rp : s.reid_pass)
      os << "reid-pass," << s.order << "," << join_ints(rp, " ") << ",,\n";
  }
  return os.str();
}

std::string tables_text(int genus, int order, const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "candidate table, genus " << genus << ", order " << order << "\n";
  os << "counts";
  for (int i = 1; i < order; ++i) os << " ";
  os << " | Fix\n";
  long survivors = 0;
  for (const TableRow& r : rows) {
    os << "(" << join_ints(r.counts) << ") | ";
    if (r.fix)
      os << *r.fix << " *";
    else
      os << "-";
    os << "\n";
    survivors += r.survivor;
  }
  os << rows.size() << " rows, " << survivors << " survivors\n";
  return os.str();
}

std::string tables_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "counts,fix,survivor\n";
  for (const TableRow& r : rows) {
    os << join_ints(r.counts, " ") << ",";
    if (r.fix) os << *r.fix;
    os << "," << (r.survivor ? "1" : "0") << "\n";
  }
  return os.str();
}

std::string curve_text(const CurveReport& rep) {
  std::ostringstream os;
  os << "curve " << rep.model << "\n";
  os << "automorphism " << rep.automorphism << "\n";
  os << "genus " << rep.genus << "\n";
  os << "basis:";
  for (const std::string& b : rep.basis) os << "  " << b;
  os << "\n";
  os << "exponents " << exp_set(rep.exponents) << "\n";
  for (const auto& [d, a] : rep.ages) os << "age(power " << d << ") = " << a << "\n";
  os << "verdict: " << (rep.uniruled ? "uniruled" : "not uniruled");
  if (rep.uniruled) os << " (witness power " << rep.witness_power << ")";
  os << "\n";
  for (const std::string& n : rep.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string curve_csv(const CurveReport& rep) {
  std::ostringstream os;
  os << "field,value\n";
  os << "model," << rep.model << "\n";
  os << "automorphism," << rep.automorphism << "\n";
  os << "genus," << rep.genus << "\n";
  os << "exponents," << join_ints(rep.exponents, " ") << "\n";
  for (const auto& [d, a] : rep.ages) os << "age_" << d << "," << a << "\n";
  os << "uniruled," << (rep.uniruled ? "1" : "0") << "\n";
  os << "witness_power," << rep.witness_power << "\n";
  return os.str();
}

std::string group_orders_text(const GroupOrdersReport& rep) {
  std::ostringstream os;
  os << "genus " << rep.genus << ", element orders " << exp_set(rep.orders) << "\n";
  for (const WitnessReport& w : rep.flagged)
    os << "flagged order " << w.order << ": witness set " << exp_set(w.exponents)
       << "\n";
  for (const std::string& n : rep.notes) os << "note: " << n << "\n";
  os << "verdict: " << rep.verdict << "\n";
  return os.str();
}

std::string group_orders_csv(const GroupOrdersReport& rep) {
  std::ostringstream os;
  os << "order,exponents,resolved\n";
  for (const WitnessReport& w : rep.flagged) {
    bool resolved = std::find(rep.resolved.begin(), rep.resolved.end(), w.order) !=
                    rep.resolved.end();
    os << w.order << "," << join_ints(w.exponents, " ") << "," << (resolved ? "1" : "0")
       << "\n";
  }
  os << "verdict," << rep.verdict << ",\n";
  return os.str();
}

std::string bound_text(const BoundReport& rep) {
  std::ostringstream os;
  os << "genus " << rep.genus << ": " << rep.kind << "\n";
  os << "threshold 1 + 20*pi/13 in (" << rep.threshold_low << ", "
     << rep.threshold_high << ")\n";
  os << "cosine lemma " << (rep.cos_certified ? "certified" : "NOT certified")
     << ", minimum margin " << rep.min_margin << "\n";
  return os.str();
}

std::string bound_csv(const BoundReport& rep) {
  std::ostringstream os;
  os << "field,value\n";
  os << "genus," << rep.genus << "\n";
  os << "kind," << rep.kind << "\n";
  os << "threshold_low," << rep.threshold_low << "\n";
  os << "threshold_high," << rep.threshold_high << "\n";
  os << "cos_certified," << (rep.cos_certified ? "1" : "0") << "\n";
  os << "min_margin," << rep.min_margin << "\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact classification of uniruled quotients of Jacobians by cyclic "
               "automorphism groups"};
  app.require_subcommand(1);

  int genus = 0, order = 0;
  std::string filters_spec, model, automorphism, orders_spec;
  bool full_universe = false;
  Output out_classify, out_tables, out_curve, out_groups, out_bound;

  CLI::App* c_classify = app.add_subcommand("classify", "classify all cyclic actions");
  c_classify->add_option("--genus", genus, "curve genus")->required()->check(CLI::Range(2, 6));
  c_classify->add_option("--order", order, "restrict to one automorphism order")
      ->check(CLI::Range(2, 1000));
  c_classify->add_option("--filters", filters_spec,
                         "comma list of pipeline stages to enable "
                         "(trace,prime,genus,etilde,rh); default all");
  out_classify.add_flags(c_classify);

  CLI::App* c_tables = app.add_subcommand("tables", "intermediate candidate tables");
  c_tables->add_option("--genus", genus, "curve genus")->required()->check(CLI::Range(2, 6));
  c_tables->add_option("--order", order, "automorphism order")->required()->check(CLI::Range(2, 1000));
  c_tables->add_flag("--full-universe", full_universe,
                     "include rows satisfying the global Reid bound");
  out_tables.add_flags(c_tables);

  CLI::App* c_curve = app.add_subcommand("verify-curve", "check an explicit curve model");
  c_curve->add_option("--model", model, "curve, e.g. \"y^3 = x(x^5-1)\"")->required();
  c_curve->add_option("--automorphism", automorphism,
                      "e.g. \"(z^3*x, z*y) @ N=15\"")->required();
  out_curve.add_flags(c_curve);

  CLI::App* c_groups = app.add_subcommand("group-orders",
                                          "screen a group by its element orders");
  c_groups->add_option("--genus", genus, "curve genus")->required()->check(CLI::Range(2, 6));
  c_groups->add_option("--orders", orders_spec, "comma list of element orders")->required();
  out_groups.add_flags(c_groups);

  CLI::App* c_bound = app.add_subcommand("check-bound", "analytic genus bound");
  c_bound->add_option("--genus", genus, "curve genus")->required()->check(CLI::Range(2, 1000000));
  out_bound.add_flags(c_bound);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*c_classify) {
      FilterSet filters = parse_filters(filters_spec);
      std::optional<int> only;
      if (order > 0) only = order;
      ClassificationReport rep = classify_genus(genus, only, filters, thread_count());
      std::string cmd = "classify --genus " + std::to_string(genus);
      if (only) cmd += " --order " + std::to_string(*only);
      out_classify.emit(cmd, to_json(rep), classify_text(rep), classify_csv(rep));
    } else if (*c_tables) {
      std::vector<TableRow> rows = table_rows(genus, order, full_universe);
      std::string cmd = "tables --genus " + std::to_string(genus) + " --order " +
                        std::to_string(order);
      out_tables.emit(cmd, to_json(rows), tables_text(genus, order, rows),
                      tables_csv(rows));
    } else if (*c_curve) {
      CurveReport rep;
      try {
        rep = verify_curve(model, automorphism);
      } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
      }
      out_curve.emit("verify-curve", to_json(rep), curve_text(rep), curve_csv(rep));
    } else if (*c_groups) {
      std::vector<int> orders;
      std::stringstream ss(orders_spec);
      std::string tok;
      while (std::getline(ss, tok, ',')) {
        try {
          orders.push_back(std::stoi(tok));
        } catch (const std::exception&) {
          std::cerr << "bad order list entry: " << tok << "\n";
          return 2;
        }
      }
      GroupOrdersReport rep = group_orders(genus, orders);
      out_groups.emit("group-orders --genus " + std::to_string(genus),
                      to_json(rep), group_orders_text(rep), group_orders_csv(rep));
    } else if (*c_bound) {
      BoundCertificate cert = bound_certificate(genus);
      CosLemmaResult cos = verify_cos_lemma(Rat(1, 10000), Rat(13, 5));
      BoundReport rep;
      rep.genus = genus;
      rep.kind = cert.kind == BoundCertificate::kCertified ? "certified"
                                                           : "requires-exhaustive";
      rep.threshold_low = cert.threshold_low.str();
      rep.threshold_high = cert.threshold_high.str();
      rep.cos_certified = cos.certified;
      rep.min_margin = cos.min_margin_text;
      out_bound.emit("check-bound --genus " + std::to_string(genus), to_json(rep),
                     bound_text(rep), bound_csv(rep));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}

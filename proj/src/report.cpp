#include "jacq/report.hpp"

#include <stdexcept>

namespace jacq {

namespace {

Status status_from_name(const std::string& name) {
  for (Status s : {Status::kRejectedTrace, Status::kRejectedPrimeFilter,
                   Status::kRejectedQuotientGenus, Status::kRejectedETilde,
                   Status::kRejectedRh, Status::kReidPass, Status::kUniruled})
    if (status_name(s) == name) return s;
  throw std::invalid_argument("unknown status name: " + name);
}

}  // namespace

Json to_json(const CharacterSpec& chi) {
  return Json{{"order", chi.order}, {"genus", chi.genus}, {"counts", chi.counts}};
}

CharacterSpec character_from_json(const Json& j) {
  return {j.at("order").get<int>(), j.at("genus").get<int>(),
          j.at("counts").get<std::vector<int>>()};
}

Json to_json(const WitnessReport& w) {
  return Json{{"order", w.order},
              {"exponents", w.exponents},
              {"power", w.power},
              {"curve_model", w.curve_model}};
}

WitnessReport witness_from_json(const Json& j) {
  WitnessReport w;
  w.order = j.at("order").get<int>();
  w.exponents = j.at("exponents").get<std::vector<int>>();
  w.power = j.at("power").get<long>();
  w.curve_model = j.at("curve_model").get<std::string>();
  return w;
}

Json to_json(const ClassificationReport& rep) {
  Json orders = Json::array();
  for (const OrderSummary& os : rep.orders) {
    Json tally = Json::object();
    for (const auto& [status, count] : os.tally) tally[status_name(status)] = count;
    Json uniruled = Json::array();
    for (const WitnessReport& w : os.uniruled) uniruled.push_back(to_json(w));
    orders.push_back(Json{{"order", os.order},
                          {"candidates", os.candidates},
                          {"tally", tally},
                          {"uniruled", uniruled},
                          {"reid_pass", os.reid_pass},
                          {"notes", os.notes}});
  }
  Json j{{"genus", rep.genus},
         {"only_order", nullptr},
         {"orders", orders},
         {"notes", rep.notes}};
  if (rep.only_order) j["only_order"] = *rep.only_order;
  return j;
}

ClassificationReport classification_from_json(const Json& j) {
  ClassificationReport rep;
  rep.genus = j.at("genus").get<int>();
  if (!j.at("only_order").is_null()) rep.only_order = j.at("only_order").get<int>();
  for (const Json& o : j.at("orders")) {
    OrderSummary os;
    os.order = o.at("order").get<int>();
    os.candidates = o.at("candidates").get<long>();
    for (const auto& [name, count] : o.at("tally").items())
      os.tally[status_from_name(name)] = count.get<long>();
    for (const Json& w : o.at("uniruled")) os.uniruled.push_back(witness_from_json(w));
    os.reid_pass = o.at("reid_pass").get<std::vector<std::vector<int>>>();
    os.notes = o.at("notes").get<std::vector<std::string>>();
    rep.orders.push_back(std::move(os));
  }
  rep.notes = j.at("notes").get<std::vector<std::string>>();
  return rep;
}

Json to_json(const std::vector<TableRow>& rows) {
  Json out = Json::array();
  for (const TableRow& r : rows) {
    Json row{{"counts", r.counts}, {"fix", nullptr}, {"survivor", r.survivor}};
    if (r.fix) row["fix"] = *r.fix;
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<TableRow> table_from_json(const Json& j) {
  std::vector<TableRow> rows;
  for (const Json& row : j) {
    TableRow r;
    r.counts = row.at("counts").get<std::vector<int>>();
    if (!row.at("fix").is_null()) r.fix = row.at("fix").get<long>();
    r.survivor = row.at("survivor").get<bool>();
    rows.push_back(std::move(r));
  }
  return rows;
}

Json to_json(const CurveReport& rep) {
  Json ages = Json::array();
  for (const auto& [d, a] : rep.ages) ages.push_back(Json{{"power", d}, {"age", a}});
  return Json{{"model", rep.model},
              {"automorphism", rep.automorphism},
              {"genus", rep.genus},
              {"basis", rep.basis},
              {"exponents", rep.exponents},
              {"ages", ages},
              {"uniruled", rep.uniruled},
              {"witness_power", rep.witness_power},
              {"notes", rep.notes}};
}

CurveReport curve_report_from_json(const Json& j) {
  CurveReport rep;
  rep.model = j.at("model").get<std::string>();
  rep.automorphism = j.at("automorphism").get<std::string>();
  rep.genus = j.at("genus").get<long>();
  rep.basis = j.at("basis").get<std::vector<std::string>>();
  rep.exponents = j.at("exponents").get<std::vector<int>>();
  for (const Json& a : j.at("ages"))
    rep.ages.emplace_back(a.at("power").get<long>(), a.at("age").get<std::string>());
  rep.uniruled = j.at("uniruled").get<bool>();
  rep.witness_power = j.at("witness_power").get<long>();
  rep.notes = j.at("notes").get<std::vector<std::string>>();
  return rep;
}

Json to_json(const GroupOrdersReport& rep) {
  Json flagged = Json::array();
  for (const WitnessReport& w : rep.flagged) flagged.push_back(to_json(w));
  return Json{{"genus", rep.genus},
              {"orders", rep.orders},
              {"flagged", flagged},
              {"resolved", rep.resolved},
              {"verdict", rep.verdict},
              {"notes", rep.notes}};
}

GroupOrdersReport group_orders_from_json(const Json& j) {
  GroupOrdersReport rep;
  rep.genus = j.at("genus").get<int>();
  rep.orders = j.at("orders").get<std::vector<int>>();
  for (const Json& w : j.at("flagged")) rep.flagged.push_back(witness_from_json(w));
  rep.resolved = j.at("resolved").get<std::vector<int>>();
  rep.verdict = j.at("verdict").get<std::string>();
  rep.notes = j.at("notes").get<std::vector<std::string>>();
  return rep;
}

Json to_json(const BoundReport& rep) {
  return Json{{"genus", rep.genus},
              {"kind", rep.kind},
              {"threshold_low", rep.threshold_low},
              {"threshold_high", rep.threshold_high},
              {"cos_certified", rep.cos_certified},
              {"min_margin", rep.min_margin}};
}

BoundReport bound_from_json(const Json& j) {
  BoundReport rep;
  rep.genus = j.at("genus").get<int>();
  rep.kind = j.at("kind").get<std::string>();
  rep.threshold_low = j.at("threshold_low").get<std::string>();
  rep.threshold_high = j.at("threshold_high").get<std::string>();
  rep.cos_certified = j.at("cos_certified").get<bool>();
  rep.min_margin = j.at("min_margin").get<std::string>();
  return rep;
}

}  // namespace jacq

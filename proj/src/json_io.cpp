#include "k3fib/json_io.hpp"

namespace k3fib {

json config_to_json(const FiberConfiguration& c) {
  json out = json::array();
  for (const auto& [f, count] : c.entries())
    out.push_back({{"type", f.str()}, {"count", count}});
  return out;
}

FiberConfiguration config_from_json(const json& j) {
  if (!j.is_array())
    fail(errc::syntax_error, "configuration must be a JSON array");
  FiberConfiguration c;
  for (const auto& entry : j) {
    if (!entry.is_object() || !entry.contains("type"))
      fail(errc::syntax_error, "configuration entry needs a \"type\"");
    int count = entry.value("count", 1);
    c.add(KodairaType::parse(entry["type"].get<std::string>()), count);
  }
  return c;
}

json divisor_to_json(const DivisorClass& d) {
  return json(d.coords());
}

DivisorClass divisor_from_json(const json& j) {
  if (!j.is_array())
    fail(errc::syntax_error, "divisor class must be a JSON array of integers");
  std::vector<long long> coords;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      fail(errc::syntax_error, "divisor coordinates must be integers");
    coords.push_back(v.get<long long>());
  }
  return DivisorClass(std::move(coords));
}

json poly_to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back({{"e", {e.e[0], e.e[1], e.e[2], e.e[3]}},
                     {"c", rational_str(c)}});
  return {{"terms", terms}};
}

MultiPoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    fail(errc::syntax_error, "polynomial JSON needs a \"terms\" array");
  MultiPoly p;
  for (const auto& term : j["terms"]) {
    const auto& e = term.at("e");
    if (!e.is_array() || e.size() != 4)
      fail(errc::syntax_error, "term exponents must be [e0,e1,e2,et]");
    Exponents expo;
    for (int i = 0; i < 4; i++) expo.e[i] = e[i].get<int>();
    p += MultiPoly::monomial(expo,
                             rational_from_string(term.at("c").get<std::string>()));
  }
  return p;
}

json row_to_json(const ExtremalRow& row) {
  auto slot_name = [](const BranchSlot& s) {
    return s ? s->str() : std::string("smooth");
  };
  return {{"row", row.index},
          {"res", row.res_id},
          {"res_fibers", config_to_json(row.res_config)},
          {"branch", {slot_name(row.branch.first), slot_name(row.branch.second)}},
          {"fibers", config_to_json(row.k3_config)},
          {"T", {row.t_x[0], row.t_x[1], row.t_x[2]}}};
}

json dedup_to_json(const DedupReport& report) {
  json divergences = json::array();
  for (const auto& d : report.divergences)
    divergences.push_back({{"T", {d.t_x[0], d.t_x[1], d.t_x[2]}},
                           {"rows", d.rows},
                           {"paper_split", d.paper_split}});
  return {{"paper_classes", report.paper_classes},
          {"paper_class_count", report.paper_classes.size()},
          {"tx_classes", report.tx_classes},
          {"tx_class_count", report.tx_classes.size()},
          {"flagged_rows", report.flagged_rows},
          {"divergences", divergences}};
}

}  // namespace k3fib

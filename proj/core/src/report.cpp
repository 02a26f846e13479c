#include "schurid/report.hpp"

#include <sstream>

namespace schurid {

Json to_json(const VerificationReport& r, bool include_timing) {
  Json params = Json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  Json failures = Json::array();
  for (const Failure& f : r.failures) failures.push_back({{"key", f.key}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  Json doc = {{"check", r.check},
              {"parameters", params},
              {"checked", r.checked},
              {"verdict", r.passed() ? "PASS" : "FAIL"},
              {"failures", failures}};
  if (include_timing) doc["elapsed_seconds"] = r.elapsed.count();
  return doc;
}

Json to_json(const TrackedReal& x, int digits) {
  return {{"value", x.value().to_string(digits)}, {"abs_error", x.abs_error().to_string(3)}};
}

Json to_json(const ZBracket& z) {
  return {{"partial_sum", to_string(z.partial_sum)},
          {"tail_bound", to_string(z.tail_bound)},
          {"partial_sum_decimal", z.partial_sum.get_d()},
          {"tail_bound_decimal", z.tail_bound.get_d()}};
}

Json to_json(const MCEstimate& e) {
  return {{"mean_re", e.mean.real()},
          {"mean_im", e.mean.imag()},
          {"standard_error", e.standard_error},
          {"samples", e.samples},
          {"seed", e.seed}};
}

Json convergence_table(const ConvergenceTable& t, int digits) {
  Json rows = Json::array();
  for (const ConvergenceRow& r : t.rows)
    rows.push_back({t.label, r.point.m, r.point.n, r.point.s, r.finite.value().to_string(digits),
                    r.limit.value().to_string(digits), r.error.value().to_string(digits)});
  return {{"columns", {"series", "m", "n", "s", "finite", "limit", "abs_error"}}, {"rows", rows}};
}

Json to_json(const ConvergenceTable& t, int digits) {
  Json rows = Json::array();
  for (const ConvergenceRow& r : t.rows)
    rows.push_back({{"m", r.point.m},
                    {"n", r.point.n},
                    {"s", r.point.s},
                    {"finite", to_json(r.finite, digits)},
                    {"limit", to_json(r.limit, digits)},
                    {"abs_error", to_json(r.error, digits)}});
  return {{"label", t.label}, {"strictly_decreasing", t.strictly_decreasing()}, {"rows", rows}};
}

Json frequency_table(const SamplerCheck& c) {
  Json rows = Json::array();
  for (const FrequencyCell& cell : c.cells)
    rows.push_back({cell.label, cell.observed, cell.expected_probability, cell.z_score});
  return {{"columns", {"cell", "observed", "expected_probability", "z_score"}}, {"rows", rows}};
}

Json to_json(const SamplerCheck& c) {
  Json cells = Json::array();
  for (const FrequencyCell& cell : c.cells)
    cells.push_back({{"cell", cell.label},
                     {"observed", cell.observed},
                     {"expected_probability", cell.expected_probability},
                     {"z_score", cell.z_score}});
  Json doc = {{"measure", c.measure}, {"draws", c.draws}, {"seed", c.seed}, {"cells", cells}};
  if (c.chi_square)
    doc["chi_square"] = {{"statistic", c.chi_square->statistic},
                         {"degrees_of_freedom", c.chi_square->degrees_of_freedom},
                         {"p_value", c.chi_square->p_value}};
  doc["passed"] = c.passed;
  return doc;
}

Json failure_table(const VerificationReport& r) {
  Json rows = Json::array();
  for (const Failure& f : r.failures) rows.push_back({r.check, f.key, f.lhs, f.rhs});
  return {{"columns", {"check", "key", "lhs", "rhs"}}, {"rows", rows}};
}

std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten(const Json& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it)
      flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), out);
  } else if (v.is_array()) {
    if (v.empty()) out.emplace_back(path, "[]");
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(path, scalar_text(v));
  }
}

}  // namespace

std::string render_csv(const Json& doc) {
  std::ostringstream os;
  if (doc.contains("table")) {
    const Json& t = doc["table"];
    bool first = true;
    for (const auto& c : t["columns"]) {
      os << (first ? "" : ",") << csv_field(scalar_text(c));
      first = false;
    }
    os << "\n";
    for (const auto& row : t["rows"]) {
      first = true;
      for (const auto& cell : row) {
        os << (first ? "" : ",") << csv_field(scalar_text(cell));
        first = false;
      }
      os << "\n";
    }
    return os.str();
  }
  std::vector<std::pair<std::string, std::string>> leaves;
  flatten(doc, "", leaves);
  os << "key,value\n";
  for (const auto& [k, v] : leaves) os << csv_field(k) << "," << csv_field(v) << "\n";
  return os.str();
}

std::string render_text(const Json& doc) {
  std::vector<std::pair<std::string, std::string>> leaves;
  flatten(doc, "", leaves);
  std::ostringstream os;
  for (const auto& [k, v] : leaves) os << k << ": " << v << "\n";
  return os.str();
}

}  // namespace schurid

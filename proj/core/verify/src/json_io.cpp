#include "kwise/verify/json_io.hpp"

#include <algorithm>
#include <sstream>

#include "kwise/error.hpp"

namespace kwise::io {

Json to_json(const Rational& r) {
  Json j;
  j["num"] = r.numerator().get_str();
  j["den"] = r.denominator().get_str();
  j["float"] = std::stod(r.to_decimal(12));
  return j;
}

bool is_rational_json(const Json& j) {
  return j.is_object() && j.size() == 3 && j.contains("num") && j.contains("den") &&
         j.contains("float") && j["num"].is_string() && j["den"].is_string();
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw DomainError("not a rational: " + j.dump());
  }
  return Rational::parse(j["num"].get<std::string>() + "/" + j["den"].get<std::string>());
}

Json to_json(std::span<const Rational> values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(to_json(v));
  return a;
}

Json to_json(const Polynomial& p) {
  Json j;
  j["degree"] = p.degree();
  j["text"] = p.str("t");
  j["coefficients"] = to_json(p.coefficients());
  return j;
}

Json to_json(const SymmetricDist& d) { return to_json(d.pmf()); }

Json to_json(const SymmetricTestSet& t) {
  Json j;
  j["k"] = t.k;
  j["accept_weights"] = t.accept_weights;
  return j;
}

Json to_json(const ApproxCertificate& c) {
  Json j;
  j["grid"] = std::string(to_string(c.grid.kind));
  j["grid_n"] = c.grid.n;
  j["target"] = to_json(c.target);
  j["degree_bound"] = c.degree_bound;
  j["approximant"] = to_json(c.approximant);
  j["epsilon"] = to_json(c.epsilon);
  j["optimal"] = c.optimal;
  Json res = Json::array();
  for (std::size_t i = 0; i < c.grid.size(); ++i) {
    Json r;
    r["point"] = to_json(c.grid.points[i]);
    r["residual"] = to_json(c.residuals[i]);
    res.push_back(std::move(r));
  }
  j["residuals"] = std::move(res);
  Json act = Json::array();
  for (const auto& a : c.active) {
    Json r;
    r["point"] = to_json(a.point);
    r["sign"] = a.sign;
    act.push_back(std::move(r));
  }
  j["active_points"] = std::move(act);
  j["alternation"] = c.alternation_length();
  return j;
}

Json make_report(const std::string& command, Json params, Json rows, Json verdicts) {
  Json j;
  j["command"] = command;
  j["params"] = std::move(params);
  j["rows"] = std::move(rows);
  j["verdicts"] = std::move(verdicts);
  j["version"] = kReportVersion;
  return j;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

void flatten(const Json& row, std::vector<std::pair<std::string, std::string>>& cells) {
  for (const auto& [key, v] : row.items()) {
    if (is_rational_json(v)) {
      Rational r = rational_from_json(v);
      cells.emplace_back(key, r.to_decimal(12));
      cells.emplace_back(key + "_exact", r.str());
    } else if (v.is_array() && !v.empty() &&
               std::all_of(v.begin(), v.end(), [](const Json& e) { return is_rational_json(e); })) {
      std::string joined;
      for (const auto& e : v) joined += (joined.empty() ? "" : ";") + rational_from_json(e).str();
      cells.emplace_back(key, joined);
    } else if (v.is_structured()) {
      cells.emplace_back(key, v.dump());
    } else {
      cells.emplace_back(key, scalar_text(v));
    }
  }
}

}  // namespace

std::string rows_to_csv(const Json& rows) {
  std::vector<std::string> columns;
  std::vector<std::vector<std::pair<std::string, std::string>>> flat;
  for (const auto& row : rows) {
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(row, cells);
    for (const auto& [k, _] : cells) {
      if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
    }
    flat.push_back(std::move(cells));
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << csv_escape(columns[i]);
  out << "\n";
  for (const auto& cells : flat) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out << ",";
      for (const auto& [k, v] : cells) {
        if (k == columns[i]) {
          out << csv_escape(v);
          break;
        }
      }
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace kwise::io

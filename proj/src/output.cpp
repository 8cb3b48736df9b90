#include "landen/output.hpp"

#include <cmath>

#include <fmt/format.h>

namespace landen {

namespace {

void write(std::string& out, const nlohmann::ordered_json& j, int indent, int depth) {
  using V = nlohmann::ordered_json::value_t;
  const std::string pad = indent > 0 ? std::string(indent * (depth + 1), ' ') : "";
  const std::string close = indent > 0 ? std::string(indent * depth, ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case V::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        out += nlohmann::ordered_json(it.key()).dump();
        out += indent > 0 ? ": " : ":";
        write(out, it.value(), indent, depth + 1);
      }
      out += nl;
      out += close + "}";
      return;
    }
    case V::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[";
      out += nl;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) {
          out += ",";
          out += nl;
        }
        out += pad;
        write(out, j[i], indent, depth + 1);
      }
      out += nl;
      out += close + "]";
      return;
    }
    case V::number_float: {
      double v = j.get<double>();
      out += std::isfinite(v) ? format_number(v) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

std::string params_text(const ResidualReport& rep, bool shortest = false) {
  std::string s;
  for (const auto& [k, v] : rep.params) {
    if (!s.empty()) s += ";";
    s += k + "=" + (shortest ? fmt::format("{}", v) : format_number(v));
  }
  return s;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

std::string format_sig4(double v) {
  if (v == 0) return "0";
  if (v == 1) return "1";
  if (!std::isfinite(v)) return format_number(v);
  std::string s = fmt::format("{:.3e}", v);
  auto e = s.find('e');
  int exp = std::stoi(s.substr(e + 1));
  return s.substr(0, e) + "e" + std::to_string(exp);
}

std::string dump_json(const nlohmann::ordered_json& j, int indent) {
  std::string out;
  write(out, j, indent, 0);
  return out;
}

nlohmann::ordered_json to_json(const ResidualReport& rep) {
  nlohmann::ordered_json j;
  j["id"] = rep.id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : rep.params) {
    if (v == std::floor(v) && std::abs(v) < 1e9)
      params[k] = static_cast<long long>(v);
    else
      params[k] = v;
  }
  j["params"] = params;
  j["residual"] = rep.max_residual;
  j["status"] = to_string(rep.status);
  j["tolerance"] = rep.tolerance;
  j["samples"] = rep.samples;
  j["pole_skips"] = rep.pole_skips;
  if (!rep.readings.empty()) {
    nlohmann::ordered_json rs = nlohmann::ordered_json::array();
    for (const auto& r : rep.readings)
      rs.push_back({{"label", r.label}, {"residual", r.residual}, {"holds", r.holds}});
    j["readings"] = rs;
  }
  if (!rep.resolved.empty()) j["resolved"] = rep.resolved;
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

nlohmann::ordered_json to_json(const SuiteResult& res) {
  nlohmann::ordered_json j;
  j["suite"] = res.suite;
  j["seed"] = res.seed;
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  for (const auto& c : res.cases) cases.push_back(to_json(c));
  j["cases"] = cases;
  j["worst_residual"] = res.worst_residual;
  j["failures"] = res.failures();
  j["pass"] = res.pass;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string suite_csv(const SuiteResult& res) {
  std::string out = "suite,seed,id,params,residual,tolerance,status,samples,pole_skips,resolved,note\n";
  for (const auto& c : res.cases) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", csv_field(res.suite), res.seed,
                       csv_field(c.id), csv_field(params_text(c)), format_number(c.max_residual),
                       format_number(c.tolerance), to_string(c.status), c.samples, c.pole_skips,
                       csv_field(c.resolved), csv_field(c.note));
  }
  return out;
}

std::string suite_table(const SuiteResult& res) {
  std::size_t wid = 2, wpar = 6;
  for (const auto& c : res.cases) {
    wid = std::max(wid, c.id.size());
    wpar = std::max(wpar, params_text(c, true).size());
  }
  std::string out = fmt::format("{:<{}}  {:<{}}  {:>10}  {:>10}  {}\n", "id", wid, "params", wpar,
                                "residual", "tolerance", "status");
  for (const auto& c : res.cases)
    out += fmt::format("{:<{}}  {:<{}}  {:>10}  {:>10}  {}\n", c.id, wid, params_text(c, true), wpar,
                       format_sig4(c.max_residual), format_sig4(c.tolerance), to_string(c.status));
  out += fmt::format("suite {} seed {}: {} cases, {} failed, worst residual {}\n", res.suite, res.seed,
                     res.cases.size(), res.failures(), format_sig4(res.worst_residual));
  return out;
}

}  // namespace landen

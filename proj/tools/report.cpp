#include "report.hpp"

#include <cstdio>
#include <sstream>

namespace liespec::cli {

Json exact(const Q& q) { return q.get_str(); }

Json exact(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

Json exact(const RatMat& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(exact(row));
  return a;
}

Json exact(const Surd& s) {
  Json j;
  j["q"] = s.rational_part().get_str();
  j["r"] = s.surd_part().get_str();
  j["d"] = s.field();
  return j;
}

Json rendering(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::stod(buf);
}

Json closed_form(const ClosedForm& f) {
  Json j;
  j["exact"] = f.str();
  j["value"] = rendering(f.value());
  return j;
}

Json geodesic_class(const symspec::GeodesicClass& c) {
  Json j;
  if (!c.torus.empty()) j["torus"] = exact(c.torus);
  Json parts = Json::array();
  for (const auto& p : c.parts) parts.push_back(exact(p));
  j["parts"] = parts;
  j["len2"] = exact(c.len2);
  Json norms = Json::array();
  for (const auto& n : c.component_norms) norms.push_back(exact(n));
  j["component_norms"] = norms;
  j["degsing"] = c.degsing;
  j["dim_fix"] = c.dim_fix;
  j["morse"] = c.morse;
  j["morse_mod4"] = c.morse_mod4;
  j["regular"] = c.regular;
  return j;
}

Json envelope(const std::string& command, Json input, Json result, const std::vector<std::string>& notes) {
  Json j;
  j["tool"] = "liespec";
  j["version"] = "0.1.0";
  j["command"] = command;
  j["input"] = std::move(input);
  j["result"] = std::move(result);
  j["notes"] = notes;
  return j;
}

namespace {

std::string cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

void flatten(const Json& v, const std::string& path, std::ostringstream& os) {
  if (v.is_object() && !v.empty()) {
    for (auto it = v.begin(); it != v.end(); ++it) flatten(it.value(), path + "/" + it.key(), os);
  } else if (v.is_array() && !v.empty()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "/" + std::to_string(i), os);
  } else {
    os << cell(path) << "," << cell(v) << "\n";
  }
}

}  // namespace

std::string to_csv(const Json& report) {
  std::ostringstream os;
  const Json& result = report.at("result");
  if (result.is_object() && result.contains("table") && result["table"].is_array() && !result["table"].empty()) {
    const Json& t = result["table"];
    std::vector<std::string> cols;
    for (auto it = t[0].begin(); it != t[0].end(); ++it) cols.push_back(it.key());
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cell(cols[i]);
    os << "\n";
    for (const auto& row : t) {
      for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << (row.contains(cols[i]) ? cell(row[cols[i]]) : "");
      os << "\n";
    }
    return os.str();
  }
  os << "path,value\n";
  flatten(result, "", os);
  return os.str();
}

}  // namespace liespec::cli

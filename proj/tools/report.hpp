#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "liespec/so3nat.hpp"
#include "liespec/symspec.hpp"

namespace liespec::cli {

using Json = nlohmann::ordered_json;

Json exact(const Q& q);
Json exact(const RatVec& v);
Json exact(const RatMat& m);
Json exact(const Surd& s);       // {"q": ..., "r": ..., "d": ...}
Json rendering(double x);         // 12 significant digits
Json closed_form(const ClosedForm& f);

Json geodesic_class(const symspec::GeodesicClass& c);

// {"tool", "version", "command", "input", "result", "notes"}
Json envelope(const std::string& command, Json input, Json result, const std::vector<std::string>& notes = {});

// Tabular CSV when result has a "table" array of flat objects, otherwise
// one "path,value" row per leaf of the result.
std::string to_csv(const Json& report);

}  // namespace liespec::cli

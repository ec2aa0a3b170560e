#pragma once

// Serialization of verification reports: a stable-key-order JSON object per
// report (for golden files) and a byte-stable text rendering (no wall times,
// so identical runs print identical bytes).

#include <sstream>
#include <string>

#include <json.hpp>

#include "detvar/gallery.hpp"

namespace detvar {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson report_to_json(const VerificationReport& r) {
  OrderedJson j;
  j["check"] = r.check;
  j["b"] = r.b;
  j["field"] = r.field;
  j["seed"] = r.seed;
  j["status"] = r.status;
  auto w = OrderedJson::object();
  for (const auto& [k, v] : r.witnesses) w[k] = v;
  j["witnesses"] = w;
  j["wall_ms"] = r.wall_ms;
  return j;
}

inline std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  std::string tag = r.status == "pass"   ? "PASS"
                    : r.status == "fail" ? "FAIL"
                                         : "SKIP";
  os << "[" << tag << "] check " << r.check << "  (b=" << r.b
     << ", field=" << r.field << ", seed=" << r.seed << ")\n";
  for (const auto& [k, v] : r.witnesses) os << "  " << k << " = " << v << "\n";
  return os.str();
}

}  // namespace detvar

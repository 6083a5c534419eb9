#include "seacheck/verify.hpp"

#include <tuple>

namespace seacheck {

bool violation_order(const Violation& lhs, const Violation& rhs) {
  return std::tie(lhs.axiom, lhs.witnesses, lhs.lhs, lhs.rhs) <
         std::tie(rhs.axiom, rhs.witnesses, rhs.lhs, rhs.rhs);
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json violations_json = nlohmann::json::array();
  for (const Violation& v : violations) {
    violations_json.push_back({{"axiom", v.axiom},
                               {"witnesses", v.witnesses},
                               {"lhs", v.lhs},
                               {"rhs", v.rhs}});
  }
  return {{"instance", instance},
          {"mode", mode},
          {"carrier_size", carrier_size},
          {"axiom_families_checked", axiom_families_checked},
          {"violations", violations_json}};
}

std::string VerifyReport::to_text() const {
  std::string out;
  out += "instance: " + instance + "\n";
  out += "mode: " + mode + "\n";
  out += "carrier_size: " + std::to_string(carrier_size) + "\n";
  out += "axiom_families_checked:";
  for (const auto& fam : axiom_families_checked) out += " " + fam;
  out += "\n";
  out += std::to_string(violations.size()) + " violations\n";
  for (const Violation& v : violations) {
    out += "  " + v.axiom + " witnesses=[";
    for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
      if (i) out += ",";
      out += v.witnesses[i];
    }
    out += "] lhs=" + v.lhs + " rhs=" + v.rhs + "\n";
  }
  return out;
}

}  // namespace seacheck

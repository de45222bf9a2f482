#include "duality/report.hpp"

#include <algorithm>
#include <sstream>

namespace duality {

bool VerificationReport::pass() const {
  return std::all_of(witnesses.begin(), witnesses.end(),
                     [](const Witness& w) { return w.ok(); });
}

void VerificationReport::add(std::string claim, std::string left,
                             std::string right) {
  witnesses.push_back({std::move(claim), std::move(left), std::move(right)});
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["check"] = check;
  j["params"] = nlohmann::json::object();
  for (const auto& [k, v] : params) j["params"][k] = v;
  j["status"] = pass() ? "pass" : "fail";
  auto sorted = witnesses;
  std::sort(sorted.begin(), sorted.end(), [](const Witness& a, const Witness& b) {
    return std::tie(a.claim, a.left, a.right) < std::tie(b.claim, b.left, b.right);
  });
  j["witnesses"] = nlohmann::json::array();
  for (const auto& w : sorted)
    j["witnesses"].push_back({{"claim", w.claim}, {"left", w.left}, {"right", w.right}});
  if (!notes.empty()) {
    j["notes"] = nlohmann::json::object();
    for (const auto& [k, v] : notes) j["notes"][k] = v;
  }
  return j;
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << (pass() ? "PASS" : "FAIL") << " " << check << " {";
  bool first = true;
  for (const auto& [k, v] : params) {
    if (!first) os << ", ";
    os << k << "=" << v;
    first = false;
  }
  os << "} witnesses=" << witnesses.size();
  long long failed = 0;
  for (const auto& w : witnesses)
    if (!w.ok()) ++failed;
  if (failed) os << " failed=" << failed;
  os << " (" << wall_ms << " ms)";
  return os.str();
}

}  // namespace duality

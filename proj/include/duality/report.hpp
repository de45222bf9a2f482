#pragma once

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace duality {

struct Witness {
  std::string claim;
  std::string left;
  std::string right;
  bool ok() const { return left == right; }
};

/// Structured pass/fail record of one theorem-check.  Serialization is
/// deterministic: sorted keys, witnesses sorted, canonical value strings.
/// Wall time is reported on the human summary only, never in the JSON.
struct VerificationReport {
  std::string check;
  std::map<std::string, long long> params;
  std::vector<Witness> witnesses;
  std::map<std::string, std::string> notes;
  double wall_ms = 0.0;

  bool pass() const;
  void add(std::string claim, std::string left, std::string right);

  nlohmann::json to_json() const;
  std::string to_json_string() const { return to_json().dump(); }
  /// One-line human summary: status, check, params, witness count, timing.
  std::string summary() const;
};

}  // namespace duality

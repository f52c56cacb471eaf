#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace symcan {

struct VerifyCheck {
  std::string name;
  bool ok = false;
  bool certificate = true;  // false for consistency checks of sampled verdicts
  std::string detail;
};

struct VerifyTranscript {
  std::vector<VerifyCheck> checks;
  bool all_ok() const;
  nlohmann::ordered_json to_json() const;
};

// Re-checks every certificate of an analysis report with exact arithmetic
// only; nothing from the deciders is reused.
VerifyTranscript verify_report(const nlohmann::json& report);

}  // namespace symcan

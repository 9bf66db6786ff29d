#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace hyperharm {

enum class Compare { AtMost, AtLeast, Equal };

struct CheckResult {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  Compare compare = Compare::AtMost;
  bool pass = false;
  std::string detail;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<CheckResult> checks;
  double seconds = 0.0;
  bool pass() const;
};

struct VerifyOptions {
  bool fast = false;
};

inline constexpr int kCriterionCount = 11;

// One acceptance criterion (1..11) with its sub-checks.
CriterionResult run_criterion(int id, const VerifyOptions& opt = {});

struct VerifyReport {
  std::vector<CriterionResult> criteria;
  std::vector<CheckResult> extra;  // module checks outside the numbered criteria
  bool fast = false;

  std::size_t check_count() const;
  bool all_pass() const;
  nlohmann::json to_json() const;
};

VerifyReport verify_all(const VerifyOptions& opt = {});

}  // namespace hyperharm

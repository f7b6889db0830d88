#ifndef EXEL_CHECK_REPORT_HPP_
#define EXEL_CHECK_REPORT_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace exel {

/// One violated law together with a human-readable witness.
struct CheckIssue {
  std::string law;
  std::string witness;
};

/// Outcome of an axiom/property checker. Violations are data, not errors:
/// validators never throw on mathematical failure, they record it here.
struct CheckReport {
  std::vector<CheckIssue> issues;
  std::size_t checks_run = 0;

  bool ok() const { return issues.empty(); }

  void record(std::string law, std::string witness) {
    issues.push_back({std::move(law), std::move(witness)});
  }

  /// True iff no recorded issue has the given law tag.
  bool law_ok(const std::string& law) const {
    for (const auto& issue : issues) {
      if (issue.law == law) return false;
    }
    return true;
  }

  void merge(const CheckReport& other) {
    issues.insert(issues.end(), other.issues.begin(), other.issues.end());
    checks_run += other.checks_run;
  }
};

}  // namespace exel

#endif  // EXEL_CHECK_REPORT_HPP_

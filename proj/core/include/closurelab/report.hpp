#ifndef CLOSURELAB_REPORT_HPP
#define CLOSURELAB_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "closurelab/reproduce.hpp"

namespace closurelab {

inline constexpr const char* kToolVersion = "closure-lab 1.0.0";

enum class ReportFormat { Text, Json };

/// Result of one session command. Output is byte-identical for identical
/// input and seed; wall-clock timing is only emitted when explicitly
/// requested (timingMs set by the caller).
struct Report {
  std::string command;  // canonical command echo
  std::string verdict;  // "pass" | "fail" | "computed"
  std::vector<CheckReport> checks;
  std::vector<RationalityVerdict> verdicts;
  std::vector<ReproductionBundle> bundles;
  std::vector<std::string> notes;
  std::vector<std::string> assumptions;
  std::optional<double> timingMs;
};

/// Single report, stable key order in JSON.
std::string emitReport(const Report& report, ReportFormat format);
/// Multi-command document: {"tool", "reports", "verdict"} in JSON, a
/// concatenated listing in text.
std::string emitReports(const std::vector<Report>& reports, ReportFormat format);

/// 0 when every report passed or computed, 1 when any property failed.
int exitStatusFor(const std::vector<Report>& reports);

} // namespace closurelab

#endif

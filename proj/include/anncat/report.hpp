#pragma once

// Run reports: every applicable suite, the two experiments and a center
// summary for one instance, rendered as text or as a JSON document. Both
// renderings are deterministic.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anncat/center.hpp"
#include "anncat/diagram_engine.hpp"

namespace anncat {

struct SuiteResult {
  SuiteId suite{};
  std::vector<CheckReport> reports;

  bool passed() const noexcept { return all_passed(reports); }
};

SuiteResult run_suite(const AnnStructure& s, SuiteId suite, const CheckOptions& options = {});

struct CenterSummary {
  bool available = false;
  std::string unavailable_reason;  // set when the base fails FULL_ANN
  std::size_t object_count = 0;
  std::vector<CheckReport> verification;  // BRAIDED_FULL on the center
  std::optional<std::pair<CenterObject, CenterObject>> nonsymmetric_witness;

  bool verified() const noexcept { return available && all_passed(verification); }
};

CenterSummary summarize_center(const AnnStructure& s, const CheckOptions& options = {});

// Exit status: 1 when FULL_ANN fails, when a braided instance fails
// BRAIDED_FULL, when either experiment reports a refutation, or when the
// center of a valid base fails verification; 0 otherwise. CORE_INDEPENDENT,
// LAPLAZA and RINGLIKE verdicts are reported but do not affect it.
struct RunReport {
  std::string digest;
  std::string ring;
  std::string module;
  bool braided = false;
  bool symmetric = false;
  std::vector<SuiteResult> suites;
  std::optional<DependenceReport> dependence;    // braided instances
  std::optional<EquivalenceReport> equivalence;  // symmetric instances
  CenterSummary center;
  int exit_status = 0;
};

RunReport build_report(const AnnStructure& s, const CheckOptions& options = {});

std::string render_text(const RunReport& report);
std::string render_machine(const RunReport& report);

std::string render_suite_text(const SuiteResult& result);
std::string render_suite_machine(const SuiteResult& result);

std::string render_center_object(const CenterObject& p);

}  // namespace anncat

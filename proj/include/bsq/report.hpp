#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bsq {

using Witness = std::vector<std::pair<std::string, double>>;

// Outcome of one verification check. passed is true iff
// max_residual <= tolerance_used and every child passed. When the cases of a check carry different
// tolerances the residual is reported as the worst ratio residual/tolerance
// and tolerance_used is 1 (normalized = true).
struct Report {
  std::string check_name;
  bool passed = false;
  double max_residual = 0.0;
  double tolerance_used = 0.0;
  Witness witness;  // inputs at the worst case; empty if none
  std::string detail;
  bool normalized = false;
  int cases = 0;
  std::vector<Report> children;
};

// Accumulates per-case residuals and builds the Report.
class ResidualTracker {
 public:
  explicit ResidualTracker(std::string name) : name_(std::move(name)) {}

  void add(double residual, double tolerance, Witness witness);
  void add_child(Report child);
  void note(const std::string& text);
  Report finish() const;

 private:
  std::string name_;
  std::vector<Report> children_;
  std::string detail_;
  int cases_ = 0;
  double worst_ratio_ = -1.0;
  double worst_residual_ = 0.0;
  double worst_tolerance_ = 0.0;
  Witness worst_witness_;
  bool uniform_tolerance_ = true;
  double first_tolerance_ = -1.0;
  bool saw_nan_ = false;
  bool failed_child_ = false;
};

// Combine child reports: passes iff every child passes.
Report combine(const std::string& name, std::vector<Report> children);

// One line per report (children indented), e.g.
//   PASS  identity_I  residual=1.2e-09  tol=1  cases=60  [mu=0.5 nu=0.5 s=1]
std::string to_text(const Report& r, int indent = 0);
// JSON object with name, passed, residual, tolerance, witness, detail, children.
std::string to_json(const Report& r, int indent = 2);

}  // namespace bsq

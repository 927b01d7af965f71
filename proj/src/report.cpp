#include "bsq/report.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "json.hpp"

namespace bsq {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

nlohmann::json as_json(const Report& r) {
  nlohmann::json j;
  j["name"] = r.check_name;
  j["passed"] = r.passed;
  j["residual"] = r.max_residual;
  j["tolerance"] = r.tolerance_used;
  j["normalized"] = r.normalized;
  j["cases"] = r.cases;
  nlohmann::json w = nlohmann::json::object();
  for (const auto& [k, v] : r.witness) w[k] = v;
  j["witness"] = r.witness.empty() ? nlohmann::json(nullptr) : w;
  j["detail"] = r.detail;
  if (!r.children.empty()) {
    nlohmann::json c = nlohmann::json::array();
    for (const Report& child : r.children) c.push_back(as_json(child));
    j["children"] = c;
  }
  return j;
}

}  // namespace

void ResidualTracker::add(double residual, double tolerance, Witness witness) {
  ++cases_;
  if (first_tolerance_ < 0.0) first_tolerance_ = tolerance;
  if (tolerance != first_tolerance_) uniform_tolerance_ = false;
  if (!std::isfinite(residual) || !(tolerance > 0.0)) {
    if (!saw_nan_) {
      worst_witness_ = std::move(witness);
      worst_residual_ = residual;
      worst_tolerance_ = tolerance;
    }
    saw_nan_ = true;
    return;
  }
  const double ratio = residual / tolerance;
  if (!saw_nan_ && ratio > worst_ratio_) {
    worst_ratio_ = ratio;
    worst_residual_ = residual;
    worst_tolerance_ = tolerance;
    worst_witness_ = std::move(witness);
  }
}

void ResidualTracker::add_child(Report child) {
  Witness w = child.witness;
  w.insert(w.begin(), {"child", static_cast<double>(children_.size())});
  add(child.max_residual, child.tolerance_used, std::move(w));
  if (!child.passed) failed_child_ = true;
  children_.push_back(std::move(child));
}

void ResidualTracker::note(const std::string& text) {
  if (!detail_.empty()) detail_ += "; ";
  detail_ += text;
}

Report ResidualTracker::finish() const {
  Report r;
  r.check_name = name_;
  r.cases = cases_;
  r.detail = detail_;
  r.children = children_;
  r.witness = worst_witness_;
  if (saw_nan_) {
    r.max_residual = std::numeric_limits<double>::infinity();
    r.tolerance_used = std::isfinite(worst_tolerance_) && worst_tolerance_ > 0 ? worst_tolerance_ : 0.0;
    r.passed = false;
    if (!r.detail.empty()) r.detail += "; ";
    r.detail += "non-finite residual encountered";
    return r;
  }
  if (cases_ == 0) {
    r.passed = false;
    r.max_residual = std::numeric_limits<double>::infinity();
    r.tolerance_used = 0.0;
    if (!r.detail.empty()) r.detail += "; ";
    r.detail += "no cases evaluated";
    return r;
  }
  if (uniform_tolerance_) {
    r.max_residual = worst_residual_;
    r.tolerance_used = worst_tolerance_;
  } else {
    r.normalized = true;
    r.max_residual = worst_ratio_;
    r.tolerance_used = 1.0;
  }
  r.passed = r.max_residual <= r.tolerance_used && !failed_child_;
  return r;
}

Report combine(const std::string& name, std::vector<Report> children) {
  ResidualTracker t(name);
  for (Report& c : children) t.add_child(std::move(c));
  return t.finish();
}

std::string to_text(const Report& r, int indent) {
  std::string line(static_cast<std::size_t>(indent), ' ');
  line += r.passed ? "PASS  " : "FAIL  ";
  line += r.check_name;
  line += "  residual=" + num(r.max_residual) + "  tol=" + num(r.tolerance_used);
  if (r.normalized) line += " (normalized)";
  line += "  cases=" + std::to_string(r.cases);
  if (!r.witness.empty()) {
    line += "  [";
    for (std::size_t i = 0; i < r.witness.size(); ++i) {
      if (i) line += ' ';
      line += r.witness[i].first + "=" + num(r.witness[i].second);
    }
    line += "]";
  }
  if (!r.detail.empty()) line += "  -- " + r.detail;
  line += '\n';
  for (const Report& c : r.children) line += to_text(c, indent + 2);
  return line;
}

std::string to_json(const Report& r, int indent) { return as_json(r).dump(indent); }

}  // namespace bsq

#pragma once

#include <string>
#include <vector>

namespace swh {

// One checked inequality, normalized to "value >= threshold".
// For linear constraints value is the slack and threshold is -eq_tol;
// for PSD blocks value is eig_min and threshold is the relative floor.
struct Condition {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool ok = false;

  double margin() const { return value - threshold; }
};

struct Report {
  std::string label;
  std::vector<Condition> conditions;

  void add(std::string name, double value, double threshold) {
    conditions.push_back({std::move(name), value, threshold, value >= threshold});
  }

  bool pass() const {
    for (const auto& c : conditions)
      if (!c.ok) return false;
    return true;
  }

  // most violated condition, or null if everything holds
  const Condition* worst() const {
    const Condition* w = nullptr;
    for (const auto& c : conditions)
      if (!c.ok && (!w || c.margin() < w->margin())) w = &c;
    return w;
  }

  const Condition* find(const std::string& name) const {
    for (const auto& c : conditions)
      if (c.name == name) return &c;
    return nullptr;
  }

  std::string summary() const;  // one line per condition
};

}  // namespace swh

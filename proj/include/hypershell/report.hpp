#pragma once

#include <string>
#include <vector>

namespace hyper {

/// One violated condition: `clause` is a short stable tag (e.g. "Shell-3",
/// "link-compatible"), `message` a human-readable detail.
struct Issue {
  std::string clause;
  std::string message;
};

/// Validation and law-check outcome. Empty means everything held.
struct Report {
  std::vector<Issue> issues;

  bool ok() const { return issues.empty(); }
  void add(std::string clause, std::string message) {
    issues.push_back({std::move(clause), std::move(message)});
  }
  void merge(const Report& other, const std::string& prefix = {}) {
    for (const auto& i : other.issues)
      issues.push_back({i.clause, prefix.empty() ? i.message : prefix + ": " + i.message});
  }
  bool has_clause(const std::string& clause) const {
    for (const auto& i : issues)
      if (i.clause == clause) return true;
    return false;
  }
  std::string str() const {
    std::string out;
    for (const auto& i : issues) out += "[" + i.clause + "] " + i.message + "\n";
    return out;
  }
};

}  // namespace hyper

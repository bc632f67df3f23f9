#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sdcm {

/// Outcome of one validator or theorem checker. Witnesses explain failures;
/// notes carry informational findings that do not affect `pass`.
struct CheckReport {
  std::string check;
  bool pass = true;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;

  explicit CheckReport(std::string name = {}) : check(std::move(name)) {}

  void fail(std::string witness) {
    pass = false;
    witnesses.push_back(std::move(witness));
  }
  void note(std::string text) { notes.push_back(std::move(text)); }
};

struct ValidationReport {
  std::vector<CheckReport> entries;

  bool valid() const {
    for (const auto& e : entries) {
      if (!e.pass) return false;
    }
    return true;
  }

  const CheckReport* find(const std::string& name) const {
    for (const auto& e : entries) {
      if (e.check == name) return &e;
    }
    return nullptr;
  }
};

inline bool all_pass(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace sdcm

#pragma once

// Machine-readable suite reports with pass/fail/skipped checks.

#include <string>
#include <utility>
#include <vector>

namespace d43 {

enum class Status { Pass, Fail, Skipped };
const char* status_name(Status s);
inline Status status_of(bool ok) { return ok ? Status::Pass : Status::Fail; }

struct CheckEntry {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
  /// Counterexample or summary fields, emitted in insertion order.
  std::vector<std::pair<std::string, std::string>> data;
};

class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  CheckEntry& add(std::string name, Status status, std::string detail = {});
  CheckEntry& add(std::string name, bool ok, std::string detail = {}) {
    return add(std::move(name), status_of(ok), std::move(detail));
  }
  void add_timing(std::string name, double seconds) { timings_.emplace_back(std::move(name), seconds); }

  const std::string& suite() const { return suite_; }
  const std::vector<CheckEntry>& checks() const { return checks_; }
  /// No check failed.
  bool ok() const;

  /// Timings are only written when requested, so the default output is reproducible.
  std::string to_json(bool with_timings = false) const;
  /// One line per check: "PASS name: detail".
  std::string to_text() const;

 private:
  std::string suite_;
  std::vector<CheckEntry> checks_;
  std::vector<std::pair<std::string, double>> timings_;
};

}  // namespace d43

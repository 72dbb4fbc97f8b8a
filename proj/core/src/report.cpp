#include "d43/report.hpp"

#include "d43/graph_io.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace d43 {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Skipped:
      return "skipped";
  }
  return "fail";
}

CheckEntry& Report::add(std::string name, Status status, std::string detail) {
  checks_.push_back({std::move(name), status, std::move(detail), {}});
  return checks_.back();
}

bool Report::ok() const {
  for (const auto& c : checks_)
    if (c.status == Status::Fail) return false;
  return true;
}

std::string Report::to_json(bool with_timings) const {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["suite"] = suite_;
  j["status"] = status_name(status_of(ok()));
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = status_name(c.status);
    if (!c.detail.empty()) e["detail"] = c.detail;
    if (!c.data.empty()) {
      nlohmann::ordered_json d;
      for (const auto& [k, v] : c.data) d[k] = v;
      e["data"] = d;
    }
    j["checks"].push_back(e);
  }
  if (with_timings) {
    nlohmann::ordered_json t;
    for (const auto& [k, v] : timings_) t[k] = v;
    j["timings"] = t;
  }
  return j.dump(2) + "\n";
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    std::string s = status_name(c.status);
    for (auto& ch : s) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    os << s << " " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  return os.str();
}

}  // namespace d43

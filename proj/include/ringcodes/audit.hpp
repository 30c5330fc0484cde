#pragma once

#include <nlohmann/json.hpp>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace ringcodes {

enum class Status { pass, fail, measured_discrepancy };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::measured_discrepancy: return "measured-discrepancy";
  }
  return "fail";
}

inline Status status_of(bool ok) { return ok ? Status::pass : Status::fail; }

/// One audited claim. `anchor` is a short statement of what is checked,
/// `evidence` carries the measured values (and a counterexample if any).
struct AuditEntry {
  std::string claim;
  std::string anchor;
  Status status = Status::fail;
  nlohmann::json evidence = nlohmann::json::object();

  bool passed() const { return status == Status::pass; }

  nlohmann::json to_json() const {
    return {{"claim", claim}, {"anchor", anchor}, {"status", to_string(status)}, {"evidence", evidence}};
  }
};

class AuditReport {
 public:
  AuditEntry& add(std::string claim, std::string anchor, Status status,
                  nlohmann::json evidence = nlohmann::json::object()) {
    entries_.push_back({std::move(claim), std::move(anchor), status, std::move(evidence)});
    return entries_.back();
  }
  void add(AuditEntry e) { entries_.push_back(std::move(e)); }

  void append(const AuditReport& other) {
    entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  }

  const std::vector<AuditEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  const AuditEntry* find(const std::string& claim) const {
    auto it = std::find_if(entries_.begin(), entries_.end(),
                           [&](const AuditEntry& e) { return e.claim == claim; });
    return it == entries_.end() ? nullptr : &*it;
  }

  bool all_pass() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const AuditEntry& e) { return e.passed(); });
  }
  /// True when no entry has status `fail` (discrepancies are findings, not failures).
  bool no_failures() const {
    return std::none_of(entries_.begin(), entries_.end(),
                        [](const AuditEntry& e) { return e.status == Status::fail; });
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : entries_) arr.push_back(e.to_json());
    return arr;
  }

 private:
  std::vector<AuditEntry> entries_;
};

}  // namespace ringcodes

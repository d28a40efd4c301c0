#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace qha {

/// Outcome of one named axiom check.  A witness is attached exactly when the
/// check fails: the first offending coordinate plus the two sides' values.
struct CheckRecord {
  std::string check_id;
  std::string anchor;  // short human description of the identity checked
  bool pass = true;
  std::optional<std::string> witness;
};

/// Deterministic list of check records for one subject.  Record order is
/// fixed by the verifier that produced it (axiom id, then basis index).
class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  void set_subject(std::string s) { subject_ = std::move(s); }

  void add(const std::string& id, const std::string& anchor, bool pass,
           std::optional<std::string> witness = std::nullopt) {
    records_.push_back(CheckRecord{id, anchor, pass, pass ? std::nullopt : std::move(witness)});
  }

  void append(const Report& other) {
    for (const auto& r : other.records_) records_.push_back(r);
  }

  const std::vector<CheckRecord>& records() const { return records_; }

  bool all_pass() const {
    for (const auto& r : records_)
      if (!r.pass) return false;
    return true;
  }

  int fail_count() const {
    int n = 0;
    for (const auto& r : records_)
      if (!r.pass) ++n;
    return n;
  }

  bool passed(const std::string& id_prefix) const {
    bool seen = false;
    for (const auto& r : records_)
      if (r.check_id.rfind(id_prefix, 0) == 0) {
        seen = true;
        if (!r.pass) return false;
      }
    return seen;
  }

  std::vector<std::string> failing_ids() const {
    std::vector<std::string> out;
    for (const auto& r : records_)
      if (!r.pass) out.push_back(r.check_id);
    return out;
  }

  /// One-line summary, stable across runs.
  std::string summary() const {
    std::ostringstream os;
    os << subject_ << ": " << (records_.size() - fail_count()) << "/" << records_.size() << " checks pass";
    if (fail_count() > 0) {
      os << "; failing:";
      for (const auto& r : records_)
        if (!r.pass) os << " " << r.check_id;
    }
    return os.str();
  }

  std::string text() const {
    std::ostringstream os;
    os << "subject: " << subject_ << "\n";
    for (const auto& r : records_) {
      os << "  [" << (r.pass ? "pass" : "FAIL") << "] " << r.check_id << "  (" << r.anchor << ")";
      if (r.witness) os << "\n         witness: " << *r.witness;
      os << "\n";
    }
    os << "  " << summary() << "\n";
    return os.str();
  }

 private:
  std::string subject_;
  std::vector<CheckRecord> records_;
};

}  // namespace qha

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "spectra/ring.hpp"

namespace spectra {

using Json = nlohmann::ordered_json;

enum class Status { pass, fail, degenerate, hypothesis_violated, skipped };

std::string_view to_string(Status status);
/// Inverse of to_string; throws Error on an unknown name.
Status status_from_string(std::string_view name);

/// One verified statement. `ref` names the statement being checked; the
/// payload is a replayable input (ring expression plus tuples) for failures,
/// or a short explanation for degenerate and hypothesis-violated outcomes.
struct Check {
  std::string name;
  std::string ref;
  Status status = Status::pass;
  std::optional<Json> counterexample;

  bool operator==(const Check&) const = default;
};

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t degenerate = 0;
  std::size_t hypothesis_violated = 0;
  std::size_t skipped = 0;

  bool operator==(const Summary&) const = default;
};

/// Ordered list of checks produced by one suite. Never stops at the first failure.
class Report {
 public:
  Report() = default;
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const noexcept { return suite_; }
  const std::vector<Check>& checks() const noexcept { return checks_; }

  void add(Check check) { checks_.push_back(std::move(check)); }
  void add(std::string name, std::string ref, Status status, std::optional<Json> payload = std::nullopt);
  /// Appends `other`'s checks with their names prefixed by "prefix/".
  void absorb(const Report& other, std::string_view prefix = {});

  /// First check with this name, if any.
  const Check* find(std::string_view name) const;
  Summary summary() const;
  bool has_failures() const { return summary().fail != 0; }

 private:
  std::string suite_;
  std::vector<Check> checks_;
};

/// Accumulates one universally quantified property over many inputs and keeps
/// the first counterexample.
class Property {
 public:
  Property(std::string name, std::string ref) : name_(std::move(name)), ref_(std::move(ref)) {}

  /// Records one instance; `payload` is only invoked for the first failure.
  template <class Payload>
  bool expect(bool holds, Payload&& payload) {
    ++instances_;
    if (!holds) {
      if (!counterexample_) counterexample_ = payload();
      ++failures_;
    }
    return holds;
  }

  bool expect(bool holds) {
    return expect(holds, [] { return Json::object(); });
  }

  std::size_t instances() const noexcept { return instances_; }
  std::size_t failures() const noexcept { return failures_; }

  /// Pass when no instance failed. A property with no instances is vacuous
  /// and reported as degenerate.
  Check finish() const;
  void finish_into(Report& report) const { report.add(finish()); }

 private:
  std::string name_;
  std::string ref_;
  std::size_t instances_ = 0;
  std::size_t failures_ = 0;
  std::optional<Json> counterexample_;
};

Json to_json(const Check& check);
Check check_from_json(const Json& json);
Json to_json(const Summary& summary);

/// Replayable payload helpers.
Json to_json(const RingElement& x);
Json to_json(const IndexSet& s);

}  // namespace spectra

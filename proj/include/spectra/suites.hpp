#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/report.hpp"
#include "spectra/ring.hpp"

namespace spectra {

inline constexpr std::string_view kToolName = "spectra";
inline constexpr std::string_view kToolVersion = "0.1.0";

struct RunOptions {
  std::size_t cap = kDefaultElementCap;
  bool mod_jacobson = false;
  std::uint64_t seed = 0;

  bool operator==(const RunOptions&) const = default;
};

/// One row of the dispatch table.
struct SuiteInfo {
  std::string_view id;
  std::string_view module;
  std::string_view operation;
  std::string_view description;
};

/// Every suite id, in the order `all` runs them.
std::span<const SuiteInfo> suite_table();
bool is_suite(std::string_view id);

struct SuiteRun {
  std::string ring;
  std::string suite;
  RunOptions options;
  std::vector<Check> checks;
  Summary summary;

  bool operator==(const SuiteRun&) const = default;
};

/// Runs one suite, or every suite with "all" (check names then carry a
/// "suite/" prefix). With mod_jacobson the checks run on R/Jac(R). A suite
/// that needs elements of a ring above the cap contributes one skipped
/// "cap-exceeded" check instead. Throws Error on an unknown suite id.
SuiteRun run_suite(const RingSpec& ring, std::string_view suite, const RunOptions& options = {});

Json to_json(const SuiteRun& run);
/// Inverse of to_json; throws Error on a malformed document.
SuiteRun suite_run_from_json(const Json& json);

/// Z_n for 2 <= n <= 30, then products of 2 and up to max_factors of those
/// factors, non-decreasing, with |R| <= max_card. Throws PreconditionError
/// when max_card < 2.
std::vector<RingSpec> corpus(std::uint64_t max_card = 2000, std::size_t max_factors = 3);

/// 1 if any check failed; otherwise 2 if any check is hypothesis-violated or
/// hit the cap; otherwise 0.
int exit_code(std::span<const SuiteRun> runs);

}  // namespace spectra

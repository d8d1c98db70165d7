#include "spectra/suites.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>

#include "spectra/correspondence.hpp"
#include "spectra/errors.hpp"
#include "spectra/filter.hpp"
#include "spectra/ideal_suite.hpp"
#include "spectra/lattice_suite.hpp"
#include "spectra/ring_identities.hpp"
#include "spectra/ring_model.hpp"
#include "spectra/topology.hpp"

namespace spectra {

namespace {

using Runner = std::function<Report(const RingModel&, const RunOptions&)>;

struct Entry {
  SuiteInfo info;
  Runner run;
};

const std::array<Entry, 16>& entries() {
  static const std::array<Entry, 16> table = {{
      {{"ring-identities", "ring_core", "ring_identities_suite", "zero sets and idempotents e_Z over element and subset pairs"},
       [](const RingModel& m, const RunOptions&) { return ring_identities_suite(m); }},
      {{"ideal-lattice", "ideal_lattice", "ideal_lattice_suite", "divisor-form ideal arithmetic and predicates against element oracles"},
       [](const RingModel& m, const RunOptions&) { return ideal_lattice_suite(m); }},
      {{"filter-lattice", "filter_algebra", "filter_lattice_suite", "filters on the index set: lattice laws, ultrafilters, fixed filters"},
       [](const RingModel& m, const RunOptions&) { return filter_lattice_suite(m.ring()); }},
      {{"filter-ideal", "correspondence", "filter_ideal_suite", "I(F, I), Z(E(I)) and Z^{-1}F element identities"},
       [](const RingModel& m, const RunOptions&) { return filter_ideal_suite(m); }},
      {{"nucleus", "correspondence", "nucleus_suite", "I -> I(F, I) is a nucleus and a frame homomorphism"},
       [](const RingModel& m, const RunOptions& o) { return nucleus_suite(m, o.seed); }},
      {{"filter-map", "correspondence", "filter_map_suite", "F -> I(F, I) is increasing and preserves meets and joins"},
       [](const RingModel& m, const RunOptions&) { return filter_map_suite(m); }},
      {{"order-embedding", "correspondence", "verify_order_embedding", "I(F, 0) <= I(G, 0) iff F <= G"},
       [](const RingModel& m, const RunOptions&) { return verify_order_embedding(m); }},
      {{"ultrafilter-max", "correspondence", "ultrafilter_max_bijection", "ultrafilters biject onto Max for products of local rings"},
       [](const RingModel& m, const RunOptions&) { return ultrafilter_max_bijection(m); }},
      {{"point-set", "zariski_topology", "point_set_suite", "hull-kernel Galois connection, closure, interior and limit points"},
       [](const RingModel& m, const RunOptions&) { return point_set_suite(m); }},
      {{"connectivity", "zariski_topology", "connectivity_suite", "Max disconnected iff R splits as a direct sum"},
       [](const RingModel& m, const RunOptions&) { return connectivity_suite(m); }},
      {{"product-homeomorphism", "zariski_topology", "product_homeomorphism_suite", "Max of a product is the disjoint union of the factors' Max"},
       [](const RingModel& m, const RunOptions&) { return product_homeomorphism_suite(m); }},
      {{"continuous-dimension", "zariski_topology", "continuous_dimension_suite", "component counts add over factors"},
       [](const RingModel& m, const RunOptions&) { return continuous_dimension_suite(m); }},
      {{"isolated-point", "zariski_topology", "isolated_point_suite", "isolated, non-omittable, annihilator and Bourbaki points agree"},
       [](const RingModel& m, const RunOptions&) { return isolated_point_suite(m); }},
      {{"hull-facts", "zariski_topology", "hull_facts_suite", "hull/cohull inclusions, comaximal separation, elementary hull facts"},
       [](const RingModel& m, const RunOptions&) { return hull_facts_suite(m); }},
      {{"regularity-equivalence", "zariski_topology", "regularity_equivalence_suite", "thirteen regularity conditions and the almost-P conditions"},
       [](const RingModel& m, const RunOptions&) { return regularity_equivalence_suite(m); }},
      {{"lattice-kernel", "lattice_kernel", "lattice_kernel_suite", "distributivity, frames, cap-structures and nuclei"},
       [](const RingModel& m, const RunOptions& o) { return lattice_kernel_suite(m, o.seed); }},
  }};
  return table;
}

const Entry* find_entry(std::string_view id) {
  for (const auto& e : entries())
    if (e.info.id == id) return &e;
  return nullptr;
}

Summary summarize(const std::vector<Check>& checks) {
  Report report;
  for (const auto& c : checks) report.add(c);
  return report.summary();
}

// Runs one suite, turning the out-of-scope exceptions into checks.
Report guarded(const Entry& entry, const RingModel& model, const RunOptions& options) {
  try {
    return entry.run(model, options);
  } catch (const CapExceeded& e) {
    Report report(std::string(entry.info.id));
    report.add("cap-exceeded", "|R| <= cap", Status::skipped,
               Json{{"ring", model.ring().to_string()}, {"cap", options.cap}, {"note", e.what()}});
    return report;
  } catch (const PreconditionError& e) {
    Report report(std::string(entry.info.id));
    report.add("precondition", "suite hypothesis on R", Status::hypothesis_violated,
               Json{{"ring", model.ring().to_string()}, {"note", e.what()}});
    return report;
  }
}

}  // namespace

std::span<const SuiteInfo> suite_table() {
  static const auto infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

bool is_suite(std::string_view id) { return id == "all" || find_entry(id) != nullptr; }

SuiteRun run_suite(const RingSpec& ring, std::string_view suite, const RunOptions& options) {
  if (!is_suite(suite)) throw Error("unknown suite: " + std::string(suite));
  const RingSpec target = options.mod_jacobson ? jacobson_quotient(ring).quotient : ring;
  const RingModel model(target, options.cap);

  SuiteRun run{ring.to_string(), std::string(suite), options, {}, {}};
  Report combined(run.suite);
  if (suite == "all") {
    for (const auto& e : entries()) combined.absorb(guarded(e, model, options), e.info.id);
  } else {
    combined.absorb(guarded(*find_entry(suite), model, options));
  }
  run.checks = combined.checks();
  run.summary = combined.summary();
  return run;
}

Json to_json(const SuiteRun& run) {
  Json out;
  out["tool"] = kToolName;
  out["version"] = kToolVersion;
  out["ring"] = run.ring;
  out["suite"] = run.suite;
  out["options"] = {{"cap", run.options.cap}, {"mod_jacobson", run.options.mod_jacobson}, {"seed", run.options.seed}};
  Json checks = Json::array();
  for (const auto& c : run.checks) checks.push_back(to_json(c));
  out["checks"] = std::move(checks);
  out["summary"] = to_json(run.summary);
  return out;
}

SuiteRun suite_run_from_json(const Json& json) {
  try {
    if (json.at("tool").get<std::string>() != kToolName) throw Error("not a spectra report");
    SuiteRun run;
    run.ring = json.at("ring").get<std::string>();
    run.suite = json.at("suite").get<std::string>();
    const Json& options = json.at("options");
    run.options.cap = options.at("cap").get<std::size_t>();
    run.options.mod_jacobson = options.at("mod_jacobson").get<bool>();
    run.options.seed = options.at("seed").get<std::uint64_t>();
    for (const auto& c : json.at("checks")) run.checks.push_back(check_from_json(c));
    const Json& s = json.at("summary");
    run.summary = {s.at("pass").get<std::size_t>(), s.at("fail").get<std::size_t>(),
                   s.at("degenerate").get<std::size_t>(), s.at("hypothesis_violated").get<std::size_t>(),
                   s.at("skipped").get<std::size_t>()};
    if (run.summary != summarize(run.checks)) throw Error("summary does not match the checks");
    return run;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
}

std::vector<RingSpec> corpus(std::uint64_t max_card, std::size_t max_factors) {
  if (max_card < 2) throw PreconditionError("max_card must be at least 2");
  constexpr std::uint32_t kLargestFactor = 30;
  std::vector<RingSpec> out;
  std::vector<std::uint32_t> factors;
  // Non-decreasing factor lists of the given length, in lexicographic order.
  std::function<void(std::size_t, std::uint32_t, std::uint64_t)> extend = [&](std::size_t length, std::uint32_t from,
                                                                               std::uint64_t card) {
    if (factors.size() == length) {
      out.emplace_back(factors);
      return;
    }
    for (std::uint32_t n = from; n <= kLargestFactor && card * n <= max_card; ++n) {
      factors.push_back(n);
      extend(length, n, card * n);
      factors.pop_back();
    }
  };
  for (std::size_t length = 1; length <= max_factors; ++length) extend(length, 2, 1);
  return out;
}

int exit_code(std::span<const SuiteRun> runs) {
  bool failed = false, out_of_scope = false;
  for (const auto& run : runs)
    for (const auto& c : run.checks) {
      failed = failed || c.status == Status::fail;
      const bool capped = c.status == Status::skipped && c.name.ends_with("cap-exceeded");
      out_of_scope = out_of_scope || c.status == Status::hypothesis_violated || capped;
    }
  if (failed) return 1;
  return out_of_scope ? 2 : 0;
}

}  // namespace spectra

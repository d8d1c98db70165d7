#include <gtest/gtest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>

#include "spectra/errors.hpp"
#include "spectra/suites.hpp"

using namespace spectra;

namespace {

struct Process {
  int code = -1;
  std::string out;
};

// Runs the built binary with stderr discarded.
Process spectra_cli(const std::string& args) {
  const std::string cmd = std::string(SPECTRA_BIN) + " " + args + " 2>/dev/null";
  Process p;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return p;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) p.out.append(buf, n);
  const int status = pclose(pipe);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return p;
}

bool contains(const std::vector<RingSpec>& rings, const std::string& expr) {
  return std::any_of(rings.begin(), rings.end(), [&](const RingSpec& r) { return r.to_string() == expr; });
}

}  // namespace

TEST(Corpus, Examples) {
  const auto singles = corpus(30, 1);
  ASSERT_EQ(singles.size(), 29u);
  EXPECT_EQ(singles.front().to_string(), "Z2");
  EXPECT_EQ(singles.back().to_string(), "Z30");
  const auto full = corpus();
  EXPECT_TRUE(contains(full, "Z4 x Z6"));
  EXPECT_FALSE(contains(corpus(10), "Z4 x Z6"));
  EXPECT_THROW(corpus(1), PreconditionError);
}

TEST(Corpus, EveryProductIsBoundedAndCanonical) {
  const auto full = corpus(2000, 3);
  std::set<std::string> seen;
  for (const auto& ring : full) {
    EXPECT_TRUE(seen.insert(ring.to_string()).second) << ring.to_string();
    ASSERT_TRUE(ring.cardinality().has_value());
    if (ring.arity() > 1) {
      EXPECT_LE(*ring.cardinality(), 2000u);
    }
    EXPECT_LE(ring.arity(), 3u);
    EXPECT_TRUE(std::is_sorted(ring.factors().begin(), ring.factors().end()));
    for (auto n : ring.factors()) EXPECT_TRUE(n >= 2 && n <= 30);
  }
  // Brute count: non-decreasing tuples over 2..30 of length 1..3 with product <= 2000 (singles always in).
  std::size_t expected = 29;
  for (std::uint32_t a = 2; a <= 30; ++a)
    for (std::uint32_t b = a; b <= 30; ++b) {
      if (a * b <= 2000) ++expected;
      for (std::uint32_t c = b; c <= 30; ++c)
        if (a * b * c <= 2000) ++expected;
    }
  EXPECT_EQ(full.size(), expected);
}

TEST(Dispatch, TableIsUniqueAndComplete) {
  std::set<std::string_view> ids;
  for (const auto& s : suite_table()) {
    EXPECT_TRUE(ids.insert(s.id).second) << s.id;
    EXPECT_TRUE(is_suite(s.id));
    EXPECT_FALSE(s.module.empty());
    EXPECT_FALSE(s.operation.empty());
  }
  EXPECT_EQ(ids.size(), 16u);
  EXPECT_TRUE(is_suite("all"));
  EXPECT_FALSE(is_suite("nope"));
  EXPECT_THROW(run_suite(parse_ring_spec("Z6"), "nope"), Error);
}

TEST(Dispatch, ListSuitesPrintsTheTable) {
  const Process p = spectra_cli("list-suites");
  ASSERT_EQ(p.code, 0);
  std::istringstream lines(p.out);
  std::string line;
  std::size_t row = 0;
  for (; std::getline(lines, line); ++row) {
    ASSERT_LT(row, suite_table().size());
    const auto& s = suite_table()[row];
    EXPECT_EQ(line, std::string(s.id) + '\t' + std::string(s.module) + '\t' + std::string(s.operation) + '\t' +
                        std::string(s.description));
  }
  EXPECT_EQ(row, suite_table().size());
}

TEST(Runs, JsonRoundTripsAndKeepsFieldOrder) {
  for (const char* suite : {"all", "hull-facts", "regularity-equivalence"}) {
    const SuiteRun run = run_suite(parse_ring_spec("Z4 x Z6"), suite, {});
    const Json json = to_json(run);
    EXPECT_EQ(suite_run_from_json(json), run);
    EXPECT_EQ(suite_run_from_json(Json::parse(json.dump())), run);
    std::vector<std::string> keys;
    for (const auto& [k, v] : json.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"tool", "version", "ring", "suite", "options", "checks", "summary"}));
    ASSERT_FALSE(json.at("checks").empty());
    std::vector<std::string> check_keys;
    for (const auto& [k, v] : json.at("checks")[0].items()) check_keys.push_back(k);
    EXPECT_EQ(std::vector<std::string>(check_keys.begin(), check_keys.begin() + 3),
              (std::vector<std::string>{"name", "paper_ref", "status"}));
  }
  Json broken = to_json(run_suite(parse_ring_spec("Z6"), "connectivity"));
  broken["summary"]["pass"] = 99;
  EXPECT_THROW(suite_run_from_json(broken), Error);
  EXPECT_THROW(suite_run_from_json(Json::parse("{\"tool\":\"spectra\"}")), Error);
}

TEST(Runs, SummaryCountsChecks) {
  const SuiteRun run = run_suite(parse_ring_spec("Z12"), "all");
  const auto count = [&](Status s) {
    return static_cast<std::size_t>(std::count_if(run.checks.begin(), run.checks.end(), [&](const Check& c) { return c.status == s; }));
  };
  EXPECT_EQ(run.summary.pass, count(Status::pass));
  EXPECT_EQ(run.summary.fail, count(Status::fail));
  EXPECT_EQ(run.summary.degenerate, count(Status::degenerate));
  EXPECT_EQ(run.summary.hypothesis_violated, count(Status::hypothesis_violated));
  EXPECT_EQ(run.summary.skipped, count(Status::skipped));
  for (const auto& c : run.checks) EXPECT_NE(c.name.find('/'), std::string::npos) << c.name;
}

TEST(Runs, ExitCodes) {
  const SuiteRun z4 = run_suite(parse_ring_spec("Z4"), "regularity-equivalence");
  EXPECT_EQ(exit_code(std::span(&z4, 1)), 2);
  const SuiteRun reduced = run_suite(parse_ring_spec("Z4"), "regularity-equivalence", {.mod_jacobson = true});
  EXPECT_EQ(reduced.ring, "Z4");
  EXPECT_EQ(exit_code(std::span(&reduced, 1)), 0);
  const SuiteRun two = run_suite(parse_ring_spec("Z2 x Z3"), "ring-identities");
  EXPECT_EQ(exit_code(std::span(&two, 1)), 1);
  const SuiteRun capped = run_suite(parse_ring_spec("Z30 x Z30"), "isolated-point", {.cap = 100});
  ASSERT_EQ(capped.checks.size(), 1u);
  EXPECT_EQ(capped.checks[0].name, "cap-exceeded");
  EXPECT_EQ(exit_code(std::span(&capped, 1)), 2);
  const SuiteRun roomy = run_suite(parse_ring_spec("Z30 x Z30"), "isolated-point", {.cap = 1000});
  EXPECT_EQ(exit_code(std::span(&roomy, 1)), 0);
}

TEST(Process, ExitCodeContract) {
  EXPECT_EQ(spectra_cli("run --ring 'Z4 x Z9 x Z25' --suite ultrafilter-max").code, 0);
  EXPECT_EQ(spectra_cli("run --ring Z4 --suite regularity-equivalence").code, 2);
  EXPECT_EQ(spectra_cli("run --ring Z4 --suite regularity-equivalence --mod-jacobson").code, 0);
  EXPECT_EQ(spectra_cli("run --ring 'Z2 x Z3' --suite ring-identities").code, 1);
  EXPECT_EQ(spectra_cli("run --ring Z1 --suite all").code, 3);
  EXPECT_EQ(spectra_cli("run --ring Z6 --suite nope").code, 3);
  EXPECT_EQ(spectra_cli("run --suite all").code, 3);
  EXPECT_EQ(spectra_cli("frobnicate").code, 3);
}

TEST(Process, JsonOutputMatchesLibraryAndIsDeterministic) {
  const Process a = spectra_cli("run --ring 'Z3 x Z5 x Z7' --suite all --seed 3 --json -");
  const Process b = spectra_cli("run --ring 'Z3 x Z5 x Z7' --suite all --seed 3 --json -");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const SuiteRun run = run_suite(parse_ring_spec("Z3 x Z5 x Z7"), "all", {.seed = 3});
  EXPECT_EQ(suite_run_from_json(Json::parse(a.out)), run);
  EXPECT_EQ(a.out, to_json(run).dump(2) + "\n");
}

TEST(Process, CorpusDocument) {
  const Process p = spectra_cli("corpus --max-card 12 --max-factors 2 --suite connectivity --json -");
  ASSERT_EQ(p.code, 0);
  const Json doc = Json::parse(p.out);
  EXPECT_EQ(doc.at("tool"), "spectra");
  EXPECT_EQ(doc.at("corpus").at("rings").get<std::size_t>(), corpus(12, 2).size());
  EXPECT_EQ(doc.at("runs").size(), corpus(12, 2).size());
  EXPECT_EQ(doc.at("summary").at("fail"), 0);
}

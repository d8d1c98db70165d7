#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spectra/errors.hpp"
#include "spectra/suites.hpp"

namespace {

using spectra::Json;

constexpr int kUsageError = 3;

struct Common {
  std::string suite = "all";
  std::string json_path;
  spectra::RunOptions options;
};

void add_common(CLI::App& app, Common& common) {
  app.add_option("--suite", common.suite, "suite id, or all");
  app.add_flag("--mod-jacobson", common.options.mod_jacobson, "run on R/Jac(R)");
  app.add_option("--cap", common.options.cap, "largest |R| for element-level checks");
  app.add_option("--seed", common.options.seed, "seed for sampled frame checks");
  app.add_option("--json,--out", common.json_path, "write the JSON report to PATH, or - for stdout");
}

void write_json(const Json& doc, const std::string& path) {
  if (path == "-") {
    std::cout << doc.dump(2) << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw spectra::Error("cannot open " + path);
  out << doc.dump(2) << '\n';
}

void print_run(const spectra::SuiteRun& run, bool verbose) {
  const auto& s = run.summary;
  std::cout << run.ring << "  pass=" << s.pass << " fail=" << s.fail << " degenerate=" << s.degenerate
            << " hypothesis_violated=" << s.hypothesis_violated << " skipped=" << s.skipped << '\n';
  for (const auto& c : run.checks) {
    if (!verbose && c.status == spectra::Status::pass) continue;
    std::cout << "  " << spectra::to_string(c.status) << "  " << c.name;
    if (c.counterexample) std::cout << "  " << c.counterexample->dump();
    std::cout << '\n';
  }
}

Json corpus_document(const std::vector<spectra::SuiteRun>& runs, std::uint64_t max_card, std::size_t max_factors,
                     const Common& common) {
  Json doc;
  doc["tool"] = spectra::kToolName;
  doc["version"] = spectra::kToolVersion;
  doc["corpus"] = {{"max_card", max_card}, {"max_factors", max_factors}, {"rings", runs.size()}};
  doc["suite"] = common.suite;
  doc["options"] = {{"cap", common.options.cap}, {"mod_jacobson", common.options.mod_jacobson}, {"seed", common.options.seed}};
  Json items = Json::array();
  spectra::Summary total;
  for (const auto& run : runs) {
    items.push_back(spectra::to_json(run));
    total.pass += run.summary.pass;
    total.fail += run.summary.fail;
    total.degenerate += run.summary.degenerate;
    total.hypothesis_violated += run.summary.hypothesis_violated;
    total.skipped += run.summary.skipped;
  }
  doc["runs"] = std::move(items);
  doc["summary"] = spectra::to_json(total);
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive checks of ideal, filter and hull-kernel facts on finite products of Z_n"};
  app.require_subcommand(1);

  Common run_opts;
  std::string ring_expr;
  auto* run_cmd = app.add_subcommand("run", "run suites on one ring");
  run_cmd->add_option("--ring", ring_expr, "ring expression, e.g. \"Z4 x Z9\"")->required();
  add_common(*run_cmd, run_opts);

  Common corpus_opts;
  std::uint64_t max_card = 2000;
  std::size_t max_factors = 3;
  bool verbose = false;
  auto* corpus_cmd = app.add_subcommand("corpus", "run suites over the generated corpus");
  corpus_cmd->add_option("--max-card", max_card, "largest |R| of a product");
  corpus_cmd->add_option("--max-factors", max_factors, "most factors in a product");
  add_common(*corpus_cmd, corpus_opts);

  run_cmd->add_flag("--verbose", verbose, "list passing checks too");
  corpus_cmd->add_flag("--verbose", verbose, "list passing checks too");

  auto* list_cmd = app.add_subcommand("list-suites", "print the suite dispatch table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (list_cmd->parsed()) {
      for (const auto& s : spectra::suite_table())
        std::cout << s.id << '\t' << s.module << '\t' << s.operation << '\t' << s.description << '\n';
      return 0;
    }

    const Common& common = run_cmd->parsed() ? run_opts : corpus_opts;
    if (!spectra::is_suite(common.suite)) {
      std::cerr << "spectra: unknown suite '" << common.suite << "' (see list-suites)\n";
      return kUsageError;
    }

    std::vector<spectra::SuiteRun> runs;
    Json doc;
    if (run_cmd->parsed()) {
      runs.push_back(spectra::run_suite(spectra::parse_ring_spec(ring_expr), common.suite, common.options));
      doc = spectra::to_json(runs.front());
    } else {
      for (const auto& ring : spectra::corpus(max_card, max_factors))
        runs.push_back(spectra::run_suite(ring, common.suite, common.options));
      doc = corpus_document(runs, max_card, max_factors, common);
    }

    if (!common.json_path.empty()) write_json(doc, common.json_path);
    if (common.json_path != "-")
      for (const auto& run : runs) print_run(run, verbose);
    return spectra::exit_code(runs);
  } catch (const spectra::ParseError& e) {
    std::cerr << "spectra: " << e.what() << '\n';
    return kUsageError;
  } catch (const spectra::Error& e) {
    std::cerr << "spectra: " << e.what() << '\n';
    return kUsageError;
  }
}

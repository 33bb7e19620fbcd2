// isw: batch front door for finite inverse semigroup analysis.
//
// Exit codes: 0 ok, 1 invalid algebra, 2 I/O or parse failure,
// 3 counterexample found by the conjecture command.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isw/corpus.hpp"
#include "isw/errors.hpp"
#include "isw/json_io.hpp"
#include "isw/report.hpp"
#include "isw/series.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitIo = 2;
constexpr int kExitCounterexample = 3;

std::uint64_t env_budget() {
  if (const char* v = std::getenv("ISW_BUDGET")) {
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && parsed > 0) return parsed;
    std::cerr << "warning: ignoring unparsable ISW_BUDGET\n";
  }
  return isw::kernels::kDefaultBudget;
}

isw::io::json error_json(const isw::error& e) {
  isw::io::json j;
  j["error"] = e.code();
  j["message"] = e.what();
  j["witness"] = e.witness();
  return j;
}

int cmd_validate(const std::string& path) {
  isw::io::json doc;
  try {
    doc = isw::io::parse_file(path);
  } catch (const isw::parse_error& e) {
    std::cerr << isw::io::dump(error_json(e));
    return kExitIo;
  }
  try {
    isw::InverseSemigroup s = isw::io::semigroup_from_json(doc);
    std::cout << "valid inverse semigroup of order " << s.order() << " with "
              << s.idempotents().size() << " idempotents\n";
    return kExitOk;
  } catch (const isw::parse_error& e) {
    std::cerr << isw::io::dump(error_json(e));
    return kExitIo;
  } catch (const isw::error& e) {
    std::cerr << isw::io::dump(error_json(e));
    return kExitInvalid;
  }
}

int cmd_analyze(const std::string& path, const isw::AnalyzeOptions& opts, bool as_json) {
  isw::InverseSemigroup s = [&] {
    auto doc = isw::io::parse_file(path);
    return isw::io::semigroup_from_json(doc);
  }();
  isw::io::json report = isw::analyze_semigroup(s, opts);
  if (as_json)
    std::cout << isw::io::dump(report);
  else
    std::cout << isw::render_report_text(report);
  return kExitOk;
}

int cmd_corpus(const std::string& outdir) {
  std::filesystem::create_directories(outdir);
  for (const auto& s : isw::standard_corpus()) {
    auto path = std::filesystem::path(outdir) / (s.name() + ".json");
    isw::io::write_file(path.string(), isw::io::semigroup_to_json(s));
    std::cout << path.string() << "\n";
  }
  return kExitOk;
}

int cmd_conjecture(const std::string& path, bool use_corpus, int level,
                   const isw::AnalyzeOptions& opts, const std::string& witness_path) {
  std::vector<isw::InverseSemigroup> targets;
  if (use_corpus) {
    targets = isw::standard_corpus();
  } else {
    auto doc = isw::io::parse_file(path);
    targets.push_back(isw::io::semigroup_from_json(doc));
  }

  bool counterexample = false;
  for (const auto& s : targets) {
    std::string label = s.name().empty() ? "(unnamed)" : s.name();
    try {
      isw::ConjectureResult r =
          isw::conjecture_check(s, level, opts.budget, opts.mode, opts.enumeration_guard);
      std::cout << label << "  n=" << level << "  " << (r.holds ? "holds" : "FAILS") << "\n";
      if (!r.holds) {
        counterexample = true;
        isw::io::json w;
        w["semigroup"] = isw::io::semigroup_to_json(s);
        w["n"] = level;
        w["witness_pair"] = isw::io::json::array({r.witness->first, r.witness->second});
        w["zeta_n"] = isw::io::congruence_to_json(r.zeta_n);
        w["h_and_mu"] = isw::io::tolerance_to_json(r.h_and_mu);
        isw::io::write_file(witness_path, w);
        std::cerr << "counterexample witness written to " << witness_path << "\n";
      }
    } catch (const isw::budget_exceeded& e) {
      std::cout << label << "  n=" << level << "  skipped (" << e.what() << ")\n";
    }
  }
  return counterexample ? kExitCounterexample : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite inverse semigroup workbench"};
  app.require_subcommand(1);

  isw::AnalyzeOptions opts;
  opts.budget = env_budget();

  std::string path;
  bool as_json = false;

  auto* validate = app.add_subcommand("validate", "check that a file holds an inverse semigroup");
  validate->add_option("path", path, "semigroup JSON file")->required();

  auto* analyze = app.add_subcommand("analyze", "run the full analysis");
  analyze->add_option("path", path, "semigroup JSON file")->required();
  analyze->add_option("--max-n", opts.max_n, "largest Mal'cev/conjecture level");
  analyze->add_option("--budget", opts.budget, "iteration budget for exhaustive scans");
  analyze->add_flag("--json", as_json, "emit the machine-readable report");

  std::string outdir;
  auto* corpus = app.add_subcommand("corpus", "write the standard example corpus");
  corpus->add_option("outdir", outdir, "output directory")->required();

  bool use_corpus = false;
  int level = 2;
  std::string witness_path = "conjecture_witness.json";
  auto* conjecture =
      app.add_subcommand("conjecture", "test zeta_n = H & mu_n on a file or the corpus");
  conjecture->add_option("path", path, "semigroup JSON file");
  conjecture->add_flag("--corpus", use_corpus, "run on the standard corpus");
  conjecture->add_option("--n", level, "series/tolerance level");
  conjecture->add_option("--budget", opts.budget, "iteration budget");
  conjecture->add_option("--witness-file", witness_path, "where to write a counterexample");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(path);
    if (analyze->parsed()) return cmd_analyze(path, opts, as_json);
    if (corpus->parsed()) return cmd_corpus(outdir);
    if (conjecture->parsed()) {
      if (!use_corpus && path.empty()) {
        std::cerr << "conjecture: give a path or --corpus\n";
        return kExitIo;
      }
      return cmd_conjecture(path, use_corpus, level, opts, witness_path);
    }
  } catch (const isw::parse_error& e) {
    std::cerr << isw::io::dump(error_json(e));
    return kExitIo;
  } catch (const isw::error& e) {
    std::cerr << isw::io::dump(error_json(e));
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}

// signpat: classify cycle sign patterns, verify verdicts against the
// numerical oracle, and run pattern censuses with CSV reports.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "signpat/census.hpp"

namespace {

using namespace signpat;

std::vector<SignPattern> load_patterns(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return parse_pattern_file(in);
}

int run_classify(const std::string& path) {
  std::vector<SignPattern> patterns;
  try {
    patterns = load_patterns(path);
  } catch (const ParseError& e) {
    std::cerr << path << ":" << e.row() << ": parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  // build every row before emitting anything, so a late failure cannot
  // leave a partial report behind
  std::ostringstream out;
  out << csv_header() << '\n';
  VerifyOptions opt;
  for (size_t i = 0; i < patterns.size(); ++i)
    out << to_csv(report_row(patterns[i], i, /*run_oracle=*/false, opt)) << '\n';
  std::cout << out.str();
  return 0;
}

int run_verify(const std::string& path, const VerifyOptions& opt) {
  std::vector<SignPattern> patterns;
  try {
    patterns = load_patterns(path);
  } catch (const ParseError& e) {
    std::cerr << path << ":" << e.row() << ": parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::ostringstream out;
  out << csv_header() << '\n';
  int disagree = 0;
  for (size_t i = 0; i < patterns.size(); ++i) {
    ReportRow row = report_row(patterns[i], i, /*run_oracle=*/true, opt);
    if (row.oracle == "disagree") ++disagree;
    out << to_csv(row) << '\n';
  }
  std::cout << out.str();
  return disagree > 0 ? 1 : 0;
}

int run_census_cmd(const CensusConfig& cfg, const std::string& out_path) {
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "error: cannot open output file: " << out_path << "\n";
    return 2;
  }
  CensusSummary sum;
  try {
    sum = run_census(cfg, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cout << "enumerated " << sum.enumerated << " patterns, reported " << sum.reported
            << " rows -> " << out_path << "\n";
  for (const auto& [key, count] : sum.counts) std::cout << "  " << key << ": " << count << "\n";
  if (cfg.samples > 0)
    std::cout << "  oracle disagreements: " << sum.disagreements
              << ", inconclusive: " << sum.inconclusive << "\n";
  return sum.disagreements > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cycle sign pattern classifier and numerical cross-checker"};
  app.require_subcommand(1);

  std::string classify_file;
  auto* classify = app.add_subcommand("classify", "classify patterns from a file, CSV on stdout");
  classify->add_option("file", classify_file, "pattern file")->required();

  std::string verify_file;
  VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "classify and cross-check against the oracle");
  verify->add_option("file", verify_file, "pattern file")->required();
  verify->add_option("--samples", vopt.samples, "oracle samples per Requires pattern")
      ->default_val(50);
  verify->add_option("--seed", vopt.seed, "base seed")->default_val(0);
  verify->add_option("--tol", vopt.tol_scale, "scale factor on all oracle tolerances")
      ->default_val(1.0);
  verify->add_option("--tries", vopt.cex_random_tries, "random counterexample tries")
      ->default_val(500);
  verify->add_flag("--corrupt-verdicts", vopt.corrupt_verdicts,
                   "test hook: invert verdicts before checking")
      ->group("");  // hidden

  CensusConfig ccfg;
  std::string census_out;
  auto* census = app.add_subcommand("census", "enumerate cycle patterns and write a CSV report");
  census->add_option("--n", ccfg.n, "pattern order")->required();
  census->add_flag("--zero-diag", ccfg.zero_diag, "restrict to zero diagonals");
  census->add_flag("--forward-positive", ccfg.forward_positive,
                   "restrict to all-positive forward chains");
  census->add_flag("--dedupe", ccfg.dedupe, "one representative per dihedral/negation orbit");
  census->add_option("--random", ccfg.random_count,
                     "sample this many patterns instead of exhausting");
  census->add_option("--samples", ccfg.samples, "oracle samples per pattern (0 = skip oracle)")
      ->default_val(50);
  census->add_option("--seed", ccfg.seed, "base seed")->default_val(0);
  census->add_option("--tol", ccfg.tol_scale, "scale factor on all oracle tolerances")
      ->default_val(1.0);
  census->add_option("--threads", ccfg.threads, "worker threads")->default_val(1);
  census->add_option("--out", census_out, "output CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  if (classify->parsed()) return run_classify(classify_file);
  if (verify->parsed()) return run_verify(verify_file, vopt);
  return run_census_cmd(ccfg, census_out);
}

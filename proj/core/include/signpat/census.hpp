#pragma once

/**
 * @file census.hpp
 * Batch classification with oracle cross-checks and the cycle-pattern
 * census: every pattern on the standard n-cycle support is addressable by
 * an integer id (eight sign pairs per edge, three signs per loop), so
 * exhaustive and seeded-random enumerations are reproducible row by row.
 */

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "signpat/classifier.hpp"
#include "signpat/oracle.hpp"

namespace signpat {

struct ReportRow {
  std::uint64_t id = 0;
  int n = 0;
  std::string pattern;  // compact text; re-parses to the classified pattern
  std::string verdict;
  std::string rule;
  std::string gate;
  std::string oracle;  // agree | disagree | skipped | inconclusive
  int samples = 0;
  std::uint64_t seed = 0;
};

std::string csv_header();
std::string to_csv(const ReportRow& row);

struct VerifyOptions {
  int samples = 50;
  std::uint64_t seed = 0;
  double tol_scale = 1.0;
  int cex_random_tries = 500;
  bool corrupt_verdicts = false;  // test hook: invert verdicts before checking
};

std::uint64_t row_seed(std::uint64_t base_seed, std::uint64_t id);

/// Classify one pattern and, when run_oracle is set, cross-check the verdict:
/// Requires goes through mc_requires, NotRequires through
/// counterexample_search, NotCycle is skipped.
ReportRow report_row(const SignPattern& a, std::uint64_t id, bool run_oracle,
                     const VerifyOptions& opt, const CertSink& on_certificate = {});

struct CensusConfig {
  int n = 3;
  bool zero_diag = false;
  bool forward_positive = false;
  bool dedupe = false;
  std::uint64_t random_count = 0;  // 0 = exhaustive (allowed for n <= 4 only)
  int samples = 50;                // 0 skips the oracle column
  std::uint64_t seed = 0;
  double tol_scale = 1.0;
  int threads = 1;
};

std::uint64_t census_space_size(const CensusConfig& cfg);
SignPattern census_pattern(const CensusConfig& cfg, std::uint64_t id);

/// Lexicographically least compact text over the 2n dihedral relabelings
/// and negation (4n transforms): the orbit canonical form.
std::string canonical_compact(const SignPattern& a);

struct CensusSummary {
  std::uint64_t enumerated = 0;
  std::uint64_t reported = 0;
  std::uint64_t disagreements = 0;
  std::uint64_t inconclusive = 0;
  std::map<std::string, std::uint64_t> counts;  // verdict or verdict/rule
};

/// Enumerate, classify, optionally verify, and stream CSV rows in id order
/// (independent of thread count).
CensusSummary run_census(const CensusConfig& cfg, std::ostream& csv_out);

}  // namespace signpat

#include "signpat/census.hpp"

#include <algorithm>
#include <ostream>
#include <thread>
#include <unordered_set>

namespace signpat {

std::string csv_header() { return "id,n,pattern,verdict,rule,gate,oracle,samples,seed"; }

std::string to_csv(const ReportRow& r) {
  std::string s;
  s += std::to_string(r.id);
  s += ',';
  s += std::to_string(r.n);
  s += ',';
  s += r.pattern;
  s += ',';
  s += r.verdict;
  s += ',';
  s += r.rule;
  s += ',';
  s += r.gate;
  s += ',';
  s += r.oracle;
  s += ',';
  s += std::to_string(r.samples);
  s += ',';
  s += std::to_string(r.seed);
  return s;
}

std::uint64_t row_seed(std::uint64_t base_seed, std::uint64_t id) {
  return mix64(mix64(base_seed) ^ (2 * id + 1));
}

ReportRow report_row(const SignPattern& a, std::uint64_t id, bool run_oracle,
                     const VerifyOptions& opt, const CertSink& on_certificate) {
  ReportRow row;
  row.id = id;
  row.n = a.order();
  row.pattern = a.to_compact();
  row.seed = row_seed(opt.seed, id);
  row.samples = run_oracle ? opt.samples : 0;

  Verdict v = classify(a);
  if (opt.corrupt_verdicts && v.outcome != Outcome::NotCycle)
    v.outcome = v.outcome == Outcome::Requires ? Outcome::NotRequires : Outcome::Requires;
  row.verdict = to_string(v.outcome);
  row.rule = rule_string(v);
  row.gate = v.gate ? describe(*v.gate) : "";

  if (!run_oracle || v.outcome == Outcome::NotCycle) {
    row.oracle = "skipped";
    return row;
  }
  Tolerances tol = Tolerances{}.scaled(opt.tol_scale);
  QSampleConfig q{0.5, 2.0, row.seed};
  if (v.outcome == Outcome::Requires) {
    OracleVerdict o = mc_requires(a, opt.samples, q, tol, on_certificate);
    switch (o.kind) {
      case OracleVerdict::Kind::AllSamplesAP: row.oracle = "agree"; break;
      case OracleVerdict::Kind::Inconclusive: row.oracle = "inconclusive"; break;
      default: row.oracle = "disagree"; break;
    }
  } else {
    CexConfig cc{q, opt.cex_random_tries, tol};
    row.oracle = counterexample_search(a, cc) ? "agree" : "disagree";
  }
  return row;
}

namespace {

constexpr Sign kEdgePairs[8][2] = {
    {Sign::Plus, Sign::Plus},   {Sign::Plus, Sign::Minus},  {Sign::Plus, Sign::Zero},
    {Sign::Minus, Sign::Plus},  {Sign::Minus, Sign::Minus}, {Sign::Minus, Sign::Zero},
    {Sign::Zero, Sign::Plus},   {Sign::Zero, Sign::Minus},
};
constexpr Sign kDiagSigns[3] = {Sign::Zero, Sign::Plus, Sign::Minus};

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::uint64_t census_space_size(const CensusConfig& cfg) {
  const std::uint64_t edge_radix = cfg.forward_positive ? 3 : 8;
  const std::uint64_t diag_radix = cfg.zero_diag ? 1 : 3;
  return ipow(edge_radix, cfg.n) * ipow(diag_radix, cfg.n);
}

SignPattern census_pattern(const CensusConfig& cfg, std::uint64_t id) {
  const int n = cfg.n;
  const std::uint64_t edge_radix = cfg.forward_positive ? 3 : 8;
  const std::uint64_t diag_radix = cfg.zero_diag ? 1 : 3;
  SignPattern a(n);
  for (int e = 0; e < n; ++e) {
    int digit = static_cast<int>(id % edge_radix);
    id /= edge_radix;
    a.set(e, (e + 1) % n, kEdgePairs[digit][0]);
    a.set((e + 1) % n, e, kEdgePairs[digit][1]);
  }
  for (int v = 0; v < n; ++v) {
    int digit = static_cast<int>(id % diag_radix);
    id /= diag_radix;
    a.set(v, v, kDiagSigns[digit]);
  }
  return a;
}

std::string canonical_compact(const SignPattern& a) {
  std::string best = a.to_compact();
  for (const CycleLabeling& lab : cycle_form_labelings(a)) {
    SignPattern m = relabel(a, lab);
    best = std::min(best, m.to_compact());
    best = std::min(best, negate(m).to_compact());
  }
  return best;
}

CensusSummary run_census(const CensusConfig& cfg, std::ostream& csv_out) {
  if (cfg.n < 3) throw std::invalid_argument("census: n must be >= 3");
  const std::uint64_t space = census_space_size(cfg);
  if (cfg.random_count == 0 && cfg.n > 4)
    throw std::invalid_argument("census: exhaustive enumeration is limited to n <= 4");

  std::vector<std::uint64_t> ids;
  if (cfg.random_count == 0) {
    ids.resize(space);
    for (std::uint64_t i = 0; i < space; ++i) ids[i] = i;
  } else {
    ids.reserve(cfg.random_count);
    std::uint64_t state = mix64(cfg.seed ^ 0xcafef00dull);
    const std::uint64_t cutoff = space == 0 ? 0 : UINT64_MAX - UINT64_MAX % space;
    while (ids.size() < cfg.random_count) {
      state = mix64(state + 0x1234567ull);
      if (state >= cutoff) continue;
      ids.push_back(state % space);
    }
  }

  CensusSummary sum;
  sum.enumerated = ids.size();

  if (cfg.dedupe) {
    std::vector<std::uint64_t> kept;
    std::unordered_set<std::string> seen;
    for (std::uint64_t id : ids) {
      SignPattern a = census_pattern(cfg, id);
      std::string canon = canonical_compact(a);
      if (cfg.random_count == 0) {
        if (a.to_compact() == canon) kept.push_back(id);
      } else {
        if (seen.insert(canon).second) kept.push_back(id);
      }
    }
    ids = std::move(kept);
  }

  VerifyOptions opt;
  opt.samples = cfg.samples;
  opt.seed = cfg.seed;
  opt.tol_scale = cfg.tol_scale;
  const bool oracle = cfg.samples > 0;

  std::vector<ReportRow> rows(ids.size());
  const int threads = std::max(1, cfg.threads);
  if (threads == 1) {
    for (size_t k = 0; k < ids.size(); ++k)
      rows[k] = report_row(census_pattern(cfg, ids[k]), ids[k], oracle, opt);
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (ids.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      std::size_t lo = t * chunk, hi = std::min(ids.size(), lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        for (std::size_t k = lo; k < hi; ++k)
          rows[k] = report_row(census_pattern(cfg, ids[k]), ids[k], oracle, opt);
      });
    }
    for (auto& th : pool) th.join();
  }

  csv_out << csv_header() << '\n';
  for (const ReportRow& r : rows) {
    csv_out << to_csv(r) << '\n';
    std::string key = r.verdict;
    if (!r.rule.empty()) key += "/" + r.rule;
    ++sum.counts[key];
    if (r.oracle == "disagree") ++sum.disagreements;
    if (r.oracle == "inconclusive") ++sum.inconclusive;
  }
  sum.reported = rows.size();
  return sum;
}

}  // namespace signpat

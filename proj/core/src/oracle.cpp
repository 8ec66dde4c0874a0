#include "signpat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "signpat/digraph.hpp"

namespace signpat {

Spectrum compute_spectrum(const RealMatrix& b, const Tolerances& tol) {
  const int n = static_cast<int>(b.rows());
  if (n < 1 || b.cols() != n) throw std::invalid_argument("compute_spectrum: square matrix required");
  if (n > 64) throw std::invalid_argument("compute_spectrum: order bound (64) exceeded");
  if (!b.allFinite()) throw std::invalid_argument("compute_spectrum: entries must be finite");
  Eigen::EigenSolver<RealMatrix> es(b, /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) throw EigenFailure("eigen solver did not converge");
  Spectrum sp;
  sp.values = es.eigenvalues();
  sp.scale = b.cwiseAbs().maxCoeff();
  sp.tol = tol;
  return sp;
}

RealVector null_direction(const RealMatrix& m) {
  Eigen::JacobiSVD<RealMatrix> svd(m, Eigen::ComputeFullV);
  return svd.matrixV().col(m.cols() - 1);
}

namespace {

// Rescale so the largest-magnitude entry becomes exactly +1.
void normalize_max_entry(RealVector& v) {
  Eigen::Index k;
  v.cwiseAbs().maxCoeff(&k);
  v /= v(k);
}

}  // namespace

APResult ap_test(const RealMatrix& b, const Tolerances& tol) {
  const int n = static_cast<int>(b.rows());
  Spectrum sp = compute_spectrum(b, tol);
  const double scale = std::max(sp.scale, 1e-300);
  const RealMatrix id = RealMatrix::Identity(n, n);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    return sp.values(i).real() > sp.values(j).real();
  });

  bool saw_real_simple = false;
  bool saw_zero_entry = false;
  for (int i : order) {
    if (!sp.is_real(i) || !sp.is_simple(i)) continue;
    saw_real_simple = true;
    const double lam = sp.values(i).real();
    RealMatrix shifted = b - lam * id;
    RealVector x = null_direction(shifted);
    RealVector y = null_direction(shifted.transpose());
    if ((b * x - lam * x).norm() > tol.resid_rel * scale) continue;
    if ((b.transpose() * y - lam * y).norm() > tol.resid_rel * scale) continue;
    // algebraic simplicity: left/right vectors of a simple eigenvalue are
    // not orthogonal
    if (std::abs(x.dot(y)) < tol.inner_abs) continue;
    normalize_max_entry(x);
    normalize_max_entry(y);
    const double minx = x.minCoeff(), miny = y.minCoeff();
    if (minx > tol.pos_abs && miny > tol.pos_abs)
      return {APCertificate{lam, std::move(x), std::move(y)}, APFailureKind::NoRealSimpleEig};
    if (minx > -tol.pos_abs && miny > -tol.pos_abs) saw_zero_entry = true;
  }
  APFailureKind kind = !saw_real_simple
                           ? APFailureKind::NoRealSimpleEig
                           : (saw_zero_entry ? APFailureKind::ZeroEntryEigvec
                                             : APFailureKind::NonPositiveEigvec);
  return {std::nullopt, kind};
}

std::optional<APCertificate> is_algebraically_positive(const RealMatrix& b,
                                                       const Tolerances& tol) {
  return ap_test(b, tol).certificate;
}

std::vector<double> char_poly(const RealMatrix& b) {
  const int n = static_cast<int>(b.rows());
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  RealMatrix bm = b;  // B * M_1 with M_1 = I
  c[n - 1] = -bm.trace();
  for (int k = 2; k <= n; ++k) {
    RealMatrix m = bm + c[n - k + 1] * RealMatrix::Identity(n, n);
    bm = b * m;
    c[n - k] = -bm.trace() / k;
  }
  return c;
}

RealMatrix eval_poly(const std::vector<double>& coeffs, const RealMatrix& b) {
  const int n = static_cast<int>(b.rows());
  RealMatrix q = RealMatrix::Zero(n, n);
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    q = q * b + coeffs[k] * RealMatrix::Identity(n, n);
  }
  return q;
}

std::vector<double> witness_polynomial(const RealMatrix& b, const APCertificate& cert,
                                       const Tolerances& tol) {
  const int n = static_cast<int>(b.rows());
  std::vector<double> p = char_poly(b);
  // synthetic division by (x - lambda)
  std::vector<double> q(n, 0.0);
  double carry = p[n];
  q[n - 1] = carry;
  for (int i = 1; i < n; ++i) {
    carry = p[n - i] + cert.lambda * carry;
    q[n - 1 - i] = carry;
  }
  const double rem = p[0] + cert.lambda * carry;
  double pmax = 0.0;
  for (double v : p) pmax = std::max(pmax, std::abs(v));
  if (std::abs(rem) > 1e-6 * std::max(1.0, pmax))
    throw std::runtime_error("witness_polynomial: lambda leaves a division remainder");
  RealMatrix qb = eval_poly(q, b);
  if (qb.maxCoeff() <= 0.0) {
    for (double& v : q) v = -v;
    qb = -qb;
  }
  if (!(qb.minCoeff() > tol.pos_abs))
    throw std::runtime_error("witness_polynomial: q(B) is not entrywise positive");
  return q;
}

std::string to_string(CexReason r) {
  switch (r) {
    case CexReason::NoRealSimpleEig: return "NoRealSimpleEig";
    case CexReason::NonPositiveEigvec: return "NonPositiveEigvec";
    case CexReason::ZeroEntryEigvec: return "ZeroEntryEigvec";
    case CexReason::SkewSymmetric: return "SkewSymmetric";
    case CexReason::ColumnSumConstruction: return "ColumnSumConstruction";
    case CexReason::RandomSearch: return "RandomSearch";
  }
  return "?";
}

namespace {

CexReason reason_from_failure(APFailureKind k) {
  switch (k) {
    case APFailureKind::NoRealSimpleEig: return CexReason::NoRealSimpleEig;
    case APFailureKind::ZeroEntryEigvec: return CexReason::ZeroEntryEigvec;
    default: return CexReason::NonPositiveEigvec;
  }
}

}  // namespace

OracleVerdict mc_requires(const SignPattern& a, int samples, const QSampleConfig& cfg,
                          const Tolerances& tol, const CertSink& on_certificate) {
  if (samples < 1) throw std::invalid_argument("mc_requires: samples must be >= 1");
  int failures = 0;
  for (int k = 0; k < samples; ++k) {
    RealMatrix b = sample_q_indexed(a, cfg, static_cast<std::uint64_t>(k));
    try {
      APResult r = ap_test(b, tol);
      if (!r.certificate)
        return {OracleVerdict::Kind::CounterexampleFound, k,
                Counterexample{std::move(b), reason_from_failure(r.failure)}};
      if (on_certificate) on_certificate(b, *r.certificate);
    } catch (const EigenFailure&) {
      ++failures;
    }
  }
  if (failures * 100 > samples) return {OracleVerdict::Kind::Inconclusive, failures, std::nullopt};
  return {OracleVerdict::Kind::AllSamplesAP, samples, std::nullopt};
}

// ---------------------------------------------------------------------------
// Counterexample strategies

namespace {

bool non_ap_verified(const SignPattern& a, const RealMatrix& b, const Tolerances& tol) {
  if (!matches_pattern(b, a)) return false;
  try {
    return !ap_test(b, tol).certificate.has_value();
  } catch (const EigenFailure&) {
    return false;
  }
}

// +-1 instantiation of an even-order skew sign pattern.
std::optional<Counterexample> skew_strategy(const SignPattern& a, const Tolerances& tol) {
  const int n = a.order();
  if (n % 2 != 0) return std::nullopt;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.at(i, j) != -a.at(j, i)) return std::nullopt;  // i == j forces a zero diagonal
  RealMatrix b(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = to_int(a.at(i, j));
  if (!non_ap_verified(a, b, tol)) return std::nullopt;
  return Counterexample{std::move(b), CexReason::SkewSymmetric};
}

// Sign-symmetric cycle pattern with alternating edge signs and zero
// diagonal: the +-1 member annihilates the 0/1 alternating vector, a
// nonnegative eigenvector with zero entries.
std::optional<Counterexample> alternating_strategy(const SignPattern& a, const Tolerances& tol) {
  const int n = a.order();
  if (n < 4 || n % 2 != 0) return std::nullopt;
  auto labs = cycle_form_labelings(a);
  for (const CycleLabeling& lab : labs) {
    SignPattern m = relabel(a, lab);
    bool shape = true;
    for (int v = 0; v < n && shape; ++v)
      if (m.at(v, v) != Sign::Zero) shape = false;
    std::vector<Sign> edge(n, Sign::Zero);
    for (int e = 0; e < n && shape; ++e) {
      Sign f = forward_entry(m, e), g = backward_entry(m, e);
      if (f == Sign::Zero || f != g) shape = false;
      edge[e] = f;
    }
    for (int e = 0; e < n && shape; ++e)
      if (edge[e] == edge[(e + 1) % n]) shape = false;  // adjacent edges must alternate
    if (!shape) continue;

    RealMatrix bm = RealMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) bm(i, j) = to_int(m.at(i, j));
    RealVector xm(n);
    for (int v = 0; v < n; ++v) xm(v) = (v % 2 == 0) ? 1.0 : 0.0;
    if ((bm * xm).norm() > 1e-12 * n) continue;

    // Map the member back through the labeling.
    RealMatrix b = RealMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b(lab.perm[i], lab.perm[j]) = bm(i, j);
    if (!non_ap_verified(a, b, tol)) continue;
    return Counterexample{std::move(b), CexReason::ZeroEntryEigvec};
  }
  return std::nullopt;
}

// One entry of the balancing system for a single column.
struct BalanceEntry {
  int row;        // -1 marks the diagonal slot
  Sign sign;      // contribution sign to the column sum
  double lb, ub;  // magnitude range; lb == ub for pinned values
};

// Choose magnitudes for members of Q(A) so that every column of
// (B - lambda I) with row t deleted sums to zero; the all-ones vector with
// a zero at t is then a left eigenvector, and such a matrix is never AP.
std::optional<RealMatrix> balance_construct(const SignPattern& a, int t, double lam) {
  const int n = a.order();
  RealMatrix b = RealMatrix::Zero(n, n);
  for (int j = 0; j < n; ++j) b(t, j) = to_int(a.at(t, j));  // deleted row: free

  for (int c = 0; c < n; ++c) {
    std::vector<BalanceEntry> plus, minus;
    bool wild = false;
    for (int i = 0; i < n; ++i) {
      if (i == t || i == c) continue;
      if (a.at(i, c) == Sign::Plus) plus.push_back({i, Sign::Plus, 0.0, 1e12});
      if (a.at(i, c) == Sign::Minus) minus.push_back({i, Sign::Minus, 0.0, 1e12});
    }
    bool diag_present = (c != t);
    Sign acc = a.at(c, c);
    if (diag_present) {
      // The slot holds b_cc - lam with sign(b_cc) = acc.
      if (lam > 0) {
        if (acc == Sign::Plus) wild = true;
        else if (acc == Sign::Zero) minus.push_back({-1, Sign::Minus, lam, lam});
        else minus.push_back({-1, Sign::Minus, lam, 1e12});
      } else if (lam < 0) {
        if (acc == Sign::Minus) wild = true;
        else if (acc == Sign::Zero) plus.push_back({-1, Sign::Plus, -lam, -lam});
        else plus.push_back({-1, Sign::Plus, -lam, 1e12});
      } else if (acc != Sign::Zero) {
        (acc == Sign::Plus ? plus : minus).push_back({-1, acc, 0.0, 1e12});
      }
    }

    if (!wild && !(plus.empty() && minus.empty()) && (plus.empty() || minus.empty()))
      return std::nullopt;  // column cannot be balanced

    // Assign magnitudes. Free entries start at 1, pinned/ranged diagonal
    // slots at their lower bound plus slack, then one free entry absorbs
    // the imbalance.
    auto assign = [&](std::vector<BalanceEntry>& side, std::vector<double>& mags) {
      mags.resize(side.size());
      for (size_t k = 0; k < side.size(); ++k) {
        const BalanceEntry& e = side[k];
        if (e.lb == e.ub) mags[k] = e.lb;
        else if (e.lb > 0) mags[k] = e.lb * 1.5 + 0.5;
        else mags[k] = 1.0;
      }
    };
    std::vector<double> pm, mm;
    assign(plus, pm);
    assign(minus, mm);

    if (wild) {
      // keep the fixed contributions small relative to |lam|
      double cap = std::abs(lam) / (4.0 * (plus.size() + minus.size() + 1));
      for (auto& v : pm) v = std::min(v, cap);
      for (auto& v : mm) v = std::min(v, cap);
      // pinned entries cannot shrink; with a wild slot no pinned entry exists
      // in this column (the diagonal is the wild one), so the cap is safe.
    }
    double ps = std::accumulate(pm.begin(), pm.end(), 0.0);
    double ms = std::accumulate(mm.begin(), mm.end(), 0.0);

    double wild_value = 0.0;
    if (wild) {
      wild_value = ms - ps;  // column sum ps - ms + wild_value = 0
      double bcc = lam + wild_value;
      if ((lam > 0 && !(bcc > 0)) || (lam < 0 && !(bcc < 0))) return std::nullopt;
    } else if (!plus.empty() || !minus.empty()) {
      // equalize: bump a flexible entry on the light side
      auto flexible = [](const std::vector<BalanceEntry>& side) {
        for (size_t k = 0; k < side.size(); ++k)
          if (side[k].lb != side[k].ub) return static_cast<int>(k);
        return -1;
      };
      if (ps < ms) {
        int k = flexible(plus);
        if (k < 0) {
          // only a pinned diagonal on the plus side: rescale the minus side
          if (flexible(minus) < 0) return std::nullopt;
          double f = ps / ms;
          bool ok = true;
          for (size_t q = 0; q < mm.size(); ++q) {
            mm[q] *= f;
            if (mm[q] < minus[q].lb || (minus[q].lb == minus[q].ub && mm[q] != minus[q].lb))
              ok = false;
          }
          if (!ok) return std::nullopt;
        } else {
          pm[k] += ms - ps;
        }
      } else if (ms < ps) {
        int k = flexible(minus);
        if (k < 0) {
          if (flexible(plus) < 0) return std::nullopt;
          double f = ms / ps;
          bool ok = true;
          for (size_t q = 0; q < pm.size(); ++q) {
            pm[q] *= f;
            if (pm[q] < plus[q].lb || (plus[q].lb == plus[q].ub && pm[q] != plus[q].lb))
              ok = false;
          }
          if (!ok) return std::nullopt;
        } else {
          mm[k] += ps - ms;
        }
      }
    }

    // Write the column into B.
    auto write = [&](const std::vector<BalanceEntry>& side, const std::vector<double>& mags) {
      for (size_t k = 0; k < side.size(); ++k) {
        const BalanceEntry& e = side[k];
        double value = to_int(e.sign) * mags[k];
        if (e.row >= 0) b(e.row, c) = value;
        else b(c, c) = lam + value;  // diagonal slot holds b_cc - lam
      }
    };
    write(plus, pm);
    write(minus, mm);
    if (wild) b(c, c) = lam + wild_value;
  }
  return b;
}

std::optional<Counterexample> balance_strategy(const SignPattern& a, const Tolerances& tol) {
  const int n = a.order();
  for (bool transposed : {false, true}) {
    SignPattern c = transposed ? transpose(a) : a;
    for (int t = 0; t < n; ++t) {
      for (double lam : {1.0, -1.0, 0.0}) {
        auto built = balance_construct(c, t, lam);
        if (!built) continue;
        RealMatrix b = *built;
        // verify the balanced left eigenvector before un-transposing
        RealVector x = RealVector::Ones(n);
        x(t) = 0.0;
        double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
        RealMatrix shifted = b - lam * RealMatrix::Identity(n, n);
        if ((shifted.transpose() * x).norm() > 1e-9 * scale) continue;
        RealMatrix candidate = transposed ? RealMatrix(b.transpose()) : b;
        if (!non_ap_verified(a, candidate, tol)) continue;
        return Counterexample{std::move(candidate), CexReason::ColumnSumConstruction};
      }
    }
  }
  return std::nullopt;
}

// When some row or column of A carries no minus, any AP member needs a
// nonnegative eigenvalue; hunt for a semistable member by multiplicative
// descent on the spectral abscissa.
std::optional<Counterexample> semistable_strategy(const SignPattern& a, const CexConfig& cfg) {
  const int n = a.order();
  bool eligible = false;
  for (int i = 0; i < n && !eligible; ++i) {
    bool row_minus = false, col_minus = false;
    for (int j = 0; j < n; ++j) {
      row_minus |= a.at(i, j) == Sign::Minus;
      col_minus |= a.at(j, i) == Sign::Minus;
    }
    if (!row_minus || !col_minus) eligible = true;
  }
  if (!eligible) return std::nullopt;

  auto abscissa = [&](const RealMatrix& b) -> double {
    Spectrum sp = compute_spectrum(b, cfg.tol);
    double m = -1e300;
    for (int i = 0; i < sp.values.size(); ++i) m = std::max(m, sp.values(i).real());
    return m;
  };

  QSampleConfig q = cfg.q;
  q.seed = mix64(cfg.q.seed ^ 0x5e111ull);
  std::uint64_t rng = q.seed;
  auto next_unit = [&]() {
    rng = mix64(rng + 0x9e37ull);
    return static_cast<double>(rng >> 11) * 0x1.0p-53;
  };

  for (int restart = 0; restart < 4; ++restart) {
    RealMatrix b;
    double mu;
    try {
      b = sample_q_indexed(a, q, restart);
      mu = abscissa(b);
    } catch (const EigenFailure&) {
      continue;
    }
    for (int iter = 0; iter < 300 && mu > 1e-12; ++iter) {
      int i = static_cast<int>(next_unit() * n) % n;
      int j = static_cast<int>(next_unit() * n) % n;
      if (a.at(i, j) == Sign::Zero) continue;
      double factor = std::exp((next_unit() - 0.5) * 1.2);
      RealMatrix trial = b;
      trial(i, j) *= factor;
      try {
        double m2 = abscissa(trial);
        if (m2 < mu) {
          b = std::move(trial);
          mu = m2;
        }
      } catch (const EigenFailure&) {
      }
    }
    if (mu <= 1e-12 && non_ap_verified(a, b, cfg.tol)) {
      APResult r = ap_test(b, cfg.tol);
      return Counterexample{std::move(b), reason_from_failure(r.failure)};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Counterexample> counterexample_search(const SignPattern& a, const CexConfig& cfg) {
  if (auto c = skew_strategy(a, cfg.tol)) return c;
  if (auto c = alternating_strategy(a, cfg.tol)) return c;
  if (auto c = balance_strategy(a, cfg.tol)) return c;
  if (auto c = semistable_strategy(a, cfg)) return c;

  QSampleConfig q = cfg.q;
  q.seed = mix64(cfg.q.seed ^ 0xce7e5ull);
  for (int k = 0; k < cfg.random_tries; ++k) {
    RealMatrix b = sample_q_indexed(a, q, static_cast<std::uint64_t>(k));
    try {
      if (!ap_test(b, cfg.tol).certificate) return Counterexample{std::move(b), CexReason::RandomSearch};
    } catch (const EigenFailure&) {
    }
  }
  return std::nullopt;
}

Propagation propagate_positive_solution(const RealMatrix& b, double alpha, const RealVector& x) {
  const int n = static_cast<int>(b.rows());
  if (n < 2 || b.cols() != n) throw std::invalid_argument("propagate: square matrix, n >= 2");
  if (x.size() != n) throw std::invalid_argument("propagate: vector size mismatch");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (std::abs(i - j) > 1 && b(i, j) != 0.0)
        throw std::invalid_argument("propagate: matrix is not tridiagonal");
    }
    if (i + 1 < n && !(b(i, i + 1) > 0.0))
      throw std::invalid_argument("propagate: superdiagonal must be positive");
    if (i + 1 < n && !(b(i + 1, i) > 0.0))
      throw std::invalid_argument("propagate: subdiagonal must be positive");
    if (!(b(i, i) - alpha < 0.0))
      throw std::invalid_argument("propagate: diagonal minus alpha must be negative");
    if (!(x(i) > 0.0)) throw std::invalid_argument("propagate: x must be positive");
  }

  RealVector y(n);
  y(0) = x(0);
  for (int i = 0; i + 1 < n; ++i) {
    double acc = (b(i, i) - alpha) * y(i);
    if (i > 0) acc += b(i, i - 1) * y(i - 1);
    y(i + 1) = -acc / b(i, i + 1);
  }

  RealMatrix shifted = b - alpha * RealMatrix::Identity(n, n);
  RealVector res = shifted * y;
  double interior = 0.0;
  for (int i = 0; i + 1 < n; ++i) interior = std::max(interior, std::abs(res(i)));

  double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  bool bx_zero = (b * x).lpNorm<Eigen::Infinity>() <= 1e-10 * scale * x.lpNorm<Eigen::Infinity>();
  bool dominated = true;
  for (int i = 0; i < n; ++i)
    if (y(i) < x(i) - 1e-9) dominated = false;
  return Propagation{std::move(y), interior, res(n - 1), bx_zero,
                     bx_zero && dominated && res(n - 1) < 0.0};
}

// ---------------------------------------------------------------------------
// Standard form search

namespace {

struct SFSearch {
  const SignRect& m;
  int n;
  std::vector<int> row_at;      // position -> input row
  std::vector<bool> neg_at;     // position -> negation
  std::vector<int> col_at;      // standard column position -> input column
  std::vector<bool> row_used, col_used;

  bool solve(int pos) {
    if (pos == n) {
      // one column remains unplaced; append it (it is never constrained)
      for (int c = 0; c <= n; ++c)
        if (!col_used[c]) col_at.push_back(c);
      return true;
    }
    const int allowed = pos + 1;  // columns col_at[0..pos] admit minus entries
    for (int r = 0; r < n; ++r) {
      if (row_used[r]) continue;
      for (int s = 0; s < 2; ++s) {
        int pivot = -1;
        bool ok = true;
        int plus_count = 0;
        for (int c = 0; c <= n && ok; ++c) {
          Sign v = m.at(r, c);
          if (s) v = -v;
          if (v == Sign::Zero) continue;
          bool in_allowed = false;
          for (int k = 0; k < allowed; ++k)
            if (col_at[k] == c) { in_allowed = true; break; }
          if (v == Sign::Minus) {
            if (!in_allowed) ok = false;
          } else {
            if (in_allowed || col_used[c]) ok = false;
            else {
              ++plus_count;
              pivot = c;
              if (plus_count > 1) ok = false;
            }
          }
        }
        if (!ok) continue;
        row_used[r] = true;
        row_at.push_back(r);
        neg_at.push_back(s == 1);
        if (pivot >= 0) {
          col_used[pivot] = true;
          col_at.push_back(pivot);
          if (solve(pos + 1)) return true;
          col_at.pop_back();
          col_used[pivot] = false;
        } else {
          for (int c = 0; c <= n; ++c) {
            if (col_used[c]) continue;
            col_used[c] = true;
            col_at.push_back(c);
            if (solve(pos + 1)) return true;
            col_at.pop_back();
            col_used[c] = false;
          }
        }
        row_at.pop_back();
        neg_at.pop_back();
        row_used[r] = false;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<StandardFormWitness> standard_form_transformable(const SignRect& m,
                                                               int /*pivot_row_removed*/) {
  const int n = m.rows;
  if (m.cols != n + 1) throw std::invalid_argument("standard_form: expected n x (n+1) grid");
  if (n > 8) throw std::invalid_argument("standard_form: order bound (8) exceeded");

  SFSearch search{m, n, {}, {}, {}, std::vector<bool>(n, false), std::vector<bool>(n + 1, false)};
  // choose the initial minus-only column c0
  for (int c0 = 0; c0 <= n; ++c0) {
    search.col_used[c0] = true;
    search.col_at.push_back(c0);
    if (search.solve(0)) {
      StandardFormWitness w{search.row_at, search.neg_at, search.col_at};
      // verify
      SignRect t(n, n + 1);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j <= n; ++j) {
          Sign v = m.at(w.row_perm[i], w.col_perm[j]);
          t.set(i, j, w.row_negate[i] ? -v : v);
        }
      if (is_subpattern(t, standard_form_rect(n))) return w;
      return std::nullopt;  // should not happen; fail closed
    }
    search.col_at.pop_back();
    search.col_used[c0] = false;
  }
  return std::nullopt;
}

}  // namespace signpat

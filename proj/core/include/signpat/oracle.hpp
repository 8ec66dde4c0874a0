#pragma once

/**
 * @file oracle.hpp
 * Ground-truth numerics. A real matrix is algebraically positive (AP) when
 * some real polynomial of it is entrywise positive; equivalently it has a
 * simple real eigenvalue whose left and right eigenvectors are strictly
 * one-signed. Everything here either certifies that property for concrete
 * matrices or hunts for members of a qualitative class that fail it.
 *
 * The dense eigenvalue kernel is Eigen's real Schur-based solver; the
 * characteristic polynomial (Faddeev-LeVerrier) and everything built on top
 * is local code, so tests can cross-check the kernel against polynomial
 * roots obtained independently.
 */

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "signpat/pattern.hpp"
#include "signpat/sampling.hpp"

namespace signpat {

class EigenFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// All relative tolerances scale with max|b_ij|; pos_abs applies after
/// normalizing a vector's largest-magnitude entry to +1.
struct Tolerances {
  double imag_rel = 1e-9;   // eigenvalue counts as real
  double sep_rel = 1e-7;    // eigenvalue counts as simple
  double pos_abs = 1e-9;    // strict positivity of normalized vector entries
  double resid_rel = 1e-8;  // eigenpair residual
  double inner_abs = 1e-6;  // |y.x| lower bound for unit left/right vectors

  Tolerances scaled(double f) const {
    return {imag_rel * f, sep_rel * f, pos_abs * f, resid_rel * f, inner_abs * f};
  }
};

struct Spectrum {
  Eigen::VectorXcd values;
  double scale = 0.0;  // max|b_ij|
  Tolerances tol;

  bool is_real(int i) const { return std::abs(values(i).imag()) <= tol.imag_rel * scale; }
  bool is_simple(int i) const {
    for (int j = 0; j < values.size(); ++j)
      if (j != i && std::abs(values(i) - values(j)) <= tol.sep_rel * scale) return false;
    return true;
  }
};

/// Eigenvalues of B (n <= 64). Throws EigenFailure on non-convergence.
Spectrum compute_spectrum(const RealMatrix& b, const Tolerances& tol = {});

/// Unit vector spanning the (numerical) kernel of M: the right singular
/// vector of the smallest singular value.
RealVector null_direction(const RealMatrix& m);

struct APCertificate {
  double lambda = 0.0;
  RealVector right;  // normalized, largest-magnitude entry +1
  RealVector left;
};

enum class APFailureKind { NoRealSimpleEig, NonPositiveEigvec, ZeroEntryEigvec };

struct APResult {
  std::optional<APCertificate> certificate;
  APFailureKind failure = APFailureKind::NoRealSimpleEig;  // meaningful when empty
};

/// Theorem-of-record test: certificate for some simple real eigenvalue with
/// strictly one-signed left and right eigenvectors, if one exists.
/// Simplicity is pre-filtered spectrally and confirmed by |y.x| bounded
/// away from zero.
APResult ap_test(const RealMatrix& b, const Tolerances& tol = {});
std::optional<APCertificate> is_algebraically_positive(const RealMatrix& b,
                                                       const Tolerances& tol = {});

/// Monic characteristic polynomial by the Faddeev-LeVerrier recursion.
/// coeffs[k] multiplies x^k; coeffs[n] == 1.
std::vector<double> char_poly(const RealMatrix& b);

/// Horner evaluation of a polynomial (ascending coefficients) at a matrix.
RealMatrix eval_poly(const std::vector<double>& coeffs, const RealMatrix& b);

/// q(x) = +- p(x)/(x - lambda), sign chosen so q(B) is entrywise positive.
/// Throws when lambda leaves a division remainder or q(B) fails positivity.
std::vector<double> witness_polynomial(const RealMatrix& b, const APCertificate& cert,
                                       const Tolerances& tol = {});

enum class CexReason {
  NoRealSimpleEig,
  NonPositiveEigvec,
  ZeroEntryEigvec,
  SkewSymmetric,
  ColumnSumConstruction,
  RandomSearch,
};
std::string to_string(CexReason r);

struct Counterexample {
  RealMatrix matrix;
  CexReason reason;
};

struct OracleVerdict {
  enum class Kind { AllSamplesAP, CounterexampleFound, Inconclusive };
  Kind kind;
  int count = 0;  // samples certified (AllSamplesAP) or eigen failures (Inconclusive)
  std::optional<Counterexample> counterexample;
};

using CertSink = std::function<void(const RealMatrix&, const APCertificate&)>;

/// Draw `samples` members of Q(A) (stream indices 0..samples-1) and test
/// each; stops at the first non-AP member. Deterministic under cfg.seed.
/// More than 1% eigensolver failures yields Inconclusive.
OracleVerdict mc_requires(const SignPattern& a, int samples, const QSampleConfig& cfg,
                          const Tolerances& tol = {}, const CertSink& on_certificate = {});

struct CexConfig {
  QSampleConfig q;
  int random_tries = 500;
  Tolerances tol;
};

/// Constructive strategies in order, then randomized search:
///  1. even-order skew sign patterns -> +-1 instantiation,
///  2. sign-symmetric alternating cycle patterns -> +-1 member with a
///     nonnegative kernel vector containing zeros,
///  3. column/row balancing: magnitudes making a deleted-row (column) of
///     B - lambda I sum to zero, yielding an eigenvector with a zero entry,
///  4. semistability descent when some row or column carries no minus,
///  5. random members rejected by ap_test.
/// Every returned matrix is sign-checked against A and re-verified non-AP.
std::optional<Counterexample> counterexample_search(const SignPattern& a,
                                                    const CexConfig& cfg = {});

struct Propagation {
  RealVector y;                 // y(0) = x(0); rows 0..n-2 of (B - alpha I) y vanish
  double max_interior_residual; // those rows, evaluated numerically
  double last_entry;            // row n-1 of (B - alpha I) y
  bool bx_zero_hypothesis;      // was ||B x|| numerically zero?
  bool lemma_conclusion;        // bx_zero && y >= x && last_entry < 0
};

/// Forward substitution through a tridiagonal matrix with positive off
/// diagonals and diag(B) - alpha < 0: the unique y with y(0) = x(0) whose
/// first n-1 rows of (B - alpha I) y vanish. When B x = 0 additionally
/// holds, y dominates x and the last row is negative; that is checked
/// numerically and reported.
Propagation propagate_positive_solution(const RealMatrix& b, double alpha, const RealVector& x);

struct StandardFormWitness {
  std::vector<int> row_perm;      // row_perm[k] = input row placed at position k
  std::vector<bool> row_negate;   // negation applied to that row
  std::vector<int> col_perm;      // col_perm[k] = input column placed at position k
};

/// Search for row swaps, row negations and column swaps taking an
/// n x (n+1) sign grid to a subpattern of the staircase standard form
/// (minus lower-left region, plus superdiagonal, zero above). n <= 8.
std::optional<StandardFormWitness> standard_form_transformable(const SignRect& m,
                                                               int pivot_row_removed = -1);

}  // namespace signpat

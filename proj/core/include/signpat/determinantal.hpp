#pragma once

/**
 * @file determinantal.hpp
 * Standard determinant expansion over sign patterns. Enumeration backtracks
 * over the nonzero support only, so sparse patterns stay cheap; the order
 * bound guards the dense worst case.
 */

#include <functional>
#include <vector>

#include "signpat/pattern.hpp"

namespace signpat {

/// One nonzero term of the standard determinant expansion:
/// sign = parity(sigma) * prod_i a(i, sigma[i]).
struct PermTerm {
  std::vector<int> sigma;  // sigma[i] = column chosen in row i (0-based)
  Sign sign;               // never Zero for yielded terms
  bool operator==(const PermTerm&) const = default;
};

/// Recompute a term's sign from scratch (parity times entry signs).
Sign term_sign(const SignPattern& a, const std::vector<int>& sigma);

/// Visit every nonzero term. Enumeration order is deterministic
/// (lexicographic in the column choices) but callers must not rely on it.
void for_each_det_term(const SignPattern& a, const std::function<void(const PermTerm&)>& fn,
                       int order_bound = 10);

std::vector<PermTerm> det_terms(const SignPattern& a, int order_bound = 10);

struct SnsReport {
  bool is_sns = false;
  // If sign-nonsingular: one witness term (all terms share its sign).
  // Otherwise: empty when no nonzero term exists, or two opposite-signed terms.
  std::vector<PermTerm> witness_terms;
};

/// Sign-nonsingularity: at least one nonzero term and all terms of one sign.
SnsReport is_sns(const SignPattern& a, int order_bound = 10);

/// True iff the expansion has no nonzero term; then every member of Q(A)
/// is singular (with a nonzero term, magnitudes can make it dominate).
bool requires_singularity(const SignPattern& a, int order_bound = 10);

struct AdjSignReport {
  // Entries over {Plus, Minus, Zero, Any}; Any marks a sign that varies
  // over the qualitative class.
  ExtendedSignPattern entries;
};

/// Qualitative adjugate of a sign-nonsingular pattern. Off-diagonal (s,r):
/// aggregate (-1)^l sign(alpha) sign(beta) over directed paths alpha s->r
/// and nonzero terms beta of the pattern with alpha's vertices deleted
/// (empty deletion contributes beta = +). Diagonal (r,r): terms of the
/// principal subpattern without r. Throws if the input is not SNS.
AdjSignReport adjugate_sign(const SignPattern& a, int order_bound = 10);

}  // namespace signpat

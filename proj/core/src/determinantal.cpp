#include "signpat/determinantal.hpp"

#include <algorithm>

#include "signpat/digraph.hpp"

namespace signpat {

Sign term_sign(const SignPattern& a, const std::vector<int>& sigma) {
  const int n = a.order();
  Sign s = Sign::Plus;
  for (int i = 0; i < n; ++i) s = s * a.at(i, sigma[i]);
  if (s == Sign::Zero) return Sign::Zero;
  // parity by counting inversions; n is small here
  int inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (sigma[i] > sigma[j]) ++inv;
  return (inv % 2) ? -s : s;
}

namespace {

struct TermEnum {
  const SignPattern& a;
  const std::function<void(const PermTerm&)>& fn;
  int n;
  std::vector<int> sigma;
  std::vector<bool> used;

  void run() {
    sigma.assign(n, -1);
    used.assign(n, false);
    place(0, Sign::Plus);
  }

  void place(int row, Sign partial) {
    if (row == n) {
      int inv = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (sigma[i] > sigma[j]) ++inv;
      fn(PermTerm{sigma, (inv % 2) ? -partial : partial});
      return;
    }
    for (int col = 0; col < n; ++col) {
      if (used[col]) continue;
      Sign s = a.at(row, col);
      if (s == Sign::Zero) continue;
      used[col] = true;
      sigma[row] = col;
      place(row + 1, partial * s);
      sigma[row] = -1;
      used[col] = false;
    }
  }
};

}  // namespace

void for_each_det_term(const SignPattern& a, const std::function<void(const PermTerm&)>& fn,
                       int order_bound) {
  if (a.order() > order_bound)
    throw std::invalid_argument("det_terms: order bound exceeded");
  TermEnum e{a, fn, a.order(), {}, {}};
  e.run();
}

std::vector<PermTerm> det_terms(const SignPattern& a, int order_bound) {
  std::vector<PermTerm> out;
  for_each_det_term(a, [&](const PermTerm& t) { out.push_back(t); }, order_bound);
  return out;
}

SnsReport is_sns(const SignPattern& a, int order_bound) {
  SnsReport rep;
  bool conflict = false;
  PermTerm first;
  bool have_first = false;
  for_each_det_term(
      a,
      [&](const PermTerm& t) {
        if (conflict) return;
        if (!have_first) {
          first = t;
          have_first = true;
        } else if (t.sign != first.sign) {
          conflict = true;
          rep.witness_terms = {first, t};
        }
      },
      order_bound);
  if (conflict) {
    rep.is_sns = false;
  } else if (have_first) {
    rep.is_sns = true;
    rep.witness_terms = {first};
  } else {
    rep.is_sns = false;
  }
  return rep;
}

bool requires_singularity(const SignPattern& a, int order_bound) {
  bool any = false;
  for_each_det_term(a, [&](const PermTerm&) { any = true; }, order_bound);
  return !any;
}

namespace {

// Aggregate a stream of contribution signs into {Zero, Plus, Minus, Any}.
struct SignAggregate {
  bool plus = false, minus = false;
  void add(Sign s) {
    if (s == Sign::Plus) plus = true;
    if (s == Sign::Minus) minus = true;
  }
  ExtendedSign result() const {
    if (plus && minus) return ExtendedSign::Any;
    if (plus) return ExtendedSign::Plus;
    if (minus) return ExtendedSign::Minus;
    return ExtendedSign::Zero;
  }
};

std::vector<int> complement(int n, const std::vector<int>& covered) {
  std::vector<bool> in(n, false);
  for (int v : covered) in[v] = true;
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (!in[v]) out.push_back(v);
  return out;
}

}  // namespace

AdjSignReport adjugate_sign(const SignPattern& a, int order_bound) {
  if (!is_sns(a, order_bound).is_sns)
    throw std::invalid_argument("adjugate_sign: pattern is not sign-nonsingular");
  const int n = a.order();
  AdjSignReport rep{ExtendedSignPattern(n, n)};
  for (int s = 0; s < n; ++s) {
    for (int r = 0; r < n; ++r) {
      SignAggregate agg;
      if (s == r) {
        if (n == 1) {
          agg.add(Sign::Plus);  // adjugate of a 1x1 matrix is [1]
        } else {
          SignPattern sub = principal_submatrix(a, complement(n, {r}));
          for_each_det_term(sub, [&](const PermTerm& t) { agg.add(t.sign); }, order_bound);
        }
      } else {
        for (const SignedPath& alpha : signed_paths(a, s, r, order_bound + 2)) {
          Sign path_factor = (alpha.length % 2) ? -alpha.sign : alpha.sign;
          std::vector<int> rest = complement(n, alpha.vertices);
          if (rest.empty()) {
            agg.add(path_factor);  // empty minor has determinant 1
            continue;
          }
          SignPattern sub = principal_submatrix(a, rest);
          for_each_det_term(sub, [&](const PermTerm& t) { agg.add(path_factor * t.sign); },
                            order_bound);
        }
      }
      rep.entries.set(s, r, agg.result());
    }
  }
  return rep;
}

}  // namespace signpat

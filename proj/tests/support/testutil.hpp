#pragma once

// Brute-force reference implementations used only by tests. Everything here
// is deliberately independent of the library's computation paths: the
// permanent counts terms by direct row expansion, polynomial roots come from
// Durand-Kerner iteration on Faddeev-LeVerrier-free coefficients, walks and
// Hamiltonian cycles are enumerated directly, and the adjugate is built from
// cofactor determinants.

#include <complex>
#include <cstdint>
#include <vector>

#include "signpat/pattern.hpp"
#include "signpat/sampling.hpp"

namespace signpat::testutil {

inline double unit_double(std::uint64_t& state) {
  state = mix64(state + 0x9e3779b9ull);
  return static_cast<double>(state >> 11) * 0x1.0p-53;
}

inline std::uint64_t support_permanent(const SignPattern& a) {
  const int n = a.order();
  std::vector<bool> used(n, false);
  std::uint64_t count = 0;
  auto rec = [&](auto&& self, int row) -> void {
    if (row == n) {
      ++count;
      return;
    }
    for (int c = 0; c < n; ++c) {
      if (used[c] || a.at(row, c) == Sign::Zero) continue;
      used[c] = true;
      self(self, row + 1);
      used[c] = false;
    }
  };
  rec(rec, 0);
  return count;
}

// Roots of a monic polynomial with ascending real coefficients.
inline std::vector<std::complex<double>> poly_roots(const std::vector<double>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  std::vector<std::complex<double>> z(n);
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> acc(1.0, 0.0);
  for (int k = 0; k < n; ++k) {
    acc *= seed;
    z[k] = acc;
  }
  auto eval = [&](std::complex<double> x) {
    std::complex<double> v = coeffs[n];
    for (int i = n - 1; i >= 0; --i) v = v * x + coeffs[i];
    return v;
  };
  for (int iter = 0; iter < 600; ++iter) {
    double moved = 0.0;
    for (int k = 0; k < n; ++k) {
      std::complex<double> denom(1.0, 0.0);
      for (int j = 0; j < n; ++j)
        if (j != k) denom *= z[k] - z[j];
      std::complex<double> step = eval(z[k]) / denom;
      z[k] -= step;
      moved = std::max(moved, std::abs(step));
    }
    if (moved < 1e-14) break;
  }
  return z;
}

inline double multiset_match_distance(std::vector<std::complex<double>> a,
                                      std::vector<std::complex<double>> b) {
  double worst = 0.0;
  while (!a.empty()) {
    size_t bi = 0, bj = 0;
    double best = 1e300;
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < b.size(); ++j) {
        double d = std::abs(a[i] - b[j]);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    worst = std::max(worst, best);
    a.erase(a.begin() + bi);
    b.erase(b.begin() + bj);
  }
  return worst;
}

inline bool has_directed_hamiltonian_cycle(const SignPattern& a) {
  const int n = a.order();
  if (n == 1) return a.at(0, 0) != Sign::Zero;
  std::vector<bool> used(n, false);
  used[0] = true;
  auto rec = [&](auto&& self, int v, int depth) -> bool {
    if (depth == n) return a.at(v, 0) != Sign::Zero;
    for (int w = 1; w < n; ++w) {
      if (used[w] || w == v || a.at(v, w) == Sign::Zero) continue;
      used[w] = true;
      if (self(self, w, depth + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return rec(rec, 0, 1);
}

struct WalkSigns {
  bool plus = false;
  bool minus = false;
};

inline WalkSigns walk2_signs(const SignPattern& a, int i, int j) {
  WalkSigns w;
  for (int k = 0; k < a.order(); ++k) {
    Sign s = a.at(i, k) * a.at(k, j);
    if (s == Sign::Plus) w.plus = true;
    if (s == Sign::Minus) w.minus = true;
  }
  return w;
}

inline RealMatrix numeric_adjugate(const RealMatrix& b) {
  const int n = static_cast<int>(b.rows());
  RealMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1.0;
    return adj;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      RealMatrix minor(n - 1, n - 1);
      for (int r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc++) = b(r, c);
        }
        ++mr;
      }
      double cof = minor.determinant();
      if ((i + j) % 2) cof = -cof;
      adj(j, i) = cof;  // transpose of the cofactor matrix
    }
  }
  return adj;
}

inline SignPattern random_pattern(int n, double density, std::uint64_t seed) {
  SignPattern a(n);
  std::uint64_t state = mix64(seed);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (unit_double(state) >= density) continue;
      a.set(i, j, unit_double(state) < 0.5 ? Sign::Plus : Sign::Minus);
    }
  return a;
}

inline RealMatrix random_matrix(int n, double mag, std::uint64_t seed) {
  RealMatrix b(n, n);
  std::uint64_t state = mix64(seed ^ 0xabcdefull);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b(i, j) = (2.0 * unit_double(state) - 1.0) * mag;
  return b;
}

}  // namespace signpat::testutil

#include "signpat/sampling.hpp"

namespace signpat {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

namespace {

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state = mix64(state + 0x632be59bd9b4e019ull);
    return state;
  }
  // uniform in [lo, hi]
  double uniform(double lo, double hi) {
    double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
  }
};

RealMatrix sample_with(const SignPattern& a, const QSampleConfig& cfg, std::uint64_t seed) {
  cfg.validate();
  const int n = a.order();
  RealMatrix b = RealMatrix::Zero(n, n);
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      // One draw per position keeps the stream layout independent of the
      // pattern's support.
      double mag = rng.uniform(cfg.lo, cfg.hi);
      b(i, j) = to_int(a.at(i, j)) * mag;
    }
  }
  return b;
}

}  // namespace

RealMatrix sample_q(const SignPattern& a, const QSampleConfig& cfg) {
  return sample_with(a, cfg, mix64(cfg.seed));
}

RealMatrix sample_q_indexed(const SignPattern& a, const QSampleConfig& cfg, std::uint64_t index) {
  return sample_with(a, cfg, mix64(mix64(cfg.seed) ^ (index + 1)));
}

bool matches_pattern(const RealMatrix& b, const SignPattern& a, double tol) {
  if (b.rows() != a.order() || b.cols() != a.order()) return false;
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j)
      if (sign_of(b(i, j), tol) != a.at(i, j)) return false;
  return true;
}

}  // namespace signpat

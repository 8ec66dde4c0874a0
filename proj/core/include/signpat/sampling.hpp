#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "signpat/pattern.hpp"

namespace signpat {

using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Magnitude bounds and seed for drawing members of a qualitative class.
struct QSampleConfig {
  double lo = 0.5;
  double hi = 2.0;
  std::uint64_t seed = 0;

  void validate() const {
    if (!(lo > 0.0) || !(hi >= lo)) throw std::invalid_argument("QSampleConfig: need 0 < lo <= hi");
  }
};

/// splitmix64 step; used to derive independent per-index streams.
std::uint64_t mix64(std::uint64_t x);

/// Draw a member of Q(A): sign(b_ij) = a_ij entrywise, nonzero magnitudes
/// uniform in [lo, hi]. Deterministic in (A, cfg); bit-identical across runs.
RealMatrix sample_q(const SignPattern& a, const QSampleConfig& cfg);

/// The index-th element of the sample stream for (A, cfg). Sample index k is
/// drawn from its own generator, so partitioned parallel runs agree with
/// serial ones.
RealMatrix sample_q_indexed(const SignPattern& a, const QSampleConfig& cfg, std::uint64_t index);

/// Sign check: does B lie in Q(A)?
bool matches_pattern(const RealMatrix& b, const SignPattern& a, double tol = 0.0);

}  // namespace signpat

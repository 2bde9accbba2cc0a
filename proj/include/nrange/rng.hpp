#pragma once

#include <cstdint>
#include <vector>

#include "nrange/common.hpp"

namespace nrange {

/// Seedable 64-bit generator: xoshiro256++ (Blackman & Vigna), state seeded
/// through splitmix64. The update rule and all derived distributions
/// (uniform doubles from the top 53 bits, Box-Muller Gaussians) are spelled
/// out here rather than delegated to <random> distributions, so streams are
/// identical across standard libraries and platforms.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform on [0,1).
  double uniform();
  /// Uniform on [lo,hi).
  double uniform(double lo, double hi);

  /// Standard normal via Box-Muller (second value cached).
  double gaussian();
  /// Standard complex normal, E|z|^2 = 1.
  cplx complex_gaussian();

  /// Exponential with mean 1.
  double exponential();

  /// Dirichlet(1,...,1): uniform on the (k-1)-simplex.
  std::vector<double> dirichlet_uniform(std::size_t k);

  /// Derive an independent, deterministic substream.
  SeededRng split(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t s_[4];
  bool has_cached_ = false;
  double cached_ = 0.0;
};

}  // namespace nrange

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace hypend {

/// Smallest enclosing circle of a finite planar point set together with the
/// 1-3 input points that lie on it and determine it.
struct EnclosingCircle {
  std::complex<double> center;
  double radius = 0.0;
  std::vector<std::size_t> support;  // indices into the input
};

/// Randomized incremental construction (expected linear time). The shuffle
/// is seeded so results are reproducible. Throws std::invalid_argument on
/// empty input.
EnclosingCircle min_enclosing_circle(std::span<const std::complex<double>> points, std::uint64_t seed = 0x5eedULL,
                                     double rel_eps = 1e-12);

}  // namespace hypend

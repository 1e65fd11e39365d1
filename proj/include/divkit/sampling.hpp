#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "divkit/function_space.hpp"

namespace divkit {

/// Independent, reproducible stream for trial `index` of a run seeded with `seed`.
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index);

struct PairOptions {
  std::size_t max_support = 8;
  /// Overall scale of each function, drawn log-uniformly.
  double min_scale = 0.5;
  double max_scale = 2.0;
  /// Chance that an individual mass is zeroed.
  double zero_probability = 0.1;
  /// Chance of the degenerate shapes g = f and g = c f.
  double equal_probability = 0.05;
  double proportional_probability = 0.1;
  double min_factor = 0.25;
  double max_factor = 4.0;
  /// Normalize both functions to probability vectors.
  bool probability = false;
  /// Force supp(g) within supp(f) (needed by gamma = 0 brackets).
  bool nested_support = false;
};

struct DensityPair {
  DensityObject g;
  DensityObject f;
};

/// A pair of nonnegative discrete functions on a common support 0..k-1.
DensityPair random_discrete_pair(std::mt19937_64& rng, const PairOptions& options = {});

/// Random mass * N(mu, sigma^2) with mu in [-2, 2], sigma in [0.5, 2], mass in [0.5, 2].
DensityObject random_gaussian(std::mt19937_64& rng);

}  // namespace divkit

#include "divkit/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace divkit {

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0x9e3779b9u};
  return std::mt19937_64(seq);
}

namespace {

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

std::vector<double> random_masses(std::mt19937_64& rng, std::size_t k, const PairOptions& o) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> m(k);
  for (;;) {
    for (double& v : m) v = u(rng) < o.zero_probability ? 0.0 : u(rng);
    if (std::any_of(m.begin(), m.end(), [](double v) { return v > 0.0; })) break;
  }
  const double scale = log_uniform(rng, o.min_scale, o.max_scale);
  for (double& v : m) v *= scale;
  return m;
}

void normalize(std::vector<double>& m) {
  const double total = std::accumulate(m.begin(), m.end(), 0.0);
  for (double& v : m) v /= total;
}

}  // namespace

DensityPair random_discrete_pair(std::mt19937_64& rng, const PairOptions& o) {
  std::uniform_int_distribution<std::size_t> size(1, std::max<std::size_t>(1, o.max_support));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const std::size_t k = size(rng);
  const double shape = u(rng);

  std::vector<double> f = random_masses(rng, k, o);
  std::vector<double> g;
  if (shape < o.equal_probability) {
    g = f;
  } else if (shape < o.equal_probability + o.proportional_probability) {
    const double c = log_uniform(rng, o.min_factor, o.max_factor);
    g = f;
    for (double& v : g) v *= c;
  } else {
    for (;;) {
      g = random_masses(rng, k, o);
      if (o.nested_support) {
        for (std::size_t i = 0; i < k; ++i) {
          if (f[i] == 0.0) g[i] = 0.0;
        }
      }
      if (std::any_of(g.begin(), g.end(), [](double v) { return v > 0.0; })) break;
    }
  }
  if (o.probability) {
    normalize(f);
    normalize(g);
  }
  return {DensityObject::discrete(std::move(g)), DensityObject::discrete(std::move(f))};
}

DensityObject random_gaussian(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mu(-2.0, 2.0);
  std::uniform_real_distribution<double> sd(0.5, 2.0);
  std::uniform_real_distribution<double> mass(0.5, 2.0);
  const double m = mu(rng);
  const double s = sd(rng);
  return DensityObject::gaussian(m, s, mass(rng));
}

}  // namespace divkit

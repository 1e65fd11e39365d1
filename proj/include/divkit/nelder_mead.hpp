#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

namespace divkit {

struct SimplexOptions {
  std::size_t max_iterations = 2000;
  /// Stop when the spread of objective values is below f_tolerance * max(1, |f_best|)
  /// and every vertex lies within x_tolerance of the best one.
  double f_tolerance = 1e-12;
  double x_tolerance = 1e-9;
};

struct SimplexResult {
  std::vector<double> x;
  double value = std::numeric_limits<double>::infinity();
  std::size_t iterations = 0;
  bool converged = false;
};

/// Derivative-free Nelder-Mead minimization with standard coefficients
/// (reflection 1, expansion 2, contraction 1/2, shrink 1/2). Non-finite
/// objective values rank as +inf.
inline SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& objective,
                                 std::vector<double> start, const std::vector<double>& step,
                                 const SimplexOptions& options = {}) {
  const std::size_t n = start.size();
  constexpr double kInf = std::numeric_limits<double>::infinity();
  auto eval = [&objective](const std::vector<double>& p) {
    const double v = objective(p);
    return std::isnan(v) ? kInf : v;
  };

  std::vector<std::vector<double>> simplex(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += step[i];
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) values[i] = eval(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  auto sort_simplex = [&] {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<std::vector<double>> s(n + 1);
    std::vector<double> v(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      s[i] = std::move(simplex[order[i]]);
      v[i] = values[order[i]];
    }
    simplex = std::move(s);
    values = std::move(v);
  };
  auto blend = [n](const std::vector<double>& a, const std::vector<double>& b, double t) {
    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = a[j] + t * (b[j] - a[j]);
    return out;
  };

  SimplexResult result;
  sort_simplex();
  for (; result.iterations < options.max_iterations; ++result.iterations) {
    const double best = values.front();
    const double worst = values.back();
    if (std::isfinite(worst)) {
      double spread_x = 0.0;
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 0; j < n; ++j) spread_x = std::max(spread_x, std::fabs(simplex[i][j] - simplex[0][j]));
      }
      if (worst - best <= options.f_tolerance * std::max(1.0, std::fabs(best)) && spread_x <= options.x_tolerance) {
        result.converged = true;
        break;
      }
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j] / static_cast<double>(n);
    }

    const auto reflected = blend(centroid, simplex[n], -1.0);
    const double fr = eval(reflected);
    if (fr < values[0]) {
      const auto expanded = blend(centroid, simplex[n], -2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        simplex[n] = expanded;
        values[n] = fe;
      } else {
        simplex[n] = reflected;
        values[n] = fr;
      }
    } else if (fr < values[n - 1]) {
      simplex[n] = reflected;
      values[n] = fr;
    } else {
      const bool outside = fr < values[n];
      const auto contracted = outside ? blend(centroid, reflected, 0.5) : blend(centroid, simplex[n], 0.5);
      const double fc = eval(contracted);
      if (fc < (outside ? fr : values[n])) {
        simplex[n] = contracted;
        values[n] = fc;
      } else {
        for (std::size_t i = 1; i <= n; ++i) {
          simplex[i] = blend(simplex[0], simplex[i], 0.5);
          values[i] = eval(simplex[i]);
        }
      }
    }
    sort_simplex();
  }
  result.x = simplex.front();
  result.value = values.front();
  return result;
}

}  // namespace divkit

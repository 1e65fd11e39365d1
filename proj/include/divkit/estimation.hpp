#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "divkit/divergence.hpp"
#include "divkit/function_space.hpp"

namespace divkit {

/// Lower limit of the scale search.
inline constexpr double kMinSigma = 1e-6;

struct OptimizerConfig {
  /// Starting (mu, sigma); defaults to the sample median and IQR / 1.349.
  std::optional<double> initial_mu;
  std::optional<double> initial_sigma;
  std::size_t max_iterations = 2000;
  double tolerance = 1e-12;
  /// Extra starts from perturbed points; the best end point is kept.
  std::size_t restarts = 3;
};

struct EstimationProblem {
  std::vector<double> samples;
  DivergenceSpec spec;
  OptimizerConfig optimizer;
};

struct EstimationResult {
  double mu_hat = 0.0;
  double sigma_hat = 1.0;
  double score_at_min = 0.0;
  double score_at_initial = 0.0;
  std::size_t iterations = 0;
  /// The run that produced the returned point converged.
  bool converged = false;
  std::size_t runs = 0;
  std::size_t runs_converged = 0;
  bool sigma_at_lower_bound = false;
};

/// Throws ProprietyError when the gamma = 0 score of `spec` is not a composite
/// scoring rule (phi' not constant).
void require_proper_score(const DivergenceSpec& spec);

/// The spec's score with the empirical measure of `samples` in place of g.
double empirical_score(std::span<const double> samples, const DensityObject& f, const DivergenceSpec& spec);

/// Minimum-score Gaussian fit over (mu, log sigma).
EstimationResult fit(const EstimationProblem& problem);

// ---------------------------------------------------------------------------
// Contamination experiments

struct SweepRow {
  double epsilon = 0.0;
  std::string family;
  double gamma = 0.0;
  std::optional<double> zeta;
  double mu_hat = 0.0;
  double sigma_hat = 0.0;
  /// mu_hat minus the clean location 0.
  double bias = 0.0;
  bool converged = false;
};

/// n samples per epsilon: round(epsilon n) at `outlier_location`, the rest a
/// symmetric N(0, 1) sample (draws paired with their negatives). Every spec
/// is fitted to the same sample for a given epsilon. Rows are ordered by
/// epsilon, then spec.
std::vector<SweepRow> contamination_sweep(std::span<const double> epsilons, double outlier_location,
                                          std::span<const DivergenceSpec> specs, std::size_t n,
                                          std::uint64_t seed);

/// The contaminated sample used by contamination_sweep for one epsilon.
std::vector<double> contaminated_sample(double epsilon, double outlier_location, std::size_t n, std::uint64_t seed,
                                        std::size_t epsilon_index);

inline constexpr const char* kSweepHeader = "epsilon,family,gamma,zeta,mu_hat,sigma_hat,bias,converged";

void write_sweep_csv(std::span<const SweepRow> rows, std::ostream& out);

}  // namespace divkit

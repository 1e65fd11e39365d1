#include "divkit/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "divkit/csv.hpp"
#include "divkit/errors.hpp"
#include "divkit/nelder_mead.hpp"
#include "divkit/parallel.hpp"
#include "divkit/sampling.hpp"

namespace divkit {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double quantile(std::vector<double> sorted, double p) {
  std::sort(sorted.begin(), sorted.end());
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

double robust_scale(const std::vector<double>& samples, double median) {
  const double iqr = quantile(samples, 0.75) - quantile(samples, 0.25);
  if (iqr > 0.0) return iqr / 1.349;
  std::vector<double> dev(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) dev[i] = std::fabs(samples[i] - median);
  const double mad = quantile(dev, 0.5);
  if (mad > 0.0) return mad / 0.6745;
  double max_dev = *std::max_element(dev.begin(), dev.end());
  return max_dev > 0.0 ? max_dev : 1.0;
}

// Every composite score depends on mu only through <g f^gamma> (or <g log f>),
// so its mu-stationary point solves sum_i f(x_i)^gamma (x_i - mu) = 0.
double location_fixed_point(const std::vector<double>& samples, double mu, double sigma, double gamma) {
  for (int iter = 0; iter < 500; ++iter) {
    double sw = 0.0, swx = 0.0;
    for (const double x : samples) {
      const double u = (x - mu) / sigma;
      const double w = std::exp(-0.5 * gamma * u * u);
      sw += w;
      swx += w * x;
    }
    if (!(sw > 0.0)) return mu;
    const double next = swx / sw;
    if (std::fabs(next - mu) <= 1e-15 * (1.0 + std::fabs(mu))) return next;
    mu = next;
  }
  return mu;
}

}  // namespace

void require_proper_score(const DivergenceSpec& spec) {
  if (spec.gamma() != 0.0) return;
  const std::string why =
      " is not a composite scoring rule at gamma = 0 unless phi'(z) is constant; only maximum likelihood "
      "(phi = identity) is offered at gamma = 0";
  std::visit(
      [&](const auto& fam) {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, FdpdFamily>) {
          if (!fam.phi.has_constant_derivative()) throw ProprietyError("fdpd score with phi=" + fam.phi.name() + why);
        } else if constexpr (std::is_same_v<T, JhhbFamily>) {
          if (fam.zeta != 1.0) throw ProprietyError("jhhb score with zeta != 1" + why);
        } else if constexpr (std::is_same_v<T, XiHolderFamily>) {
          throw ProprietyError("xi-holder score requires gamma > 0");
        }
      },
      spec.family());
}

double empirical_score(std::span<const double> samples, const DensityObject& f, const DivergenceSpec& spec) {
  require_proper_score(spec);
  return score(empirical_brackets(samples, f, spec.gamma()), spec);
}

EstimationResult fit(const EstimationProblem& problem) {
  const auto& samples = problem.samples;
  if (samples.empty()) throw DomainError("fit: empty sample list");
  for (const double x : samples) {
    if (!std::isfinite(x)) throw DomainError("fit: non-finite sample");
  }
  require_proper_score(problem.spec);
  const auto& cfg = problem.optimizer;
  const double log_floor = std::log(kMinSigma);

  const double median = quantile(samples, 0.5);
  const double scale = robust_scale(samples, median);
  const double mu0 = cfg.initial_mu.value_or(median);
  const double sigma0 = cfg.initial_sigma.value_or(scale);
  if (!(sigma0 > 0.0)) throw DomainError("fit: initial sigma must be > 0");

  auto score_at = [&](double mu, double log_sigma) {
    const double sigma = std::exp(std::max(log_sigma, log_floor));
    try {
      return empirical_score(samples, DensityObject::gaussian(mu, sigma), problem.spec);
    } catch (const DomainError&) {
      return kInf;
    } catch (const DegenerateModelError&) {
      return kInf;
    }
  };
  auto objective = [&](const std::vector<double>& p) { return score_at(p[0], p[1]); };

  SimplexOptions options;
  options.max_iterations = cfg.max_iterations;
  options.f_tolerance = cfg.tolerance;
  options.x_tolerance = std::sqrt(cfg.tolerance) * 1e-3;

  const double l0 = std::log(std::max(sigma0, kMinSigma));
  const std::vector<double> step = {0.5 * sigma0, 0.5};
  const std::vector<std::vector<double>> starts = {
      {mu0, l0}, {mu0 + sigma0, l0}, {mu0 - sigma0, l0}, {mu0, l0 + 0.7}};

  EstimationResult result;
  result.score_at_initial = score_at(mu0, l0);
  SimplexResult best;
  const std::size_t runs = std::min<std::size_t>(starts.size(), 1 + cfg.restarts);
  for (std::size_t r = 0; r < runs; ++r) {
    const auto run = nelder_mead(objective, starts[r], step, options);
    ++result.runs;
    if (run.converged) ++result.runs_converged;
    if (r == 0 || run.value < best.value) best = run;
  }

  double mu = best.x[0];
  double log_sigma = std::max(best.x[1], log_floor);
  double value = best.value;
  const double polished = location_fixed_point(samples, mu, std::exp(log_sigma), problem.spec.gamma());
  const double polished_value = score_at(polished, log_sigma);
  if (polished_value <= value + 1e-12 * std::max(1.0, std::fabs(value))) {
    mu = polished;
    value = polished_value;
  }

  result.mu_hat = mu;
  result.sigma_hat = std::exp(log_sigma);
  result.score_at_min = value;
  result.iterations = best.iterations;
  result.converged = best.converged;
  result.sigma_at_lower_bound = log_sigma <= log_floor + 1e-9;
  return result;
}

// ---------------------------------------------------------------------------

std::vector<double> contaminated_sample(double epsilon, double outlier_location, std::size_t n, std::uint64_t seed,
                                        std::size_t epsilon_index) {
  if (!(epsilon >= 0.0 && epsilon <= 0.45)) throw DomainError("contamination fraction must lie in [0, 0.45]");
  if (n == 0) throw DomainError("contamination sample size must be positive");
  const auto k = static_cast<std::size_t>(std::llround(epsilon * static_cast<double>(n)));
  const std::size_t clean = n - k;
  auto rng = trial_rng(seed, epsilon_index);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> out;
  out.reserve(n);
  for (std::size_t i = 0; i < clean / 2; ++i) {
    const double z = normal(rng);
    out.push_back(z);
    out.push_back(-z);
  }
  if (clean % 2 == 1) out.push_back(0.0);
  out.insert(out.end(), k, outlier_location);
  return out;
}

std::vector<SweepRow> contamination_sweep(std::span<const double> epsilons, double outlier_location,
                                          std::span<const DivergenceSpec> specs, std::size_t n,
                                          std::uint64_t seed) {
  for (const auto& spec : specs) require_proper_score(spec);
  std::vector<std::vector<double>> samples(epsilons.size());
  for (std::size_t e = 0; e < epsilons.size(); ++e) {
    samples[e] = contaminated_sample(epsilons[e], outlier_location, n, seed, e);
  }
  std::vector<SweepRow> rows(epsilons.size() * specs.size());
  parallel_for(rows.size(), [&](std::size_t i) {
    const std::size_t e = i / specs.size();
    const DivergenceSpec& spec = specs[i % specs.size()];
    const auto res = fit(EstimationProblem{samples[e], spec, {}});
    SweepRow& row = rows[i];
    row.epsilon = epsilons[e];
    row.family = spec.label();
    row.gamma = spec.gamma();
    row.zeta = spec.jhhb_zeta();
    row.mu_hat = res.mu_hat;
    row.sigma_hat = res.sigma_hat;
    row.bias = res.mu_hat;
    row.converged = res.converged;
  });
  return rows;
}

void write_sweep_csv(std::span<const SweepRow> rows, std::ostream& out) {
  out << kSweepHeader << '\n';
  for (const auto& r : rows) {
    std::string family = r.family;
    if (family.find_first_of(",\"") != std::string::npos) {
      std::string quoted = "\"";
      for (const char c : family) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      family = quoted + "\"";
    }
    out << format_double(r.epsilon) << ',' << family << ',' << format_double(r.gamma) << ','
        << (r.zeta ? format_double(*r.zeta) : std::string()) << ',' << format_double(r.mu_hat) << ','
        << format_double(r.sigma_hat) << ',' << format_double(r.bias) << ',' << (r.converged ? "true" : "false")
        << '\n';
  }
}

}  // namespace divkit

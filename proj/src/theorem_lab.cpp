#include "divkit/theorem_lab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "divkit/errors.hpp"
#include "divkit/parallel.hpp"
#include "divkit/sampling.hpp"

namespace divkit {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

double fdpd_of_pair(const GeneratorPhi& phi, double gamma, const DensityObject& g, const DensityObject& f,
                    const AffineCheckOptions& options) {
  if (g.is_gaussian() && f.is_gaussian() && !(options.closed_form || gamma == 0.0)) {
    const GaussianRepr both[] = {g.as_gaussian(), f.as_gaussian()};
    const GridSpec grid = covering_grid(both, options.grid_points);
    return fdp_divergence(bracket_integrals(sample_on_grid(g, grid), sample_on_grid(f, grid), gamma), phi);
  }
  return fdp_divergence(bracket_integrals(g, f, gamma), phi);
}

// Difference of two values that may both be infinite with the same sign.
double abs_difference(double a, double b) {
  if (std::isinf(a) && std::isinf(b) && (a > 0) == (b > 0)) return 0.0;
  return std::fabs(a - b);
}

}  // namespace

// ---------------------------------------------------------------------------

AffineInstance affine_instance(const GeneratorPhi& phi, double gamma, const DensityObject& g, const DensityObject& f,
                               double sigma, double mu, const AffineCheckOptions& options) {
  AffineInstance out;
  out.divergence_original = fdpd_of_pair(phi, gamma, g, f, options);
  out.divergence_transformed =
      fdpd_of_pair(phi, gamma, affine_transform(g, sigma, mu), affine_transform(f, sigma, mu), options);
  if (const auto zeta = phi.affine_invariance_zeta()) {
    out.predicted_scale = std::pow(std::fabs(sigma), -gamma * *zeta);
    out.ratio = out.predicted_scale * out.divergence_transformed / out.divergence_original;
  } else {
    out.predicted_scale = kNaN;
    out.ratio = kNaN;
  }
  return out;
}

InvarianceReport check_affine_invariance(const GeneratorPhi& phi, double gamma, std::size_t trials,
                                         std::uint64_t seed, const AffineCheckOptions& options) {
  struct Trial {
    bool skipped = false;
    double violation = 0.0;
    double sigma = 0.0, mu = 0.0, scale = kNaN;
  };
  std::vector<Trial> results(trials);
  const auto zeta = phi.affine_invariance_zeta();

  parallel_for(trials, [&](std::size_t i) {
    auto rng = trial_rng(seed, i);
    const DensityObject g1 = random_gaussian(rng);
    const DensityObject f1 = random_gaussian(rng);
    const DensityObject g2 = random_gaussian(rng);
    const DensityObject f2 = random_gaussian(rng);
    std::uniform_real_distribution<double> sigma_dist(0.25, 4.0);
    std::uniform_real_distribution<double> mu_dist(-3.0, 3.0);
    Trial& t = results[i];
    t.sigma = sigma_dist(rng);
    t.mu = mu_dist(rng);

    const auto a = affine_instance(phi, gamma, g1, f1, t.sigma, t.mu, options);
    const auto b = affine_instance(phi, gamma, g2, f2, t.sigma, t.mu, options);
    const double floor = 1e-12;
    if (!(std::fabs(a.divergence_original) > floor && std::fabs(b.divergence_original) > floor &&
          std::fabs(a.divergence_transformed) > floor && std::fabs(b.divergence_transformed) > floor)) {
      t.skipped = true;
      return;
    }
    // Any valid h forces D_t / D to agree across pairs sharing one transform.
    const double qa = a.divergence_transformed / a.divergence_original;
    const double qb = b.divergence_transformed / b.divergence_original;
    t.violation = std::fabs(qa / qb - 1.0);
    if (zeta) {
      t.scale = a.predicted_scale;
      t.violation = std::max({t.violation, std::fabs(a.ratio - 1.0), std::fabs(b.ratio - 1.0)});
    }
  });

  InvarianceReport report;
  report.phi = phi.name();
  report.gamma = gamma;
  report.zeta = zeta;
  report.trials = trials;
  report.seed = seed;
  report.tolerance = options.tolerance;
  report.predicted_scale = kNaN;
  double worst = -1.0;
  for (const auto& t : results) {
    if (t.skipped) {
      ++report.skipped;
      continue;
    }
    if (t.violation > worst) {
      worst = t.violation;
      report.worst_sigma = t.sigma;
      report.worst_mu = t.mu;
      report.predicted_scale = t.scale;
    }
  }
  report.max_relative_violation = std::max(worst, 0.0);
  report.pass = report.skipped < trials && report.max_relative_violation <= options.tolerance;
  return report;
}

// ---------------------------------------------------------------------------

double jhhb_representation_error(const BracketTriple& b, double zeta) {
  const GeneratorEta eta = jhhb_eta(zeta, b.gamma);
  const double s = holder_score(b, eta);
  const Tau tau = zeta > 0.0 ? Tau{SignedPowerTau{zeta}} : Tau{LogTau{}};
  const double via_holder = -equivalent_transform(-s, tau);
  return abs_difference(via_holder, jhhb_score(b, zeta));
}

RepresentationReport verify_jhhb_holder_representation(double zeta, double gamma, std::size_t trials,
                                                       std::uint64_t seed) {
  if (!(zeta >= 0.0)) throw DomainError("jhhb representation requires zeta >= 0");
  if (!(gamma > 0.0)) throw DomainError("jhhb representation requires gamma > 0");
  std::vector<BracketTriple> brackets(trials);
  std::vector<double> errors(trials);
  parallel_for(trials, [&](std::size_t i) {
    auto rng = trial_rng(seed, i);
    const auto pair = random_discrete_pair(rng);
    brackets[i] = bracket_integrals(pair.g, pair.f, gamma);
    errors[i] = jhhb_representation_error(brackets[i], zeta);
  });

  RepresentationReport report;
  report.zeta = zeta;
  report.gamma = gamma;
  report.trials = trials;
  report.seed = seed;
  for (std::size_t i = 0; i < trials; ++i) {
    if (!(errors[i] <= report.max_abs_error)) {
      report.max_abs_error = errors[i];
      report.worst = brackets[i];
    }
  }
  report.pass = report.max_abs_error <= kRepresentationTolerance;
  return report;
}

// ---------------------------------------------------------------------------

std::optional<double> fdps_lower_bound_gap(const BracketTriple& b, const GeneratorPhi& phi) {
  if (!(b.gamma > 0.0)) throw DomainError("fdps lower bound requires gamma > 0");
  const double px = phi(b.X);
  const double py = phi(b.Y);
  if (!(px > 0.0) || !(py > 0.0) || !std::isfinite(px) || !std::isfinite(py)) return std::nullopt;
  const double g = b.gamma;
  const double lhs = g * py - (1.0 + g) * px;
  const double rhs = -std::exp(-(g * std::log(py) - (1.0 + g) * std::log(px)));
  return lhs - rhs;
}

PsiCertificate lower_bound_certificate(const GeneratorPhi& phi) {
  for (const double z : certificate_grid()) {
    if (z == 0.0) continue;
    const double v = phi(z);
    if (!(v > 0.0)) {
      PsiCertificate cert;
      cert.violation = PsiViolation::range;
      cert.triple = {z, z, z};
      cert.amount = v;
      return cert;
    }
  }
  auto log_psi = [phi](double t) { return std::log(phi(t == -kInf ? 0.0 : std::exp(t))); };
  return validate_psi(log_psi, log_psi);
}

namespace {

LowerBoundReport summarize_lower_bound(const GeneratorPhi& phi, std::span<const BracketTriple> brackets,
                                       std::span<const double> gaps) {
  LowerBoundReport report;
  report.phi = phi.name();
  report.trials = brackets.size();
  report.worst_gap = kInf;
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    if (gaps[i] < report.worst_gap) {
      report.worst_gap = gaps[i];
      report.tight_at = brackets[i];
    }
  }
  if (brackets.empty()) report.worst_gap = 0.0;
  for (std::size_t i = 0; i < brackets.size(); ++i) {
    const double scale = std::max({1.0, std::fabs(phi(brackets[i].X)), std::fabs(phi(brackets[i].Y))});
    if (gaps[i] < -kLowerBoundTolerance * scale) report.holds = false;
  }
  try {
    const auto cert = lower_bound_certificate(phi);
    report.bound_is_fdps = cert.valid();
    report.certificate = cert.describe();
  } catch (const GeneratorError& e) {
    report.bound_is_fdps = false;
    report.certificate = e.what();
  }
  return report;
}

}  // namespace

LowerBoundReport check_fdps_lower_bound(const GeneratorPhi& phi, double gamma, std::size_t trials,
                                        std::uint64_t seed) {
  if (!(gamma > 0.0)) throw DomainError("fdps lower bound requires gamma > 0");
  constexpr std::size_t kAttemptsPerTrial = 100;
  std::vector<std::optional<BracketTriple>> brackets(trials);
  std::vector<double> gaps(trials, 0.0);
  std::vector<std::size_t> rejected(trials, 0);

  parallel_for(trials, [&](std::size_t i) {
    auto rng = trial_rng(seed, i);
    for (std::size_t attempt = 0; attempt < kAttemptsPerTrial; ++attempt) {
      const auto pair = random_discrete_pair(rng);
      const BracketTriple b = bracket_integrals(pair.g, pair.f, gamma);
      if (const auto gap = fdps_lower_bound_gap(b, phi)) {
        brackets[i] = b;
        gaps[i] = *gap;
        return;
      }
      ++rejected[i];
    }
  });

  std::vector<BracketTriple> valid;
  std::vector<double> valid_gaps;
  std::size_t invalid = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    invalid += rejected[i];
    if (brackets[i]) {
      valid.push_back(*brackets[i]);
      valid_gaps.push_back(gaps[i]);
    }
  }
  LowerBoundReport report = summarize_lower_bound(phi, valid, valid_gaps);
  report.gamma = gamma;
  report.seed = seed;
  report.invalid_trials = invalid;
  return report;
}

LowerBoundReport check_fdps_lower_bound(const GeneratorPhi& phi, std::span<const BracketTriple> brackets) {
  std::vector<BracketTriple> valid;
  std::vector<double> gaps;
  std::size_t invalid = 0;
  for (const auto& b : brackets) {
    if (const auto gap = fdps_lower_bound_gap(b, phi)) {
      valid.push_back(b);
      gaps.push_back(*gap);
    } else {
      ++invalid;
    }
  }
  LowerBoundReport report = summarize_lower_bound(phi, valid, gaps);
  report.gamma = brackets.empty() ? 0.0 : brackets.front().gamma;
  report.invalid_trials = invalid;
  return report;
}

// ---------------------------------------------------------------------------

namespace {

struct AssembledIntegrals {
  double cross = 0.0;  // <g U(f)>
  double model = 0.0;  // <V(f)>
};

// Direct integration of <g U(f)> and <V(f)> with U(z) = z^gamma, V(z) = z^{1+gamma}.
AssembledIntegrals assemble(const DensityObject& g, const DensityObject& f, double gamma) {
  auto U = [gamma](double z) { return std::pow(z, gamma); };
  auto V = [gamma](double z) { return std::pow(z, 1.0 + gamma); };
  AssembledIntegrals out;
  if (g.is_discrete() && f.is_discrete()) {
    for (std::size_t i = 0; i < g.as_discrete().points.size(); ++i) {
      out.cross += g.as_discrete().masses[i] * U(f.evaluate(g.as_discrete().points[i]));
    }
    for (const double m : f.as_discrete().masses) out.model += V(m);
    return out;
  }
  DensityObject gg = g, ff = f;
  if (g.is_gaussian() && f.is_gaussian()) {
    const GaussianRepr both[] = {g.as_gaussian(), f.as_gaussian()};
    const GridSpec grid = covering_grid(both, 1 << 14);
    gg = sample_on_grid(g, grid);
    ff = sample_on_grid(f, grid);
  }
  if (!(gg.is_grid() && ff.is_grid())) throw RepresentationError("uv consistency: densities must share a representation");
  const auto& a = gg.as_grid();
  const auto& b = ff.as_grid();
  if (a.values.size() != b.values.size() || a.x0 != b.x0 || a.dx != b.dx) {
    throw RepresentationError("uv consistency: grid densities must share one grid");
  }
  const std::size_t n = a.values.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double w = (i == 0 || i + 1 == n) ? 0.5 * a.dx : a.dx;
    out.cross += w * a.values[i] * U(b.values[i]);
    out.model += w * V(b.values[i]);
  }
  return out;
}

}  // namespace

UvReport check_uv_consistency(const GeneratorXi& xi, double gamma, std::span<const DensityObject> densities) {
  if (!(gamma > 0.0)) throw DomainError("uv consistency requires gamma > 0");
  UvReport report;
  report.xi = xi.name();
  report.gamma = gamma;
  report.densities = densities.size();
  const bool quadrature = !densities.empty() && densities.front().is_gaussian();
  const double tolerance = quadrature ? 1e-8 : 1e-12;

  for (const auto& g : densities) {
    const auto self = assemble(g, g, gamma);
    const double err = std::fabs(xi(self.cross) - xi(self.model));
    report.max_identity_error = std::max(report.max_identity_error, err);
  }

  const GeneratorEta etas[] = {GeneratorEta::dpd(gamma), GeneratorEta::ps(gamma)};
  for (const auto& g : densities) {
    for (const auto& f : densities) {
      const auto parts = assemble(g, f, gamma);
      const BracketTriple b = bracket_integrals(g, f, gamma);
      for (const auto& eta : etas) {
        const double u_model = xi(parts.model);
        const double assembled = eta(xi(parts.cross) / u_model) * u_model;
        const double reference = xi_holder_score(b, eta, xi);
        const double err = std::fabs(assembled - reference) / std::max(1.0, std::fabs(reference));
        report.max_score_error = std::max(report.max_score_error, err);
      }
      ++report.pairs;
    }
  }
  report.max_abs_error = std::max(report.max_identity_error, report.max_score_error);
  report.pass = report.max_abs_error <= tolerance;
  return report;
}

// ---------------------------------------------------------------------------

EqualityProbe equality_condition_probe(const GeneratorPhi& phi, double gamma, const DensityObject& f, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("equality probe requires c > 0");
  if (!(gamma > 0.0)) throw DomainError("equality probe requires gamma > 0");
  const DensityObject g = f.scaled(std::pow(c, 1.0 / (1.0 + gamma)));
  const BracketTriple b = bracket_integrals(g, f, gamma);

  EqualityProbe probe;
  probe.c = c;
  probe.D_value = fdp_divergence(b, phi);
  const double t = 1.0 / (1.0 + gamma);
  const double a = std::log(*b.Z);
  const double bb = std::log(b.Y);
  const double pa = phi.psi(a);
  const double pb = phi.psi(bb);
  probe.jensen_gap = t * pa + (1.0 - t) * pb - phi.psi(t * a + (1.0 - t) * bb);
  const double scale = std::max({1.0, std::fabs(pa), std::fabs(pb)});
  probe.psi_strictly_convex = a != bb && probe.jensen_gap > 1e-12 * scale;
  probe.predicted_zero = c == 1.0 || !probe.psi_strictly_convex;
  return probe;
}

// ---------------------------------------------------------------------------

ProprietyReport check_xi_holder_propriety(const GeneratorEta& eta, const GeneratorXi& xi, std::size_t trials,
                                          std::uint64_t seed, double tolerance) {
  PairOptions options;
  options.min_scale = 0.05;
  options.max_scale = 20.0;
  options.proportional_probability = 0.3;
  options.min_factor = 1e-3;
  options.max_factor = 1e3;

  const double gamma = eta.gamma();
  std::vector<double> margins(trials);
  std::vector<double> scales(trials);
  std::vector<BracketTriple> brackets(trials);
  parallel_for(trials, [&](std::size_t i) {
    auto rng = trial_rng(seed, i);
    const auto pair = random_discrete_pair(rng, options);
    brackets[i] = bracket_integrals(pair.g, pair.f, gamma);
    const double self = xi_holder_score(bracket_integrals(pair.g, pair.g, gamma), eta, xi);
    margins[i] = xi_holder_score(brackets[i], eta, xi) - self;
    scales[i] = std::max(1.0, std::fabs(self));
  });

  ProprietyReport report;
  report.trials = trials;
  report.seed = seed;
  report.worst_margin = kInf;
  for (std::size_t i = 0; i < trials; ++i) {
    if (margins[i] < report.worst_margin) {
      report.worst_margin = margins[i];
      report.worst = brackets[i];
    }
    if (margins[i] < -tolerance * scales[i]) report.proper = false;
  }
  try {
    report.psi_certificate_valid = validate_xi(xi).valid();
  } catch (const GeneratorError&) {
    report.psi_certificate_valid = false;
  }
  return report;
}

}  // namespace divkit

#include "divkit/function_space.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <numeric>

#include "divkit/csv.hpp"
#include "divkit/errors.hpp"

namespace divkit {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_nonnegative(std::span<const double> values, const char* what) {
  bool any_positive = false;
  for (const double v : values) {
    if (!std::isfinite(v)) throw DomainError(std::string(what) + ": values must be finite");
    if (v < 0.0) throw DomainError(std::string(what) + ": values must be nonnegative");
    any_positive = any_positive || v > 0.0;
  }
  if (!any_positive) throw DomainError(std::string(what) + ": function must not be identically zero");
}

double trapezoid_weight(std::size_t i, std::size_t n, double dx) {
  return (i == 0 || i + 1 == n) ? 0.5 * dx : dx;
}

double gaussian_pdf(double x, const GaussianRepr& g) {
  const double u = (x - g.mu) / g.sigma;
  return g.mass * std::exp(-0.5 * u * u) / (g.sigma * std::sqrt(2.0 * std::numbers::pi));
}

bool same_grid(const GridRepr& a, const GridRepr& b) {
  if (a.values.size() != b.values.size()) return false;
  const double scale = std::max({1.0, std::fabs(a.x0), std::fabs(a.x_max())});
  return std::fabs(a.x0 - b.x0) <= 1e-12 * scale && std::fabs(a.dx - b.dx) <= 1e-12 * a.dx;
}

// Accumulates bracket sums over paired values (g_i, f_i) with weights w_i.
struct BracketAccumulator {
  double gamma;
  double X = 0.0, Y = 0.0, Z = 0.0;
  double mass_g = 0.0, mass_f = 0.0, kl = 0.0, g_log_g = 0.0, g_log_f = 0.0;

  void add(double w, double g, double f) {
    if (gamma > 0.0) {
      X += w * g * std::pow(f, gamma);
      Y += w * std::pow(f, 1.0 + gamma);
      Z += w * std::pow(g, 1.0 + gamma);
      return;
    }
    mass_g += w * g;
    mass_f += w * f;
    if (g > 0.0) {
      if (f <= 0.0) throw SupportError("gamma = 0 requires supp(g) within supp(f): g > 0 where f = 0");
      kl += w * g * std::log(g / f);
      g_log_g += w * g * std::log(g);
      g_log_f += w * g * std::log(f);
    }
  }

  BracketTriple finish() const {
    BracketTriple b;
    b.gamma = gamma;
    if (gamma > 0.0) {
      b.X = X;
      b.Y = Y;
      b.Z = Z;
      return b;
    }
    b.X = mass_g;
    b.Y = mass_f;
    b.Z = mass_g;
    LogBrackets lb;
    lb.kl = kl;
    lb.g_log_g = g_log_g;
    lb.g_log_f = g_log_f;
    lb.mass_g = mass_g;
    lb.mass_f = mass_f;
    b.log_terms = lb;
    return b;
  }
};

BracketTriple gaussian_brackets(const GaussianRepr& g, const GaussianRepr& f, double gamma) {
  const double two_pi = 2.0 * std::numbers::pi;
  BracketTriple b;
  b.gamma = gamma;
  if (gamma > 0.0) {
    const double var = gamma * g.sigma * g.sigma + f.sigma * f.sigma;
    const double d = g.mu - f.mu;
    b.X = g.mass * std::pow(f.mass, gamma) * std::pow(two_pi * f.sigma * f.sigma, 0.5 * (1.0 - gamma)) /
          std::sqrt(two_pi * var) * std::exp(-gamma * d * d / (2.0 * var));
    b.Y = DensityObject::gaussian(f.mu, f.sigma, f.mass).power_integral(gamma);
    b.Z = DensityObject::gaussian(g.mu, g.sigma, g.mass).power_integral(gamma);
    return b;
  }
  b.X = g.mass;
  b.Y = f.mass;
  b.Z = g.mass;
  const double d = g.mu - f.mu;
  LogBrackets lb;
  lb.mass_g = g.mass;
  lb.mass_f = f.mass;
  lb.g_log_g = g.mass * (std::log(g.mass) - 0.5 * std::log(two_pi * g.sigma * g.sigma) - 0.5);
  lb.g_log_f = g.mass * (std::log(f.mass) - 0.5 * std::log(two_pi * f.sigma * f.sigma) -
                         (g.sigma * g.sigma + d * d) / (2.0 * f.sigma * f.sigma));
  const double kl_unit =
      std::log(f.sigma / g.sigma) + (g.sigma * g.sigma + d * d) / (2.0 * f.sigma * f.sigma) - 0.5;
  lb.kl = g.mass * (std::log(g.mass / f.mass) + kl_unit);
  b.log_terms = lb;
  return b;
}

}  // namespace

// ---------------------------------------------------------------------------

DensityObject DensityObject::discrete(std::vector<double> points, std::vector<double> masses) {
  if (points.size() != masses.size()) throw DomainError("discrete: point and mass counts differ");
  if (points.empty()) throw DomainError("discrete: empty support");
  require_nonnegative(masses, "discrete");
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return points[a] < points[b]; });
  DiscreteRepr r;
  for (const std::size_t i : order) {
    if (!std::isfinite(points[i])) throw DomainError("discrete: support points must be finite");
    if (!r.points.empty() && r.points.back() == points[i]) throw DomainError("discrete: duplicate support point");
    r.points.push_back(points[i]);
    r.masses.push_back(masses[i]);
  }
  return DensityObject(std::move(r));
}

DensityObject DensityObject::discrete(std::vector<double> masses) {
  std::vector<double> points(masses.size());
  std::iota(points.begin(), points.end(), 0.0);
  return discrete(std::move(points), std::move(masses));
}

DensityObject DensityObject::grid(double x0, double dx, std::vector<double> values) {
  if (!(dx > 0.0) || !std::isfinite(dx) || !std::isfinite(x0)) throw DomainError("grid: need finite x0 and dx > 0");
  if (values.size() < 2) throw DomainError("grid: need at least two points");
  require_nonnegative(values, "grid");
  return DensityObject(GridRepr{x0, dx, std::move(values)});
}

DensityObject DensityObject::gaussian(double mu, double sigma, double mass) {
  if (!std::isfinite(mu)) throw DomainError("gaussian: mu must be finite");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("gaussian: sigma must be > 0");
  if (!(mass > 0.0) || !std::isfinite(mass)) throw DomainError("gaussian: mass must be > 0");
  return DensityObject(GaussianRepr{mu, sigma, mass});
}

double DensityObject::total_mass() const { return power_integral(0.0); }

double DensityObject::power_integral(double gamma) const {
  if (!(gamma >= 0.0)) throw DomainError("power_integral: gamma must be >= 0");
  const double p = 1.0 + gamma;
  if (const auto* d = std::get_if<DiscreteRepr>(&repr_)) {
    double s = 0.0;
    for (const double m : d->masses) s += std::pow(m, p);
    return s;
  }
  if (const auto* g = std::get_if<GridRepr>(&repr_)) {
    double s = 0.0;
    const std::size_t n = g->values.size();
    for (std::size_t i = 0; i < n; ++i) s += trapezoid_weight(i, n, g->dx) * std::pow(g->values[i], p);
    return s;
  }
  const auto& n = std::get<GaussianRepr>(repr_);
  return std::pow(n.mass, p) * std::pow(2.0 * std::numbers::pi * n.sigma * n.sigma, -0.5 * gamma) / std::sqrt(p);
}

double DensityObject::evaluate(double x) const {
  if (const auto* d = std::get_if<DiscreteRepr>(&repr_)) {
    const auto it = std::lower_bound(d->points.begin(), d->points.end(), x);
    if (it != d->points.end() && *it == x) return d->masses[static_cast<std::size_t>(it - d->points.begin())];
    return 0.0;
  }
  if (const auto* g = std::get_if<GridRepr>(&repr_)) {
    if (x < g->x0 || x > g->x_max()) return 0.0;
    const double u = (x - g->x0) / g->dx;
    const auto i = std::min(static_cast<std::size_t>(u), g->values.size() - 2);
    const double w = u - static_cast<double>(i);
    return g->values[i] + w * (g->values[i + 1] - g->values[i]);
  }
  return gaussian_pdf(x, std::get<GaussianRepr>(repr_));
}

DensityObject DensityObject::scaled(double c) const {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("scaled: factor must be > 0");
  if (const auto* d = std::get_if<DiscreteRepr>(&repr_)) {
    DiscreteRepr r = *d;
    for (double& m : r.masses) m *= c;
    return DensityObject(std::move(r));
  }
  if (const auto* g = std::get_if<GridRepr>(&repr_)) {
    GridRepr r = *g;
    for (double& v : r.values) v *= c;
    return DensityObject(std::move(r));
  }
  GaussianRepr r = std::get<GaussianRepr>(repr_);
  r.mass *= c;
  return DensityObject(r);
}

// ---------------------------------------------------------------------------

BracketTriple bracket_integrals(const DensityObject& g, const DensityObject& f, double gamma) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw DomainError("bracket_integrals: gamma must be >= 0");
  if (g.repr().index() != f.repr().index()) {
    throw RepresentationError("bracket_integrals: g and f must share a representation");
  }
  BracketAccumulator acc{gamma};

  if (g.is_discrete()) {
    const auto& a = g.as_discrete();
    const auto& b = f.as_discrete();
    std::size_t i = 0, j = 0;
    while (i < a.points.size() || j < b.points.size()) {
      if (j == b.points.size() || (i < a.points.size() && a.points[i] < b.points[j])) {
        acc.add(1.0, a.masses[i++], 0.0);
      } else if (i == a.points.size() || b.points[j] < a.points[i]) {
        acc.add(1.0, 0.0, b.masses[j++]);
      } else {
        acc.add(1.0, a.masses[i++], b.masses[j++]);
      }
    }
    return acc.finish();
  }

  if (g.is_grid()) {
    const auto& a = g.as_grid();
    const auto& b = f.as_grid();
    if (!same_grid(a, b)) throw RepresentationError("bracket_integrals: g and f must share one grid");
    const std::size_t n = a.values.size();
    for (std::size_t i = 0; i < n; ++i) acc.add(trapezoid_weight(i, n, a.dx), a.values[i], b.values[i]);
    return acc.finish();
  }

  return gaussian_brackets(g.as_gaussian(), f.as_gaussian(), gamma);
}

BracketTriple make_brackets(double gamma, double X, double Y, double Z) {
  if (!(gamma > 0.0)) throw DomainError("make_brackets: gamma must be > 0");
  if (!(X >= 0.0 && Y >= 0.0 && Z >= 0.0)) throw DomainError("make_brackets: brackets must be nonnegative");
  BracketTriple b;
  b.gamma = gamma;
  b.X = X;
  b.Y = Y;
  b.Z = Z;
  return b;
}

DensityObject affine_transform(const DensityObject& f, double sigma, double mu) {
  if (sigma == 0.0 || !std::isfinite(sigma)) throw DomainError("affine_transform: singular transform (sigma = 0)");
  if (!std::isfinite(mu)) throw DomainError("affine_transform: mu must be finite");
  const double scale = std::fabs(sigma);
  if (f.is_gaussian()) {
    const auto& n = f.as_gaussian();
    return DensityObject::gaussian((n.mu - mu) / sigma, n.sigma / scale, n.mass);
  }
  if (f.is_grid()) {
    const auto& g = f.as_grid();
    std::vector<double> values(g.values.size());
    if (sigma > 0.0) {
      std::transform(g.values.begin(), g.values.end(), values.begin(), [&](double v) { return scale * v; });
      return DensityObject::grid((g.x0 - mu) / sigma, g.dx / scale, std::move(values));
    }
    std::transform(g.values.rbegin(), g.values.rend(), values.begin(), [&](double v) { return scale * v; });
    return DensityObject::grid((g.x_max() - mu) / sigma, g.dx / scale, std::move(values));
  }
  throw RepresentationError("affine_transform: requires a grid or gaussian density");
}

BracketTriple empirical_brackets(std::span<const double> samples, const DensityObject& f, double gamma) {
  if (samples.empty()) throw DomainError("empirical_brackets: empty sample list");
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw DomainError("empirical_brackets: gamma must be >= 0");
  const double n = static_cast<double>(samples.size());
  BracketTriple b;
  b.gamma = gamma;
  if (gamma > 0.0) {
    double sum = 0.0;
    for (const double x : samples) sum += std::pow(f.evaluate(x), gamma);
    b.X = sum / n;
    b.Y = f.power_integral(gamma);
    return b;
  }
  double log_sum = 0.0;
  if (f.is_gaussian()) {
    const auto& q = f.as_gaussian();
    const double log_norm = std::log(q.mass) - std::log(q.sigma) - 0.5 * std::log(2.0 * std::numbers::pi);
    for (const double x : samples) {
      const double u = (x - q.mu) / q.sigma;
      log_sum += log_norm - 0.5 * u * u;
    }
  } else {
    for (const double x : samples) {
      const double v = f.evaluate(x);
      log_sum += v > 0.0 ? std::log(v) : -kInf;
    }
  }
  LogBrackets lb;
  lb.g_log_f = log_sum / n;
  lb.mass_g = 1.0;
  lb.mass_f = f.total_mass();
  b.X = 1.0;
  b.Y = lb.mass_f;
  b.log_terms = lb;
  return b;
}

// ---------------------------------------------------------------------------

GridSpec covering_grid(std::span<const GaussianRepr> gaussians, std::size_t n, double truncation) {
  if (gaussians.empty()) throw DomainError("covering_grid: no gaussians");
  if (n < 2) throw DomainError("covering_grid: need at least two points");
  double lo = kInf, hi = -kInf;
  for (const auto& g : gaussians) {
    lo = std::min(lo, g.mu - truncation * g.sigma);
    hi = std::max(hi, g.mu + truncation * g.sigma);
  }
  return GridSpec{lo, (hi - lo) / static_cast<double>(n - 1), n};
}

DensityObject sample_on_grid(const DensityObject& f, const GridSpec& grid) {
  std::vector<double> values(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) values[i] = f.evaluate(grid.x0 + grid.dx * static_cast<double>(i));
  return DensityObject::grid(grid.x0, grid.dx, std::move(values));
}

// ---------------------------------------------------------------------------

DensityObject read_density_csv(const std::string& path) {
  const CsvTable csv = read_numeric_csv(path, 2);
  if (csv.header.size() != 2) throw FormatError(path + ": missing header (expected 'x,value' or 'index,mass')");
  if (csv.rows.empty()) throw FormatError(path + ": no data rows");
  std::vector<double> first, second;
  for (const auto& row : csv.rows) {
    first.push_back(row[0]);
    second.push_back(row[1]);
  }
  try {
    if (csv.header[0] == "index" && csv.header[1] == "mass") {
      return DensityObject::discrete(std::move(first), std::move(second));
    }
    if (csv.header[0] == "x" && csv.header[1] == "value") {
      const std::size_t n = first.size();
      if (n < 2) throw FormatError(path + ": grid needs at least two rows");
      const double dx = (first.back() - first.front()) / static_cast<double>(n - 1);
      if (!(dx > 0.0)) throw FormatError(path + ": x must be strictly increasing");
      for (std::size_t i = 0; i < n; ++i) {
        const double expected = first.front() + dx * static_cast<double>(i);
        if (std::fabs(first[i] - expected) > 1e-9 * std::max(1.0, std::fabs(expected)) + 1e-6 * dx) {
          throw FormatError(path + ": x must be equally spaced (row " + std::to_string(i + 1) + ")");
        }
      }
      return DensityObject::grid(first.front(), dx, std::move(second));
    }
  } catch (const DomainError& e) {
    throw FormatError(path + ": " + e.what());
  }
  throw FormatError(path + ": unknown header '" + csv.header[0] + "," + csv.header[1] + "'");
}

void write_density_csv(const DensityObject& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  if (f.is_discrete()) {
    const auto& d = f.as_discrete();
    out << "index,mass\n";
    for (std::size_t i = 0; i < d.points.size(); ++i) {
      out << format_double(d.points[i]) << ',' << format_double(d.masses[i]) << '\n';
    }
    return;
  }
  if (f.is_grid()) {
    const auto& g = f.as_grid();
    out << "x,value\n";
    for (std::size_t i = 0; i < g.values.size(); ++i) {
      out << format_double(g.x(i)) << ',' << format_double(g.values[i]) << '\n';
    }
    return;
  }
  throw RepresentationError("write_density_csv: gaussian densities have no file form; sample onto a grid first");
}

std::vector<double> read_samples_csv(const std::string& path) {
  const CsvTable csv = read_numeric_csv(path, 1);
  if (!csv.header.empty() && csv.header[0] != "x") throw FormatError(path + ": expected header 'x'");
  std::vector<double> samples;
  samples.reserve(csv.rows.size());
  for (const auto& row : csv.rows) {
    if (!std::isfinite(row[0])) throw FormatError(path + ": non-finite sample");
    samples.push_back(row[0]);
  }
  if (samples.empty()) throw FormatError(path + ": no samples");
  return samples;
}

void write_samples_csv(std::span<const double> samples, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  out << "x\n";
  for (const double x : samples) out << format_double(x) << '\n';
}

}  // namespace divkit

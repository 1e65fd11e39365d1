#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace divkit {

/// Finitely supported function: masses at sorted, distinct support points.
struct DiscreteRepr {
  std::vector<double> points;
  std::vector<double> masses;
};

/// Values on the uniform grid x0 + i*dx, integrated by the trapezoid rule.
struct GridRepr {
  double x0 = 0.0;
  double dx = 1.0;
  std::vector<double> values;

  double x(std::size_t i) const { return x0 + dx * static_cast<double>(i); }
  double x_max() const { return x(values.size() - 1); }
};

/// mass * N(mu, sigma^2).
struct GaussianRepr {
  double mu = 0.0;
  double sigma = 1.0;
  double mass = 1.0;
};

/// A nonnegative, not identically zero function in one of three
/// representations. Immutable; construct through the factories, which
/// enforce the invariants.
class DensityObject {
 public:
  using Repr = std::variant<DiscreteRepr, GridRepr, GaussianRepr>;

  static DensityObject discrete(std::vector<double> points, std::vector<double> masses);
  /// Support points 0, 1, ..., n-1.
  static DensityObject discrete(std::vector<double> masses);
  static DensityObject grid(double x0, double dx, std::vector<double> values);
  static DensityObject gaussian(double mu, double sigma, double mass = 1.0);

  const Repr& repr() const { return repr_; }
  bool is_discrete() const { return std::holds_alternative<DiscreteRepr>(repr_); }
  bool is_grid() const { return std::holds_alternative<GridRepr>(repr_); }
  bool is_gaussian() const { return std::holds_alternative<GaussianRepr>(repr_); }
  const DiscreteRepr& as_discrete() const { return std::get<DiscreteRepr>(repr_); }
  const GridRepr& as_grid() const { return std::get<GridRepr>(repr_); }
  const GaussianRepr& as_gaussian() const { return std::get<GaussianRepr>(repr_); }

  /// <f>: exact sum, trapezoid, or the Gaussian mass.
  double total_mass() const;
  /// <f^{1+gamma}> for gamma >= 0.
  double power_integral(double gamma) const;
  /// Pointwise value. Discrete: mass at an exactly matching support point,
  /// else 0. Grid: linear interpolation, 0 outside the grid.
  double evaluate(double x) const;

  /// c * f, c > 0.
  DensityObject scaled(double c) const;

 private:
  explicit DensityObject(Repr repr) : repr_(std::move(repr)) {}
  Repr repr_;
};

/// Terms needed by the gamma = 0 branches.
struct LogBrackets {
  /// <g log(g/f)>; unavailable for the empirical measure.
  std::optional<double> kl;
  /// <g log g>; unavailable for the empirical measure.
  std::optional<double> g_log_g;
  /// <g log f>.
  double g_log_f = 0.0;
  double mass_g = 0.0;
  double mass_f = 0.0;
};

/// X = <g f^gamma>, Y = <f^{1+gamma}>, Z = <g^{1+gamma}>.
struct BracketTriple {
  double gamma = 0.0;
  double X = 0.0;
  double Y = 0.0;
  /// Unavailable for empirical brackets.
  std::optional<double> Z;
  /// Present only when gamma = 0.
  std::optional<LogBrackets> log_terms;
};

/// Computes the bracket integrals of (g, f). g and f must share a
/// representation class (and the same grid). Discrete pairs are summed over
/// the union of supports. For gamma = 0, g > 0 where f = 0 raises
/// SupportError; g log(g/f) is taken as 0 where g = 0.
BracketTriple bracket_integrals(const DensityObject& g, const DensityObject& f, double gamma);

/// Builds brackets directly from values (X, Y, Z) for gamma > 0.
BracketTriple make_brackets(double gamma, double X, double Y, double Z);

/// f_{sigma,mu}(x) = |sigma| f(sigma x + mu). Grid nodes are mapped exactly
/// onto the transformed support (reversed when sigma < 0), so the total mass
/// is preserved. Throws DomainError for sigma = 0 and RepresentationError for
/// discrete input.
DensityObject affine_transform(const DensityObject& f, double sigma, double mu);

/// Empirical plug-in: X = (1/n) sum_i f(x_i)^gamma, Y = <f^{1+gamma}>, no Z.
/// For gamma = 0 the log terms carry <g log f> = (1/n) sum log f(x_i) with
/// <g> = 1.
BracketTriple empirical_brackets(std::span<const double> samples, const DensityObject& f, double gamma);

// ---------------------------------------------------------------------------
// Quadrature grids

inline constexpr std::size_t kDefaultGridPoints = 4096;
inline constexpr double kDefaultTruncation = 12.0;

struct GridSpec {
  double x0 = 0.0;
  double dx = 1.0;
  std::size_t n = kDefaultGridPoints;
};

/// Smallest uniform grid of n points covering mu +/- k*sigma of every Gaussian.
GridSpec covering_grid(std::span<const GaussianRepr> gaussians, std::size_t n = kDefaultGridPoints,
                       double truncation = kDefaultTruncation);

/// Samples a density pointwise onto a grid.
DensityObject sample_on_grid(const DensityObject& f, const GridSpec& grid);

// ---------------------------------------------------------------------------
// File formats

/// Reads `x,value` (grid) or `index,mass` (discrete) CSV, dispatching on the header.
DensityObject read_density_csv(const std::string& path);
/// Writes the grid or discrete representation with round-trip precision.
void write_density_csv(const DensityObject& f, const std::string& path);
/// Single column `x`.
std::vector<double> read_samples_csv(const std::string& path);
void write_samples_csv(std::span<const double> samples, const std::string& path);

}  // namespace divkit

#include "divkit/generators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "divkit/csv.hpp"
#include "divkit/errors.hpp"

namespace divkit {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

constexpr int kLogGridPoints = 10000;
constexpr double kGridLow = 1e-6;
constexpr double kGridHigh = 1e6;

constexpr double kNormalizationTol = 1e-12;
constexpr double kBoundSlack = 1e-12;
constexpr double kConvexityTol = 1e-9;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void require_gamma(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw DomainError("eta generators require gamma > 0, got " + fmt(gamma));
  }
}

}  // namespace

double signed_pow(double w, double r) {
  if (w == 0.0) return 0.0;
  const double mag = std::pow(std::fabs(w), r);
  return w > 0.0 ? mag : -mag;
}

// ---------------------------------------------------------------------------

Table::Table(std::vector<double> z, std::vector<double> values) : z_(std::move(z)), v_(std::move(values)) {
  if (z_.size() != v_.size()) throw FormatError("table: knot and value counts differ");
  if (z_.size() < 2) throw FormatError("table: need at least two rows");
  for (std::size_t i = 0; i < z_.size(); ++i) {
    if (!std::isfinite(z_[i]) || !std::isfinite(v_[i])) throw FormatError("table: non-finite entry");
    if (i > 0 && !(z_[i] > z_[i - 1])) throw FormatError("table: z must be strictly increasing");
  }
}

double Table::operator()(double z) const {
  std::size_t hi;
  if (z <= z_.front()) {
    hi = 1;
  } else if (z >= z_.back()) {
    hi = z_.size() - 1;
  } else {
    hi = static_cast<std::size_t>(std::upper_bound(z_.begin(), z_.end(), z) - z_.begin());
  }
  const std::size_t lo = hi - 1;
  const double w = (z - z_[lo]) / (z_[hi] - z_[lo]);
  return v_[lo] + w * (v_[hi] - v_[lo]);
}

Table read_table_csv(const std::string& path) {
  const CsvTable csv = read_numeric_csv(path, 2);
  std::vector<double> z, v;
  z.reserve(csv.rows.size());
  v.reserve(csv.rows.size());
  for (const auto& row : csv.rows) {
    z.push_back(row[0]);
    v.push_back(row[1]);
  }
  return Table(std::move(z), std::move(v));
}

const std::vector<double>& certificate_grid() {
  static const std::vector<double> grid = [] {
    std::vector<double> g;
    g.reserve(kLogGridPoints + 2);
    g.push_back(0.0);
    const double lo = std::log(kGridLow);
    const double hi = std::log(kGridHigh);
    for (int i = 0; i < kLogGridPoints; ++i) {
      g.push_back(std::exp(lo + (hi - lo) * i / (kLogGridPoints - 1)));
    }
    g.push_back(1.0);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    return g;
  }();
  return grid;
}

// ---------------------------------------------------------------------------
// eta

GeneratorEta::GeneratorEta(EtaKind kind, double gamma, double param, std::string name, ScalarFn fn)
    : kind_(kind), gamma_(gamma), param_(param), name_(std::move(name)), fn_(std::move(fn)) {}

GeneratorEta GeneratorEta::dpd(double gamma) {
  require_gamma(gamma);
  return {EtaKind::dpd, gamma, kNaN, "dpd", [gamma](double z) { return gamma - (1.0 + gamma) * z; }};
}

GeneratorEta GeneratorEta::ps(double gamma) {
  require_gamma(gamma);
  return {EtaKind::ps, gamma, kNaN, "ps", [gamma](double z) { return -std::pow(z, 1.0 + gamma); }};
}

GeneratorEta GeneratorEta::bhd(double kappa, double gamma) {
  require_gamma(gamma);
  if (!(kappa >= 1.0) || !std::isfinite(kappa)) throw DomainError("bhd eta requires kappa >= 1, got " + fmt(kappa));
  return {EtaKind::bhd, gamma, kappa, "bhd:" + fmt(kappa), [kappa, gamma](double z) {
            return -signed_pow(kappa * z - kappa + 1.0, (1.0 + gamma) / kappa);
          }};
}

GeneratorEta GeneratorEta::jhhb(double zeta, double gamma) {
  require_gamma(gamma);
  if (!(zeta >= 0.0) || !std::isfinite(zeta)) throw DomainError("jhhb eta requires zeta >= 0, got " + fmt(zeta));
  ScalarFn fn;
  if (zeta == 0.0) {
    fn = [gamma](double z) { return -std::pow(z, 1.0 + gamma); };
  } else {
    fn = [zeta, gamma](double z) {
      const double w = (1.0 + gamma) * std::pow(z, zeta) - gamma;
      return -signed_pow(w, 1.0 / zeta);
    };
  }
  return {EtaKind::jhhb, gamma, zeta, "jhhb:" + fmt(zeta), std::move(fn)};
}

GeneratorEta GeneratorEta::custom(ScalarFn fn, double gamma, std::string label) {
  require_gamma(gamma);
  if (!fn) throw GeneratorError("custom eta requires an evaluator");
  return {EtaKind::custom, gamma, kNaN, std::move(label), std::move(fn)};
}

GeneratorEta jhhb_eta(double zeta, double gamma) { return GeneratorEta::jhhb(zeta, gamma); }

EtaCertificate validate_eta(const GeneratorEta& eta, double gamma) {
  require_gamma(gamma);
  EtaCertificate cert;

  const double at_one = eta(1.0);
  if (!std::isfinite(at_one)) throw GeneratorError("eta is not finite at z=1");
  if (std::fabs(at_one + 1.0) > kNormalizationTol) {
    cert.valid = false;
    cert.z_star = 1.0;
    cert.gap = at_one + 1.0;
    cert.reason = "eta(1) != -1";
    return cert;
  }

  for (const double z : certificate_grid()) {
    const double value = eta(z);
    if (!std::isfinite(value)) throw GeneratorError("eta is not finite at z=" + fmt(z));
    const double bound = std::pow(z, 1.0 + gamma);
    const double gap = value + bound;
    if (gap < -kBoundSlack * std::max(1.0, bound)) {
      cert.valid = false;
      cert.z_star = z;
      cert.gap = gap;
      cert.reason = "eta(z) < -z^(1+gamma) at z=" + fmt(z);
      return cert;
    }
  }
  cert.z_star = kNaN;
  return cert;
}

// ---------------------------------------------------------------------------
// psi

std::string PsiCertificate::describe() const {
  std::ostringstream os;
  switch (violation) {
    case PsiViolation::none:
      return "valid";
    case PsiViolation::range:
      os << "generator is negative at z=" << fmt(triple[1]);
      return os.str();
    case PsiViolation::monotonicity:
      os << "psi not strictly increasing between t=" << fmt(triple[0]) << " and t=" << fmt(triple[1])
         << " (difference " << fmt(amount) << ")";
      return os.str();
    case PsiViolation::convexity:
      os << "psi not convex at t=" << fmt(triple[1]) << " (second difference " << fmt(amount) << ")";
      return os.str();
  }
  return "unknown";
}

PsiCertificate validate_psi(const ScalarFn& psi, const ScalarFn& psi_at_minus_infinity) {
  const auto& zgrid = certificate_grid();
  std::vector<double> t;
  t.reserve(zgrid.size());
  for (const double z : zgrid) {
    if (z > 0.0) t.push_back(std::log(z));
  }

  auto eval = [&psi](double arg) {
    const double v = psi(arg);
    if (!std::isfinite(v)) throw GeneratorError("psi is not finite at t=" + fmt(arg));
    return v;
  };

  // Overflow to +inf at the top of the grid ends the checked range.
  std::vector<double> values;
  values.reserve(t.size());
  for (const double arg : t) {
    const double v = psi(arg);
    if (v == kInf && !values.empty()) break;
    values.push_back(eval(arg));
  }
  if (values.size() < 3) throw GeneratorError("psi overflows on the certificate grid");
  t.resize(values.size());

  PsiCertificate cert;

  if (psi_at_minus_infinity) {
    const double boundary = psi_at_minus_infinity(-kInf);
    if (std::isnan(boundary) || boundary == kInf) throw GeneratorError("psi(-inf) is not in [-inf, inf)");
    if (!(boundary < values[0])) {
      cert.violation = PsiViolation::monotonicity;
      cert.triple = {-kInf, t[0], t[1]};
      cert.amount = values[0] - boundary;
      return cert;
    }
  }

  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    const double diff = values[i + 1] - values[i];
    if (!(diff > 0.0)) {
      cert.violation = PsiViolation::monotonicity;
      cert.triple = {t[i], t[i + 1], i + 2 < t.size() ? t[i + 2] : t[i + 1]};
      cert.amount = diff;
      return cert;
    }
  }

  for (std::size_t i = 0; i < t.size(); ++i) {
    const double h = std::max(1e-4, 1e-4 * std::fabs(t[i]));
    const double upper = psi(t[i] + h);
    if (upper == kInf) break;
    const double second = eval(t[i] + h) - 2.0 * values[i] + eval(t[i] - h);
    if (second < -kConvexityTol * std::max(1.0, std::fabs(values[i]))) {
      cert.violation = PsiViolation::convexity;
      cert.triple = {t[i] - h, t[i], t[i] + h};
      cert.amount = second;
      return cert;
    }
  }
  return cert;
}

// ---------------------------------------------------------------------------
// phi

GeneratorPhi::GeneratorPhi(PhiKind kind, std::string name, std::array<double, 2> params, ScalarFn fn,
                           ScalarFn derivative)
    : kind_(kind), name_(std::move(name)), params_(params), fn_(std::move(fn)), derivative_(std::move(derivative)) {}

GeneratorPhi GeneratorPhi::identity() {
  return {PhiKind::identity, "identity", {kNaN, kNaN}, [](double z) { return z; }, [](double) { return 1.0; }};
}

GeneratorPhi GeneratorPhi::log() {
  // log(0) = -inf is the admissible boundary value.
  return {PhiKind::log, "log", {kNaN, kNaN}, [](double z) { return std::log(z); },
          [](double z) { return 1.0 / z; }};
}

GeneratorPhi GeneratorPhi::power(double zeta) {
  if (!(zeta > 0.0) || !std::isfinite(zeta)) throw DomainError("power phi requires zeta > 0, got " + fmt(zeta));
  return {PhiKind::power, "power:" + fmt(zeta), {zeta, kNaN}, [zeta](double z) { return std::pow(z, zeta); },
          [zeta](double z) { return zeta * std::pow(z, zeta - 1.0); }};
}

GeneratorPhi GeneratorPhi::bdpd(double lambda1, double lambda2) {
  if (!(lambda1 >= 0.0) || !std::isfinite(lambda1)) throw DomainError("bdpd phi requires lambda1 >= 0");
  if (!(lambda2 > 0.0) || !std::isfinite(lambda2)) throw DomainError("bdpd phi requires lambda2 > 0");
  return {PhiKind::bdpd, "bdpd:" + fmt(lambda1) + ":" + fmt(lambda2), {lambda1, lambda2},
          [lambda1, lambda2](double z) { return std::log(lambda1 + lambda2 * z) / lambda2; },
          [lambda1, lambda2](double z) { return 1.0 / (lambda1 + lambda2 * z); }};
}

GeneratorPhi GeneratorPhi::exp_minus_one() {
  return {PhiKind::custom, "exp-minus-one", {kNaN, kNaN}, [](double z) { return std::expm1(z); },
          [](double z) { return std::exp(z); }};
}

GeneratorPhi GeneratorPhi::custom(ScalarFn fn, std::string label, ScalarFn derivative) {
  if (!fn) throw GeneratorError("custom phi requires an evaluator");
  if (!derivative) {
    derivative = [fn](double z) {
      const double h = 1e-6 * std::max(1.0, std::fabs(z));
      if (z - h < 0.0) return (fn(z + h) - fn(z)) / h;
      return (fn(z + h) - fn(z - h)) / (2.0 * h);
    };
  }
  return {PhiKind::custom, std::move(label), {kNaN, kNaN}, std::move(fn), std::move(derivative)};
}

double GeneratorPhi::derivative(double z) const { return derivative_(z); }

double GeneratorPhi::psi(double t) const { return fn_(t == -kInf ? 0.0 : std::exp(t)); }

ScalarFn GeneratorPhi::psi_fn() const {
  return [fn = fn_](double t) { return fn(t == -kInf ? 0.0 : std::exp(t)); };
}

bool GeneratorPhi::has_constant_derivative() const {
  return kind_ == PhiKind::identity || (kind_ == PhiKind::power && params_[0] == 1.0);
}

std::optional<double> GeneratorPhi::affine_invariance_zeta() const {
  switch (kind_) {
    case PhiKind::identity:
      return 1.0;
    case PhiKind::log:
      return 0.0;
    case PhiKind::power:
      return params_[0];
    case PhiKind::bdpd:
      // log(lambda2 z)/lambda2 is an affine image of log z.
      if (params_[0] == 0.0) return 0.0;
      return std::nullopt;
    case PhiKind::custom:
      return std::nullopt;
  }
  return std::nullopt;
}

PsiCertificate validate_phi(const GeneratorPhi& phi) { return validate_psi(phi.psi_fn(), phi.psi_fn()); }

// ---------------------------------------------------------------------------
// xi

GeneratorXi::GeneratorXi(XiKind kind, std::string name, double param, ScalarFn fn)
    : kind_(kind), name_(std::move(name)), param_(param), fn_(std::move(fn)) {}

GeneratorXi GeneratorXi::identity() {
  return {XiKind::identity, "identity", kNaN, [](double z) { return z; }};
}

GeneratorXi GeneratorXi::power(double zeta) {
  if (!(zeta > 0.0) || !std::isfinite(zeta)) throw DomainError("power xi requires zeta > 0, got " + fmt(zeta));
  return {XiKind::power, "power:" + fmt(zeta), zeta, [zeta](double z) { return std::pow(z, zeta); }};
}

GeneratorXi GeneratorXi::custom(ScalarFn fn, std::string label) {
  if (!fn) throw GeneratorError("custom xi requires an evaluator");
  return {XiKind::custom, std::move(label), kNaN, std::move(fn)};
}

double GeneratorXi::psi(double t) const { return std::log(fn_(t == -kInf ? 0.0 : std::exp(t))); }

ScalarFn GeneratorXi::psi_fn() const {
  return [fn = fn_](double t) { return std::log(fn(t == -kInf ? 0.0 : std::exp(t))); };
}

PsiCertificate validate_xi(const GeneratorXi& xi) {
  for (const double z : certificate_grid()) {
    const double v = xi(z);
    if (std::isnan(v)) throw GeneratorError("xi is not a number at z=" + fmt(z));
    if (v < 0.0) {
      PsiCertificate cert;
      cert.violation = PsiViolation::range;
      cert.triple = {z, z, z};
      cert.amount = v;
      return cert;
    }
  }
  return validate_psi(xi.psi_fn(), xi.psi_fn());
}

}  // namespace divkit

#pragma once

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace divkit {

using ScalarFn = std::function<double(double)>;

/// sign(w)|w|^r, the signed-power convention used for negative bases.
double signed_pow(double w, double r);

/// Piecewise-linear interpolant through (z, value) knots with strictly
/// increasing z. Outside the knot range the end segments are extended.
/// Monotone data yields a monotone interpolant.
class Table {
 public:
  Table(std::vector<double> z, std::vector<double> values);

  double operator()(double z) const;

  std::span<const double> knots() const { return z_; }
  std::span<const double> values() const { return v_; }

 private:
  std::vector<double> z_;
  std::vector<double> v_;
};

/// Reads a two-column CSV of (z, value) rows. A non-numeric first row is
/// treated as a header.
Table read_table_csv(const std::string& path);

// ---------------------------------------------------------------------------
// Certificate grid

/// z values used by every numerical certificate: 10^4 log-spaced points over
/// [1e-6, 1e6] plus z = 0 and z = 1, sorted ascending.
const std::vector<double>& certificate_grid();

// ---------------------------------------------------------------------------
// eta: generator of Hölder-type scores

enum class EtaKind { dpd, ps, bhd, jhhb, custom };

class GeneratorEta {
 public:
  /// eta(z) = gamma - (1+gamma) z.
  static GeneratorEta dpd(double gamma);
  /// eta(z) = -z^{1+gamma}, the pointwise lower bound of admissible generators.
  static GeneratorEta ps(double gamma);
  /// eta(z) = -sign(kz-k+1) |kz-k+1|^{(1+gamma)/k}, kappa >= 1.
  static GeneratorEta bhd(double kappa, double gamma);
  /// See jhhb_eta().
  static GeneratorEta jhhb(double zeta, double gamma);
  static GeneratorEta custom(ScalarFn fn, double gamma, std::string label);

  double operator()(double z) const { return fn_(z); }

  EtaKind kind() const { return kind_; }
  double gamma() const { return gamma_; }
  /// kappa for bhd, zeta for jhhb, NaN otherwise.
  double parameter() const { return param_; }
  const std::string& name() const { return name_; }

 private:
  GeneratorEta(EtaKind kind, double gamma, double param, std::string name, ScalarFn fn);

  EtaKind kind_;
  double gamma_;
  double param_;
  std::string name_;
  ScalarFn fn_;
};

/// The eta under which the JHHB family is a Hölder divergence:
/// -sign(w)|w|^{1/zeta} with w = (1+gamma) z^zeta - gamma for zeta > 0, and
/// -z^{1+gamma} for zeta = 0. Throws DomainError for zeta < 0 or gamma <= 0.
GeneratorEta jhhb_eta(double zeta, double gamma);

struct EtaCertificate {
  bool valid = true;
  /// Offending argument; NaN when valid.
  double z_star = 0.0;
  /// eta(z*) + z*^{1+gamma} for a bound violation, eta(1) + 1 for a
  /// normalization violation.
  double gap = 0.0;
  std::string reason;
};

/// Checks eta(1) = -1 (to 1e-12) and eta(z) >= -z^{1+gamma} on the
/// certificate grid. Throws GeneratorError if eta is not finite somewhere.
EtaCertificate validate_eta(const GeneratorEta& eta, double gamma);

// ---------------------------------------------------------------------------
// psi certificates

enum class PsiViolation { none, range, monotonicity, convexity };

struct PsiCertificate {
  PsiViolation violation = PsiViolation::none;
  /// Offending grid points in log-argument space (t = log z).
  std::array<double, 3> triple{};
  /// The failing difference (forward difference or second difference).
  double amount = 0.0;

  bool valid() const { return violation == PsiViolation::none; }
  std::string describe() const;
};

/// Samples psi on t = log z over the certificate grid. Strict monotonicity:
/// every forward difference > 0. Convexity: centered second differences with
/// step max(1e-4, 1e-4|t|) no smaller than -1e-9 max(1, |psi(t)|).
/// The boundary value psi(-inf) may be -inf; any other non-finite value
/// throws GeneratorError naming the argument.
PsiCertificate validate_psi(const ScalarFn& psi, const ScalarFn& psi_at_minus_infinity = nullptr);

// ---------------------------------------------------------------------------
// phi: generator of the functional density power divergence

enum class PhiKind { identity, log, power, bdpd, custom };

class GeneratorPhi {
 public:
  static GeneratorPhi identity();
  static GeneratorPhi log();
  /// phi(z) = z^zeta, zeta > 0.
  static GeneratorPhi power(double zeta);
  /// phi(z) = log(lambda1 + lambda2 z) / lambda2, lambda1 >= 0, lambda2 > 0.
  static GeneratorPhi bdpd(double lambda1, double lambda2);
  /// phi(z) = e^z - 1. Valid as a generator but outside the affine-invariant class.
  static GeneratorPhi exp_minus_one();
  /// Derivative is taken by centered finite difference unless supplied.
  static GeneratorPhi custom(ScalarFn fn, std::string label, ScalarFn derivative = nullptr);

  double operator()(double z) const { return fn_(z); }
  double derivative(double z) const;
  /// psi(t) = phi(e^t); t = -inf maps to phi(0).
  double psi(double t) const;
  ScalarFn psi_fn() const;

  PhiKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  double parameter(int i = 0) const { return params_[i]; }
  bool has_constant_derivative() const;

  /// zeta such that phi is an affine image of (z^zeta - 1)/zeta (or log z for
  /// zeta = 0); empty when phi lies outside that class.
  std::optional<double> affine_invariance_zeta() const;

 private:
  GeneratorPhi(PhiKind kind, std::string name, std::array<double, 2> params, ScalarFn fn,
               ScalarFn derivative);

  PhiKind kind_;
  std::string name_;
  std::array<double, 2> params_;
  ScalarFn fn_;
  ScalarFn derivative_;
};

PsiCertificate validate_phi(const GeneratorPhi& phi);

// ---------------------------------------------------------------------------
// xi: inner transform of the xi-Hölder divergence

enum class XiKind { identity, power, custom };

class GeneratorXi {
 public:
  static GeneratorXi identity();
  /// xi(z) = z^zeta, zeta > 0.
  static GeneratorXi power(double zeta);
  static GeneratorXi custom(ScalarFn fn, std::string label);

  double operator()(double z) const { return fn_(z); }
  /// psi(t) = log xi(e^t).
  double psi(double t) const;
  ScalarFn psi_fn() const;

  XiKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  double parameter() const { return param_; }

 private:
  GeneratorXi(XiKind kind, std::string name, double param, ScalarFn fn);

  XiKind kind_;
  std::string name_;
  double param_;
  ScalarFn fn_;
};

/// Range check (xi >= 0 on the certificate grid) followed by validate_psi on
/// log xi(e^t).
PsiCertificate validate_xi(const GeneratorXi& xi);

}  // namespace divkit

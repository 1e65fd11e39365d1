#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "divkit/divergence.hpp"
#include "divkit/function_space.hpp"
#include "divkit/generators.hpp"

namespace divkit {

// Numerical checks of the structural results on the divergence families.
// Every randomized check draws its brackets from genuine random densities so
// Hölder's inequality constrains (X, Y, Z) by construction, and every report
// records its seed.

// ---------------------------------------------------------------------------
// Affine invariance of the FDPD

struct AffineCheckOptions {
  std::size_t grid_points = kDefaultGridPoints;
  double tolerance = 1e-5;
  /// Use closed-form Gaussian brackets instead of quadrature. Always used for
  /// gamma = 0, whose log terms need matching supports.
  bool closed_form = false;
};

/// One transform applied to one pair.
struct AffineInstance {
  double divergence_original = 0.0;
  double divergence_transformed = 0.0;
  /// |sigma|^{-gamma zeta}; NaN outside the characterized class.
  double predicted_scale = 0.0;
  /// h * D(g_t, f_t) / D(g, f); NaN outside the characterized class.
  double ratio = 0.0;
};

AffineInstance affine_instance(const GeneratorPhi& phi, double gamma, const DensityObject& g,
                               const DensityObject& f, double sigma, double mu,
                               const AffineCheckOptions& options = {});

struct InvarianceReport {
  std::string phi;
  double gamma = 0.0;
  /// zeta of the characterized class member; empty for non-members.
  std::optional<double> zeta;
  std::size_t trials = 0;
  std::size_t skipped = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;
  /// max over trials of |h D_t / D - 1| (members) and of the disagreement of
  /// D_t / D between two pairs sharing one transform (all phi).
  double max_relative_violation = 0.0;
  double predicted_scale = 0.0;
  double worst_sigma = 0.0;
  double worst_mu = 0.0;
  bool pass = false;
};

/// Draws random Gaussian pairs and transforms (sigma in [0.25, 4], mu in
/// [-3, 3]) and measures how far h(sigma) D(g_t, f_t) strays from D(g, f).
InvarianceReport check_affine_invariance(const GeneratorPhi& phi, double gamma, std::size_t trials,
                                         std::uint64_t seed, const AffineCheckOptions& options = {});

// ---------------------------------------------------------------------------
// JHHB as a Hölder divergence

/// |-tau(-S_holder) - S_jhhb| on one bracket, with eta = jhhb_eta(zeta, gamma)
/// and tau the signed power (log for zeta = 0).
double jhhb_representation_error(const BracketTriple& b, double zeta);

struct RepresentationReport {
  double zeta = 0.0;
  double gamma = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  double max_abs_error = 0.0;
  BracketTriple worst;
  bool pass = false;
};

inline constexpr double kRepresentationTolerance = 1e-10;

RepresentationReport verify_jhhb_holder_representation(double zeta, double gamma, std::size_t trials,
                                                       std::uint64_t seed);

// ---------------------------------------------------------------------------
// FDPS lower bound

/// LHS - RHS of  gamma phi(Y) - (1+gamma) phi(X) >= -exp(-[gamma log phi(Y) - (1+gamma) log phi(X)]).
/// Empty when phi(X) <= 0 or phi(Y) <= 0 (log phi undefined).
std::optional<double> fdps_lower_bound_gap(const BracketTriple& b, const GeneratorPhi& phi);

/// Certificate of psi_*(t) = log phi(e^t). Non-real values (phi <= 0) make
/// the certificate fail with a range violation.
PsiCertificate lower_bound_certificate(const GeneratorPhi& phi);

struct LowerBoundReport {
  std::string phi;
  double gamma = 0.0;
  std::size_t trials = 0;
  std::size_t invalid_trials = 0;
  std::uint64_t seed = 0;
  bool holds = true;
  double worst_gap = 0.0;
  std::optional<BracketTriple> tight_at;
  /// The bound is itself an FDPS (defined by log phi) iff this certificate passes.
  bool bound_is_fdps = false;
  std::string certificate;
};

/// A trial violates the bound when its gap is below
/// -kLowerBoundTolerance * max(1, |phi(X)|, |phi(Y)|).
inline constexpr double kLowerBoundTolerance = 1e-12;

/// Collects `trials` brackets on which log phi is defined (rejected draws are
/// counted in invalid_trials, at most 100x trials attempts).
LowerBoundReport check_fdps_lower_bound(const GeneratorPhi& phi, double gamma, std::size_t trials,
                                        std::uint64_t seed);

/// Same check on caller-supplied brackets.
LowerBoundReport check_fdps_lower_bound(const GeneratorPhi& phi, std::span<const BracketTriple> brackets);

// ---------------------------------------------------------------------------
// u/v structure of Hölder-form composite scores

struct UvReport {
  std::string xi;
  double gamma = 0.0;
  std::size_t densities = 0;
  std::size_t pairs = 0;
  /// max |xi(<g g^gamma>) - xi(<g^{1+gamma}>)|.
  double max_identity_error = 0.0;
  /// max |assembled score - xi_holder_score| over ordered pairs and eta in {dpd, ps}.
  double max_score_error = 0.0;
  double max_abs_error = 0.0;
  bool pass = false;
};

/// The assembled score eta(u(<g U(f)>)/u(<V(f)>)) u(<V(f)>) with U = z^gamma,
/// V = z^{1+gamma}, u = xi is integrated directly from the densities,
/// independent of bracket_integrals.
UvReport check_uv_consistency(const GeneratorXi& xi, double gamma, std::span<const DensityObject> densities);

// ---------------------------------------------------------------------------
// Equality conditions of the FDPD

struct EqualityProbe {
  double c = 1.0;
  double D_value = 0.0;
  /// t psi(a) + (1-t) psi(b) - psi(t a + (1-t) b) with a = log<g^{1+gamma}>,
  /// b = log<f^{1+gamma}>, t = 1/(1+gamma).
  double jensen_gap = 0.0;
  bool psi_strictly_convex = false;
  /// D should vanish: c = 1 or psi affine on the segment.
  bool predicted_zero = false;
};

/// Sets g = c^{1/(1+gamma)} f, so g^{1+gamma} = c f^{1+gamma}. Throws
/// DomainError for c <= 0.
EqualityProbe equality_condition_probe(const GeneratorPhi& phi, double gamma, const DensityObject& f, double c);

// ---------------------------------------------------------------------------
// Strict propriety of the xi-Hölder score

struct ProprietyReport {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  /// min over trials of S(g, f) - S(g, g).
  double worst_margin = 0.0;
  std::optional<BracketTriple> worst;
  bool proper = true;
  bool psi_certificate_valid = false;
};

/// Searches random pairs (including g = c f with c up to 1e3) for
/// S(g, f) < S(g, g) - tolerance.
ProprietyReport check_xi_holder_propriety(const GeneratorEta& eta, const GeneratorXi& xi, std::size_t trials,
                                          std::uint64_t seed, double tolerance = 1e-10);

}  // namespace divkit

#pragma once

#include <optional>
#include <string>
#include <variant>

#include "divkit/function_space.hpp"
#include "divkit/generators.hpp"

namespace divkit {

// Every score and divergence is assembled from a BracketTriple, so discrete,
// grid and Gaussian inputs share one formula per family.

/// S = eta(X/Y) Y for gamma > 0; -<g log f> + <f> for gamma = 0.
double holder_score(const BracketTriple& b, const GeneratorEta& eta);
/// D = eta(X/Y) Y + Z for gamma > 0; <g log(g/f)> - <g> + <f> for gamma = 0.
double holder_divergence(const BracketTriple& b, const GeneratorEta& eta);

/// gamma phi(Y) - (1+gamma) phi(X); for gamma = 0, -phi'(<g>) <g log f> + phi(<f>).
/// The gamma = 0 form is a number but not a composite scoring rule unless
/// phi' is constant.
double fdp_score(const BracketTriple& b, const GeneratorPhi& phi);
/// (1/gamma) phi(Z) - ((1+gamma)/gamma) phi(X) + phi(Y); for gamma = 0,
/// phi'(<g>) <g log(g/f)> - phi(<g>) + phi(<f>).
double fdp_divergence(const BracketTriple& b, const GeneratorPhi& phi);

/// JHHB score -((1+gamma)/zeta) X^zeta + (gamma/zeta) Y^zeta + 1/zeta, or
/// -(1+gamma) log X + gamma log Y at zeta = 0. Requires gamma > 0.
double jhhb_score(const BracketTriple& b, double zeta);
/// The four JHHB branches, selected by (gamma > 0 | gamma = 0) x (zeta > 0 | zeta = 0).
double jhhb_divergence(const BracketTriple& b, double zeta);

/// eta(xi(X)/xi(Y)) xi(Y). Requires gamma > 0 and xi(Y) > 0.
double xi_holder_score(const BracketTriple& b, const GeneratorEta& eta, const GeneratorXi& xi);
/// eta(xi(X)/xi(Y)) xi(Y) + xi(Z).
double xi_holder_divergence(const BracketTriple& b, const GeneratorEta& eta, const GeneratorXi& xi);

// ---------------------------------------------------------------------------
// Equivalence transforms between scores

struct SignedPowerTau {
  double zeta;
};
struct NegExpNegTau {};
struct LogTau {};

/// Strictly increasing maps tau with S' = tau(S):
///   signed power: (sign(s)|s|^zeta - 1)/zeta, zeta > 0
///   neg-exp-neg:  -exp(-s)
///   log:          log s (s > 0), the zeta -> 0 limit of the signed power
using Tau = std::variant<SignedPowerTau, NegExpNegTau, LogTau>;

double equivalent_transform(double s, const Tau& tau);

// ---------------------------------------------------------------------------
// Family dispatch

struct HolderFamily {
  /// Unused in the gamma = 0 branch.
  std::optional<GeneratorEta> eta;
};
struct FdpdFamily {
  GeneratorPhi phi;
};
struct JhhbFamily {
  double zeta = 0.0;
};
struct XiHolderFamily {
  GeneratorEta eta;
  GeneratorXi xi;
};

using Family = std::variant<HolderFamily, FdpdFamily, JhhbFamily, XiHolderFamily>;

/// A validated (family, gamma) pair. Construction runs the generator
/// certificates and throws GeneratorError naming the violated condition.
class DivergenceSpec {
 public:
  DivergenceSpec(Family family, double gamma);

  static DivergenceSpec holder(GeneratorEta eta);
  /// gamma = 0 Hölder (the KL / log-score branch).
  static DivergenceSpec holder_kl();
  static DivergenceSpec fdpd(GeneratorPhi phi, double gamma);
  static DivergenceSpec jhhb(double zeta, double gamma);
  static DivergenceSpec xi_holder(GeneratorEta eta, GeneratorXi xi);

  const Family& family() const { return family_; }
  double gamma() const { return gamma_; }
  /// Short label such as "holder:dpd" or "fdpd:power:0.5".
  std::string label() const;
  /// zeta of the corresponding JHHB member when the spec is one, else empty.
  std::optional<double> jhhb_zeta() const;

 private:
  Family family_;
  double gamma_;
};

double score(const BracketTriple& b, const DivergenceSpec& spec);
double divergence(const BracketTriple& b, const DivergenceSpec& spec);

}  // namespace divkit

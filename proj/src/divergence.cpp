#include "divkit/divergence.hpp"

#include <cmath>
#include <sstream>

#include "divkit/errors.hpp"

namespace divkit {
namespace {

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void require_positive_gamma(const BracketTriple& b, const char* what) {
  if (!(b.gamma > 0.0)) throw DomainError(std::string(what) + " requires gamma > 0");
}

void require_matching_gamma(const BracketTriple& b, const GeneratorEta& eta) {
  if (eta.gamma() != b.gamma) {
    throw DomainError("eta is bound to gamma=" + fmt(eta.gamma()) + " but brackets use gamma=" + fmt(b.gamma));
  }
}

double require_z(const BracketTriple& b) {
  if (!b.Z) throw DomainError("divergence requires <g^{1+gamma}>, which is unavailable for these brackets");
  return *b.Z;
}

const LogBrackets& require_log_terms(const BracketTriple& b) {
  if (!b.log_terms) throw DomainError("gamma = 0 branch requires the log bracket terms");
  return *b.log_terms;
}

double require_kl(const LogBrackets& lb) {
  if (!lb.kl) throw DomainError("gamma = 0 divergence requires <g log(g/f)>, unavailable for these brackets");
  return *lb.kl;
}

double holder_kl_score(const BracketTriple& b) {
  const auto& lb = require_log_terms(b);
  return -lb.g_log_f + lb.mass_f;
}

double holder_kl_divergence(const BracketTriple& b) {
  const auto& lb = require_log_terms(b);
  return require_kl(lb) - lb.mass_g + lb.mass_f;
}

double checked(double value, const char* what) {
  if (std::isnan(value)) throw DomainError(std::string(what) + ": generator undefined at a bracket value");
  return value;
}

}  // namespace

// ---------------------------------------------------------------------------

double holder_score(const BracketTriple& b, const GeneratorEta& eta) {
  if (b.gamma == 0.0) return holder_kl_score(b);
  require_matching_gamma(b, eta);
  if (!(b.Y > 0.0)) throw DegenerateModelError("holder score: <f^{1+gamma}> = 0");
  return checked(eta(b.X / b.Y) * b.Y, "holder score");
}

double holder_divergence(const BracketTriple& b, const GeneratorEta& eta) {
  if (b.gamma == 0.0) return holder_kl_divergence(b);
  return holder_score(b, eta) + require_z(b);
}

double fdp_score(const BracketTriple& b, const GeneratorPhi& phi) {
  const double g = b.gamma;
  if (g == 0.0) {
    const auto& lb = require_log_terms(b);
    return checked(-phi.derivative(lb.mass_g) * lb.g_log_f + phi(lb.mass_f), "fdp score");
  }
  return checked(g * phi(b.Y) - (1.0 + g) * phi(b.X), "fdp score");
}

double fdp_divergence(const BracketTriple& b, const GeneratorPhi& phi) {
  const double g = b.gamma;
  if (g == 0.0) {
    const auto& lb = require_log_terms(b);
    return checked(phi.derivative(lb.mass_g) * require_kl(lb) - phi(lb.mass_g) + phi(lb.mass_f), "fdp divergence");
  }
  const double z = require_z(b);
  return checked(phi(z) / g - (1.0 + g) / g * phi(b.X) + phi(b.Y), "fdp divergence");
}

double jhhb_score(const BracketTriple& b, double zeta) {
  if (!(zeta >= 0.0)) throw DomainError("jhhb requires zeta >= 0, got " + fmt(zeta));
  const double g = b.gamma;
  if (g == 0.0) {
    const auto& lb = require_log_terms(b);
    if (zeta == 0.0) return -lb.g_log_f / lb.mass_g + std::log(lb.mass_f);
    return -std::pow(lb.mass_g, zeta - 1.0) * lb.g_log_f + (std::pow(lb.mass_f, zeta) - 1.0) / zeta;
  }
  if (zeta == 0.0) return -(1.0 + g) * std::log(b.X) + g * std::log(b.Y);
  return -(1.0 + g) / zeta * std::pow(b.X, zeta) + g / zeta * std::pow(b.Y, zeta) + 1.0 / zeta;
}

double jhhb_divergence(const BracketTriple& b, double zeta) {
  if (!(zeta >= 0.0)) throw DomainError("jhhb requires zeta >= 0, got " + fmt(zeta));
  const double g = b.gamma;
  if (g == 0.0) {
    const auto& lb = require_log_terms(b);
    const double kl = require_kl(lb);
    if (zeta == 0.0) return kl / lb.mass_g - std::log(lb.mass_g) + std::log(lb.mass_f);
    return std::pow(lb.mass_g, zeta - 1.0) * kl - std::pow(lb.mass_g, zeta) / zeta + std::pow(lb.mass_f, zeta) / zeta;
  }
  const double z = require_z(b);
  if (zeta == 0.0) return std::log(z) / g - (1.0 + g) / g * std::log(b.X) + std::log(b.Y);
  return std::pow(z, zeta) / (g * zeta) - (1.0 + g) / (g * zeta) * std::pow(b.X, zeta) + std::pow(b.Y, zeta) / zeta;
}

double xi_holder_score(const BracketTriple& b, const GeneratorEta& eta, const GeneratorXi& xi) {
  require_positive_gamma(b, "xi-holder score");
  require_matching_gamma(b, eta);
  const double xy = xi(b.Y);
  if (!(xy > 0.0)) throw DegenerateModelError("xi-holder score: xi(<f^{1+gamma}>) = 0");
  return checked(eta(xi(b.X) / xy) * xy, "xi-holder score");
}

double xi_holder_divergence(const BracketTriple& b, const GeneratorEta& eta, const GeneratorXi& xi) {
  const double s = xi_holder_score(b, eta, xi);
  return s + xi(require_z(b));
}

// ---------------------------------------------------------------------------

double equivalent_transform(double s, const Tau& tau) {
  if (const auto* sp = std::get_if<SignedPowerTau>(&tau)) {
    if (!(sp->zeta > 0.0)) throw DomainError("signed_power transform requires zeta > 0");
    return (signed_pow(s, sp->zeta) - 1.0) / sp->zeta;
  }
  if (std::holds_alternative<NegExpNegTau>(tau)) return -std::exp(-s);
  if (s < 0.0 || std::isnan(s)) throw DomainError("log transform requires a nonnegative argument");
  return std::log(s);
}

// ---------------------------------------------------------------------------

namespace {

void certify_eta(const GeneratorEta& eta, double gamma) {
  if (eta.gamma() != gamma) {
    throw GeneratorError("eta '" + eta.name() + "' is bound to gamma=" + fmt(eta.gamma()) + ", spec uses gamma=" +
                         fmt(gamma));
  }
  const auto cert = validate_eta(eta, gamma);
  if (!cert.valid) throw GeneratorError("invalid eta '" + eta.name() + "': " + cert.reason);
}

}  // namespace

DivergenceSpec::DivergenceSpec(Family family, double gamma) : family_(std::move(family)), gamma_(gamma) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw DomainError("gamma must be finite and >= 0");

  if (const auto* h = std::get_if<HolderFamily>(&family_)) {
    if (gamma > 0.0) {
      if (!h->eta) throw GeneratorError("holder family with gamma > 0 requires eta");
      certify_eta(*h->eta, gamma);
    }
  } else if (const auto* f = std::get_if<FdpdFamily>(&family_)) {
    const auto cert = validate_phi(f->phi);
    if (!cert.valid()) throw GeneratorError("invalid phi '" + f->phi.name() + "': " + cert.describe());
  } else if (const auto* j = std::get_if<JhhbFamily>(&family_)) {
    if (!(j->zeta >= 0.0) || !std::isfinite(j->zeta)) throw DomainError("jhhb requires zeta >= 0");
  } else {
    const auto& x = std::get<XiHolderFamily>(family_);
    if (!(gamma > 0.0)) throw DomainError("xi-holder requires gamma > 0");
    certify_eta(x.eta, gamma);
    const auto cert = validate_xi(x.xi);
    if (!cert.valid()) throw GeneratorError("invalid xi '" + x.xi.name() + "': " + cert.describe());
  }
}

DivergenceSpec DivergenceSpec::holder(GeneratorEta eta) {
  const double gamma = eta.gamma();
  return DivergenceSpec(HolderFamily{std::move(eta)}, gamma);
}

DivergenceSpec DivergenceSpec::holder_kl() { return DivergenceSpec(HolderFamily{std::nullopt}, 0.0); }

DivergenceSpec DivergenceSpec::fdpd(GeneratorPhi phi, double gamma) {
  return DivergenceSpec(FdpdFamily{std::move(phi)}, gamma);
}

DivergenceSpec DivergenceSpec::jhhb(double zeta, double gamma) { return DivergenceSpec(JhhbFamily{zeta}, gamma); }

DivergenceSpec DivergenceSpec::xi_holder(GeneratorEta eta, GeneratorXi xi) {
  const double gamma = eta.gamma();
  return DivergenceSpec(XiHolderFamily{std::move(eta), std::move(xi)}, gamma);
}

std::string DivergenceSpec::label() const {
  if (const auto* h = std::get_if<HolderFamily>(&family_)) {
    return gamma_ == 0.0 || !h->eta ? "holder:kl" : "holder:" + h->eta->name();
  }
  if (const auto* f = std::get_if<FdpdFamily>(&family_)) return "fdpd:" + f->phi.name();
  if (const auto* j = std::get_if<JhhbFamily>(&family_)) return "jhhb:" + fmt(j->zeta);
  const auto& x = std::get<XiHolderFamily>(family_);
  return "xi_holder:" + x.eta.name() + "/" + x.xi.name();
}

std::optional<double> DivergenceSpec::jhhb_zeta() const {
  auto from_eta = [this](const GeneratorEta& eta) -> std::optional<double> {
    switch (eta.kind()) {
      case EtaKind::dpd:
        return 1.0;
      case EtaKind::ps:
        return 0.0;
      case EtaKind::jhhb:
        return eta.parameter();
      case EtaKind::bhd:
        if (eta.parameter() == 1.0 + gamma_) return 1.0;
        if (eta.parameter() == 1.0) return 0.0;
        return std::nullopt;
      case EtaKind::custom:
        return std::nullopt;
    }
    return std::nullopt;
  };

  if (const auto* h = std::get_if<HolderFamily>(&family_)) {
    if (gamma_ == 0.0) return 1.0;
    return from_eta(*h->eta);
  }
  if (const auto* f = std::get_if<FdpdFamily>(&family_)) {
    if (gamma_ == 0.0 && !f->phi.has_constant_derivative() && f->phi.kind() != PhiKind::log) return std::nullopt;
    return f->phi.affine_invariance_zeta();
  }
  if (const auto* j = std::get_if<JhhbFamily>(&family_)) return j->zeta;
  const auto& x = std::get<XiHolderFamily>(family_);
  if (x.xi.kind() == XiKind::identity) return from_eta(x.eta);
  return std::nullopt;
}

double score(const BracketTriple& b, const DivergenceSpec& spec) {
  if (b.gamma != spec.gamma()) throw DomainError("brackets and spec use different gamma");
  return std::visit(
      [&b](const auto& fam) -> double {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, HolderFamily>) {
          if (b.gamma == 0.0) return holder_kl_score(b);
          return holder_score(b, *fam.eta);
        } else if constexpr (std::is_same_v<T, FdpdFamily>) {
          return fdp_score(b, fam.phi);
        } else if constexpr (std::is_same_v<T, JhhbFamily>) {
          return jhhb_score(b, fam.zeta);
        } else {
          return xi_holder_score(b, fam.eta, fam.xi);
        }
      },
      spec.family());
}

double divergence(const BracketTriple& b, const DivergenceSpec& spec) {
  if (b.gamma != spec.gamma()) throw DomainError("brackets and spec use different gamma");
  return std::visit(
      [&b](const auto& fam) -> double {
        using T = std::decay_t<decltype(fam)>;
        if constexpr (std::is_same_v<T, HolderFamily>) {
          if (b.gamma == 0.0) return holder_kl_divergence(b);
          return holder_divergence(b, *fam.eta);
        } else if constexpr (std::is_same_v<T, FdpdFamily>) {
          return fdp_divergence(b, fam.phi);
        } else if constexpr (std::is_same_v<T, JhhbFamily>) {
          return jhhb_divergence(b, fam.zeta);
        } else {
          return xi_holder_divergence(b, fam.eta, fam.xi);
        }
      },
      spec.family());
}

}  // namespace divkit

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>

#include "divkit/errors.hpp"
#include "divkit/expression.hpp"
#include "divkit/generators.hpp"

using namespace divkit;

TEST(Eta, BuiltinPresetsPassCertificate) {
  for (double gamma : {0.1, 0.5, 1.0, 2.0}) {
    for (const auto& eta : {GeneratorEta::dpd(gamma), GeneratorEta::ps(gamma), GeneratorEta::bhd(1.5, gamma),
                            GeneratorEta::bhd(1.0 + gamma, gamma), GeneratorEta::jhhb(0.5, gamma)}) {
      const auto cert = validate_eta(eta, gamma);
      EXPECT_TRUE(cert.valid) << eta.name() << " gamma=" << gamma << ": " << cert.reason;
    }
  }
}

TEST(Eta, ScaledLowerBoundFailsNormalization) {
  const auto eta = GeneratorEta::custom([](double z) { return -2.0 * z * z; }, 1.0, "twice-ps");
  const auto cert = validate_eta(eta, 1.0);
  EXPECT_FALSE(cert.valid);
  EXPECT_EQ(cert.z_star, 1.0);
  EXPECT_NE(cert.reason.find("eta(1) != -1"), std::string::npos);
}

TEST(Eta, BelowLowerBoundIsReported) {
  // Normalized at 1 but below -z^2 for z > 1.
  const auto eta = GeneratorEta::custom([](double z) { return -z * z * z; }, 1.0, "cubic");
  const auto cert = validate_eta(eta, 1.0);
  EXPECT_FALSE(cert.valid);
  EXPECT_GT(cert.z_star, 1.0);
  EXPECT_LT(cert.gap, 0.0);
}

TEST(Eta, PsTouchesLowerBoundEverywhere) {
  const auto eta = GeneratorEta::ps(0.7);
  for (double z : certificate_grid()) EXPECT_EQ(eta(z) + std::pow(z, 1.7), 0.0);
}

TEST(Eta, NonFiniteValueThrows) {
  const auto eta = GeneratorEta::custom([](double z) { return z == 0.0 ? NAN : -z * z; }, 1.0, "hole");
  EXPECT_THROW(validate_eta(eta, 1.0), GeneratorError);
}

TEST(JhhbEta, ZetaOneIsDpd) {
  const auto jhhb = jhhb_eta(1.0, 1.0);
  const auto dpd = GeneratorEta::dpd(1.0);
  for (double z : certificate_grid()) EXPECT_NEAR(jhhb(z), dpd(z), 1e-12 * std::max(1.0, z));
}

TEST(JhhbEta, ZetaZeroIsPs) {
  for (double gamma : {0.5, 2.0}) {
    const auto jhhb = jhhb_eta(0.0, gamma);
    for (double z : {0.0, 0.3, 1.0, 7.0}) EXPECT_DOUBLE_EQ(jhhb(z), -std::pow(z, 1.0 + gamma));
  }
}

TEST(JhhbEta, NormalizedAndAboveLowerBound) {
  for (double zeta : {0.25, 0.5, 1.0, 2.0}) {
    for (double gamma : {0.5, 1.0, 2.0}) {
      const auto eta = jhhb_eta(zeta, gamma);
      EXPECT_NEAR(eta(1.0), -1.0, 1e-12);
      EXPECT_TRUE(validate_eta(eta, gamma).valid) << zeta << " " << gamma;
    }
  }
}

TEST(JhhbEta, NegativeZetaThrows) { EXPECT_THROW(jhhb_eta(-0.5, 1.0), DomainError); }

TEST(Bhd, EndpointsMatchDpdAndPs) {
  for (double gamma : {0.5, 1.0, 2.0}) {
    const auto bhd_dpd = GeneratorEta::bhd(1.0 + gamma, gamma);
    const auto bhd_ps = GeneratorEta::bhd(1.0, gamma);
    const auto dpd = GeneratorEta::dpd(gamma);
    const auto ps = GeneratorEta::ps(gamma);
    for (double z : {0.0, 0.1, 0.5, 1.0, 3.0, 40.0}) {
      EXPECT_NEAR(bhd_dpd(z), dpd(z), 1e-12 * std::max(1.0, std::fabs(dpd(z))));
      EXPECT_NEAR(bhd_ps(z), ps(z), 1e-12 * std::max(1.0, std::fabs(ps(z))));
    }
  }
}

TEST(Psi, LogIsAffineAndValid) {
  const auto cert = validate_phi(GeneratorPhi::log());
  EXPECT_TRUE(cert.valid()) << cert.describe();
}

TEST(Psi, IdentityIsValid) { EXPECT_TRUE(validate_phi(GeneratorPhi::identity()).valid()); }

TEST(Psi, DecreasingPhiFailsMonotonicity) {
  const auto phi = GeneratorPhi::custom([](double z) { return -z; }, "negated");
  EXPECT_EQ(validate_phi(phi).violation, PsiViolation::monotonicity);
}

TEST(Psi, ConcavePsiFailsConvexity) {
  // psi(t) = log(1 + log(1 + e^t)) grows like log t.
  const auto phi = GeneratorPhi::custom([](double z) { return std::log(std::log1p(z) + 1.0); }, "loglog");
  EXPECT_EQ(validate_phi(phi).violation, PsiViolation::convexity);
}

TEST(Psi, BuiltinsPass) {
  for (const auto& phi : {GeneratorPhi::power(0.5), GeneratorPhi::power(1.0), GeneratorPhi::power(2.0),
                          GeneratorPhi::bdpd(1.0, 1.0), GeneratorPhi::bdpd(0.5, 2.0), GeneratorPhi::exp_minus_one()}) {
    const auto cert = validate_phi(phi);
    EXPECT_TRUE(cert.valid()) << phi.name() << ": " << cert.describe();
  }
  for (const auto& xi : {GeneratorXi::identity(), GeneratorXi::power(0.5), GeneratorXi::power(3.0)}) {
    EXPECT_TRUE(validate_xi(xi).valid()) << xi.name();
  }
}

TEST(Psi, Log1pXiIsRejected) {
  const auto xi = GeneratorXi::custom([](double z) { return std::log1p(z); }, "log1p");
  EXPECT_FALSE(validate_xi(xi).valid());
}

TEST(Phi, DerivativesAndInvarianceClass) {
  EXPECT_DOUBLE_EQ(GeneratorPhi::log().derivative(2.0), 0.5);
  EXPECT_DOUBLE_EQ(GeneratorPhi::power(2.0).derivative(3.0), 6.0);
  EXPECT_TRUE(GeneratorPhi::identity().has_constant_derivative());
  EXPECT_FALSE(GeneratorPhi::log().has_constant_derivative());
  EXPECT_EQ(GeneratorPhi::log().affine_invariance_zeta(), 0.0);
  EXPECT_EQ(GeneratorPhi::power(0.5).affine_invariance_zeta(), 0.5);
  EXPECT_EQ(GeneratorPhi::bdpd(0.0, 2.0).affine_invariance_zeta(), 0.0);
  EXPECT_FALSE(GeneratorPhi::bdpd(1.0, 1.0).affine_invariance_zeta());
  EXPECT_FALSE(GeneratorPhi::exp_minus_one().affine_invariance_zeta());
}

TEST(Phi, CustomDerivativeByFiniteDifference) {
  const auto phi = GeneratorPhi::custom([](double z) { return z * z * z; }, "cube");
  EXPECT_NEAR(phi.derivative(2.0), 12.0, 1e-6);
  EXPECT_NEAR(phi.derivative(0.0), 0.0, 1e-6);
}

TEST(Table, InterpolatesAndExtrapolates) {
  const Table t({0.0, 1.0, 2.0}, {0.0, 1.0, 4.0});
  EXPECT_DOUBLE_EQ(t(0.5), 0.5);
  EXPECT_DOUBLE_EQ(t(1.5), 2.5);
  EXPECT_DOUBLE_EQ(t(3.0), 7.0);
  EXPECT_DOUBLE_EQ(t(-1.0), -1.0);
}

TEST(Table, ReadsCsv) {
  const std::string path = testing::TempDir() + "divkit_table.csv";
  {
    std::ofstream out(path);
    out << "z,value\n0,1\n1,-1\n2,-3\n";
  }
  const Table t = read_table_csv(path);
  EXPECT_DOUBLE_EQ(t(1.0), -1.0);
  EXPECT_DOUBLE_EQ(t(0.5), 0.0);
}

TEST(Expression, EvaluatesGrammar) {
  EXPECT_DOUBLE_EQ(compile_expression("1 - 2*z")(3.0), -5.0);
  EXPECT_DOUBLE_EQ(compile_expression("-z^2")(3.0), -9.0);
  EXPECT_DOUBLE_EQ(compile_expression("2^3^2")(0.0), 512.0);
  EXPECT_NEAR(compile_expression("log(exp(z)) + sqrt(4) + abs(-1) + sign(-3)")(1.5), 3.5, 1e-15);
  EXPECT_NEAR(compile_expression("log1p(z) - expm1(z)")(0.0), 0.0, 1e-15);
  EXPECT_NEAR(compile_expression("pi + e")(0.0), M_PI + M_E, 1e-15);
}

TEST(Expression, MalformedInputThrows) {
  EXPECT_THROW(compile_expression("1 +"), FormatError);
  EXPECT_THROW(compile_expression("foo(z)"), FormatError);
  EXPECT_THROW(compile_expression("(z"), FormatError);
  EXPECT_THROW(compile_expression("z z"), FormatError);
}

TEST(CertificateGrid, Shape) {
  const auto& grid = certificate_grid();
  EXPECT_EQ(grid.front(), 0.0);
  EXPECT_NEAR(grid[1], 1e-6, 1e-18);
  EXPECT_NEAR(grid.back(), 1e6, 1e-6);
  EXPECT_TRUE(std::is_sorted(grid.begin(), grid.end()));
  EXPECT_NE(std::find(grid.begin(), grid.end(), 1.0), grid.end());
  EXPECT_GE(grid.size(), 10001u);
}

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "divkit/errors.hpp"
#include "divkit/sampling.hpp"
#include "divkit/theorem_lab.hpp"

using namespace divkit;

TEST(Affine, DpdDoublesUnderScaleTwo) {
  const auto g = DensityObject::gaussian(0.0, 1.0);
  const auto f = DensityObject::gaussian(1.0, 1.0);
  const auto inst = affine_instance(GeneratorPhi::power(1.0), 1.0, g, f, 2.0, 0.0, {.closed_form = true});
  const double oracle = (1.0 - std::exp(-0.25)) / std::sqrt(std::numbers::pi);
  EXPECT_NEAR(inst.divergence_original, oracle, 1e-15);
  EXPECT_NEAR(inst.divergence_transformed, 2.0 * oracle, 1e-14);
  EXPECT_DOUBLE_EQ(inst.predicted_scale, 0.5);
  EXPECT_NEAR(inst.ratio, 1.0, 1e-13);
}

TEST(Affine, QuadratureMatchesClosedForm) {
  const auto g = DensityObject::gaussian(0.0, 1.0);
  const auto f = DensityObject::gaussian(1.0, 1.0);
  const auto quad = affine_instance(GeneratorPhi::power(1.0), 1.0, g, f, 2.0, 0.0);
  EXPECT_NEAR(quad.divergence_original, (1.0 - std::exp(-0.25)) / std::sqrt(std::numbers::pi), 1e-9);
  EXPECT_NEAR(quad.ratio, 1.0, 1e-5);
}

TEST(Affine, LogIsScaleFree) {
  const auto g = DensityObject::gaussian(0.3, 0.8, 1.5);
  const auto f = DensityObject::gaussian(-0.4, 1.7);
  const auto inst = affine_instance(GeneratorPhi::log(), 1.0, g, f, 3.0, -1.0);
  EXPECT_DOUBLE_EQ(inst.predicted_scale, 1.0);
  EXPECT_NEAR(inst.ratio, 1.0, 1e-10);
}

TEST(Affine, PassDirection) {
  for (const auto& phi : {GeneratorPhi::power(0.5), GeneratorPhi::power(1.0), GeneratorPhi::power(2.0),
                          GeneratorPhi::log()}) {
    for (double gamma : {0.5, 1.0}) {
      const auto r = check_affine_invariance(phi, gamma, 100, 17);
      EXPECT_TRUE(r.pass) << phi.name() << " " << gamma << " " << r.max_relative_violation;
      EXPECT_LE(r.max_relative_violation, 1e-5);
      EXPECT_EQ(r.seed, 17u);
    }
  }
}

TEST(Affine, GammaZeroUsesClosedForm) {
  const auto r = check_affine_invariance(GeneratorPhi::log(), 0.0, 50, 5);
  EXPECT_TRUE(r.pass);
  EXPECT_LE(r.max_relative_violation, 1e-10);
}

TEST(Affine, FailDirection) {
  const auto r = check_affine_invariance(GeneratorPhi::exp_minus_one(), 1.0, 100, 17);
  EXPECT_FALSE(r.pass);
  EXPECT_GE(r.max_relative_violation, 1e-2);
  EXPECT_FALSE(r.zeta);
}

TEST(Affine, DeterministicAcrossThreadCounts) {
  setenv("DIVKIT_THREADS", "1", 1);
  const auto a = check_affine_invariance(GeneratorPhi::power(0.5), 1.0, 20, 9);
  setenv("DIVKIT_THREADS", "4", 1);
  const auto b = check_affine_invariance(GeneratorPhi::power(0.5), 1.0, 20, 9);
  unsetenv("DIVKIT_THREADS");
  EXPECT_EQ(a.max_relative_violation, b.max_relative_violation);
  EXPECT_EQ(a.worst_sigma, b.worst_sigma);
}

TEST(Representation, HandBracket) {
  const auto b = make_brackets(1.0, 0.5, 0.68, 0.5);
  EXPECT_LE(jhhb_representation_error(b, 0.5), 1e-12);
  EXPECT_LE(jhhb_representation_error(b, 1.0), 1e-12);
  EXPECT_LE(jhhb_representation_error(b, 0.0), 1e-12);
}

TEST(Representation, RandomBrackets) {
  for (double zeta : {0.0, 0.25, 0.5, 1.0, 2.0}) {
    for (double gamma : {0.5, 1.0, 2.0}) {
      const auto r = verify_jhhb_holder_representation(zeta, gamma, 1000, 7);
      EXPECT_TRUE(r.pass) << zeta << " " << gamma << " " << r.max_abs_error;
    }
  }
  EXPECT_LE(verify_jhhb_holder_representation(1.0, 1.0, 1000, 7).max_abs_error, 1e-12);
}

TEST(LowerBound, HandValueAndEquality) {
  const auto b = make_brackets(1.0, 0.5, 0.68, 0.5);
  const auto gap = fdps_lower_bound_gap(b, GeneratorPhi::identity());
  ASSERT_TRUE(gap);
  EXPECT_NEAR(*gap, -0.32 + 0.25 / 0.68, 1e-15);
  const auto same = make_brackets(1.0, 0.68, 0.68, 0.68);
  EXPECT_NEAR(*fdps_lower_bound_gap(same, GeneratorPhi::power(0.5)), 0.0, 1e-15);
  EXPECT_FALSE(fdps_lower_bound_gap(b, GeneratorPhi::log()));
}

TEST(LowerBound, HoldsOnRandomBrackets) {
  for (const auto& phi : {GeneratorPhi::identity(), GeneratorPhi::power(0.5), GeneratorPhi::power(2.0)}) {
    const auto r = check_fdps_lower_bound(phi, 1.0, 10000, 5);
    EXPECT_TRUE(r.holds) << phi.name();
    EXPECT_GE(r.worst_gap, -1e-12);
    EXPECT_EQ(r.trials, 10000u);
    EXPECT_TRUE(r.bound_is_fdps) << r.certificate;
  }
}

TEST(LowerBound, FdpsFlagFollowsLogConvexity) {
  const auto bdpd = GeneratorPhi::bdpd(1.0, 1.0);
  const auto r = check_fdps_lower_bound(bdpd, 1.0, 500, 5);
  EXPECT_TRUE(r.holds);
  EXPECT_FALSE(r.bound_is_fdps);
  EXPECT_EQ(lower_bound_certificate(bdpd).violation, PsiViolation::convexity);
  EXPECT_EQ(lower_bound_certificate(GeneratorPhi::log()).violation, PsiViolation::range);
}

TEST(Uv, DiscreteDensities) {
  std::vector<DensityObject> densities;
  for (std::uint64_t i = 0; i < 12; ++i) {
    auto rng = trial_rng(8, i);
    densities.push_back(random_discrete_pair(rng).g);
  }
  for (const auto& xi : {GeneratorXi::identity(), GeneratorXi::power(0.5), GeneratorXi::power(2.0)}) {
    const auto r = check_uv_consistency(xi, 1.0, densities);
    EXPECT_TRUE(r.pass) << xi.name() << " " << r.max_abs_error;
    EXPECT_EQ(r.max_identity_error, 0.0);
    EXPECT_EQ(r.pairs, 144u);
  }
}

TEST(Uv, GaussianDensities) {
  const std::vector<DensityObject> densities = {DensityObject::gaussian(0, 1), DensityObject::gaussian(1, 0.7, 2.0)};
  const auto r = check_uv_consistency(GeneratorXi::power(0.5), 0.5, densities);
  EXPECT_TRUE(r.pass) << r.max_abs_error;
}

TEST(Equality, LogIsZeroIdentityIsPositive) {
  const auto f = DensityObject::discrete({0.8, 0.2});
  const auto log_probe = equality_condition_probe(GeneratorPhi::log(), 1.0, f, 2.0);
  EXPECT_LE(std::fabs(log_probe.D_value), 1e-10);
  EXPECT_FALSE(log_probe.psi_strictly_convex);
  EXPECT_TRUE(log_probe.predicted_zero);

  const auto id_probe = equality_condition_probe(GeneratorPhi::identity(), 1.0, f, 2.0);
  EXPECT_NEAR(id_probe.D_value, 0.68 * (3.0 - 2.0 * std::sqrt(2.0)), 1e-12);
  EXPECT_NEAR(id_probe.D_value, 0.1166, 1e-4);
  EXPECT_TRUE(id_probe.psi_strictly_convex);
  EXPECT_FALSE(id_probe.predicted_zero);
}

TEST(Equality, UnitFactorIsAlwaysZero) {
  const auto f = DensityObject::discrete({0.1, 0.4, 0.5});
  for (const auto& phi : {GeneratorPhi::identity(), GeneratorPhi::power(2.0), GeneratorPhi::bdpd(1.0, 1.0)}) {
    const auto probe = equality_condition_probe(phi, 0.5, f, 1.0);
    EXPECT_NEAR(probe.D_value, 0.0, 1e-14);
    EXPECT_TRUE(probe.predicted_zero);
  }
}

TEST(Equality, PositiveForStrictlyConvexPsi) {
  const auto f = DensityObject::discrete({0.3, 0.7});
  for (double gamma : {0.5, 1.0, 2.0}) {
    for (const auto& phi : {GeneratorPhi::identity(), GeneratorPhi::power(2.0), GeneratorPhi::exp_minus_one()}) {
      EXPECT_GT(equality_condition_probe(phi, gamma, f, 2.0).D_value, 1e-3) << phi.name();
    }
  }
  EXPECT_THROW(equality_condition_probe(GeneratorPhi::log(), 1.0, f, 0.0), DomainError);
}

TEST(Propriety, ValidXiIsProper) {
  const auto r = check_xi_holder_propriety(GeneratorEta::ps(1.0), GeneratorXi::power(0.5), 2000, 3);
  EXPECT_TRUE(r.proper) << r.worst_margin;
  EXPECT_TRUE(r.psi_certificate_valid);
}

TEST(Propriety, ConcavePsiIsCaught) {
  const auto log1p = GeneratorXi::custom([](double z) { return std::log1p(z); }, "log1p");
  const auto r = check_xi_holder_propriety(GeneratorEta::ps(1.0), log1p, 2000, 3);
  EXPECT_FALSE(r.proper);
  EXPECT_LT(r.worst_margin, 0.0);
  EXPECT_FALSE(r.psi_certificate_valid);
}

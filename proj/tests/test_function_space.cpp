#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>

#include "divkit/errors.hpp"
#include "divkit/function_space.hpp"
#include "divkit/sampling.hpp"

using namespace divkit;

namespace {

constexpr double kPi = std::numbers::pi;

double normal_pdf(double x, double mu, double sigma) {
  const double u = (x - mu) / sigma;
  return std::exp(-0.5 * u * u) / (sigma * std::sqrt(2.0 * kPi));
}

// Independent quadrature oracle: composite Simpson on [-30, 30].
template <class F>
double simpson(F f, double lo = -30.0, double hi = 30.0, int n = 20000) {
  const double h = (hi - lo) / n;
  double s = f(lo) + f(hi);
  for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(lo + i * h);
  return s * h / 3.0;
}

}  // namespace

TEST(Factories, RejectInvalidInput) {
  EXPECT_THROW(DensityObject::discrete({0.0, 0.0}), DomainError);
  EXPECT_THROW(DensityObject::discrete({1.0, -0.1}), DomainError);
  EXPECT_THROW(DensityObject::grid(0.0, 0.0, {1.0, 1.0}), DomainError);
  EXPECT_THROW(DensityObject::gaussian(0.0, 0.0), DomainError);
  EXPECT_THROW(DensityObject::gaussian(0.0, 1.0, 0.0), DomainError);
}

TEST(Brackets, PointMass) {
  const auto d = DensityObject::discrete({1.0});
  const auto b = bracket_integrals(d, d, 1.0);
  EXPECT_EQ(b.X, 1.0);
  EXPECT_EQ(b.Y, 1.0);
  EXPECT_EQ(*b.Z, 1.0);
}

TEST(Brackets, DiscretePair) {
  const auto g = DensityObject::discrete({0.5, 0.5});
  const auto f = DensityObject::discrete({0.8, 0.2});
  const auto b = bracket_integrals(g, f, 1.0);
  EXPECT_NEAR(b.X, 0.5, 1e-15);
  EXPECT_NEAR(b.Y, 0.68, 1e-15);
  EXPECT_NEAR(*b.Z, 0.5, 1e-15);
}

TEST(Brackets, DiscreteUnionOfSupports) {
  const auto g = DensityObject::discrete({0.0, 1.0}, {0.5, 0.5});
  const auto f = DensityObject::discrete({1.0, 2.0}, {0.6, 0.4});
  const auto b = bracket_integrals(g, f, 2.0);
  EXPECT_NEAR(b.X, 0.5 * 0.36, 1e-15);
  EXPECT_NEAR(b.Y, 0.216 + 0.064, 1e-15);
  EXPECT_NEAR(*b.Z, 0.25, 1e-15);
}

TEST(Brackets, GammaZeroLogTerms) {
  const auto g = DensityObject::discrete({0.5, 0.5});
  const auto f = DensityObject::discrete({0.8, 0.2});
  const auto b = bracket_integrals(g, f, 0.0);
  ASSERT_TRUE(b.log_terms);
  const double kl = 0.5 * std::log(0.5 / 0.8) + 0.5 * std::log(0.5 / 0.2);
  EXPECT_NEAR(*b.log_terms->kl, kl, 1e-15);
  EXPECT_NEAR(b.log_terms->g_log_f, 0.5 * std::log(0.8) + 0.5 * std::log(0.2), 1e-15);
  EXPECT_DOUBLE_EQ(b.log_terms->mass_g, 1.0);
}

TEST(Brackets, GammaZeroSupportError) {
  const auto g = DensityObject::discrete({0.5, 0.5});
  const auto f = DensityObject::discrete({1.0, 0.0});
  EXPECT_THROW(bracket_integrals(g, f, 0.0), SupportError);
  // g = 0 where f = 0 is fine.
  EXPECT_NO_THROW(bracket_integrals(f, g, 0.0));
}

TEST(Brackets, GaussianClosedForm) {
  const auto g = DensityObject::gaussian(0.0, 1.0);
  const auto f = DensityObject::gaussian(1.0, 1.0);
  const auto b = bracket_integrals(g, f, 1.0);
  EXPECT_NEAR(b.X, std::exp(-0.25) / (2.0 * std::sqrt(kPi)), 1e-15);
  EXPECT_NEAR(b.Y, 1.0 / (2.0 * std::sqrt(kPi)), 1e-15);
  EXPECT_NEAR(*b.Z, 1.0 / (2.0 * std::sqrt(kPi)), 1e-15);
}

TEST(Brackets, GaussianClosedFormMatchesIndependentQuadrature) {
  const double m1 = 0.3, s1 = 0.7, a = 1.4, m2 = -0.5, s2 = 1.6, c = 0.6;
  const auto g = DensityObject::gaussian(m1, s1, a);
  const auto f = DensityObject::gaussian(m2, s2, c);
  for (double gamma : {0.5, 1.0, 2.0}) {
    const auto b = bracket_integrals(g, f, gamma);
    auto gx = [&](double x) { return a * normal_pdf(x, m1, s1); };
    auto fx = [&](double x) { return c * normal_pdf(x, m2, s2); };
    EXPECT_NEAR(b.X, simpson([&](double x) { return gx(x) * std::pow(fx(x), gamma); }), 1e-10);
    EXPECT_NEAR(b.Y, simpson([&](double x) { return std::pow(fx(x), 1.0 + gamma); }), 1e-10);
    EXPECT_NEAR(*b.Z, simpson([&](double x) { return std::pow(gx(x), 1.0 + gamma); }), 1e-10);
  }
  const auto b0 = bracket_integrals(g, f, 0.0);
  const double kl = simpson([&](double x) {
    const double gv = a * normal_pdf(x, m1, s1);
    return gv > 0 ? gv * std::log(gv / (c * normal_pdf(x, m2, s2))) : 0.0;
  });
  EXPECT_NEAR(*b0.log_terms->kl, kl, 1e-9);
}

TEST(Brackets, GaussianClosedFormMatchesGridQuadrature) {
  const auto g = DensityObject::gaussian(0.0, 1.0);
  const auto f = DensityObject::gaussian(1.0, 1.0);
  const GridSpec grid{-12.0, 24.0 / 4095.0, 4096};
  const auto gg = sample_on_grid(g, grid);
  const auto fg = sample_on_grid(f, grid);
  for (double gamma : {0.5, 1.0, 2.0}) {
    const auto exact = bracket_integrals(g, f, gamma);
    const auto quad = bracket_integrals(gg, fg, gamma);
    EXPECT_NEAR(quad.X / exact.X, 1.0, 1e-6);
    EXPECT_NEAR(quad.Y / exact.Y, 1.0, 1e-6);
    EXPECT_NEAR(*quad.Z / *exact.Z, 1.0, 1e-6);
  }
}

TEST(Brackets, MismatchedGridsThrow) {
  const auto a = DensityObject::grid(0.0, 0.1, {1.0, 2.0, 1.0});
  const auto b = DensityObject::grid(0.0, 0.2, {1.0, 2.0, 1.0});
  EXPECT_THROW(bracket_integrals(a, b, 1.0), RepresentationError);
  EXPECT_THROW(bracket_integrals(a, DensityObject::gaussian(0, 1), 1.0), RepresentationError);
}

TEST(Brackets, HolderInequalityOnRandomPairs) {
  for (double gamma : {0.5, 1.0, 2.0}) {
    for (std::uint64_t i = 0; i < 1000; ++i) {
      auto rng = trial_rng(11, i);
      const auto pair = random_discrete_pair(rng);
      const auto b = bracket_integrals(pair.g, pair.f, gamma);
      const double bound = std::pow(*b.Z, 1.0 / (1.0 + gamma)) * std::pow(b.Y, gamma / (1.0 + gamma));
      EXPECT_LE(b.X, bound + 1e-12);
    }
  }
}

TEST(Affine, IdentityTransform) {
  const auto f = DensityObject::gaussian(0.4, 1.3, 2.0);
  const auto t = affine_transform(f, 1.0, 0.0);
  EXPECT_DOUBLE_EQ(t.as_gaussian().mu, 0.4);
  EXPECT_DOUBLE_EQ(t.as_gaussian().sigma, 1.3);
  EXPECT_DOUBLE_EQ(t.as_gaussian().mass, 2.0);
}

TEST(Affine, GaussianChangeOfVariables) {
  const double m = 0.7, s = 1.2, sigma = -2.5, mu = 0.9;
  const auto f = DensityObject::gaussian(m, s, 1.5);
  const auto t = affine_transform(f, sigma, mu);
  for (double x : {-1.0, 0.0, 0.3, 2.0}) {
    EXPECT_NEAR(t.evaluate(x), std::fabs(sigma) * f.evaluate(sigma * x + mu), 1e-14);
  }
  EXPECT_DOUBLE_EQ(t.total_mass(), 1.5);
}

TEST(Affine, PowerIntegralScales) {
  const auto f = DensityObject::gaussian(0.0, 1.0);
  const GridSpec grid{-12.0, 24.0 / 4095.0, 4096};
  const auto fg = sample_on_grid(f, grid);
  const auto tg = affine_transform(fg, 2.0, 0.0);
  EXPECT_NEAR(tg.power_integral(1.0) / fg.power_integral(1.0), 2.0, 1e-12);
  EXPECT_NEAR(tg.total_mass(), fg.total_mass(), 1e-8);
}

TEST(Affine, GridNodesAreMappedExactly) {
  const auto f = DensityObject::grid(-1.0, 0.5, {0.0, 1.0, 3.0, 1.0, 0.0});
  const auto t = affine_transform(f, -2.0, 1.0);
  const auto& r = t.as_grid();
  ASSERT_EQ(r.values.size(), 5u);
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    EXPECT_NEAR(r.values[i], 2.0 * f.evaluate(-2.0 * r.x(i) + 1.0), 1e-14);
  }
  EXPECT_NEAR(t.total_mass(), f.total_mass(), 1e-14);
}

TEST(Affine, Errors) {
  EXPECT_THROW(affine_transform(DensityObject::gaussian(0, 1), 0.0, 0.0), DomainError);
  EXPECT_THROW(affine_transform(DensityObject::discrete({1.0}), 2.0, 0.0), RepresentationError);
}

TEST(Empirical, SingleSample) {
  const auto f = DensityObject::discrete({2.0}, {1.0});
  EXPECT_DOUBLE_EQ(empirical_brackets(std::vector<double>{2.0}, f, 1.0).X, 1.0);
}

TEST(Empirical, TwoSamplesAtMode) {
  const auto b = empirical_brackets(std::vector<double>{0.0, 0.0}, DensityObject::gaussian(0, 1), 1.0);
  EXPECT_NEAR(b.X, 1.0 / std::sqrt(2.0 * kPi), 1e-15);
  EXPECT_FALSE(b.Z);
}

TEST(Empirical, LawOfLargeNumbers) {
  std::mt19937_64 rng(2024);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> xs(100000);
  for (auto& x : xs) x = normal(rng);
  const auto f = DensityObject::gaussian(0, 1);
  const auto b = empirical_brackets(xs, f, 0.5);
  EXPECT_NEAR(b.X / f.power_integral(0.5), 1.0, 0.02);
}

TEST(Empirical, GammaZeroUsesLogDensity) {
  const std::vector<double> xs = {0.0, 40.0};
  const auto b = empirical_brackets(xs, DensityObject::gaussian(0, 1), 0.0);
  const double expected = -0.5 * std::log(2.0 * kPi) - 0.25 * 1600.0;
  EXPECT_NEAR(b.log_terms->g_log_f, expected, 1e-12);
  EXPECT_THROW(empirical_brackets(std::vector<double>{}, DensityObject::gaussian(0, 1), 1.0), DomainError);
}

TEST(Files, DensityRoundTrip) {
  const std::string dir = testing::TempDir();
  const auto grid = DensityObject::grid(-1.0 / 3.0, 0.1, {0.1, 1.0 / 7.0, 2.5, 0.0, 1e-300});
  const auto disc = DensityObject::discrete({0.1, 0.7, 0.2});
  const auto f = DensityObject::grid(-1.0 / 3.0, 0.1, {0.3, 0.2, 0.2, 0.1, 0.5});
  write_density_csv(grid, dir + "grid.csv");
  write_density_csv(disc, dir + "disc.csv");
  const auto grid2 = read_density_csv(dir + "grid.csv");
  const auto disc2 = read_density_csv(dir + "disc.csv");
  const auto b1 = bracket_integrals(grid, f, 1.0);
  const auto b2 = bracket_integrals(grid2, f, 1.0);
  EXPECT_NEAR(b1.X, b2.X, 1e-12);
  EXPECT_NEAR(*b1.Z, *b2.Z, 1e-12);
  EXPECT_EQ(disc2.as_discrete().masses, disc.as_discrete().masses);
}

TEST(Files, SamplesRoundTrip) {
  const std::string path = testing::TempDir() + "samples.csv";
  const std::vector<double> xs = {0.1, -3.25, 1.0 / 3.0};
  write_samples_csv(xs, path);
  EXPECT_EQ(read_samples_csv(path), xs);
}

TEST(Files, MalformedInputs) {
  const std::string dir = testing::TempDir();
  EXPECT_THROW(read_density_csv(dir + "missing.csv"), FormatError);
  {
    std::ofstream out(dir + "uneven.csv");
    out << "x,value\n0,1\n0.1,1\n0.3,1\n";
  }
  EXPECT_THROW(read_density_csv(dir + "uneven.csv"), FormatError);
  {
    std::ofstream out(dir + "bad.csv");
    out << "index,mass\n0,abc\n";
  }
  EXPECT_THROW(read_density_csv(dir + "bad.csv"), FormatError);
}

#include <cmath>
#include <numbers>
#include <vector>

#include <gtest/gtest.h>

#include "cmc/catalog.hpp"
#include "cmc/errors.hpp"
#include "cmc/geometry.hpp"
#include "cmc/maxprinciple.hpp"

using namespace cmc;

namespace {

constexpr double kPi = std::numbers::pi;

OYWitness constant_sequence(const ChartPoint& p, double u_star, int K, OYMode mode) {
  OYWitness w;
  w.points.assign(K, p);
  w.sup_estimate = u_star;
  w.mode = mode;
  return w;
}

ImmersionChart flat_plane() {
  return ImmersionChart(AmbientSpace(0, 2), {{-1.0, 1.0, false}, {-1.0, 1.0, false}},
                        [](std::span<const Jet2> u) { return std::vector<Jet2>{u[0], u[1], u[0] * 0.0}; });
}

}  // namespace

TEST(OmoriYau, UnduloidMaximumSatisfiesFullConditions) {
  // |Phi|^2 = 2(H^2 - K) for surfaces in R^3, largest where K = -8: 2(1 + 8) = 18.
  const ImmersionChart chart = build_chart(Unduloid{1.0, 0.5});
  const ChartPoint p{3.0 * kPi / 4.0, 0.0};
  const auto checks = verify_oy_points(chart, ScalarField::phi_norm2(), constant_sequence(p, 18.0, 10, OYMode::Full),
                                       OYMode::Full);
  ASSERT_EQ(checks.size(), 10u);
  for (const auto& c : checks) {
    EXPECT_NEAR(c.record.value, 18.0, 1e-9);
    EXPECT_TRUE(c.value_ok);
    EXPECT_TRUE(c.gradient_ok);
    EXPECT_TRUE(c.laplacian_ok);
    EXPECT_TRUE(c.passed);
    EXPECT_LE(c.record.laplacian, 0.0);
  }
}

TEST(OmoriYau, MisdeclaredSupremumFailsValueCondition) {
  const ImmersionChart chart = build_chart(Unduloid{1.0, 0.5});
  const auto checks = verify_oy_points(chart, ScalarField::phi_norm2(),
                                       constant_sequence({3.0 * kPi / 4.0, 0.0}, 19.0, 10, OYMode::Full),
                                       OYMode::Full);
  for (const auto& c : checks) {
    EXPECT_FALSE(c.value_ok);
    EXPECT_FALSE(c.passed);
  }
}

TEST(OmoriYau, ProductModelsHoldTrivially) {
  for (const auto& m : default_parameter_grid("clifford")) {
    const ImmersionChart chart = build_chart(m);
    const ChartPoint p = sample_grid(chart, 3).front();
    const double u = shape_data_at(chart, p).phi_norm2;
    for (const auto& c : verify_oy_points(chart, ScalarField::phi_norm2(), constant_sequence(p, u, 5, OYMode::Full),
                                          OYMode::Full)) {
      EXPECT_TRUE(c.passed) << format_model_spec(m);
    }
  }
}

TEST(OmoriYau, StencilOutsideDomainIsReported) {
  const ImmersionChart chart = flat_plane();
  EXPECT_THROW(verify_oy_points(chart, ScalarField::constant(0.0), constant_sequence({0.9999, 0.0}, 0.0, 1, OYMode::Weak),
                                OYMode::Weak),
               DomainExceeded);
}

TEST(OmoriYau, WeakSearchOnUnduloidClustersAtTheNeck) {
  const ImmersionChart chart = build_chart(Unduloid{1.0, 0.5});
  const std::vector<std::size_t> grid{256, 4};
  const OYWitness w = weak_oy_search(chart, ScalarField::phi_norm2(), grid, 10);
  ASSERT_EQ(w.points.size(), 10u);
  EXPECT_EQ(w.mode, OYMode::Weak);
  EXPECT_NEAR(w.sup_estimate, 18.0, 1e-2);
  for (const auto& p : w.points) {
    const double s = std::fmod(p[0], kPi);
    EXPECT_LT(std::abs(s - 3.0 * kPi / 4.0), 0.1) << "s=" << p[0];
  }
}

TEST(OmoriYau, WeakSearchOnFlatCylinder) {
  const ImmersionChart chart = build_chart(EuclideanProduct{2, 1, 1.0});
  const std::vector<std::size_t> grid{8, 8};
  const OYWitness w = weak_oy_search(chart, ScalarField::phi_norm2(), grid, 5);
  EXPECT_EQ(w.points.size(), 5u);
  EXPECT_NEAR(w.sup_estimate, 0.5, 1e-12);
}

TEST(OmoriYau, SearchFailureCarriesBestPair) {
  // u = x^2 + y^2 on the flat square: at the 2x2 cell centres every point ties and Delta u = 4.
  const ScalarField bowl{"bowl", [](const ShapeData& sd) { return sd.u[0] * sd.u[0] + sd.u[1] * sd.u[1]; }};
  const std::vector<std::size_t> grid{2, 2};
  try {
    weak_oy_search(flat_plane(), bowl, grid, 3);
    FAIL() << "expected SearchFailed";
  } catch (const SearchFailed& e) {
    EXPECT_NEAR(e.best_gap(), 0.0, 1e-15);
    EXPECT_NEAR(e.best_laplacian(), 4.0, 1e-6);
  }
}

TEST(OmoriYau, SearchArgumentErrors) {
  const ImmersionChart chart = build_chart(Unduloid{1.0, 0.5});
  const std::vector<std::size_t> wrong_rank{16};
  EXPECT_THROW(weak_oy_search(chart, ScalarField::phi_norm2(), wrong_rank, 3), Error);
  const std::vector<std::size_t> grid{16, 4};
  EXPECT_THROW(weak_oy_search(chart, ScalarField::phi_norm2(), grid, 0), InvalidParameters);
}

TEST(OmoriYauProperty, SearchRoundTripsAndFullImpliesWeak) {
  const std::vector<std::pair<ModelSpec, std::vector<std::size_t>>> cases{
      {Unduloid{1.0, 0.5}, {128, 4}},   {Unduloid{0.5, 0.3}, {96, 3}},  {Unduloid{-1.0, 0.3}, {64, 4}},
      {Unduloid{2.0, 0.1}, {64, 2}},    {CliffordTorus{2, 1}, {6, 6}},  {SphereProduct{2, 0.6}, {5, 5}},
      {EuclideanProduct{2, 1, 2.0}, {4, 8}},
  };
  for (const auto& [m, grid] : cases) {
    const ImmersionChart chart = build_chart(m);
    const OYWitness w = weak_oy_search(chart, ScalarField::phi_norm2(), grid, 8);
    for (const auto& c : verify_oy_points(chart, ScalarField::phi_norm2(), w, OYMode::Weak)) {
      EXPECT_TRUE(c.passed) << format_model_spec(m);
    }
    const auto full = verify_oy_points(chart, ScalarField::phi_norm2(), w, OYMode::Full);
    const auto weak = verify_oy_points(chart, ScalarField::phi_norm2(), w, OYMode::Weak);
    for (std::size_t k = 0; k < full.size(); ++k) {
      if (full[k].passed) EXPECT_TRUE(weak[k].passed);
      EXPECT_EQ(full[k].passed, weak[k].passed && full[k].gradient_ok);
    }
  }
}

TEST(Decay, ConstantIsLikelyDivergent) {
  const DecayReport r = decay_admissible([](double) { return 1.0; }, std::nullopt, 10.0, 256);
  EXPECT_TRUE(r.positive_at_zero);
  EXPECT_TRUE(r.monotone_ok);
  EXPECT_NEAR(r.I_T, 10.0, 1e-9);
  EXPECT_NEAR(r.I_2T, 20.0, 1e-9);
  EXPECT_NEAR(r.I_4T, 40.0, 1e-9);
  ASSERT_TRUE(r.increment_ratio.has_value());
  EXPECT_NEAR(*r.increment_ratio, 2.0, 1e-9);
  EXPECT_EQ(r.verdict, DecayVerdict::LikelyDivergent);
}

TEST(Decay, QuarticIsLikelyConvergent) {
  const auto G = [](double t) { return std::pow(1.0 + t, 4); };
  const auto dG = [](double t) { return 4.0 * std::pow(1.0 + t, 3); };
  const DecayReport r = decay_admissible(G, std::function<double(double)>(dG), 10.0, 256);
  EXPECT_NEAR(r.I_T, 10.0 / 11.0, 1e-9);
  EXPECT_NEAR(r.I_2T, 20.0 / 21.0, 1e-9);
  EXPECT_NEAR(r.I_4T, 40.0 / 41.0, 1e-9);
  const double rho = (40.0 / 41.0 - 20.0 / 21.0) / (20.0 / 21.0 - 10.0 / 11.0);
  EXPECT_NEAR(*r.increment_ratio, rho, 1e-7);
  EXPECT_NEAR(rho, 0.536, 1e-3);
  EXPECT_EQ(r.verdict, DecayVerdict::LikelyConvergent);
}

TEST(Decay, StrongQuadraticDecayIsLikelyDivergent) {
  const auto G = [](double t) {
    const double l = std::log(t + 2.0);
    return 1.0 + t * t * l * l;
  };
  const DecayReport r = decay_admissible(G, std::nullopt, 50.0, 256);
  EXPECT_TRUE(r.monotone_ok);
  EXPECT_EQ(r.verdict, DecayVerdict::LikelyDivergent);
  EXPECT_TRUE(std::isfinite(r.condition_iv_sup));
  EXPECT_GT(r.condition_iv_sup, 0.0);
}

TEST(Decay, ConditionIVSupOnConstant) {
  // t G(sqrt t)/G(t) = t for G = 1, so the sup over [1, T] is T.
  EXPECT_NEAR(decay_admissible([](double) { return 1.0; }, std::nullopt, 10.0, 256).condition_iv_sup, 10.0, 1e-12);
}

TEST(Decay, DetectsNonMonotoneAndNonPositive) {
  const DecayReport r = decay_admissible([](double t) { return 2.0 + std::sin(t); }, std::nullopt, 10.0, 128);
  EXPECT_FALSE(r.monotone_ok);
  const auto bad_dG = std::function<double(double)>([](double) { return -1.0; });
  EXPECT_FALSE(decay_admissible([](double) { return 1.0; }, bad_dG, 10.0, 64).monotone_ok);
  EXPECT_THROW(decay_admissible([](double t) { return 1.0 - t; }, std::nullopt, 10.0, 64), DomainError);
  EXPECT_THROW(decay_admissible([](double t) { return t == 0.0 ? 0.0 : 1.0; }, std::nullopt, 10.0, 64), DomainError);
}

TEST(Decay, ArgumentErrors) {
  const auto one = [](double) { return 1.0; };
  EXPECT_THROW(decay_admissible(one, std::nullopt, 7.9, 64), InvalidParameters);
  EXPECT_THROW(decay_admissible(one, std::nullopt, 10.0, 63), InvalidParameters);
}

TEST(DecayProperty, ScalingLeavesRatioAndMonotonicityUnchanged) {
  const std::vector<std::function<double(double)>> fields{
      [](double) { return 1.0; },
      [](double t) { return std::pow(1.0 + t, 4); },
      [](double t) { return 1.0 + t * t; },
      [](double t) { return std::exp(0.1 * t); },
  };
  for (const auto& G : fields) {
    const DecayReport base = decay_admissible(G, std::nullopt, 12.0, 128);
    for (double C : {0.3, 2.0, 17.0}) {
      const DecayReport scaled = decay_admissible([&](double t) { return C * C * G(t); }, std::nullopt, 12.0, 128);
      EXPECT_EQ(scaled.monotone_ok, base.monotone_ok);
      EXPECT_EQ(scaled.verdict, base.verdict);
      EXPECT_NEAR(*scaled.increment_ratio, *base.increment_ratio, 1e-8);
      EXPECT_NEAR(scaled.I_T, base.I_T / C, 1e-8 * base.I_T);
    }
  }
}

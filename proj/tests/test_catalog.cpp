#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cmc/catalog.hpp"
#include "cmc/errors.hpp"
#include "cmc/geometry.hpp"
#include "cmc/spaceform.hpp"

using namespace cmc;

namespace {

constexpr double kPi = std::numbers::pi;

std::string parse_error_token(const std::string& text) {
  try {
    parse_model_spec(text);
  } catch (const ParseError& e) {
    return e.token();
  }
  return "<no error>";
}

// Grid minimisation oracle for inf K over one period.
double grid_min_K(double H, double B, int samples) {
  double best = INFINITY;
  const double period = kPi / std::abs(H);
  for (int i = 0; i <= samples; ++i) best = std::min(best, unduloid_K(H, B, period * i / samples));
  return best;
}

}  // namespace

TEST(ModelSpecText, RoundTripsEveryGridModel) {
  for (const auto& f : all_families()) {
    for (const auto& m : default_parameter_grid(f)) {
      const std::string text = format_model_spec(m);
      EXPECT_EQ(text.substr(0, text.find(':')), f);
      EXPECT_EQ(format_model_spec(parse_model_spec(text)), text);
    }
  }
}

TEST(ModelSpecText, ParsesCanonicalExamples) {
  const ModelSpec m = parse_model_spec("euclidean-product:n=3,k=2,r=1");
  ASSERT_TRUE(std::holds_alternative<EuclideanProduct>(m));
  EXPECT_EQ(std::get<EuclideanProduct>(m).k, 2);
  EXPECT_EQ(format_model_spec(m), "euclidean-product:n=3,k=2,r=1");
  const ModelSpec u = parse_model_spec("unduloid:B=0.5,H=-1");
  EXPECT_EQ(format_model_spec(u), "unduloid:H=-1,B=0.5");
  EXPECT_EQ(format_params(u), "H=-1,B=0.5");
}

TEST(ModelSpecText, RandomRealsRoundTripExactly) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> d(1e-6, 50.0);
  for (int t = 0; t < 1000; ++t) {
    const double r = d(rng);
    const std::string text = "euclidean-product:n=4,k=1,r=" + format_double(r);
    EXPECT_EQ(std::get<EuclideanProduct>(parse_model_spec(text)).r, r);
  }
}

TEST(ModelSpecText, ParseErrorsNameTheToken) {
  EXPECT_EQ(parse_error_token("unduloid"), "unduloid");
  EXPECT_EQ(parse_error_token("torus:n=3"), "torus");
  EXPECT_EQ(parse_error_token("unduloid:H=1,,B=0.5"), "");
  EXPECT_EQ(parse_error_token("unduloid:H=1,B"), "B");
  EXPECT_EQ(parse_error_token("unduloid:H=1,B=0.5,q=2"), "q=2");
  EXPECT_EQ(parse_error_token("unduloid:H=1,H=2,B=0.5"), "H=2");
  EXPECT_EQ(parse_error_token("unduloid:H=1"), "B");
  EXPECT_EQ(parse_error_token("clifford:n=3.5,k=1"), "n=3.5");
  EXPECT_EQ(parse_error_token("unduloid:H=one,B=0.5"), "H=one");
}

TEST(ModelSpecText, RangeViolationsAreInvalidParameters) {
  EXPECT_THROW(parse_model_spec("unduloid:H=1,B=2"), InvalidParameters);
  EXPECT_THROW(parse_model_spec("unduloid:H=0,B=0.5"), InvalidParameters);
  EXPECT_THROW(parse_model_spec("euclidean-product:n=3,k=3,r=1"), InvalidParameters);
  EXPECT_THROW(parse_model_spec("euclidean-product:n=3,k=1,r=-1"), InvalidParameters);
  EXPECT_THROW(parse_model_spec("sphere-product:n=3,r=1"), InvalidParameters);
  EXPECT_THROW(parse_model_spec("hyperbolic-cylinder:n=4,k=2,r=1"), InvalidParameters);
  EXPECT_THROW(parse_model_spec("umbilical-sphere:n=3,c=1,r=1.5"), InvalidParameters);
  EXPECT_THROW(parse_model_spec("umbilical-sphere:n=3,c=2,r=0.5"), InvalidParameters);
  EXPECT_THROW(parse_model_spec("clifford:n=1,k=1"), InvalidParameters);
}

TEST(BuildChart, UnduloidProfileIsUnitSpeed) {
  for (double s = 0.0; s < kPi; s += kPi / 64.0) {
    const UnduloidProfile p = unduloid_profile(1.0, 0.5, s);
    const double dx = unduloid_dx(1.0, 0.5, s);
    EXPECT_NEAR(dx * dx + p.dy * p.dy, 1.0, 1e-10);
  }
}

TEST(BuildChart, PointsLieInTheirSpaceForm) {
  const ImmersionChart sp = build_chart(SphereProduct{3, 1.0 / std::sqrt(3.0)});
  for (const auto& u : sample_grid(sp, 5)) {
    const auto x = sp.point(u);
    double norm2 = 0.0;
    for (double v : x) norm2 += v * v;
    EXPECT_NEAR(norm2, 1.0, 1e-10);
  }
  const ImmersionChart hc = build_chart(HyperbolicCylinder{3, 2, 1.0});
  for (const auto& u : sample_grid(hc, 5)) {
    const auto x = hc.point(u);
    EXPECT_NEAR(bilinear_form(hc.space(), x, x), -1.0, 1e-10);
    EXPECT_GT(x[0], 0.0);
  }
}

TEST(BuildChart, UnduloidPeriods) {
  const ImmersionChart chart = build_chart(Unduloid{2.0, 0.3});
  ASSERT_EQ(chart.domain().size(), 2u);
  EXPECT_NEAR(chart.domain()[0].hi - chart.domain()[0].lo, kPi / 2.0, 1e-15);
  EXPECT_NEAR(chart.domain()[1].hi - chart.domain()[1].lo, 2 * kPi, 1e-15);
  EXPECT_TRUE(chart.domain()[1].periodic);
}

TEST(ClosedForm, Examples) {
  const ClosedForm ct = closed_form_invariants(CliffordTorus{3, 1});
  EXPECT_EQ(ct.H_signed, 0.0);
  EXPECT_NEAR(ct.phi_norm, std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(*ct.alpha_H, std::sqrt(3.0), 1e-14);

  const ClosedForm e2 = closed_form_invariants(EuclideanProduct{3, 2, 1.0});
  EXPECT_NEAR(e2.abs_H, 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(e2.phi_norm, std::sqrt(2.0 / 3.0), 1e-15);
  EXPECT_NEAR(*e2.alpha_H, std::sqrt(2.0 / 3.0), 1e-14);
  EXPECT_EQ(e2.branch_prediction, Branch::Equality);

  const ClosedForm e1 = closed_form_invariants(EuclideanProduct{3, 1, 1.0});
  EXPECT_NEAR(e1.abs_H, 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(e1.phi_norm, std::sqrt(6.0) / 3.0, 1e-15);
  EXPECT_NEAR(*e1.alpha_H, 1.0 / std::sqrt(6.0), 1e-14);
  EXPECT_EQ(e1.branch_prediction, Branch::Strict);

  const ClosedForm sp = closed_form_invariants(SphereProduct{3, 1.0 / std::sqrt(3.0)});
  EXPECT_NEAR(sp.H_signed, -1.0 / std::sqrt(2.0), 1e-14);
  // kappas -1/sqrt2, sqrt2, sqrt2 about H = 1/sqrt2: |Phi|^2 = 2 + 1/2 + 1/2.
  EXPECT_NEAR(sp.phi_norm, std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(sp.phi_norm, *sp.alpha_H, 1e-13);
  EXPECT_EQ(sp.branch_prediction, Branch::Equality);

  const ClosedForm us = closed_form_invariants(UmbilicalSphere{4, 1, 0.5});
  EXPECT_EQ(us.phi_norm, 0.0);
  EXPECT_EQ(us.branch_prediction, Branch::Umbilical);

  const ClosedForm hk1 = closed_form_invariants(HyperbolicCylinder{3, 1, 1.0});
  EXPECT_FALSE(hk1.alpha_H.has_value());
}

TEST(ClosedForm, EuclideanProductFormulas) {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      const double r = 0.5 + 0.25 * k;
      const ClosedForm cf = closed_form_invariants(EuclideanProduct{n, k, r});
      ASSERT_EQ(cf.kappas.size(), static_cast<std::size_t>(n));
      for (int i = 0; i < n - k; ++i) EXPECT_EQ(cf.kappas[i], 0.0);
      for (int i = n - k; i < n; ++i) EXPECT_NEAR(cf.kappas[i], 1.0 / r, 1e-15);
      EXPECT_NEAR(cf.abs_H, k / (n * r), 1e-15);
      EXPECT_NEAR(cf.phi_norm, std::sqrt(k * (n - k) / static_cast<double>(n)) / r, 1e-14);
    }
  }
}

TEST(ClosedForm, NumericShapeDataMatchesOnTheWholeGrid) {
  std::size_t families = 0;
  for (const auto& f : all_families()) {
    const auto grid = default_parameter_grid(f);
    EXPECT_GE(grid.size(), 5u) << f;
    ++families;
    for (const auto& m : grid) {
      const ImmersionChart chart = build_chart(m);
      for (const auto& u : sample_grid(chart, 3, 81)) {
        const ShapeData sd = shape_data_at(chart, u);
        const PointwiseClosedForm cf = closed_form_at(m, u);
        EXPECT_NEAR(sd.H, cf.abs_H, 1e-9) << format_model_spec(m);
        EXPECT_NEAR(std::sqrt(std::max(0.0, sd.phi_norm2)), cf.phi_norm, 1e-9) << format_model_spec(m);
        std::vector<double> neg(cf.kappas.rbegin(), cf.kappas.rend());
        for (double& k : neg) k = -k;
        double diff_pos = 0.0, diff_neg = 0.0;
        for (std::size_t i = 0; i < cf.kappas.size(); ++i) {
          diff_pos = std::max(diff_pos, std::abs(sd.kappas[i] - cf.kappas[i]));
          diff_neg = std::max(diff_neg, std::abs(sd.kappas[i] - neg[i]));
        }
        EXPECT_LE(std::min(diff_pos, diff_neg), 1e-9) << format_model_spec(m);
      }
    }
  }
  EXPECT_EQ(families, 6u);
}

TEST(ClosedForm, UnduloidMeanCurvatureAtThirtyTwoPoints) {
  for (double H : {1.0, -0.5, 2.0}) {
    const ImmersionChart chart = build_chart(Unduloid{H, 0.3});
    const double period = kPi / std::abs(H);
    for (int i = 0; i < 32; ++i) {
      const std::vector<double> u{period * (i + 0.5) / 32.0, 0.2 * i};
      EXPECT_NEAR(shape_data_at(chart, u).H, std::abs(H), 1e-8);
    }
  }
}

TEST(ClosedForm, CliffordTorusIsMinimal) {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k < n; ++k) {
      EXPECT_EQ(closed_form_invariants(CliffordTorus{n, k}).H_signed, 0.0);
      const ImmersionChart chart = build_chart(CliffordTorus{n, k});
      for (const auto& u : sample_grid(chart, 2, 32)) EXPECT_LE(std::abs(shape_data_at(chart, u).H), 1e-9);
    }
  }
}

TEST(ClosedForm, HyperbolicCylinderK1Threshold) {
  for (int n = 3; n <= 6; ++n) {
    const double threshold = 1.0 / std::sqrt(n * (n - 2.0));
    for (double f : {0.5, 0.9, 0.999, 1.001, 1.1, 2.0}) {
      const double H = hyperbolic_cylinder_H(n, 1, threshold * f);
      EXPECT_EQ(H * H > 1.0, f < 1.0) << "n=" << n << " f=" << f;
    }
  }
}

TEST(Unduloid, ProfileExamples) {
  const UnduloidProfile p0 = unduloid_profile(2.0, 0.4, 0.0);
  EXPECT_EQ(p0.x, 0.0);
  EXPECT_NEAR(p0.y, std::sqrt(1.0 + 0.16) / 4.0, 1e-15);
  EXPECT_NEAR(unduloid_profile(1.0, 0.5, kPi / 4.0).y, 0.75, 1e-15);
  double prev = -1.0;
  for (double s = 0.0; s < 2 * kPi; s += 0.05) {
    const double x = unduloid_profile(1.0, 0.9, s).x;
    EXPECT_GT(x, prev);
    prev = x;
  }
  EXPECT_THROW(unduloid_profile(1.0, 0.5, 1.0, 0.0), InvalidParameters);
  EXPECT_THROW(unduloid_profile(1.0, 1.5, 1.0), InvalidParameters);
}

TEST(Unduloid, ProfileSecondDerivativeMatchesDifferenceQuotient) {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> ds(0.0, 3.0), dB(0.05, 0.9);
  for (int t = 0; t < 100; ++t) {
    const double s = ds(rng), B = dB(rng), h = 1e-4;
    const UnduloidProfile p = unduloid_profile(1.0, B, s);
    const double yp = unduloid_profile(1.0, B, s + h).y;
    const double ym = unduloid_profile(1.0, B, s - h).y;
    EXPECT_NEAR((yp - ym) / (2 * h), p.dy, 1e-6);
    EXPECT_NEAR((yp - 2 * p.y + ym) / (h * h), p.d2y, 1e-4);
  }
}

TEST(Unduloid, GaussCurvatureExamples) {
  EXPECT_NEAR(unduloid_K(1.0, 0.5, 3.0 * kPi / 4.0), -8.0, 1e-12);
  EXPECT_NEAR(unduloid_inf_K(1.0, 0.5), -8.0, 1e-12);
  EXPECT_NEAR(grid_min_K(1.0, 0.5, 100000), -8.0, 1e-6);
  for (double s = 0.0; s < kPi; s += 0.01) EXPECT_LE(std::abs(unduloid_K(1.0, 1e-6, s)), 5e-6);
}

TEST(UnduloidProperty, InfKMatchesGridAndGaussBound) {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> dH(0.3, 3.0), dB(0.01, 0.95);
  for (int t = 0; t < 20; ++t) {
    const double H = dH(rng) * (t % 2 ? -1.0 : 1.0), B = dB(rng);
    const double inf_K = unduloid_inf_K(H, B);
    EXPECT_NEAR(inf_K, -4 * H * H * B / ((1 - B) * (1 - B)), 1e-12 * std::abs(inf_K));
    EXPECT_NEAR(grid_min_K(H, B, 100000), inf_K, 1e-6 * std::max(1.0, std::abs(inf_K)));
    for (int i = 0; i < 200; ++i) EXPECT_LE(unduloid_K(H, B, i * 0.03), H * H + 1e-12);
  }
}

TEST(Unduloid, SolveBForInfK) {
  EXPECT_NEAR(solve_B_for_inf_K(1.0, 8.0), 0.5, 1e-14);
  const double B2 = solve_B_for_inf_K(2.0, 8.0);
  EXPECT_GT(B2, 0.0);
  EXPECT_LT(B2, 1.0);
  EXPECT_LE(std::abs(unduloid_inf_K(2.0, B2) + 8.0), 1e-9);
  double prev = 0.0;
  for (double eps : {1e-12, 1e-8, 1e-4, 1e-2, 1.0, 100.0, 1e6}) {
    const double B = solve_B_for_inf_K(1.5, eps);
    EXPECT_GT(B, prev);
    EXPECT_LT(B, 1.0);
    EXPECT_LE(std::abs(unduloid_inf_K(1.5, B) + eps), 1e-10 * std::max(1.0, eps));
    prev = B;
  }
  EXPECT_LT(solve_B_for_inf_K(1.0, 1e-12), 1e-12);
}

TEST(RadiusFromH, Examples) {
  const double r = r_from_H_sphere(3, 1.0 / std::sqrt(2.0), RadiusBranch::Minus);
  EXPECT_NEAR(r * r, 1.0 / 3.0, 1e-14);
  for (int n = 2; n <= 6; ++n) {
    const double rm = r_from_H_sphere(n, 0.0, RadiusBranch::Minus);
    const double rp = r_from_H_sphere(n, 0.0, RadiusBranch::Plus);
    EXPECT_NEAR(rm * rm, (n - 1.0) / n, 1e-14);
    EXPECT_NEAR(rp * rp, (n - 1.0) / n, 1e-14);
  }
  EXPECT_NEAR(r_from_H_hyperbolic(3, 2, 5.0 / (3.0 * std::sqrt(2.0))), 1.0, 1e-12);
  EXPECT_THROW(r_from_H_hyperbolic(3, 2, 1.0), OutOfRange);
  EXPECT_THROW(r_from_H_hyperbolic(3, 1, 0.5), OutOfRange);
}

TEST(RadiusFromHProperty, ForwardInverseRoundTrip) {
  std::mt19937 rng(41);
  std::uniform_real_distribution<double> dH(0.0, 10.0), dH1(1.0001, 10.0);
  for (int t = 0; t < 500; ++t) {
    const int n = 2 + t % 6;
    const double h = dH(rng);
    const double rm = r_from_H_sphere(n, h, RadiusBranch::Minus);
    const double rp = r_from_H_sphere(n, h, RadiusBranch::Plus);
    EXPECT_NEAR(sphere_product_H(n, rm), -h, 1e-10 * std::max(1.0, h));
    EXPECT_NEAR(sphere_product_H(n, rp), h, 1e-10 * std::max(1.0, h));
    EXPECT_LE(rm * rm, (n - 1.0) / n + 1e-14);
    if (n >= 3) {
      const double H1 = dH1(rng);
      for (int k : {1, n - 1}) {
        const double r = r_from_H_hyperbolic(n, k, H1);
        EXPECT_NEAR(hyperbolic_cylinder_H(n, k, r), H1, 1e-10 * H1) << "n=" << n << " k=" << k;
      }
    }
  }
}

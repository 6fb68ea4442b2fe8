#include "cmc/classify.hpp"

#include <algorithm>
#include <cmath>

#include "cmc/bounds.hpp"
#include "cmc/errors.hpp"

namespace cmc {

namespace {

double numeric_sup_phi(const ImmersionChart& chart, std::span<const ChartPoint> points) {
  double best = 0.0;
  for (const auto& u : points) best = std::max(best, shape_data_at(chart, u).phi_norm2);
  return std::sqrt(best);
}

std::vector<ChartPoint> unduloid_period_points(const ImmersionChart& chart, std::size_t samples) {
  const Interval& s = chart.domain()[0];
  std::vector<ChartPoint> pts;
  pts.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    pts.push_back({s.lo + (s.hi - s.lo) * static_cast<double>(i) / static_cast<double>(samples), 0.0});
  }
  return pts;
}

}  // namespace

ClassificationVerdict classify(const ModelSpec& model, const ClassifyOptions& options) {
  const ClosedForm cf = closed_form_invariants(model);
  const int n = model_dimension(model);
  const int c = model_curvature(model);
  const BoundContext ctx{n, c, cf.abs_H};

  ClassificationVerdict v;
  v.alpha_H = alpha_H(ctx);
  v.scalar_bound = scalar_curvature_bound(ctx);

  const bool periodic_model = std::holds_alternative<Unduloid>(model);
  if (periodic_model) {
    const ImmersionChart chart = build_chart(model);
    const auto pts = unduloid_period_points(chart, std::max<std::size_t>(options.unduloid_samples, 4));
    v.sup_phi = numeric_sup_phi(chart, pts);
  } else if (options.source == SupSource::Numeric) {
    const ImmersionChart chart = build_chart(model);
    const auto pts = sample_grid(chart, std::max<std::size_t>(options.grid, 1));
    v.sup_phi = numeric_sup_phi(chart, pts);
  } else {
    v.sup_phi = cf.phi_norm;
  }
  // Constant |Phi| or a periodic profile: the supremum is a maximum.
  v.attained = true;
  v.inf_S = n * (n - 1.0) * (c + cf.abs_H * cf.abs_H) - v.sup_phi * v.sup_phi;

  if (v.sup_phi <= options.tol_class) {
    v.branch = Branch::Umbilical;
  } else if (std::abs(v.sup_phi - v.alpha_H) <= options.tol_class) {
    v.branch = v.attained ? Branch::Equality : Branch::Strict;
    v.unattained_equality = !v.attained;
  } else {
    v.branch = Branch::Strict;
  }

  if (n == 2) {
    SurfaceReport s;
    s.inf_K = 0.5 * v.inf_S;
    s.umbilical = v.branch == Branch::Umbilical;
    const double target = cf.abs_H * cf.abs_H + c;
    s.holds = s.umbilical ? std::abs(s.inf_K - target) <= options.tol_class : s.inf_K <= options.tol_class;
    v.surface = s;
  }
  return v;
}

}  // namespace cmc

#include "cmc/maxprinciple.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "cmc/errors.hpp"
#include "cmc/quadrature.hpp"

namespace cmc {

std::string_view to_string(OYMode mode) { return mode == OYMode::Full ? "full" : "weak"; }

std::string_view to_string(DecayVerdict v) {
  switch (v) {
    case DecayVerdict::LikelyDivergent: return "likely-divergent";
    case DecayVerdict::LikelyConvergent: return "likely-convergent";
    case DecayVerdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::vector<OYPointCheck> verify_oy_points(const ImmersionChart& chart, const ScalarField& field,
                                           const OYWitness& witness, OYMode mode, double h) {
  if (witness.points.empty()) throw InvalidParameters("witness needs at least one point");
  if (!std::isfinite(witness.sup_estimate)) throw InvalidParameters("u* must be finite");
  std::vector<OYPointCheck> out;
  out.reserve(witness.points.size());
  for (std::size_t i = 0; i < witness.points.size(); ++i) {
    const auto& p = witness.points[i];
    const double inv_k = 1.0 / static_cast<double>(i + 1);
    OYPointCheck chk;
    chk.record.value = field(shape_data_at(chart, p));
    chk.record.laplacian = laplace_beltrami(chart, field, p, h);
    chk.record.grad_norm = grad_norm(chart, field, p, h);
    chk.value_ok = chk.record.value > witness.sup_estimate - inv_k;
    chk.gradient_ok = chk.record.grad_norm < inv_k;
    chk.laplacian_ok = chk.record.laplacian < inv_k;
    chk.passed = chk.value_ok && chk.laplacian_ok && (mode == OYMode::Weak || chk.gradient_ok);
    out.push_back(chk);
  }
  return out;
}

namespace {

std::vector<ChartPoint> tensor_grid(const ImmersionChart& chart, std::span<const std::size_t> per_axis) {
  const auto& dom = chart.domain();
  if (per_axis.size() != dom.size()) throw SizeMismatch("one grid resolution per chart axis is required");
  std::vector<std::vector<double>> axes;
  for (std::size_t a = 0; a < dom.size(); ++a) {
    const std::size_t g = per_axis[a];
    if (g == 0) throw InvalidParameters("grid resolution must be positive");
    std::vector<double> xs(g);
    for (std::size_t i = 0; i < g; ++i) {
      const double t = dom[a].periodic ? static_cast<double>(i) / g : (i + 0.5) / g;
      xs[i] = dom[a].lo + (dom[a].hi - dom[a].lo) * t;
    }
    axes.push_back(std::move(xs));
  }
  std::vector<ChartPoint> pts{{}};
  for (const auto& xs : axes) {
    std::vector<ChartPoint> next;
    next.reserve(pts.size() * xs.size());
    for (const auto& p : pts) {
      for (double x : xs) {
        ChartPoint q = p;
        q.push_back(x);
        next.push_back(std::move(q));
      }
    }
    pts = std::move(next);
  }
  return pts;
}

}  // namespace

OYWitness weak_oy_search(const ImmersionChart& chart, const ScalarField& field, std::span<const std::size_t> per_axis,
                         int K, double h) {
  if (K < 1) throw InvalidParameters("K must be at least 1");
  const auto pts = tensor_grid(chart, per_axis);

  std::vector<double> values(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) values[i] = field(shape_data_at(chart, pts[i]));
  const double u_star = *std::max_element(values.begin(), values.end());

  std::vector<std::size_t> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });

  std::map<std::size_t, double> laplacians;
  const auto laplacian = [&](std::size_t i) {
    auto it = laplacians.find(i);
    if (it == laplacians.end()) it = laplacians.emplace(i, laplace_beltrami(chart, field, pts[i], h)).first;
    return it->second;
  };

  OYWitness w;
  w.sup_estimate = u_star;
  w.mode = OYMode::Weak;
  for (int k = 1; k <= K; ++k) {
    const double inv_k = 1.0 / k;
    bool found = false;
    double best_excess = INFINITY;
    double best_gap = 0.0;
    double best_lap = 0.0;
    for (std::size_t i : order) {
      const double gap = u_star - values[i];
      if (!(gap < inv_k)) break;
      const double lap = laplacian(i);
      if (lap < inv_k) {
        w.points.push_back(pts[i]);
        w.records.push_back({values[i], grad_norm(chart, field, pts[i], h), lap});
        found = true;
        break;
      }
      if (lap - inv_k < best_excess) {
        best_excess = lap - inv_k;
        best_gap = gap;
        best_lap = lap;
      }
    }
    if (!found) {
      throw SearchFailed("no grid point satisfies the weak conditions for k = " + std::to_string(k), best_gap,
                         best_lap);
    }
  }
  return w;
}

DecayReport decay_admissible(const std::function<double(double)>& G,
                             const std::optional<std::function<double(double)>>& dG, double T,
                             std::size_t samples) {
  if (!(T >= 8.0) || !std::isfinite(T)) throw InvalidParameters("T must be at least 8");
  if (samples < 64) throw InvalidParameters("samples must be at least 64");

  const auto checked = [&G](double t) {
    const double g = G(t);
    if (!(g > 0.0)) throw DomainError("G(" + std::to_string(t) + ") = " + std::to_string(g) + " is not positive");
    return g;
  };

  DecayReport r;
  r.G0 = checked(0.0);
  r.positive_at_zero = r.G0 > 0.0;

  const std::size_t total = 4 * samples;
  r.monotone_ok = true;
  double prev = r.G0;
  for (std::size_t i = 1; i <= total; ++i) {
    const double t = 4.0 * T * static_cast<double>(i) / static_cast<double>(total);
    const double g = checked(t);
    if (g - prev < -1e-12 * std::max(1.0, std::abs(prev))) r.monotone_ok = false;
    if (dG && (*dG)(t) < -1e-12) r.monotone_ok = false;
    prev = g;
  }
  if (dG && (*dG)(0.0) < -1e-12) r.monotone_ok = false;

  const auto inv_sqrt = [&checked](double t) { return 1.0 / std::sqrt(checked(t)); };
  constexpr double kQuadTol = 1e-10;
  r.I_T = adaptive_quadrature(inv_sqrt, 0.0, T, kQuadTol);
  r.I_2T = r.I_T + adaptive_quadrature(inv_sqrt, T, 2.0 * T, kQuadTol);
  r.I_4T = r.I_2T + adaptive_quadrature(inv_sqrt, 2.0 * T, 4.0 * T, kQuadTol);

  const double denom = r.I_2T - r.I_T;
  if (denom > 0.0) r.increment_ratio = (r.I_4T - r.I_2T) / denom;

  r.condition_iv_sup = 0.0;
  for (std::size_t i = 0; i <= samples; ++i) {
    const double t = 1.0 + (T - 1.0) * static_cast<double>(i) / static_cast<double>(samples);
    r.condition_iv_sup = std::max(r.condition_iv_sup, t * checked(std::sqrt(t)) / checked(t));
  }

  if (!r.increment_ratio) {
    r.verdict = DecayVerdict::Inconclusive;
  } else if (*r.increment_ratio >= kDivergentRatio) {
    r.verdict = DecayVerdict::LikelyDivergent;
  } else if (*r.increment_ratio <= kConvergentRatio) {
    r.verdict = DecayVerdict::LikelyConvergent;
  } else {
    r.verdict = DecayVerdict::Inconclusive;
  }
  return r;
}

}  // namespace cmc

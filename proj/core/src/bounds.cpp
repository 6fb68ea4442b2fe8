#include "cmc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cmc/errors.hpp"

namespace cmc {

const char* to_string(EqualitySide side) {
  switch (side) {
    case EqualitySide::None: return "none";
    case EqualitySide::Upper: return "upper";
    case EqualitySide::Lower: return "lower";
    case EqualitySide::Both: return "both";
  }
  return "none";
}

double okumura_constant(int n) {
  const double nd = n;
  return (nd - 2.0) / std::sqrt(nd * (nd - 1.0));
}

OkumuraReport okumura_check(std::span<const double> a, double tol) {
  if (a.size() < 2) throw InvalidParameters("Okumura check needs at least two values");
  if (!(tol >= 0.0)) throw InvalidParameters("tolerance must be non-negative");

  double sum = 0.0;
  double sum_abs = 0.0;
  double max_abs = 0.0;
  OkumuraReport r;
  r.values.assign(a.begin(), a.end());
  for (double x : a) {
    sum += x;
    sum_abs += std::abs(x);
    max_abs = std::max(max_abs, std::abs(x));
    r.sum_squares += x * x;
    r.sum_cubes += x * x * x;
  }
  if (std::abs(sum) > tol * std::max(1.0, sum_abs)) {
    throw NotTraceFree("values sum to " + std::to_string(sum) + ", not zero");
  }

  const int n = static_cast<int>(a.size());
  r.upper_bound = okumura_constant(n) * std::pow(r.sum_squares, 1.5);
  r.lower_bound = -r.upper_bound;
  r.slack = std::min(r.upper_bound - r.sum_cubes, r.sum_cubes - r.lower_bound);
  r.holds = r.slack >= -tol * std::max(1.0, r.upper_bound);

  std::vector<double> sorted(a.begin(), a.end());
  std::sort(sorted.begin(), sorted.end());
  const double eq_tol = tol * std::max(1.0, max_abs);
  // Upper: the n-1 smallest coincide and are <= 0. Lower: mirror image.
  const bool upper = sorted[n - 2] - sorted[0] <= eq_tol && sorted[n - 2] <= eq_tol;
  const bool lower = sorted[n - 1] - sorted[1] <= eq_tol && sorted[1] >= -eq_tol;
  r.equality_side = upper && lower ? EqualitySide::Both
                    : upper        ? EqualitySide::Upper
                    : lower        ? EqualitySide::Lower
                                   : EqualitySide::None;
  return r;
}

namespace {

void check_context(const BoundContext& ctx) {
  if (ctx.n < 2) throw InvalidParameters("n must be at least 2");
  if (ctx.c < -1 || ctx.c > 1) throw InvalidParameters("c must be -1, 0 or 1");
  if (!std::isfinite(ctx.H)) throw InvalidParameters("H must be finite");
}

void require_elliptic(const BoundContext& ctx) {
  check_context(ctx);
  if (!(ctx.H * ctx.H + ctx.c > 0.0)) {
    throw NonElliptic("H^2 + c = " + std::to_string(ctx.H * ctx.H + ctx.c) + " is not positive");
  }
}

}  // namespace

double p_H_eval(const BoundContext& ctx, double x) {
  check_context(ctx);
  const double nd = ctx.n;
  const double h = std::abs(ctx.H);
  return x * x + nd * okumura_constant(ctx.n) * h * x - nd * (ctx.c + ctx.H * ctx.H);
}

double alpha_H(const BoundContext& ctx) {
  require_elliptic(ctx);
  const double nd = ctx.n;
  // Minimal case: the root formula collapses to sqrt(n c).
  if (ctx.H == 0.0) return std::sqrt(nd * ctx.c);
  const double h = std::abs(ctx.H);
  const double disc = nd * nd * ctx.H * ctx.H + 4.0 * (nd - 1.0) * ctx.c;
  const double root = std::sqrt(disc);
  const double pref = std::sqrt(nd) / (2.0 * std::sqrt(nd - 1.0));
  // root - (n-2)h cancels for large |H|; root^2 - (n-2)^2 H^2 = 4(n-1)(H^2 + c).
  const double diff = 4.0 * (nd - 1.0) * (ctx.H * ctx.H + ctx.c) / (root + (nd - 2.0) * h);
  return pref * diff;
}

double scalar_curvature_bound(const BoundContext& ctx) {
  require_elliptic(ctx);
  const double nd = ctx.n;
  const double h = std::abs(ctx.H);
  const double root = std::sqrt(nd * nd * ctx.H * ctx.H + 4.0 * (nd - 1.0) * ctx.c);
  return nd * (nd - 2.0) / (2.0 * (nd - 1.0)) * (2.0 * (nd - 1.0) * ctx.c + nd * ctx.H * ctx.H + h * root);
}

double bound_identity_check(const BoundContext& ctx) {
  const double a = alpha_H(ctx);
  const double nd = ctx.n;
  return nd * (nd - 1.0) * (ctx.c + ctx.H * ctx.H) - a * a - scalar_curvature_bound(ctx);
}

double bound_identity_tolerance(const BoundContext& ctx) {
  const double nd = ctx.n;
  return 1e-10 * std::max(1.0, nd * nd * (ctx.H * ctx.H + std::abs(ctx.c)));
}

}  // namespace cmc

#pragma once

/**
 * @file bounds.hpp
 * @brief Okumura's inequality, the polynomial P_H, the gap constant alpha_H
 * and the sharp upper bound for the infimum of the scalar curvature.
 *
 * All formulas admit n = 2, where they degenerate: the Okumura bound is 0
 * (tr Phi^3 = 0 for trace-free 2x2), alpha_H = sqrt(2(c + H^2)) and the
 * scalar bound is 0.
 */

#include <span>
#include <vector>

namespace cmc {

struct BoundContext {
  int n = 3;
  int c = 0;
  double H = 0.0;
};

enum class EqualitySide { None, Upper, Lower, Both };

const char* to_string(EqualitySide side);

struct OkumuraReport {
  std::vector<double> values;
  double sum_squares = 0.0;
  double sum_cubes = 0.0;
  double upper_bound = 0.0;
  double lower_bound = 0.0;
  /// min(upper - sum_cubes, sum_cubes - lower); negative means a violation.
  double slack = 0.0;
  bool holds = true;
  EqualitySide equality_side = EqualitySide::None;
};

/// (n-2)/sqrt(n(n-1)), the Okumura constant.
double okumura_constant(int n);

/// Checks -C (sum a^2)^{3/2} <= sum a^3 <= C (sum a^2)^{3/2} for a trace-free
/// tuple. Equality on the upper (lower) side is reported iff n-1 of the
/// entries are nonpositive (nonnegative) and equal within tol.
/// Throws NotTraceFree when |sum a| > tol * max(1, sum |a|).
OkumuraReport okumura_check(std::span<const double> a, double tol);

/// P_H(x) = x^2 + (n(n-2)/sqrt(n(n-1))) |H| x - n(c + H^2).
double p_H_eval(const BoundContext& ctx, double x);

/// Unique positive root of P_H. Throws NonElliptic unless H^2 + c > 0.
double alpha_H(const BoundContext& ctx);

/// Sharp upper bound for inf S in the non-umbilical case,
/// n(n-2)/(2(n-1)) (2(n-1)c + nH^2 + |H| sqrt(n^2 H^2 + 4(n-1)c)).
double scalar_curvature_bound(const BoundContext& ctx);

/// n(n-1)(c + H^2) - alpha_H^2 - scalar_curvature_bound; zero up to rounding.
double bound_identity_check(const BoundContext& ctx);

/// Tolerance the identity is held to: 1e-10 * max(1, n^2 (H^2 + |c|)).
double bound_identity_tolerance(const BoundContext& ctx);

}  // namespace cmc

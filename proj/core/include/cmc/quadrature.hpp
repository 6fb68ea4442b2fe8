#pragma once

#include <functional>

namespace cmc {

/// Adaptive Simpson quadrature of f over [a, b] with absolute tolerance tol.
/// Intervals are bisected until the local Richardson error estimate meets its
/// share of tol. Throws NonConvergence past 10^6 subdivisions.
double adaptive_quadrature(const std::function<double(double)>& f, double a, double b, double tol);

}  // namespace cmc

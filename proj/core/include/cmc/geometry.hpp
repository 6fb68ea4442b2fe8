#pragma once

/**
 * @file geometry.hpp
 * @brief Extrinsic and intrinsic geometry of a hypersurface chart.
 *
 * A chart psi: U subset R^n -> M^{n+1}_c is evaluated in second-order jet
 * arithmetic, which gives the first and second fundamental forms (and the
 * first derivatives of the metric) exactly. Everything of third order, such
 * as Laplacians of derived scalars or covariant derivatives of the traceless
 * second fundamental form, is obtained by fourth-order central differences of
 * those jet-exact quantities.
 *
 * Conventions:
 *  - A_ij = <d_i d_j psi, N> using the flat ambient second derivative. For
 *    c = +-1 the space-form correction is a multiple of psi and <psi, N> = 0.
 *  - N is flipped so that H >= 0 whenever |H| > 1e-12; otherwise it follows
 *    the determinant rule of nullspace_unit.
 *  - R(X,Y)Z is the Gauss-equation tensor with
 *    R(X,Y)Z = c(<X,Z>Y - <Y,Z>X) on a space form, so the sectional
 *    curvature of the plane X^Y is <R(X,Y)X, Y> / |X^Y|^2 and
 *    Ric(X,Y) = tr(Z -> R(X,Z)Y).
 */

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cmc/jet.hpp"
#include "cmc/linalg.hpp"
#include "cmc/spaceform.hpp"

namespace cmc {

using ChartPoint = std::vector<double>;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  /// Periodic axes may be sampled past [lo, hi]; the chart formula must
  /// remain valid there (geometry repeats, the point need not).
  bool periodic = false;
};

class ImmersionChart {
 public:
  /// Maps seeded coordinate jets u_1..u_n to the ambient components of psi.
  using Evaluator = std::function<std::vector<Jet2>(std::span<const Jet2> coords)>;

  ImmersionChart(AmbientSpace space, std::vector<Interval> domain, Evaluator eval, std::string label = {});

  const AmbientSpace& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return domain_.size(); }
  const std::vector<Interval>& domain() const noexcept { return domain_; }
  const std::string& label() const noexcept { return label_; }

  std::vector<Jet2> evaluate(std::span<const double> u) const;
  AmbientVector point(std::span<const double> u) const;

  /// Non-periodic coordinates must lie inside their interval.
  bool contains(std::span<const double> u) const;

 private:
  AmbientSpace space_;
  std::vector<Interval> domain_;
  Evaluator eval_;
  std::string label_;
};

/// Tensor-product sample grid: periodic axes at lo + i (hi-lo)/g, the
/// others at cell centres. When g^n exceeds max_points, the first max_points
/// points of a Halton sequence are used instead, with non-periodic axes
/// restricted to the hull of the cell centres.
std::vector<ChartPoint> sample_grid(const ImmersionChart& chart, std::size_t per_axis, std::size_t max_points = 4096);

struct ShapeData {
  ChartPoint u;
  int c = 0;
  int n = 0;
  AmbientVector position;
  SymMatrix g;
  SymMatrix g_inv;
  /// dg[k](i, j) = d_k g_ij, exact from the jets.
  std::vector<SymMatrix> dg;
  double sqrt_det_g = 0.0;
  AmbientVector N;
  SymMatrix A;
  Matrix W;  ///< shape operator g^{-1} A
  double H = 0.0;
  Matrix phi;  ///< W - H Id
  SymMatrix phi_lowered;  ///< A - H g
  double phi_norm2 = 0.0;
  std::vector<double> kappas;  ///< ascending
  double S = 0.0;
};

ShapeData shape_data_at(const ImmersionChart& chart, std::span<const double> u);

/// Same point with the opposite unit normal (kappas, H, A, phi negated).
ShapeData with_flipped_normal(const ShapeData& sd);

/// Gamma^k_ij stored at [(k * n + i) * n + j].
std::vector<double> christoffel_symbols(const ShapeData& sd);

std::vector<double> curvature_tensor(const ShapeData& sd, std::span<const double> x, std::span<const double> y,
                                     std::span<const double> z);

/// <R(X,Y)X, Y> / (|X|^2 |Y|^2 - <X,Y>^2)
double sectional_curvature(const ShapeData& sd, std::span<const double> x, std::span<const double> y);

/// Closed Gauss-equation form (n-1)(c+H^2)<X,Y> + (n-2)H<PhiX,Y> - <PhiX,PhiY>.
double ricci(const ShapeData& sd, std::span<const double> x, std::span<const double> y);

/// Ric(X,Y) by contracting curvature_tensor over a g-orthonormal frame.
double ricci_from_curvature(const ShapeData& sd, std::span<const double> x, std::span<const double> y);

/// Scalar curvature from the double contraction of curvature_tensor.
double scalar_from_curvature(const ShapeData& sd);

struct ScalarField {
  std::string name;
  std::function<double(const ShapeData&)> eval;

  double operator()(const ShapeData& sd) const { return eval(sd); }

  static ScalarField phi_norm2();
  static ScalarField mean_curvature();
  static ScalarField scalar_curvature();
  static ScalarField constant(double value);
};

/// Default finite-difference step, 1e-3 unless CMC_FD_STEP is set.
double default_fd_step();

double laplace_beltrami(const ImmersionChart& chart, const ScalarField& field, std::span<const double> u, double h);

double grad_norm(const ImmersionChart& chart, const ScalarField& field, std::span<const double> u, double h);

/// |nabla Phi|^2, clamped at zero once the finite-difference noise is below 1e-8.
double nabla_phi_norm2(const ImmersionChart& chart, std::span<const double> u, double h);

struct SimonsTerms {
  double half_laplacian = 0.0;  ///< (1/2) Delta |Phi|^2
  double nabla_phi2 = 0.0;      ///< |nabla Phi|^2
  double cubic = 0.0;           ///< n H tr(Phi^3)
  double quartic = 0.0;         ///< |Phi|^2 (|Phi|^2 - n(c + H^2))
  double residual = 0.0;        ///< half_laplacian - (nabla_phi2 + cubic - quartic)
  double mean_curvature_spread = 0.0;
};

SimonsTerms simons_terms(const ImmersionChart& chart, std::span<const double> u, double h);

double simons_residual(const ImmersionChart& chart, std::span<const double> u, double h);

/// Intrinsic Gauss curvature of an orthogonal surface chart from E, G alone.
double intrinsic_gauss_n2(const ImmersionChart& chart, std::span<const double> u, double h);

}  // namespace cmc

#pragma once

/**
 * @file catalog.hpp
 * @brief Closed-form CMC model hypersurfaces.
 *
 * Each model is available as an ImmersionChart (the thing under test) and
 * through its analytic invariants (the reference). Families:
 *
 *  - euclidean-product   R^{n-k} x S^k(r)                      in R^{n+1}
 *  - sphere-product      S^1(sqrt(1-r^2)) x S^{n-1}(r)         in S^{n+1}
 *  - clifford            S^k(sqrt(k/n)) x S^{n-k}(sqrt((n-k)/n)) in S^{n+1}
 *  - hyperbolic-cylinder H^{n-k}(-sqrt(1+r^2)) x S^k(r), k in {1, n-1}, in H^{n+1}
 *  - unduloid            Delaunay unduloid with mean curvature H, 0 < B < 1, in R^3
 *  - umbilical-sphere    geodesic sphere of Euclidean radius r in M^{n+1}_c
 *
 * Canonical text form: `family:key=value,...`, e.g.
 * `euclidean-product:n=3,k=2,r=1` or `unduloid:H=1,B=0.5`.
 */

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cmc/geometry.hpp"

namespace cmc {

struct EuclideanProduct {
  int n = 3;
  int k = 1;
  double r = 1.0;
};

struct SphereProduct {
  int n = 3;
  double r = 0.5;
};

struct CliffordTorus {
  int n = 3;
  int k = 1;
};

struct HyperbolicCylinder {
  int n = 3;
  int k = 1;
  double r = 1.0;
};

struct Unduloid {
  double H = 1.0;
  double B = 0.5;
};

struct UmbilicalSphere {
  int n = 3;
  int c = 0;
  double r = 1.0;
};

using ModelSpec = std::variant<EuclideanProduct, SphereProduct, CliffordTorus, HyperbolicCylinder, Unduloid,
                               UmbilicalSphere>;

enum class Branch { Umbilical, Equality, Strict };

std::string_view to_string(Branch b);

/// Family name as used in the text form ("euclidean-product", ...).
std::string_view family_name(const ModelSpec& m);
int model_dimension(const ModelSpec& m);
int model_curvature(const ModelSpec& m);

/// Throws InvalidParameters with a message naming the violated range.
void validate(const ModelSpec& m);

/// Parses the canonical text form. Throws ParseError naming the offending
/// token, or InvalidParameters when the values are out of range.
ModelSpec parse_model_spec(std::string_view text);

/// Canonical text with shortest round-trip numbers.
std::string format_model_spec(const ModelSpec& m);
/// Parameter part only ("n=3,k=2,r=1").
std::string format_params(const ModelSpec& m);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

/// Margin kept from the poles of nested spherical angle coordinates.
inline constexpr double kPoleMargin = 1e-3;

ImmersionChart build_chart(const ModelSpec& m);

struct ClosedForm {
  /// Principal curvatures, ascending. Constant-|Phi| models: everywhere;
  /// unduloid: at the points where |Phi| is largest.
  std::vector<double> kappas;
  double H_signed = 0.0;
  double abs_H = 0.0;
  /// |Phi| for constant-|Phi| models, sup |Phi| for the unduloid.
  double phi_norm = 0.0;
  bool constant_phi = true;
  std::optional<double> alpha_H;  ///< undefined when H^2 + c <= 0
  std::optional<Branch> branch_prediction;
};

ClosedForm closed_form_invariants(const ModelSpec& m);

/// Pointwise closed forms at a chart point (principal curvatures ascending,
/// |H| and |Phi|). Equal to closed_form_invariants for constant-|Phi| models.
struct PointwiseClosedForm {
  std::vector<double> kappas;
  double abs_H = 0.0;
  double phi_norm = 0.0;
};
PointwiseClosedForm closed_form_at(const ModelSpec& m, std::span<const double> u);

struct UnduloidProfile {
  double x = 0.0;
  double y = 0.0;
  double dy = 0.0;
  double d2y = 0.0;
};

UnduloidProfile unduloid_profile(double H, double B, double s, double tol = 1e-10);

/// Integrand of x_B, (1 + B sin 2Hs) / sqrt(1 + B^2 + 2B sin 2Hs).
double unduloid_dx(double H, double B, double s);

double unduloid_K(double H, double B, double s);
double unduloid_inf_K(double H, double B);

/// Meridian and parallel principal curvatures (w.r.t. the inward normal).
std::pair<double, double> unduloid_kappas(double H, double B, double s);

/// B in (0, 1) with inf K_B = -eps.
double solve_B_for_inf_K(double H, double eps);

enum class RadiusBranch { Minus, Plus };

/// Radius realising a given |H|. Sphere products (c = 1) use `branch`
/// (Minus: r^2 <= (n-1)/n, Plus: r^2 > (n-1)/n); hyperbolic cylinders
/// (c = -1, k in {1, n-1}) have a single admissible root and need H^2 > 1.
double r_from_H_sphere(int n, double abs_H, RadiusBranch branch);
double r_from_H_hyperbolic(int n, int k, double abs_H);

/// Signed mean curvature of the sphere product, (n r^2 - (n-1)) / (n r sqrt(1-r^2)).
double sphere_product_H(int n, double r);
/// (n r^2 + k) / (n r sqrt(1+r^2)).
double hyperbolic_cylinder_H(int n, int k, double r);

/// The standard parameter grid used by reports and acceptance runs,
/// at least five models per family.
std::vector<ModelSpec> default_parameter_grid(std::string_view family);
std::vector<std::string> all_families();

}  // namespace cmc

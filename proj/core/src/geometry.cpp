#include "cmc/geometry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "cmc/errors.hpp"

namespace cmc {

ImmersionChart::ImmersionChart(AmbientSpace space, std::vector<Interval> domain, Evaluator eval, std::string label)
    : space_(space), domain_(std::move(domain)), eval_(std::move(eval)), label_(std::move(label)) {
  if (domain_.size() != static_cast<std::size_t>(space_.n())) {
    throw SizeMismatch("chart dimension " + std::to_string(domain_.size()) + " differs from n = " +
                       std::to_string(space_.n()));
  }
  for (const auto& iv : domain_) {
    if (!(iv.lo < iv.hi)) throw InvalidParameters("chart interval must satisfy lo < hi");
  }
}

std::vector<Jet2> ImmersionChart::evaluate(std::span<const double> u) const {
  if (u.size() != dim()) throw SizeMismatch("chart point has the wrong dimension");
  std::vector<Jet2> coords;
  coords.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) coords.push_back(Jet2::variable(u[i], dim(), i));
  std::vector<Jet2> out = eval_(coords);
  if (out.size() != space_.ambient_dim()) {
    throw SizeMismatch("chart returned " + std::to_string(out.size()) + " components, ambient dimension is " +
                       std::to_string(space_.ambient_dim()));
  }
  return out;
}

AmbientVector ImmersionChart::point(std::span<const double> u) const {
  const auto jets = evaluate(u);
  AmbientVector p(jets.size());
  for (std::size_t a = 0; a < jets.size(); ++a) p[a] = jets[a].value();
  return p;
}

bool ImmersionChart::contains(std::span<const double> u) const {
  if (u.size() != dim()) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (domain_[i].periodic) continue;
    if (u[i] < domain_[i].lo || u[i] > domain_[i].hi) return false;
  }
  return true;
}

namespace {

double halton(std::size_t index, unsigned base) {
  double f = 1.0;
  double r = 0.0;
  while (index > 0) {
    f /= base;
    r += f * static_cast<double>(index % base);
    index /= base;
  }
  return r;
}

constexpr std::array<unsigned, 16> kPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

}  // namespace

std::vector<ChartPoint> sample_grid(const ImmersionChart& chart, std::size_t per_axis, std::size_t max_points) {
  if (per_axis == 0) throw InvalidParameters("grid resolution must be positive");
  const std::size_t n = chart.dim();
  const auto& dom = chart.domain();

  double total = 1.0;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(per_axis);

  std::vector<ChartPoint> points;
  if (total <= static_cast<double>(max_points)) {
    const auto count = static_cast<std::size_t>(total);
    points.reserve(count);
    for (std::size_t idx = 0; idx < count; ++idx) {
      ChartPoint u(n);
      std::size_t rest = idx;
      for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(rest % per_axis);
        rest /= per_axis;
        const double frac = dom[i].periodic ? t / per_axis : (t + 0.5) / per_axis;
        u[i] = dom[i].lo + frac * (dom[i].hi - dom[i].lo);
      }
      points.push_back(std::move(u));
    }
    return points;
  }

  points.reserve(max_points);
  for (std::size_t idx = 1; idx <= max_points; ++idx) {
    ChartPoint u(n);
    for (std::size_t i = 0; i < n; ++i) {
      // Non-periodic axes stay within the hull of the cell centres.
      const double q = halton(idx, kPrimes[i]);
      const double frac = dom[i].periodic ? q : (0.5 + q * (per_axis - 1.0)) / per_axis;
      u[i] = dom[i].lo + frac * (dom[i].hi - dom[i].lo);
    }
    points.push_back(std::move(u));
  }
  return points;
}

ShapeData shape_data_at(const ImmersionChart& chart, std::span<const double> u) {
  const auto jets = chart.evaluate(u);
  const AmbientSpace& space = chart.space();
  const BilinearForm form = space.form();
  const std::size_t n = chart.dim();
  const std::size_t dim = jets.size();

  ShapeData sd;
  sd.u.assign(u.begin(), u.end());
  sd.c = space.c();
  sd.n = space.n();
  sd.position.resize(dim);
  for (std::size_t a = 0; a < dim; ++a) sd.position[a] = jets[a].value();

  std::vector<std::vector<double>> tangent(n, std::vector<double>(dim));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < dim; ++a) tangent[i][a] = jets[a].grad(i);
  }
  auto second = [&](std::size_t i, std::size_t j) {
    std::vector<double> v(dim);
    for (std::size_t a = 0; a < dim; ++a) v[a] = jets[a].hess(i, j);
    return v;
  };
  std::vector<std::vector<double>> hess(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      hess[i * n + j] = second(i, j);
      hess[j * n + i] = hess[i * n + j];
    }
  }

  sd.g = SymMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) sd.g(i, j) = apply_form(form, tangent[i], tangent[j]);
  }
  sd.dg.assign(n, SymMatrix(n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        sd.dg[k](i, j) = apply_form(form, hess[k * n + i], tangent[j]) + apply_form(form, tangent[i], hess[k * n + j]);
      }
    }
  }

  Matrix chol;
  try {
    chol = cholesky(sd.g);
  } catch (const DegenerateMetric&) {
    throw DegenerateMetric("first fundamental form is not positive definite");
  }
  double det = 1.0;
  for (std::size_t i = 0; i < n; ++i) det *= chol(i, i) * chol(i, i);
  if (!(det > 1e-12)) throw DegenerateMetric("det g = " + std::to_string(det) + " <= 1e-12");
  sd.sqrt_det_g = std::sqrt(det);
  sd.g_inv = inverse_spd(sd.g);

  std::vector<std::vector<double>> rows = tangent;
  if (space.c() != 0) rows.push_back(sd.position);
  sd.N = nullspace_unit(rows, form);

  sd.A = SymMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) sd.A(i, j) = apply_form(form, hess[i * n + j], sd.N);
  }
  sd.W = Matrix(sd.g_inv) * Matrix(sd.A);
  sd.H = sd.W.trace() / static_cast<double>(n);
  if (sd.H < -1e-12) {
    for (double& x : sd.N) x = -x;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) sd.A(i, j) = -sd.A(i, j);
      for (std::size_t j = 0; j < n; ++j) sd.W(i, j) = -sd.W(i, j);
    }
    sd.H = -sd.H;
  }

  sd.phi = sd.W;
  for (std::size_t i = 0; i < n; ++i) sd.phi(i, i) -= sd.H;
  sd.phi_lowered = SymMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) sd.phi_lowered(i, j) = sd.A(i, j) - sd.H * sd.g(i, j);
  }
  sd.phi_norm2 = (sd.phi * sd.phi).trace();

  // Principal curvatures from the symmetric form L^{-1} A L^{-T}.
  Matrix linv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j; i < n; ++i) {
      double s = (i == j) ? 1.0 : 0.0;
      for (std::size_t k = j; k < i; ++k) s -= chol(i, k) * linv(k, j);
      linv(i, j) = s / chol(i, i);
    }
  }
  SymMatrix sym(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t a = 0; a <= i; ++a) {
        for (std::size_t b = 0; b <= j; ++b) s += linv(i, a) * sd.A(a, b) * linv(j, b);
      }
      sym(i, j) = s;
    }
  }
  sd.kappas = sym_eigenvalues(sym);

  const double nd = static_cast<double>(n);
  sd.S = nd * (nd - 1.0) * (sd.c + sd.H * sd.H) - sd.phi_norm2;
  return sd;
}

ShapeData with_flipped_normal(const ShapeData& sd) {
  ShapeData out = sd;
  const std::size_t n = static_cast<std::size_t>(sd.n);
  for (double& x : out.N) x = -x;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      out.A(i, j) = -out.A(i, j);
      out.phi_lowered(i, j) = -out.phi_lowered(i, j);
    }
    for (std::size_t j = 0; j < n; ++j) {
      out.W(i, j) = -out.W(i, j);
      out.phi(i, j) = -out.phi(i, j);
    }
  }
  out.H = -out.H;
  for (double& k : out.kappas) k = -k;
  std::reverse(out.kappas.begin(), out.kappas.end());
  return out;
}

std::vector<double> christoffel_symbols(const ShapeData& sd) {
  const std::size_t n = static_cast<std::size_t>(sd.n);
  std::vector<double> gamma(n * n * n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t l = 0; l < n; ++l) {
          s += sd.g_inv(k, l) * (sd.dg[i](j, l) + sd.dg[j](i, l) - sd.dg[l](i, j));
        }
        gamma[(k * n + i) * n + j] = 0.5 * s;
      }
    }
  }
  return gamma;
}

namespace {

void check_vector(const ShapeData& sd, std::span<const double> v) {
  if (v.size() != static_cast<std::size_t>(sd.n)) throw SizeMismatch("tangent vector has the wrong length");
}

}  // namespace

std::vector<double> curvature_tensor(const ShapeData& sd, std::span<const double> x, std::span<const double> y,
                                     std::span<const double> z) {
  check_vector(sd, x);
  check_vector(sd, y);
  check_vector(sd, z);
  const std::size_t n = static_cast<std::size_t>(sd.n);
  const std::vector<double> px = sd.phi.apply(x);
  const std::vector<double> py = sd.phi.apply(y);
  const double xz = sd.g.bilinear(x, z);
  const double yz = sd.g.bilinear(y, z);
  const double pxz = sd.phi_lowered.bilinear(x, z);
  const double pyz = sd.phi_lowered.bilinear(y, z);
  const double k = sd.c + sd.H * sd.H;

  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = k * (xz * y[i] - yz * x[i]) + pxz * py[i] - pyz * px[i] +
           sd.H * (pxz * y[i] - yz * px[i] + xz * py[i] - pyz * x[i]);
  }
  return r;
}

double sectional_curvature(const ShapeData& sd, std::span<const double> x, std::span<const double> y) {
  const std::vector<double> r = curvature_tensor(sd, x, y, x);
  const double area2 = sd.g.bilinear(x, x) * sd.g.bilinear(y, y) - std::pow(sd.g.bilinear(x, y), 2);
  if (!(area2 > 0.0)) throw DomainError("sectional curvature of a degenerate plane");
  return sd.g.bilinear(r, y) / area2;
}

double ricci(const ShapeData& sd, std::span<const double> x, std::span<const double> y) {
  check_vector(sd, x);
  check_vector(sd, y);
  const double nd = sd.n;
  const std::vector<double> px = sd.phi.apply(x);
  const std::vector<double> py = sd.phi.apply(y);
  return (nd - 1.0) * (sd.c + sd.H * sd.H) * sd.g.bilinear(x, y) + (nd - 2.0) * sd.H * sd.phi_lowered.bilinear(x, y) -
         sd.g.bilinear(px, py);
}

double ricci_from_curvature(const ShapeData& sd, std::span<const double> x, std::span<const double> y) {
  const std::size_t n = static_cast<std::size_t>(sd.n);
  double trace = 0.0;
  std::vector<double> e(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(e.begin(), e.end(), 0.0);
    e[i] = 1.0;
    trace += curvature_tensor(sd, x, e, y)[i];
  }
  return trace;
}

double scalar_from_curvature(const ShapeData& sd) {
  const std::size_t n = static_cast<std::size_t>(sd.n);
  double s = 0.0;
  std::vector<double> ei(n), ej(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(ei.begin(), ei.end(), 0.0);
      std::fill(ej.begin(), ej.end(), 0.0);
      ei[i] = 1.0;
      ej[j] = 1.0;
      s += sd.g_inv(i, j) * ricci_from_curvature(sd, ei, ej);
    }
  }
  return s;
}

ScalarField ScalarField::phi_norm2() {
  return {"phi_norm2", [](const ShapeData& sd) { return sd.phi_norm2; }};
}

ScalarField ScalarField::mean_curvature() {
  return {"mean_curvature", [](const ShapeData& sd) { return sd.H; }};
}

ScalarField ScalarField::scalar_curvature() {
  return {"scalar_curvature", [](const ShapeData& sd) { return sd.S; }};
}

ScalarField ScalarField::constant(double value) {
  return {"constant", [value](const ShapeData&) { return value; }};
}

double default_fd_step() {
  if (const char* env = std::getenv("CMC_FD_STEP")) {
    char* end = nullptr;
    const double h = std::strtod(env, &end);
    if (end != env && *end == '\0' && h > 0.0 && std::isfinite(h)) return h;
    throw InvalidParameters(std::string("CMC_FD_STEP is not a positive number: ") + env);
  }
  return 1e-3;
}

namespace {

double checked_step(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidParameters("finite-difference step must be positive");
  return h;
}

/// Evaluates shape data at u + sum(offset_i * h * e_i), keeping the normal
/// on the same side as the reference point so that A is continuous.
class Stencil {
 public:
  Stencil(const ImmersionChart& chart, std::span<const double> u, double h)
      : chart_(chart), u_(u.begin(), u.end()), h_(checked_step(h)) {
    if (!chart_.contains(u_)) throw DomainExceeded("point lies outside the chart domain");
    center_ = shape_data_at(chart_, u_);
  }

  double step() const noexcept { return h_; }
  const ShapeData& center() const noexcept { return center_; }

  ShapeData at(std::size_t i, int a, std::size_t j = 0, int b = 0) const {
    ChartPoint v = u_;
    v[i] += a * h_;
    if (b != 0) v[j] += b * h_;
    if (!chart_.contains(v)) {
      throw DomainExceeded("finite-difference stencil leaves the chart domain along axis " + std::to_string(i) +
                           (b != 0 ? " or " + std::to_string(j) : std::string{}));
    }
    ShapeData sd = shape_data_at(chart_, v);
    if (apply_form(chart_.space().form(), sd.N, center_.N) < 0.0) sd = with_flipped_normal(sd);
    return sd;
  }

 private:
  const ImmersionChart& chart_;
  ChartPoint u_;
  double h_;
  ShapeData center_;
};

// Fourth-order central stencils.
double d1(double fm2, double fm1, double fp1, double fp2, double h) {
  return (8.0 * (fp1 - fm1) - (fp2 - fm2)) / (12.0 * h);
}

double d2(double fm2, double fm1, double f0, double fp1, double fp2, double h) {
  // Differences against f0 first, so roundoff scales with the variation of f, not its size.
  return (16.0 * ((fp1 - f0) + (fm1 - f0)) - ((fp2 - f0) + (fm2 - f0))) / (12.0 * h * h);
}

struct FieldDerivatives {
  std::vector<double> gradient;
  std::vector<double> hessian;  // n x n, empty if not requested
  double h_min = 0.0;
  double h_max = 0.0;
};

FieldDerivatives field_derivatives(const Stencil& st, const ScalarField& field, bool with_hessian) {
  const ShapeData& c0 = st.center();
  const std::size_t n = static_cast<std::size_t>(c0.n);
  const double h = st.step();
  const double f0 = field(c0);

  FieldDerivatives out;
  out.gradient.assign(n, 0.0);
  out.h_min = c0.H;
  out.h_max = c0.H;
  if (with_hessian) out.hessian.assign(n * n, 0.0);

  auto eval = [&](std::size_t i, int a, std::size_t j = 0, int b = 0) {
    const ShapeData sd = st.at(i, a, j, b);
    out.h_min = std::min(out.h_min, sd.H);
    out.h_max = std::max(out.h_max, sd.H);
    return field(sd);
  };

  for (std::size_t i = 0; i < n; ++i) {
    const double fm2 = eval(i, -2);
    const double fm1 = eval(i, -1);
    const double fp1 = eval(i, 1);
    const double fp2 = eval(i, 2);
    out.gradient[i] = d1(fm2, fm1, fp1, fp2, h);
    if (with_hessian) out.hessian[i * n + i] = d2(fm2, fm1, f0, fp1, fp2, h);
  }
  if (!with_hessian) return out;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto mixed = [&](int s) {
        return (eval(i, s, j, s) - eval(i, s, j, -s) - eval(i, -s, j, s) + eval(i, -s, j, -s)) /
               (4.0 * s * s * h * h);
      };
      const double value = (4.0 * mixed(1) - mixed(2)) / 3.0;
      out.hessian[i * n + j] = value;
      out.hessian[j * n + i] = value;
    }
  }
  return out;
}

double laplacian_from(const ShapeData& sd, const FieldDerivatives& d) {
  const std::size_t n = static_cast<std::size_t>(sd.n);
  const std::vector<double> gamma = christoffel_symbols(sd);
  double lap = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double term = d.hessian[i * n + j];
      for (std::size_t k = 0; k < n; ++k) term -= gamma[(k * n + i) * n + j] * d.gradient[k];
      lap += sd.g_inv(i, j) * term;
    }
  }
  return lap;
}

double nabla_phi_from(const Stencil& st) {
  const ShapeData& c0 = st.center();
  const std::size_t n = static_cast<std::size_t>(c0.n);
  const double h = st.step();
  const std::vector<double> gamma = christoffel_symbols(c0);

  // dphi[(k * n + i) * n + j] = d_k phi_ij
  std::vector<double> dphi(n * n * n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const ShapeData m2 = st.at(k, -2);
    const ShapeData m1 = st.at(k, -1);
    const ShapeData p1 = st.at(k, 1);
    const ShapeData p2 = st.at(k, 2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        dphi[(k * n + i) * n + j] =
            d1(m2.phi_lowered(i, j), m1.phi_lowered(i, j), p1.phi_lowered(i, j), p2.phi_lowered(i, j), h);
      }
    }
  }

  std::vector<double> cov(n * n * n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double v = dphi[(k * n + i) * n + j];
        for (std::size_t l = 0; l < n; ++l) {
          v -= gamma[(l * n + k) * n + i] * c0.phi_lowered(l, j);
          v -= gamma[(l * n + k) * n + j] * c0.phi_lowered(i, l);
        }
        cov[(k * n + i) * n + j] = v;
      }
    }
  }

  // Raise all three indices, then contract.
  std::vector<double> raised = cov;
  for (int pass = 0; pass < 3; ++pass) {
    std::vector<double> next(n * n * n, 0.0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          double s = 0.0;
          for (std::size_t l = 0; l < n; ++l) {
            const std::size_t idx = pass == 0   ? (l * n + b) * n + c
                                    : pass == 1 ? (a * n + l) * n + c
                                                : (a * n + b) * n + l;
            const std::size_t free = pass == 0 ? a : pass == 1 ? b : c;
            s += c0.g_inv(free, l) * raised[idx];
          }
          next[(a * n + b) * n + c] = s;
        }
      }
    }
    raised = std::move(next);
  }
  double norm2 = 0.0;
  for (std::size_t p = 0; p < cov.size(); ++p) norm2 += cov[p] * raised[p];
  return norm2;
}

}  // namespace

double laplace_beltrami(const ImmersionChart& chart, const ScalarField& field, std::span<const double> u, double h) {
  const Stencil st(chart, u, h);
  return laplacian_from(st.center(), field_derivatives(st, field, true));
}

double grad_norm(const ImmersionChart& chart, const ScalarField& field, std::span<const double> u, double h) {
  const Stencil st(chart, u, h);
  const FieldDerivatives d = field_derivatives(st, field, false);
  const double g2 = st.center().g_inv.bilinear(d.gradient, d.gradient);
  return std::sqrt(std::max(0.0, g2));
}

double nabla_phi_norm2(const ImmersionChart& chart, std::span<const double> u, double h) {
  const Stencil st(chart, u, h);
  const double v = nabla_phi_from(st);
  return v < 0.0 && v >= -1e-8 ? 0.0 : v;
}

SimonsTerms simons_terms(const ImmersionChart& chart, std::span<const double> u, double h) {
  const Stencil st(chart, u, h);
  const ShapeData& c0 = st.center();
  const FieldDerivatives d = field_derivatives(st, ScalarField::phi_norm2(), true);

  SimonsTerms t;
  t.mean_curvature_spread = d.h_max - d.h_min;
  if (!(t.mean_curvature_spread < 1e-7)) {
    throw NonConstantMeanCurvature("mean curvature varies by " + std::to_string(t.mean_curvature_spread) +
                                   " across the stencil");
  }
  const double nd = c0.n;
  const Matrix phi3 = c0.phi * c0.phi * c0.phi;
  t.half_laplacian = 0.5 * laplacian_from(c0, d);
  t.nabla_phi2 = nabla_phi_from(st);
  t.cubic = nd * c0.H * phi3.trace();
  t.quartic = c0.phi_norm2 * (c0.phi_norm2 - nd * (c0.c + c0.H * c0.H));
  t.residual = t.half_laplacian - (t.nabla_phi2 + t.cubic - t.quartic);
  return t;
}

double simons_residual(const ImmersionChart& chart, std::span<const double> u, double h) {
  return simons_terms(chart, u, h).residual;
}

double intrinsic_gauss_n2(const ImmersionChart& chart, std::span<const double> u, double h) {
  if (chart.dim() != 2) throw NotSurface("intrinsic Gauss curvature needs a 2-dimensional chart");
  const Stencil st(chart, u, h);
  const double step = st.step();

  auto check = [](const ShapeData& sd) {
    if (std::abs(sd.g(0, 1)) > 1e-10) {
      throw NonOrthogonalChart("g_12 = " + std::to_string(sd.g(0, 1)) + " exceeds 1e-10");
    }
  };
  // P = G_1 / sqrt(EG) differentiated along axis 0, Q = E_2 / sqrt(EG) along axis 1.
  auto p_of = [](const ShapeData& sd) { return sd.dg[0](1, 1) / std::sqrt(sd.g(0, 0) * sd.g(1, 1)); };
  auto q_of = [](const ShapeData& sd) { return sd.dg[1](0, 0) / std::sqrt(sd.g(0, 0) * sd.g(1, 1)); };

  const ShapeData& c0 = st.center();
  check(c0);
  std::array<double, 4> p{}, q{};
  const std::array<int, 4> offsets{-2, -1, 1, 2};
  for (std::size_t s = 0; s < 4; ++s) {
    const ShapeData a = st.at(0, offsets[s]);
    const ShapeData b = st.at(1, offsets[s]);
    check(a);
    check(b);
    p[s] = p_of(a);
    q[s] = q_of(b);
  }
  const double dp = d1(p[0], p[1], p[2], p[3], step);
  const double dq = d1(q[0], q[1], q[2], q[3], step);
  return -(dp + dq) / (2.0 * std::sqrt(c0.g(0, 0) * c0.g(1, 1)));
}

}  // namespace cmc

#include "cmc/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "cmc/bounds.hpp"
#include "cmc/errors.hpp"
#include "cmc/quadrature.hpp"

namespace cmc {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidParameters(message);
}

void check_n(int n) { require(n >= 2 && n <= static_cast<int>(kMaxChartDim), "n must lie in [2, 16]"); }

void check_radius(double r) { require(std::isfinite(r) && r > 0.0, "r must be positive"); }

}  // namespace

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::Umbilical: return "umbilical";
    case Branch::Equality: return "equality";
    case Branch::Strict: return "strict";
  }
  return "strict";
}

std::string_view family_name(const ModelSpec& m) {
  return std::visit(overloaded{
                        [](const EuclideanProduct&) { return std::string_view("euclidean-product"); },
                        [](const SphereProduct&) { return std::string_view("sphere-product"); },
                        [](const CliffordTorus&) { return std::string_view("clifford"); },
                        [](const HyperbolicCylinder&) { return std::string_view("hyperbolic-cylinder"); },
                        [](const Unduloid&) { return std::string_view("unduloid"); },
                        [](const UmbilicalSphere&) { return std::string_view("umbilical-sphere"); },
                    },
                    m);
}

int model_dimension(const ModelSpec& m) {
  return std::visit(overloaded{
                        [](const Unduloid&) { return 2; },
                        [](const auto& x) { return x.n; },
                    },
                    m);
}

int model_curvature(const ModelSpec& m) {
  return std::visit(overloaded{
                        [](const EuclideanProduct&) { return 0; },
                        [](const SphereProduct&) { return 1; },
                        [](const CliffordTorus&) { return 1; },
                        [](const HyperbolicCylinder&) { return -1; },
                        [](const Unduloid&) { return 0; },
                        [](const UmbilicalSphere& s) { return s.c; },
                    },
                    m);
}

void validate(const ModelSpec& m) {
  std::visit(overloaded{
                 [](const EuclideanProduct& p) {
                   check_n(p.n);
                   require(p.k >= 1 && p.k <= p.n - 1, "k must lie in [1, n-1]");
                   check_radius(p.r);
                 },
                 [](const SphereProduct& p) {
                   check_n(p.n);
                   require(std::isfinite(p.r) && p.r > 0.0 && p.r < 1.0, "r must lie in (0,1)");
                 },
                 [](const CliffordTorus& p) {
                   check_n(p.n);
                   require(p.k >= 1 && p.k <= p.n - 1, "k must lie in [1, n-1]");
                 },
                 [](const HyperbolicCylinder& p) {
                   check_n(p.n);
                   require(p.k == 1 || p.k == p.n - 1, "k must be 1 or n-1");
                   check_radius(p.r);
                 },
                 [](const Unduloid& p) {
                   require(std::isfinite(p.H) && p.H != 0.0, "H must be nonzero");
                   require(std::isfinite(p.B) && p.B > 0.0 && p.B < 1.0, "B must lie in (0,1)");
                 },
                 [](const UmbilicalSphere& p) {
                   check_n(p.n);
                   require(p.c >= -1 && p.c <= 1, "c must be -1, 0 or 1");
                   check_radius(p.r);
                   if (p.c == 1) require(p.r <= 1.0, "r must lie in (0,1] for c=1");
                 },
             },
             m);
}

// ---------------------------------------------------------------------------
// Text form
// ---------------------------------------------------------------------------

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string format_params(const ModelSpec& m) {
  const auto i = [](int v) { return std::to_string(v); };
  const auto d = format_double;
  return std::visit(overloaded{
                        [&](const EuclideanProduct& p) { return "n=" + i(p.n) + ",k=" + i(p.k) + ",r=" + d(p.r); },
                        [&](const SphereProduct& p) { return "n=" + i(p.n) + ",r=" + d(p.r); },
                        [&](const CliffordTorus& p) { return "n=" + i(p.n) + ",k=" + i(p.k); },
                        [&](const HyperbolicCylinder& p) { return "n=" + i(p.n) + ",k=" + i(p.k) + ",r=" + d(p.r); },
                        [&](const Unduloid& p) { return "H=" + d(p.H) + ",B=" + d(p.B); },
                        [&](const UmbilicalSphere& p) { return "n=" + i(p.n) + ",c=" + i(p.c) + ",r=" + d(p.r); },
                    },
                    m);
}

std::string format_model_spec(const ModelSpec& m) {
  return std::string(family_name(m)) + ":" + format_params(m);
}

namespace {

struct ParamValue {
  std::string token;
  std::string value;
};

int parse_int(const ParamValue& p) {
  int v = 0;
  const char* first = p.value.data();
  const char* last = first + p.value.size();
  if (*first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (p.value.empty() || res.ec != std::errc() || res.ptr != last) {
    throw ParseError("expected an integer in '" + p.token + "'", p.token);
  }
  return v;
}

double parse_real(const ParamValue& p) {
  double v = 0.0;
  const char* first = p.value.data();
  const char* last = first + p.value.size();
  if (first != last && *first == '+') ++first;
  const auto res = std::from_chars(first, last, v);
  if (p.value.empty() || res.ec != std::errc() || res.ptr != last) {
    throw ParseError("expected a number in '" + p.token + "'", p.token);
  }
  return v;
}

}  // namespace

ModelSpec parse_model_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("model spec must look like family:key=value,... but got '" + std::string(text) + "'",
                     std::string(text));
  }
  const std::string family(text.substr(0, colon));
  const std::string_view rest = text.substr(colon + 1);

  static const std::map<std::string, std::vector<std::string>, std::less<>> keys{
      {"euclidean-product", {"n", "k", "r"}}, {"sphere-product", {"n", "r"}},
      {"clifford", {"n", "k"}},               {"hyperbolic-cylinder", {"n", "k", "r"}},
      {"unduloid", {"H", "B"}},               {"umbilical-sphere", {"n", "c", "r"}},
  };
  const auto fam = keys.find(family);
  if (fam == keys.end()) throw ParseError("unknown model family '" + family + "'", family);
  const auto& allowed = fam->second;

  std::map<std::string, ParamValue, std::less<>> values;
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    const auto comma = rest.find(',', pos);
    const std::string token(rest.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    pos = comma == std::string_view::npos ? rest.size() + 1 : comma + 1;
    if (token.empty()) {
      if (rest.empty()) break;
      throw ParseError("empty parameter in '" + std::string(rest) + "'", token);
    }
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw ParseError("parameter '" + token + "' is not key=value", token);
    const std::string key = token.substr(0, eq);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ParseError("unknown parameter '" + key + "' for " + family, token);
    }
    if (values.contains(key)) throw ParseError("duplicate parameter '" + key + "'", token);
    values[key] = {token, token.substr(eq + 1)};
  }
  for (const auto& k : allowed) {
    if (!values.contains(k)) throw ParseError("missing parameter '" + k + "' for " + family, k);
  }

  const auto geti = [&](const char* k) { return parse_int(values.at(k)); };
  const auto getd = [&](const char* k) { return parse_real(values.at(k)); };

  ModelSpec m;
  if (family == "euclidean-product") {
    m = EuclideanProduct{geti("n"), geti("k"), getd("r")};
  } else if (family == "sphere-product") {
    m = SphereProduct{geti("n"), getd("r")};
  } else if (family == "clifford") {
    m = CliffordTorus{geti("n"), geti("k")};
  } else if (family == "hyperbolic-cylinder") {
    m = HyperbolicCylinder{geti("n"), geti("k"), getd("r")};
  } else if (family == "unduloid") {
    m = Unduloid{getd("H"), getd("B")};
  } else {
    m = UmbilicalSphere{geti("n"), geti("c"), getd("r")};
  }
  validate(m);
  return m;
}

// ---------------------------------------------------------------------------
// Charts
// ---------------------------------------------------------------------------

namespace {

/// Nested spherical angles: s_1 = (cos t1, sin t1), s_m = (cos t_m s_{m-1}, sin t_m).
std::vector<Jet2> sphere_jets(std::span<const Jet2> t) {
  std::vector<Jet2> out{cos(t[0]), sin(t[0])};
  for (std::size_t m = 1; m < t.size(); ++m) {
    const Jet2 c = cos(t[m]);
    for (Jet2& x : out) x *= c;
    out.push_back(sin(t[m]));
  }
  return out;
}

/// Hyperboloid <y,y> = -1 with y_0 first: h_1 = (cosh t1, sinh t1),
/// h_m = (cosh t_m h_{m-1}, sinh t_m). A global chart of H^m.
std::vector<Jet2> hyperboloid_jets(std::span<const Jet2> t) {
  std::vector<Jet2> out{cosh(t[0]), sinh(t[0])};
  for (std::size_t m = 1; m < t.size(); ++m) {
    const Jet2 c = cosh(t[m]);
    for (Jet2& x : out) x *= c;
    out.push_back(sinh(t[m]));
  }
  return out;
}

void append_sphere_domain(std::vector<Interval>& dom, int k) {
  dom.push_back({0.0, 2.0 * kPi, true});
  for (int i = 1; i < k; ++i) dom.push_back({-0.5 * kPi + kPoleMargin, 0.5 * kPi - kPoleMargin, false});
}

constexpr double kLineHalfWidth = 2.0;
constexpr double kHyperbolicHalfWidth = 1.5;

void append_scaled(std::vector<Jet2>& out, const std::vector<Jet2>& part, double scale) {
  for (const Jet2& x : part) out.push_back(x * scale);
}

}  // namespace

double unduloid_dx(double H, double B, double s) {
  const double sn = std::sin(2.0 * H * s);
  return (1.0 + B * sn) / std::sqrt(1.0 + B * B + 2.0 * B * sn);
}

namespace {

double unduloid_x(double H, double B, double s, double tol) {
  const auto f = [H, B](double t) { return unduloid_dx(H, B, t); };
  return s >= 0.0 ? adaptive_quadrature(f, 0.0, s, tol) : -adaptive_quadrature(f, s, 0.0, tol);
}

}  // namespace

ImmersionChart build_chart(const ModelSpec& m) {
  validate(m);
  const std::string label = format_model_spec(m);
  return std::visit(
      overloaded{
          [&](const EuclideanProduct& p) {
            const int flat = p.n - p.k;
            std::vector<Interval> dom(flat, Interval{-kLineHalfWidth, kLineHalfWidth, false});
            append_sphere_domain(dom, p.k);
            return ImmersionChart(AmbientSpace(0, p.n), std::move(dom),
                                  [flat, r = p.r](std::span<const Jet2> u) {
                                    std::vector<Jet2> out(u.begin(), u.begin() + flat);
                                    append_scaled(out, sphere_jets(u.subspan(flat)), r);
                                    return out;
                                  },
                                  label);
          },
          [&](const SphereProduct& p) {
            std::vector<Interval> dom;
            append_sphere_domain(dom, 1);
            append_sphere_domain(dom, p.n - 1);
            const double rho = std::sqrt(1.0 - p.r * p.r);
            return ImmersionChart(AmbientSpace(1, p.n), std::move(dom),
                                  [rho, r = p.r](std::span<const Jet2> u) {
                                    std::vector<Jet2> out;
                                    append_scaled(out, sphere_jets(u.subspan(0, 1)), rho);
                                    append_scaled(out, sphere_jets(u.subspan(1)), r);
                                    return out;
                                  },
                                  label);
          },
          [&](const CliffordTorus& p) {
            std::vector<Interval> dom;
            append_sphere_domain(dom, p.k);
            append_sphere_domain(dom, p.n - p.k);
            const double r1 = std::sqrt(static_cast<double>(p.k) / p.n);
            const double r2 = std::sqrt(static_cast<double>(p.n - p.k) / p.n);
            return ImmersionChart(AmbientSpace(1, p.n), std::move(dom),
                                  [k = p.k, r1, r2](std::span<const Jet2> u) {
                                    std::vector<Jet2> out;
                                    append_scaled(out, sphere_jets(u.subspan(0, k)), r1);
                                    append_scaled(out, sphere_jets(u.subspan(k)), r2);
                                    return out;
                                  },
                                  label);
          },
          [&](const HyperbolicCylinder& p) {
            const int hyp = p.n - p.k;
            std::vector<Interval> dom(hyp, Interval{-kHyperbolicHalfWidth, kHyperbolicHalfWidth, false});
            append_sphere_domain(dom, p.k);
            const double big = std::sqrt(1.0 + p.r * p.r);
            return ImmersionChart(AmbientSpace(-1, p.n), std::move(dom),
                                  [hyp, big, r = p.r](std::span<const Jet2> u) {
                                    std::vector<Jet2> out;
                                    append_scaled(out, hyperboloid_jets(u.subspan(0, hyp)), big);
                                    append_scaled(out, sphere_jets(u.subspan(hyp)), r);
                                    return out;
                                  },
                                  label);
          },
          [&](const Unduloid& p) {
            const double period = kPi / std::abs(p.H);
            std::vector<Interval> dom{{0.0, period, true}, {0.0, 2.0 * kPi, true}};
            return ImmersionChart(AmbientSpace(0, 2), std::move(dom),
                                  [H = p.H, B = p.B](std::span<const Jet2> u) {
                                    const Jet2& s = u[0];
                                    const double s0 = s.value();
                                    const Jet2 sn = sin(s * (2.0 * H));
                                    const Jet2 root = sqrt(1.0 + B * B + 2.0 * B * sn);
                                    // x' is the integrand; only x itself needs quadrature.
                                    const Jet2 dx = (1.0 + B * sn) / root;
                                    const Jet2 ds = s - s0;
                                    const Jet2 x = unduloid_x(H, B, s0, 1e-10) + dx.value() * ds +
                                                   0.5 * dx.grad(0) * (ds * ds);
                                    const Jet2 y = root / (2.0 * std::abs(H));
                                    return std::vector<Jet2>{x, y * cos(u[1]), y * sin(u[1])};
                                  },
                                  label);
          },
          [&](const UmbilicalSphere& p) {
            std::vector<Interval> dom;
            append_sphere_domain(dom, p.n);
            return ImmersionChart(AmbientSpace(p.c, p.n), std::move(dom),
                                  [c = p.c, r = p.r, n = p.n](std::span<const Jet2> u) {
                                    std::vector<Jet2> out;
                                    if (c == -1) out.push_back(Jet2::constant(std::sqrt(1.0 + r * r), n));
                                    append_scaled(out, sphere_jets(u), r);
                                    if (c == 1) out.push_back(Jet2::constant(std::sqrt(1.0 - r * r), n));
                                    return out;
                                  },
                                  label);
          },
      },
      m);
}

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

UnduloidProfile unduloid_profile(double H, double B, double s, double tol) {
  validate(Unduloid{H, B});
  if (!(tol > 0.0)) throw InvalidParameters("quadrature tolerance must be positive");
  const double sn = std::sin(2.0 * H * s);
  const double cs = std::cos(2.0 * H * s);
  const double d = 1.0 + B * B + 2.0 * B * sn;
  const double ah = std::abs(H);
  const double sgn = H > 0.0 ? 1.0 : -1.0;
  UnduloidProfile p;
  p.x = unduloid_x(H, B, s, tol);
  p.y = std::sqrt(d) / (2.0 * ah);
  p.dy = sgn * B * cs / std::sqrt(d);
  p.d2y = -2.0 * ah * B * (B + sn) * (1.0 + B * sn) / std::pow(d, 1.5);
  return p;
}

double unduloid_K(double H, double B, double s) {
  validate(Unduloid{H, B});
  const double sn = std::sin(2.0 * H * s);
  const double d = 1.0 + B * B + 2.0 * B * sn;
  return 4.0 * H * H * B * (B + sn) * (1.0 + B * sn) / (d * d);
}

double unduloid_inf_K(double H, double B) {
  validate(Unduloid{H, B});
  return -4.0 * H * H * B / ((1.0 - B) * (1.0 - B));
}

std::pair<double, double> unduloid_kappas(double H, double B, double s) {
  validate(Unduloid{H, B});
  const double sn = std::sin(2.0 * H * s);
  const double d = 1.0 + B * B + 2.0 * B * sn;
  const double ah = std::abs(H);
  return {2.0 * ah * B * (B + sn) / d, 2.0 * ah * (1.0 + B * sn) / d};
}

double solve_B_for_inf_K(double H, double eps) {
  if (!std::isfinite(H) || H == 0.0) throw InvalidParameters("H must be nonzero");
  if (!std::isfinite(eps) || !(eps > 0.0)) throw InvalidParameters("eps must be positive");
  // Smaller root of eps B^2 - (2 eps + 4H^2) B + eps = 0, in the form that
  // avoids cancellation as eps -> 0 (the roots multiply to 1).
  const double h2 = H * H;
  return eps / (eps + 2.0 * h2 + 2.0 * std::abs(H) * std::sqrt(h2 + eps));
}

double sphere_product_H(int n, double r) {
  const double nd = n;
  return (nd * r * r - (nd - 1.0)) / (nd * r * std::sqrt(1.0 - r * r));
}

double hyperbolic_cylinder_H(int n, int k, double r) {
  const double nd = n;
  return (nd * r * r + k) / (nd * r * std::sqrt(1.0 + r * r));
}

double r_from_H_sphere(int n, double abs_H, RadiusBranch branch) {
  check_n(n);
  if (!(abs_H >= 0.0) || !std::isfinite(abs_H)) throw OutOfRange("|H| must be a non-negative number");
  const double nd = n;
  const double h2 = abs_H * abs_H;
  const double root = abs_H * std::sqrt(nd * nd * h2 + 4.0 * (nd - 1.0));
  const double sign = branch == RadiusBranch::Minus ? -1.0 : 1.0;
  const double r2 = (2.0 * (nd - 1.0) + nd * h2 + sign * root) / (2.0 * nd * (1.0 + h2));
  return std::sqrt(r2);
}

double r_from_H_hyperbolic(int n, int k, double abs_H) {
  check_n(n);
  if (k != 1 && k != n - 1) throw OutOfRange("k must be 1 or n-1");
  if (!std::isfinite(abs_H) || !(abs_H * abs_H > 1.0)) throw OutOfRange("hyperbolic cylinders need H^2 > 1");
  const double nd = n;
  const double h2 = abs_H * abs_H;
  const double root = abs_H * std::sqrt(nd * nd * h2 - 4.0 * (nd - 1.0));
  const double lead = k == 1 ? 2.0 : 2.0 * (nd - 1.0);
  const double r2 = (lead - nd * h2 + root) / (2.0 * nd * (h2 - 1.0));
  if (!(r2 > 0.0)) throw OutOfRange("no positive radius for this |H|");
  return std::sqrt(r2);
}

namespace {

std::vector<double> repeated(int count_a, double a, int count_b, double b) {
  std::vector<double> v(count_a, a);
  v.insert(v.end(), count_b, b);
  std::sort(v.begin(), v.end());
  return v;
}

std::optional<double> alpha_if_defined(int n, int c, double H) {
  if (!(H * H + c > 0.0)) return std::nullopt;
  return alpha_H(BoundContext{n, c, H});
}

}  // namespace

ClosedForm closed_form_invariants(const ModelSpec& m) {
  validate(m);
  ClosedForm cf;
  std::visit(overloaded{
                 [&](const EuclideanProduct& p) {
                   const double nd = p.n;
                   cf.kappas = repeated(p.n - p.k, 0.0, p.k, 1.0 / p.r);
                   cf.H_signed = p.k / (nd * p.r);
                   cf.phi_norm = std::sqrt(static_cast<double>(p.k * (p.n - p.k))) / (std::sqrt(nd) * p.r);
                   cf.branch_prediction = p.k == p.n - 1 ? Branch::Equality : Branch::Strict;
                 },
                 [&](const SphereProduct& p) {
                   const double nd = p.n;
                   const double rho = std::sqrt(1.0 - p.r * p.r);
                   cf.kappas = repeated(1, p.r / rho, p.n - 1, -rho / p.r);
                   cf.H_signed = sphere_product_H(p.n, p.r);
                   cf.phi_norm = std::sqrt(nd - 1.0) / (p.r * std::sqrt(nd) * rho);
                   const bool minus_branch = p.r * p.r <= (nd - 1.0) / nd;
                   cf.branch_prediction = (p.n == 2 || minus_branch) ? Branch::Equality : Branch::Strict;
                 },
                 [&](const CliffordTorus& p) {
                   const double nd = p.n;
                   const double k = p.k;
                   cf.kappas = repeated(p.k, std::sqrt((nd - k) / k), p.n - p.k, -std::sqrt(k / (nd - k)));
                   cf.H_signed = 0.0;
                   cf.phi_norm = std::sqrt(nd);
                   cf.branch_prediction = Branch::Equality;
                 },
                 [&](const HyperbolicCylinder& p) {
                   const double nd = p.n;
                   const double big = std::sqrt(1.0 + p.r * p.r);
                   cf.kappas = repeated(p.n - p.k, p.r / big, p.k, big / p.r);
                   cf.H_signed = hyperbolic_cylinder_H(p.n, p.k, p.r);
                   cf.phi_norm = std::sqrt(p.k * (nd - p.k) / nd) / (p.r * big);
                   if (cf.H_signed * cf.H_signed > 1.0) {
                     cf.branch_prediction = p.k == p.n - 1 ? Branch::Equality : Branch::Strict;
                   }
                 },
                 [&](const Unduloid& p) {
                   const double ah = std::abs(p.H);
                   cf.kappas = repeated(1, -2.0 * ah * p.B / (1.0 - p.B), 1, 2.0 * ah / (1.0 - p.B));
                   cf.H_signed = p.H;
                   cf.phi_norm = std::sqrt(2.0 * (p.H * p.H - unduloid_inf_K(p.H, p.B)));
                   cf.constant_phi = false;
                   cf.branch_prediction = Branch::Strict;
                 },
                 [&](const UmbilicalSphere& p) {
                   const double h = p.c == 0   ? 1.0 / p.r
                                    : p.c == 1 ? std::sqrt(1.0 - p.r * p.r) / p.r
                                               : std::sqrt(1.0 + p.r * p.r) / p.r;
                   cf.kappas.assign(p.n, h);
                   cf.H_signed = h;
                   cf.phi_norm = 0.0;
                   cf.branch_prediction = Branch::Umbilical;
                 },
             },
             m);
  cf.abs_H = std::abs(cf.H_signed);
  cf.alpha_H = alpha_if_defined(model_dimension(m), model_curvature(m), cf.H_signed);
  return cf;
}

PointwiseClosedForm closed_form_at(const ModelSpec& m, std::span<const double> u) {
  if (const auto* und = std::get_if<Unduloid>(&m)) {
    validate(m);
    if (u.size() != 2) throw SizeMismatch("unduloid chart points have two coordinates");
    const auto [meridian, parallel] = unduloid_kappas(und->H, und->B, u[0]);
    PointwiseClosedForm pc;
    pc.kappas = {std::min(meridian, parallel), std::max(meridian, parallel)};
    pc.abs_H = std::abs(und->H);
    pc.phi_norm = std::abs(parallel - meridian) / std::sqrt(2.0);
    return pc;
  }
  const ClosedForm cf = closed_form_invariants(m);
  return {cf.kappas, cf.abs_H, cf.phi_norm};
}

std::vector<std::string> all_families() {
  return {"euclidean-product", "sphere-product",   "clifford",
          "hyperbolic-cylinder", "unduloid", "umbilical-sphere"};
}

std::vector<ModelSpec> default_parameter_grid(std::string_view family) {
  if (family == "euclidean-product") {
    return {EuclideanProduct{3, 2, 1.0}, EuclideanProduct{3, 1, 1.0}, EuclideanProduct{3, 2, 0.5},
            EuclideanProduct{4, 3, 2.0}, EuclideanProduct{4, 1, 1.5}, EuclideanProduct{5, 2, 0.8},
            EuclideanProduct{2, 1, 1.0}};
  }
  if (family == "sphere-product") {
    return {SphereProduct{3, 1.0 / std::sqrt(3.0)}, SphereProduct{3, 0.5}, SphereProduct{3, 0.9},
            SphereProduct{4, 0.6},                  SphereProduct{4, 0.95}, SphereProduct{2, 0.6},
            SphereProduct{5, 0.7}};
  }
  if (family == "clifford") {
    return {CliffordTorus{2, 1}, CliffordTorus{3, 1}, CliffordTorus{3, 2},
            CliffordTorus{4, 1}, CliffordTorus{4, 2}, CliffordTorus{5, 2}};
  }
  if (family == "hyperbolic-cylinder") {
    return {HyperbolicCylinder{3, 2, 1.0}, HyperbolicCylinder{3, 1, 0.5}, HyperbolicCylinder{4, 3, 0.7},
            HyperbolicCylinder{4, 1, 0.3}, HyperbolicCylinder{5, 4, 1.5}, HyperbolicCylinder{2, 1, 1.0},
            HyperbolicCylinder{5, 1, 0.2}};
  }
  if (family == "unduloid") {
    return {Unduloid{1.0, 0.5}, Unduloid{1.0, 0.1}, Unduloid{0.5, 0.5},
            Unduloid{2.0, 0.1}, Unduloid{1.0, 0.3}, Unduloid{-1.0, 0.3}};
  }
  if (family == "umbilical-sphere") {
    return {UmbilicalSphere{3, 0, 2.0}, UmbilicalSphere{3, 1, 0.5}, UmbilicalSphere{3, -1, 1.0},
            UmbilicalSphere{2, 0, 1.0}, UmbilicalSphere{4, 1, 0.8}, UmbilicalSphere{2, -1, 0.5}};
  }
  throw InvalidParameters("unknown model family '" + std::string(family) + "'");
}

}  // namespace cmc

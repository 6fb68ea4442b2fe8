#include "cmc/quadrature.hpp"

#include <cmath>
#include <vector>

#include "cmc/errors.hpp"

namespace cmc {
namespace {

struct Panel {
  double a, m, b;
  double fa, fm, fb;
  double whole;  // Simpson estimate over [a, b]
  double tol;
  int depth;
};

// Panels are never accepted above this depth, which keeps periodic integrands
// from fooling the first comparison.
constexpr int kMinDepth = 4;
constexpr int kMaxDepth = 60;
constexpr long kMaxSubdivisions = 1'000'000;

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

}  // namespace

double adaptive_quadrature(const std::function<double(double)>& f, double a, double b, double tol) {
  if (!(tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  if (!(a <= b)) throw DomainError("quadrature requires a <= b");
  if (a == b) return 0.0;

  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  std::vector<Panel> stack{{a, m, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, 0}};

  double total = 0.0;
  long subdivisions = 0;
  while (!stack.empty()) {
    const Panel p = stack.back();
    stack.pop_back();

    const double lm = 0.5 * (p.a + p.m);
    const double rm = 0.5 * (p.m + p.b);
    const double flm = f(lm);
    const double frm = f(rm);
    if (!std::isfinite(flm) || !std::isfinite(frm)) {
      throw DomainError("integrand is not finite on the interval");
    }
    const double left = simpson(p.a, p.m, p.fa, flm, p.fm);
    const double right = simpson(p.m, p.b, p.fm, frm, p.fb);
    const double delta = left + right - p.whole;

    if (p.depth >= kMinDepth && (std::abs(delta) <= 15.0 * p.tol || p.depth >= kMaxDepth)) {
      total += left + right + delta / 15.0;
      continue;
    }
    if (++subdivisions > kMaxSubdivisions) {
      throw NonConvergence("adaptive quadrature exceeded 10^6 subdivisions");
    }
    stack.push_back({p.m, rm, p.b, p.fm, frm, p.fb, right, 0.5 * p.tol, p.depth + 1});
    stack.push_back({p.a, lm, p.m, p.fa, flm, p.fm, left, 0.5 * p.tol, p.depth + 1});
  }
  return total;
}

}  // namespace cmc

#include "cmc/spaceform.hpp"

#include <cmath>
#include <string>

#include "cmc/errors.hpp"

namespace cmc {

AmbientSpace::AmbientSpace(int c, int n) : c_(c), n_(n) {
  if (c < -1 || c > 1) throw InvalidParameters("curvature c must be -1, 0 or 1");
  if (n < 2 || n > static_cast<int>(kMaxChartDim)) {
    throw InvalidParameters("hypersurface dimension n must lie in [2, 16], got " + std::to_string(n));
  }
}

namespace {
void check_size(const AmbientSpace& space, std::span<const double> v) {
  if (v.size() != space.ambient_dim()) {
    throw SizeMismatch("vector of length " + std::to_string(v.size()) + " in ambient space of dimension " +
                       std::to_string(space.ambient_dim()));
  }
}
}  // namespace

double bilinear_form(const AmbientSpace& space, std::span<const double> v, std::span<const double> w) {
  check_size(space, v);
  check_size(space, w);
  return apply_form(space.form(), v, w);
}

bool validate_point(const AmbientSpace& space, std::span<const double> x, double tol) {
  check_size(space, x);
  switch (space.c()) {
    case 0:
      return true;
    case 1:
      return std::abs(apply_form(space.form(), x, x) - 1.0) <= tol;
    default:
      return std::abs(apply_form(space.form(), x, x) + 1.0) <= tol && x[0] > 0.0;
  }
}

}  // namespace cmc

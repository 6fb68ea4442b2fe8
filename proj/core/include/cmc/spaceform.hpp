#pragma once

#include <span>
#include <vector>

#include "cmc/linalg.hpp"

namespace cmc {

using AmbientVector = std::vector<double>;

/// The model space M^{n+1}_c: R^{n+1} (c = 0), the unit sphere in R^{n+2}
/// (c = 1) or the upper hyperboloid <x,x> = -1, x0 > 0 in Minkowski
/// R^{n+2}_1 (c = -1). n is the hypersurface dimension.
class AmbientSpace {
 public:
  AmbientSpace(int c, int n);

  int c() const noexcept { return c_; }
  int n() const noexcept { return n_; }
  std::size_t ambient_dim() const noexcept { return static_cast<std::size_t>(c_ == 0 ? n_ + 1 : n_ + 2); }
  BilinearForm form() const noexcept { return c_ == -1 ? BilinearForm::Lorentzian : BilinearForm::Euclidean; }

  friend bool operator==(const AmbientSpace&, const AmbientSpace&) = default;

 private:
  int c_;
  int n_;
};

double bilinear_form(const AmbientSpace& space, std::span<const double> v, std::span<const double> w);

/// True if x lies on the model within tol (always true for c = 0).
bool validate_point(const AmbientSpace& space, std::span<const double> x, double tol);

}  // namespace cmc

#include "cmc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cmc/errors.hpp"

namespace cmc {

SymMatrix::SymMatrix(std::size_t dim) : dim_(dim) {
  if (dim == 0 || dim > kMaxChartDim) {
    throw SizeMismatch("SymMatrix dimension must lie in [1, 16], got " + std::to_string(dim));
  }
}

SymMatrix SymMatrix::identity(std::size_t dim) {
  SymMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

double SymMatrix::trace() const noexcept {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::bilinear(std::span<const double> x, std::span<const double> y) const noexcept {
  double acc = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) acc += x[i] * (*this)(i, j) * y[j];
  }
  return acc;
}

Matrix::Matrix(const SymMatrix& s) : Matrix(s.dim(), s.dim()) {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = s(i, j);
  }
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

double Matrix::trace() const noexcept {
  double t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

std::vector<double> Matrix::apply(std::span<const double> x) const {
  if (x.size() != cols_) throw SizeMismatch("matrix-vector size mismatch");
  std::vector<double> y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  }
  return y;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw SizeMismatch("matrix product size mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

JacobiResult jacobi_eigen(const SymMatrix& m) {
  const std::size_t n = m.dim();
  Matrix a(m);
  Matrix v = Matrix::identity(n);

  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
  }

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
    }
    return std::sqrt(s);
  };

  JacobiResult result;
  constexpr int kMaxSweeps = 100;
  while (result.sweeps < kMaxSweeps) {
    const double off = off_norm();
    if (off == 0.0 || off <= 1e-17 * scale) break;
    ++result.sweeps;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  double residual = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) residual = std::max(residual, std::abs(a(p, q)));
  }
  result.off_diagonal_residual = residual;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  result.values.resize(n);
  result.vectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    result.values[j] = a(order[j], order[j]);
    for (std::size_t k = 0; k < n; ++k) result.vectors(k, j) = v(k, order[j]);
  }
  return result;
}

std::vector<double> sym_eigenvalues(const SymMatrix& m) { return jacobi_eigen(m).values; }

Matrix cholesky(const SymMatrix& m) {
  const std::size_t n = m.dim();
  Matrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = m(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
    if (!(d > 0.0)) throw DegenerateMetric("matrix is not positive definite");
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / ljj;
    }
  }
  return l;
}

SymMatrix inverse_spd(const SymMatrix& m) {
  const std::size_t n = m.dim();
  const Matrix l = cholesky(m);
  // L^{-1} by forward substitution, then M^{-1} = L^{-T} L^{-1}.
  Matrix linv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = j; i < n; ++i) {
      double s = (i == j) ? 1.0 : 0.0;
      for (std::size_t k = j; k < i; ++k) s -= l(i, k) * linv(k, j);
      linv(i, j) = s / l(i, i);
    }
  }
  SymMatrix inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = j; k < n; ++k) s += linv(k, i) * linv(k, j);
      inv(i, j) = s;
    }
  }
  return inv;
}

double determinant(Matrix m) {
  if (m.rows() != m.cols()) throw SizeMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(m(i, k)) > std::abs(m(piv, k))) piv = i;
    }
    if (m(piv, k) == 0.0) return 0.0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

double apply_form(BilinearForm form, std::span<const double> v, std::span<const double> w) {
  if (v.size() != w.size()) throw SizeMismatch("bilinear form operands differ in length");
  double acc = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) acc += v[i] * w[i];
  if (form == BilinearForm::Lorentzian && !v.empty()) acc -= 2.0 * v[0] * w[0];
  return acc;
}

std::vector<double> nullspace_unit(std::span<const std::vector<double>> rows, BilinearForm form) {
  if (rows.empty()) throw RankDeficient("no rows given");
  const std::size_t dim = rows.front().size();
  const std::size_t m = rows.size();
  if (dim < 2) throw RankDeficient("ambient dimension must be at least 2");
  for (const auto& r : rows) {
    if (r.size() != dim) throw SizeMismatch("rows differ in length");
  }

  // <v, row> = (J row) . v, so the Euclidean null space of the J-scaled rows.
  Matrix a(m, dim);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < dim; ++j) a(i, j) = rows[i][j];
    if (form == BilinearForm::Lorentzian) a(i, 0) = -a(i, 0);
  }
  const Matrix scaled = a;

  std::vector<std::size_t> col(dim);
  std::iota(col.begin(), col.end(), 0);
  std::vector<std::size_t> row(m);
  std::iota(row.begin(), row.end(), 0);

  double largest = 0.0;
  std::size_t rank = 0;
  const std::size_t steps = std::min(m, dim);
  for (std::size_t k = 0; k < steps; ++k) {
    std::size_t pi = k;
    std::size_t pj = k;
    double best = -1.0;
    for (std::size_t i = k; i < m; ++i) {
      for (std::size_t j = k; j < dim; ++j) {
        if (std::abs(a(i, j)) > best) {
          best = std::abs(a(i, j));
          pi = i;
          pj = j;
        }
      }
    }
    if (k == 0) largest = best;
    if (largest == 0.0 || best < 1e-10 * largest) break;
    if (pi != k) {
      for (std::size_t j = 0; j < dim; ++j) std::swap(a(k, j), a(pi, j));
      std::swap(row[k], row[pi]);
    }
    if (pj != k) {
      for (std::size_t i = 0; i < m; ++i) std::swap(a(i, k), a(i, pj));
      std::swap(col[k], col[pj]);
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      const double f = a(i, k) / a(k, k);
      if (f == 0.0) continue;
      for (std::size_t j = k; j < dim; ++j) a(i, j) -= f * a(k, j);
    }
    ++rank;
  }
  if (rank != dim - 1) {
    throw RankDeficient("rows span codimension " + std::to_string(dim - rank) + ", expected 1");
  }

  // Back-substitute with the last (free) permuted column set to one.
  std::vector<double> y(dim, 0.0);
  y[dim - 1] = 1.0;
  for (std::size_t kk = rank; kk-- > 0;) {
    double s = 0.0;
    for (std::size_t j = kk + 1; j < dim; ++j) s += a(kk, j) * y[j];
    y[kk] = -s / a(kk, kk);
  }
  std::vector<double> v(dim, 0.0);
  for (std::size_t j = 0; j < dim; ++j) v[col[j]] = y[j];

  const double q = apply_form(form, v, v);
  if (!(q > 0.0)) throw DomainError("normal direction is not spacelike");
  const double inv = 1.0 / std::sqrt(q);
  for (double& x : v) x *= inv;

  // Orientation from the independent rows in their original order.
  std::vector<std::size_t> pivots(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(rank));
  std::sort(pivots.begin(), pivots.end());
  Matrix frame(dim, dim);
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < dim; ++j) frame(i, j) = scaled(pivots[i], j);
  }
  for (std::size_t j = 0; j < dim; ++j) frame(dim - 1, j) = v[j];
  if (determinant(frame) < 0.0) {
    for (double& x : v) x = -x;
  }
  return v;
}

}  // namespace cmc

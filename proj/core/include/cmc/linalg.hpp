#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "cmc/jet.hpp"

namespace cmc {

/// Symmetric matrix of dimension 1..16, upper triangle stored packed.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t dim);

  static SymMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[index(i, j)]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[index(i, j)]; }

  double trace() const noexcept;
  /// x^T M y
  double bilinear(std::span<const double> x, std::span<const double> y) const noexcept;

 private:
  std::size_t index(std::size_t i, std::size_t j) const noexcept {
    if (i > j) {
      const std::size_t t = i;
      i = j;
      j = t;
    }
    return i * (2 * dim_ - i + 1) / 2 + (j - i);
  }

  std::size_t dim_ = 0;
  std::array<double, Jet2::kMaxPacked> data_{};
};

/// Small dense row-major matrix. Only used for chart-sized operators.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}
  explicit Matrix(const SymMatrix& s);

  static Matrix identity(std::size_t dim);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }

  double trace() const noexcept;
  std::vector<double> apply(std::span<const double> x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

struct JacobiResult {
  std::vector<double> values;  ///< ascending
  Matrix vectors;              ///< column j is the eigenvector for values[j]
  double off_diagonal_residual = 0.0;
  int sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal part is negligible.
JacobiResult jacobi_eigen(const SymMatrix& m);

/// Ascending eigenvalues of a symmetric matrix.
std::vector<double> sym_eigenvalues(const SymMatrix& m);

/// Lower-triangular L with L L^T = m. Throws DegenerateMetric if m is not
/// positive definite.
Matrix cholesky(const SymMatrix& m);

SymMatrix inverse_spd(const SymMatrix& m);

double determinant(Matrix m);

enum class BilinearForm { Euclidean, Lorentzian };

/// <v, w> in the given form; Lorentzian is -v0 w0 + sum_{i>=1} vi wi.
double apply_form(BilinearForm form, std::span<const double> v, std::span<const double> w);

/// Unit vector orthogonal (in `form`) to every row. The rows must span a
/// hyperplane; the sign is chosen so that det[rows*J; v] > 0, where J negates
/// the time coordinate for the Lorentzian form.
std::vector<double> nullspace_unit(std::span<const std::vector<double>> rows, BilinearForm form);

}  // namespace cmc

#pragma once

/**
 * @file jet.hpp
 * @brief Second-order forward-mode jets over a chart of dimension <= 16.
 *
 * A Jet2 carries a value together with its gradient and Hessian with respect
 * to the chart coordinates u_1..u_n. Arithmetic propagates all three exactly
 * (truncated Taylor arithmetic), so the fundamental forms assembled from the
 * jets of an immersion are accurate to machine rounding.
 *
 * @code
 * auto x = cmc::Jet2::variable(2.0, 2, 0);
 * auto y = cmc::Jet2::variable(3.0, 2, 1);
 * auto p = x * y;   // value 6, gradient (3, 2), d2/dxdy = 1
 * @endcode
 */

#include <array>
#include <cstddef>
#include <span>

namespace cmc {

inline constexpr std::size_t kMaxChartDim = 16;

class Jet2 {
 public:
  static constexpr std::size_t kMaxPacked = kMaxChartDim * (kMaxChartDim + 1) / 2;

  Jet2() = default;

  static Jet2 constant(double value, std::size_t dim);
  /// Seed jet for coordinate `index`: gradient e_index, zero Hessian.
  static Jet2 variable(double value, std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return dim_; }
  double value() const noexcept { return value_; }
  double grad(std::size_t i) const noexcept { return grad_[i]; }
  /// Symmetric access; (i, j) and (j, i) read the same stored entry.
  double hess(std::size_t i, std::size_t j) const noexcept { return hess_[packed_index(i, j)]; }

  Jet2& operator+=(const Jet2& other);
  Jet2& operator-=(const Jet2& other);
  Jet2& operator*=(const Jet2& other);
  Jet2& operator/=(const Jet2& other);
  Jet2& operator+=(double s);
  Jet2& operator-=(double s);
  Jet2& operator*=(double s);
  Jet2& operator/=(double s);
  Jet2 operator-() const;

  /// f(this) given f(a), f'(a), f''(a) at a = value().
  Jet2 compose(double f0, double f1, double f2) const;

 private:
  std::size_t packed_index(std::size_t i, std::size_t j) const noexcept {
    if (i > j) {
      const std::size_t t = i;
      i = j;
      j = t;
    }
    return i * (2 * dim_ - i + 1) / 2 + (j - i);
  }
  std::size_t packed_size() const noexcept { return dim_ * (dim_ + 1) / 2; }
  void check_dim(const Jet2& other) const;

  std::size_t dim_ = 0;
  double value_ = 0.0;
  std::array<double, kMaxChartDim> grad_{};
  std::array<double, kMaxPacked> hess_{};
};

inline Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
inline Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
inline Jet2 operator*(Jet2 a, const Jet2& b) { return a *= b; }
inline Jet2 operator/(Jet2 a, const Jet2& b) { return a /= b; }
inline Jet2 operator+(Jet2 a, double s) { return a += s; }
inline Jet2 operator-(Jet2 a, double s) { return a -= s; }
inline Jet2 operator*(Jet2 a, double s) { return a *= s; }
inline Jet2 operator/(Jet2 a, double s) { return a /= s; }
inline Jet2 operator+(double s, Jet2 a) { return a += s; }
inline Jet2 operator-(double s, const Jet2& a) { return (-a) += s; }
inline Jet2 operator*(double s, Jet2 a) { return a *= s; }
Jet2 operator/(double s, const Jet2& a);

Jet2 sin(const Jet2& a);
Jet2 cos(const Jet2& a);
Jet2 sinh(const Jet2& a);
Jet2 cosh(const Jet2& a);
Jet2 exp(const Jet2& a);
Jet2 sqrt(const Jet2& a);
Jet2 pow_int(const Jet2& a, int exponent);

enum class JetOp { Add, Sub, Mul, Div, Sin, Cos, Sinh, Cosh, Exp, Sqrt, PowInt, Const };

/// Tag-dispatched form of the jet arithmetic above. `Const` returns the
/// value of the first argument as a constant jet; `PowInt` reads `exponent`.
Jet2 jet_apply(JetOp op, std::span<const Jet2> args, int exponent = 0);

}  // namespace cmc

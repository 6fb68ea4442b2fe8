#include "cmc/jet.hpp"

#include <cmath>
#include <string>

#include "cmc/errors.hpp"

namespace cmc {

Jet2 Jet2::constant(double value, std::size_t dim) {
  if (dim == 0 || dim > kMaxChartDim) {
    throw SizeMismatch("jet dimension must lie in [1, 16], got " + std::to_string(dim));
  }
  Jet2 j;
  j.dim_ = dim;
  j.value_ = value;
  return j;
}

Jet2 Jet2::variable(double value, std::size_t dim, std::size_t index) {
  Jet2 j = constant(value, dim);
  if (index >= dim) throw SizeMismatch("seed index out of range");
  j.grad_[index] = 1.0;
  return j;
}

void Jet2::check_dim(const Jet2& other) const {
  if (dim_ != other.dim_) throw SizeMismatch("jet dimensions differ");
}

Jet2& Jet2::operator+=(const Jet2& other) {
  check_dim(other);
  value_ += other.value_;
  for (std::size_t i = 0; i < dim_; ++i) grad_[i] += other.grad_[i];
  for (std::size_t p = 0; p < packed_size(); ++p) hess_[p] += other.hess_[p];
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& other) {
  check_dim(other);
  value_ -= other.value_;
  for (std::size_t i = 0; i < dim_; ++i) grad_[i] -= other.grad_[i];
  for (std::size_t p = 0; p < packed_size(); ++p) hess_[p] -= other.hess_[p];
  return *this;
}

Jet2& Jet2::operator*=(const Jet2& other) {
  check_dim(other);
  const double a = value_;
  const double b = other.value_;
  std::size_t p = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j, ++p) {
      hess_[p] = a * other.hess_[p] + b * hess_[p] + grad_[i] * other.grad_[j] +
                 grad_[j] * other.grad_[i];
    }
  }
  for (std::size_t i = 0; i < dim_; ++i) grad_[i] = a * other.grad_[i] + b * grad_[i];
  value_ = a * b;
  return *this;
}

Jet2& Jet2::operator/=(const Jet2& other) {
  check_dim(other);
  if (other.value_ == 0.0) throw DomainError("jet division by a zero value");
  const double v = other.value_;
  return *this *= other.compose(1.0 / v, -1.0 / (v * v), 2.0 / (v * v * v));
}

Jet2& Jet2::operator+=(double s) {
  value_ += s;
  return *this;
}

Jet2& Jet2::operator-=(double s) {
  value_ -= s;
  return *this;
}

Jet2& Jet2::operator*=(double s) {
  value_ *= s;
  for (std::size_t i = 0; i < dim_; ++i) grad_[i] *= s;
  for (std::size_t p = 0; p < packed_size(); ++p) hess_[p] *= s;
  return *this;
}

Jet2& Jet2::operator/=(double s) {
  if (s == 0.0) throw DomainError("jet division by zero");
  return *this *= 1.0 / s;
}

Jet2 Jet2::operator-() const {
  Jet2 r = *this;
  r *= -1.0;
  return r;
}

Jet2 Jet2::compose(double f0, double f1, double f2) const {
  Jet2 r = constant(f0, dim_);
  for (std::size_t i = 0; i < dim_; ++i) r.grad_[i] = f1 * grad_[i];
  std::size_t p = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j, ++p) {
      r.hess_[p] = f1 * hess_[p] + f2 * grad_[i] * grad_[j];
    }
  }
  return r;
}

Jet2 operator/(double s, const Jet2& a) { return Jet2::constant(s, a.dim()) / a; }

Jet2 sin(const Jet2& a) {
  const double s = std::sin(a.value());
  return a.compose(s, std::cos(a.value()), -s);
}

Jet2 cos(const Jet2& a) {
  const double c = std::cos(a.value());
  return a.compose(c, -std::sin(a.value()), -c);
}

Jet2 sinh(const Jet2& a) {
  const double s = std::sinh(a.value());
  return a.compose(s, std::cosh(a.value()), s);
}

Jet2 cosh(const Jet2& a) {
  const double c = std::cosh(a.value());
  return a.compose(c, std::sinh(a.value()), c);
}

Jet2 exp(const Jet2& a) {
  const double e = std::exp(a.value());
  return a.compose(e, e, e);
}

Jet2 sqrt(const Jet2& a) {
  const double v = a.value();
  if (!(v > 0.0)) {
    // A constant zero is harmless; anything else has no derivative at 0.
    if (v == 0.0) {
      bool is_constant = true;
      for (std::size_t i = 0; i < a.dim(); ++i) is_constant = is_constant && a.grad(i) == 0.0;
      if (is_constant) return Jet2::constant(0.0, a.dim());
    }
    throw DomainError("jet sqrt of non-positive value " + std::to_string(v));
  }
  const double r = std::sqrt(v);
  return a.compose(r, 0.5 / r, -0.25 / (r * v));
}

Jet2 pow_int(const Jet2& a, int exponent) {
  const double v = a.value();
  if (exponent < 0 && v == 0.0) throw DomainError("jet negative power of zero");
  if (exponent == 0) return Jet2::constant(1.0, a.dim());
  const double e = exponent;
  const double f0 = std::pow(v, e);
  const double f1 = e * std::pow(v, e - 1.0);
  const double f2 = exponent == 1 ? 0.0 : e * (e - 1.0) * std::pow(v, e - 2.0);
  return a.compose(f0, f1, f2);
}

Jet2 jet_apply(JetOp op, std::span<const Jet2> args, int exponent) {
  auto need = [&](std::size_t count) {
    if (args.size() != count) {
      throw SizeMismatch("jet_apply expected " + std::to_string(count) + " arguments, got " +
                         std::to_string(args.size()));
    }
  };
  switch (op) {
    case JetOp::Add: need(2); return args[0] + args[1];
    case JetOp::Sub: need(2); return args[0] - args[1];
    case JetOp::Mul: need(2); return args[0] * args[1];
    case JetOp::Div: need(2); return args[0] / args[1];
    case JetOp::Sin: need(1); return sin(args[0]);
    case JetOp::Cos: need(1); return cos(args[0]);
    case JetOp::Sinh: need(1); return sinh(args[0]);
    case JetOp::Cosh: need(1); return cosh(args[0]);
    case JetOp::Exp: need(1); return exp(args[0]);
    case JetOp::Sqrt: need(1); return sqrt(args[0]);
    case JetOp::PowInt: need(1); return pow_int(args[0], exponent);
    case JetOp::Const: need(1); return Jet2::constant(args[0].value(), args[0].dim());
  }
  throw DomainError("unknown jet op");
}

}  // namespace cmc

#pragma once

#include <Eigen/Core>
#include <cmath>

#include "combiverse/errors.hpp"

namespace combiverse::math {

//! Hard cap on the number of simultaneously differentiated parameters.
//! 7 placement parameters per object -> up to 18 objects per scene, well
//! beyond the compositions this pipeline targets. Keeping the cap static
//! lets derivative vectors live on the stack (no allocation per operation).
inline constexpr int kMaxGradDims = 128;

using DerivVec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxGradDims, 1>;

//! Forward-mode scalar: value plus an optional derivative vector.
//! An empty derivative marks a constant; arithmetic promotes sizes lazily so
//! mesh data and camera poses never pay for gradient bookkeeping.
struct Dual {
  double v = 0.0;
  DerivVec d;

  Dual() = default;
  Dual(double value) : v(value) {}  // NOLINT: implicit by design, constants are pervasive
  Dual(double value, DerivVec deriv) : v(value), d(std::move(deriv)) {}

  //! Seeded variable: unit derivative in slot `idx` of `dims`.
  static Dual var(double value, int idx, int dims) {
    Dual out(value);
    out.d = DerivVec::Zero(dims);
    out.d[idx] = 1.0;
    return out;
  }

  bool is_const() const { return d.size() == 0; }

  Dual& operator+=(const Dual& o);
  Dual& operator-=(const Dual& o);
  Dual& operator*=(const Dual& o);
  Dual& operator/=(const Dual& o);
};

namespace detail {
inline void add_scaled(DerivVec& acc, const DerivVec& src, double k) {
  if (src.size() == 0) return;
  if (acc.size() == 0)
    acc = src * k;
  else
    acc += src * k;
}
}  // namespace detail

inline Dual operator+(const Dual& a, const Dual& b) {
  Dual out(a.v + b.v);
  detail::add_scaled(out.d, a.d, 1.0);
  detail::add_scaled(out.d, b.d, 1.0);
  return out;
}

inline Dual operator-(const Dual& a, const Dual& b) {
  Dual out(a.v - b.v);
  detail::add_scaled(out.d, a.d, 1.0);
  detail::add_scaled(out.d, b.d, -1.0);
  return out;
}

inline Dual operator-(const Dual& a) {
  Dual out(-a.v);
  detail::add_scaled(out.d, a.d, -1.0);
  return out;
}

inline Dual operator*(const Dual& a, const Dual& b) {
  Dual out(a.v * b.v);
  detail::add_scaled(out.d, a.d, b.v);
  detail::add_scaled(out.d, b.d, a.v);
  return out;
}

inline Dual operator/(const Dual& a, const Dual& b) {
  Dual out(a.v / b.v);
  detail::add_scaled(out.d, a.d, 1.0 / b.v);
  detail::add_scaled(out.d, b.d, -a.v / (b.v * b.v));
  return out;
}

inline Dual& Dual::operator+=(const Dual& o) { return *this = *this + o; }
inline Dual& Dual::operator-=(const Dual& o) { return *this = *this - o; }
inline Dual& Dual::operator*=(const Dual& o) { return *this = *this * o; }
inline Dual& Dual::operator/=(const Dual& o) { return *this = *this / o; }

inline bool operator<(const Dual& a, const Dual& b) { return a.v < b.v; }
inline bool operator>(const Dual& a, const Dual& b) { return a.v > b.v; }
inline bool operator<=(const Dual& a, const Dual& b) { return a.v <= b.v; }
inline bool operator>=(const Dual& a, const Dual& b) { return a.v >= b.v; }
inline bool operator==(const Dual& a, const Dual& b) { return a.v == b.v; }
inline bool operator!=(const Dual& a, const Dual& b) { return a.v != b.v; }

inline Dual sqrt(const Dual& a) {
  double s = std::sqrt(a.v);
  Dual out(s);
  detail::add_scaled(out.d, a.d, s > 0.0 ? 0.5 / s : 0.0);
  return out;
}

inline Dual exp(const Dual& a) {
  double e = std::exp(a.v);
  Dual out(e);
  detail::add_scaled(out.d, a.d, e);
  return out;
}

inline Dual log(const Dual& a) {
  Dual out(std::log(a.v));
  detail::add_scaled(out.d, a.d, 1.0 / a.v);
  return out;
}

inline Dual sin(const Dual& a) {
  Dual out(std::sin(a.v));
  detail::add_scaled(out.d, a.d, std::cos(a.v));
  return out;
}

inline Dual cos(const Dual& a) {
  Dual out(std::cos(a.v));
  detail::add_scaled(out.d, a.d, -std::sin(a.v));
  return out;
}

inline Dual abs(const Dual& a) {
  Dual out(std::abs(a.v));
  detail::add_scaled(out.d, a.d, a.v >= 0.0 ? 1.0 : -1.0);
  return out;
}

//! Numerically safe logistic. Saturated tails return exact 0/1 with zero
//! derivative; the true derivative there underflows anyway and the naive
//! expression would produce inf/inf = NaN.
inline Dual sigmoid(const Dual& a) {
  if (a.v > 36.0) return Dual(1.0);
  if (a.v < -36.0) return Dual(0.0);
  double e = 1.0 / (1.0 + std::exp(-a.v));
  Dual out(e);
  detail::add_scaled(out.d, a.d, e * (1.0 - e));
  return out;
}

inline const Dual& min(const Dual& a, const Dual& b) { return a.v <= b.v ? a : b; }
inline const Dual& max(const Dual& a, const Dual& b) { return a.v >= b.v ? a : b; }

//! Clamp by value; endpoints are treated as constants.
inline Dual clamp(const Dual& a, double lo, double hi) {
  if (a.v < lo) return Dual(lo);
  if (a.v > hi) return Dual(hi);
  return a;
}

inline double value(double x) { return x; }
inline double value(const Dual& x) { return x.v; }

}  // namespace combiverse::math

namespace Eigen {

template <>
struct NumTraits<combiverse::math::Dual> : NumTraits<double> {
  using Real = combiverse::math::Dual;
  using NonInteger = combiverse::math::Dual;
  using Nested = combiverse::math::Dual;
  using Literal = double;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 32,
  };
};

template <typename BinaryOp>
struct ScalarBinaryOpTraits<combiverse::math::Dual, double, BinaryOp> {
  using ReturnType = combiverse::math::Dual;
};
template <typename BinaryOp>
struct ScalarBinaryOpTraits<double, combiverse::math::Dual, BinaryOp> {
  using ReturnType = combiverse::math::Dual;
};

}  // namespace Eigen

#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <vector>

#include "mumhodge/error.hpp"
#include "mumhodge/scalar.hpp"

namespace mumhodge {

// Univariate power series c_0 + c_1 z + ... + c_n z^n + O(z^{n+1}).
//
// The order n is explicit and never grows: binary operations truncate to
// the smaller of the two orders.
template <typename T>
class TruncatedSeries {
 public:
  // Zero series of order 0.
  TruncatedSeries() : c_(1, T{}) {}
  explicit TruncatedSeries(std::vector<T> coefficients) : c_(std::move(coefficients)) {
    if (c_.empty()) throw Error("a truncated series needs at least one coefficient");
  }

  static TruncatedSeries constant(const T& value, std::size_t order) {
    std::vector<T> c(order + 1, scalar::zero_like(value));
    c[0] = value;
    return TruncatedSeries(std::move(c));
  }

  // The coordinate z itself (requires order >= 1 to be non-zero).
  static TruncatedSeries variable(const T& unit, std::size_t order) {
    std::vector<T> c(order + 1, scalar::zero_like(unit));
    if (order >= 1) c[1] = scalar::one_like(unit);
    return TruncatedSeries(std::move(c));
  }

  std::size_t order() const { return c_.size() - 1; }
  const T& operator[](std::size_t i) const { return c_[i]; }
  T& operator[](std::size_t i) { return c_[i]; }
  const std::vector<T>& coefficients() const { return c_; }

  TruncatedSeries truncated(std::size_t order) const {
    if (order > this->order()) throw Error("truncation cannot raise the order of a series");
    return TruncatedSeries(std::vector<T>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order) + 1));
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()), scalar::zero_like(c_[0]));
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }

  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()), scalar::zero_like(c_[0]));
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }

  TruncatedSeries& operator*=(const T& s) {
    for (auto& x : c_) x *= s;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const T& s) { return a *= s; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<T> c(n + 1, scalar::zero_like(a.c_[0]));
    for (std::size_t i = 0; i <= n; ++i) {
      if (scalar::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j <= n; ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return TruncatedSeries(std::move(c));
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

  // Formal derivative; the order drops by one (order 0 stays order 0).
  TruncatedSeries derivative() const {
    if (order() == 0) return constant(scalar::zero_like(c_[0]), 0);
    std::vector<T> c;
    c.reserve(order());
    for (std::size_t i = 1; i <= order(); ++i) c.push_back(c_[i] * scalar::from_int_like(c_[i], static_cast<long>(i)));
    return TruncatedSeries(std::move(c));
  }

  // z * d/dz, order preserved.
  TruncatedSeries theta() const {
    TruncatedSeries r = *this;
    for (std::size_t i = 0; i <= order(); ++i) r.c_[i] *= scalar::from_int_like(c_[i], static_cast<long>(i));
    return r;
  }

  // Horner evaluation of the truncated polynomial.
  template <typename U>
  U evaluate(const U& x) const {
    U acc = scalar::from_rational_like(x, Rational(0));
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc *= x;
      acc += convert(c_[i], x);
    }
    return acc;
  }

  // this(inner(z)); requires inner(0) = 0. Result order = min of orders.
  TruncatedSeries compose(const TruncatedSeries& inner) const {
    if (!scalar::is_zero(inner[0])) throw Error("composition requires an inner series without constant term");
    const std::size_t n = std::min(order(), inner.order());
    TruncatedSeries acc = constant(c_[0], n);
    TruncatedSeries power = constant(scalar::one_like(c_[0]), n);
    const TruncatedSeries in = inner.truncated(n);
    for (std::size_t k = 1; k <= n; ++k) {
      power = power * in;
      if (scalar::is_zero(c_[k])) continue;
      acc += power * c_[k];
    }
    return acc;
  }

  friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
    for (std::size_t i = 0; i <= s.order(); ++i) {
      if (i) os << " + ";
      os << "(" << s.c_[i] << ")";
      if (i) os << "*z^" << i;
    }
    return os << " + O(z^" << s.order() + 1 << ")";
  }

 private:
  template <typename U>
  static U convert(const T& v, const U& like) {
    if constexpr (std::is_same_v<T, U>) {
      return v;
    } else {
      return scalar::from_rational_like(like, v);
    }
  }

  std::vector<T> c_;
};

using RationalSeries = TruncatedSeries<Rational>;

// exp(s) for s with zero constant term.
template <typename T>
TruncatedSeries<T> series_exp(const TruncatedSeries<T>& s) {
  if (!scalar::is_zero(s[0])) throw Error("series_exp requires zero constant term");
  const std::size_t n = s.order();
  std::vector<T> e(n + 1, scalar::zero_like(s[0]));
  e[0] = scalar::one_like(s[0]);
  // E' = S' E  =>  k e_k = sum_{j=1..k} j s_j e_{k-j}
  for (std::size_t k = 1; k <= n; ++k) {
    T acc = scalar::zero_like(s[0]);
    for (std::size_t j = 1; j <= k; ++j) {
      if (scalar::is_zero(s[j])) continue;
      acc += s[j] * e[k - j] * scalar::from_int_like(s[0], static_cast<long>(j));
    }
    e[k] = acc / scalar::from_int_like(s[0], static_cast<long>(k));
  }
  return TruncatedSeries<T>(std::move(e));
}

// 1/s for s with invertible constant term.
template <typename T>
TruncatedSeries<T> series_inverse(const TruncatedSeries<T>& s) {
  if (scalar::is_zero(s[0])) throw Error("series_inverse requires a non-zero constant term");
  const std::size_t n = s.order();
  std::vector<T> r(n + 1, scalar::zero_like(s[0]));
  const T inv0 = scalar::one_like(s[0]) / s[0];
  r[0] = inv0;
  for (std::size_t k = 1; k <= n; ++k) {
    T acc = scalar::zero_like(s[0]);
    for (std::size_t j = 1; j <= k; ++j) {
      if (scalar::is_zero(s[j])) continue;
      acc += s[j] * r[k - j];
    }
    r[k] = -acc * inv0;
  }
  return TruncatedSeries<T>(std::move(r));
}

// log(s) for s with constant term one.
template <typename T>
TruncatedSeries<T> series_log(const TruncatedSeries<T>& s) {
  if (s[0] != scalar::one_like(s[0])) throw Error("series_log requires constant term one");
  const std::size_t n = s.order();
  std::vector<T> l(n + 1, scalar::zero_like(s[0]));
  if (n == 0) return TruncatedSeries<T>(std::move(l));
  // L' = S'/S, integrated term by term.
  const TruncatedSeries<T> q = s.derivative() * series_inverse(s.truncated(n - 1));
  for (std::size_t k = 1; k <= n; ++k) l[k] = q[k - 1] / scalar::from_int_like(s[0], static_cast<long>(k));
  return TruncatedSeries<T>(std::move(l));
}

// Compositional inverse t with s(t(q)) = q, via Lagrange inversion:
// [q^n] t = (1/n) [z^{n-1}] (z / s(z))^n.
template <typename T>
TruncatedSeries<T> series_reversion(const TruncatedSeries<T>& s) {
  if (s.order() < 1 || !scalar::is_zero(s[0]) || scalar::is_zero(s[1])) {
    throw Error("not an invertible coordinate");
  }
  const std::size_t n = s.order();
  std::vector<T> shifted(s.coefficients().begin() + 1, s.coefficients().end());  // s(z)/z, order n-1
  const TruncatedSeries<T> u = series_inverse(TruncatedSeries<T>(std::move(shifted)));
  std::vector<T> t(n + 1, scalar::zero_like(s[0]));
  TruncatedSeries<T> power = TruncatedSeries<T>::constant(scalar::one_like(s[0]), n - 1);
  for (std::size_t k = 1; k <= n; ++k) {
    power = power * u;
    t[k] = power[k - 1] / scalar::from_int_like(s[0], static_cast<long>(k));
  }
  return TruncatedSeries<T>(std::move(t));
}

}  // namespace mumhodge

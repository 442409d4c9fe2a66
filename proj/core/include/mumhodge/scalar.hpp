#pragma once

#include "mumhodge/bigfloat.hpp"
#include "mumhodge/rational.hpp"

// Small adapters letting templates treat Rational and BigComplex uniformly.
namespace mumhodge::scalar {

inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline Rational from_int_like(const Rational&, long v) { return Rational(v); }
inline Rational from_rational_like(const Rational&, const Rational& v) { return v; }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline BigComplex zero_like(const BigComplex& x) { return BigComplex(x.precision()); }
inline BigComplex one_like(const BigComplex& x) { return BigComplex(1L, x.precision()); }
inline BigComplex from_int_like(const BigComplex& x, long v) { return BigComplex(v, x.precision()); }
inline BigComplex from_rational_like(const BigComplex& x, const Rational& v) {
  return BigComplex(v, x.precision());
}
inline bool is_zero(const BigComplex& x) { return x.is_zero(); }

inline BigFloat zero_like(const BigFloat& x) { return BigFloat(x.precision()); }
inline BigFloat one_like(const BigFloat& x) { return BigFloat(1L, x.precision()); }
inline BigFloat from_int_like(const BigFloat& x, long v) { return BigFloat(v, x.precision()); }
inline BigFloat from_rational_like(const BigFloat& x, const Rational& v) { return BigFloat(v, x.precision()); }
inline bool is_zero(const BigFloat& x) { return x.is_zero(); }

}  // namespace mumhodge::scalar

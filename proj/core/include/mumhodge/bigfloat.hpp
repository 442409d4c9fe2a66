#pragma once

#include <mpfr.h>

#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "mumhodge/rational.hpp"

namespace mumhodge {

using Precision = mpfr_prec_t;  // bits

// Owning MPFR value with an explicit working precision. Binary operations
// produce a result at the smaller precision of the two operands.
class BigFloat {
 public:
  explicit BigFloat(Precision prec = 64);
  BigFloat(long value, Precision prec);
  BigFloat(double value, Precision prec);
  BigFloat(const Rational& value, Precision prec);
  BigFloat(const BigInt& value, Precision prec);
  static BigFloat parse(const std::string& text, Precision prec);

  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  Precision precision() const { return mpfr_get_prec(v_); }
  // Returns a copy rounded (or exactly widened) to the given precision.
  BigFloat with_precision(Precision prec) const;

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  // log2 of the magnitude; very negative for zero.
  long exponent2() const;
  // Round to the nearest integer.
  BigInt round_to_integer() const;
  std::string str(int digits = 20) const;

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat& operator*=(long o);
  BigFloat& operator/=(long o);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;

  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

  friend std::ostream& operator<<(std::ostream& os, const BigFloat& x) { return os << x.str(); }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& x);
BigFloat sqrt(const BigFloat& x);
BigFloat exp(const BigFloat& x);
BigFloat log(const BigFloat& x);
BigFloat sin(const BigFloat& x);
BigFloat cos(const BigFloat& x);
BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
BigFloat ldexp(const BigFloat& x, long e);
// 2^e at the given precision.
BigFloat pow2(long e, Precision prec);

class BigComplex {
 public:
  explicit BigComplex(Precision prec = 64) : re_(prec), im_(prec) {}
  BigComplex(BigFloat re, BigFloat im);
  BigComplex(long re, Precision prec) : re_(re, prec), im_(prec) {}
  BigComplex(const Rational& re, Precision prec) : re_(re, prec), im_(prec) {}
  BigComplex(const Rational& re, const Rational& im, Precision prec) : re_(re, prec), im_(im, prec) {}
  BigComplex(double re, double im, Precision prec) : re_(re, prec), im_(im, prec) {}

  Precision precision() const { return re_.precision(); }
  BigComplex with_precision(Precision prec) const;

  const BigFloat& real() const { return re_; }
  const BigFloat& imag() const { return im_; }
  BigFloat& real() { return re_; }
  BigFloat& imag() { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  BigComplex conj() const { return {re_, -im_}; }
  std::string str(int digits = 20) const;

  BigComplex& operator+=(const BigComplex& o);
  BigComplex& operator-=(const BigComplex& o);
  BigComplex& operator*=(const BigComplex& o);
  BigComplex& operator/=(const BigComplex& o);
  BigComplex& operator*=(const BigFloat& o);
  BigComplex& operator*=(long o);
  BigComplex& operator/=(long o);

  friend BigComplex operator+(BigComplex a, const BigComplex& b) { return a += b; }
  friend BigComplex operator-(BigComplex a, const BigComplex& b) { return a -= b; }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
  friend BigComplex operator/(BigComplex a, const BigComplex& b) { return a /= b; }
  friend BigComplex operator*(BigComplex a, const BigFloat& b) { return a *= b; }
  BigComplex operator-() const { return {-re_, -im_}; }

  friend bool operator==(const BigComplex& a, const BigComplex& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend std::ostream& operator<<(std::ostream& os, const BigComplex& z) { return os << z.str(); }

  // this += a * b without temporaries for the product parts.
  void add_product(const BigComplex& a, const BigComplex& b);

 private:
  BigFloat re_, im_;
};

BigFloat abs(const BigComplex& z);
BigFloat arg(const BigComplex& z);
BigComplex exp(const BigComplex& z);
// Principal branch.
BigComplex log(const BigComplex& z);
BigComplex polar(const BigFloat& radius, const BigFloat& angle);
BigComplex pow(const BigComplex& z, unsigned n);

}  // namespace mumhodge

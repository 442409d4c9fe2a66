#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "mumhodge/bigfloat.hpp"
#include "mumhodge/rational.hpp"

namespace mumhodge {

// Dense univariate polynomial over Q; coefficient i multiplies x^i. Trailing
// zeros are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial monomial(const Rational& c, std::size_t power);
  // (x - root)^multiplicity.
  static Polynomial power_of_linear(const Rational& root, unsigned multiplicity);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  Rational evaluate(const Rational& x) const;
  BigComplex evaluate(const BigComplex& x) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  // p(x + s).
  Polynomial taylor_shift(const Rational& s) const;
  // p(-x).
  Polynomial reflected() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Rational& s);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Quotient and remainder; throws on division by zero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;

  std::string str(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct RationalRoot {
  Rational value;
  unsigned multiplicity;
};

// Rational roots with multiplicity, in increasing order, and the cofactor
// that has no rational roots.
std::pair<std::vector<RationalRoot>, Polynomial> rational_roots(const Polynomial& p);

struct NumericRoot {
  BigComplex value;
  unsigned multiplicity;
};

// All complex roots via the Aberth iteration on the square-free part, with
// multiplicities from repeated gcds. Accurate to roughly the working precision.
std::vector<NumericRoot> numeric_roots(const Polynomial& p, Precision precision);

}  // namespace mumhodge

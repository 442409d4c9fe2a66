#include "mumhodge/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mumhodge/error.hpp"
#include "mumhodge/reconstruct.hpp"

namespace mumhodge {

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> v(power + 1, Rational(0));
  v[power] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::power_of_linear(const Rational& root, unsigned multiplicity) {
  Polynomial r({Rational(1)});
  const Polynomial lin({-root, Rational(1)});
  for (unsigned i = 0; i < multiplicity; ++i) r = r * lin;
  return r;
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigComplex Polynomial::evaluate(const BigComplex& x) const {
  const Precision prec = x.precision();
  BigComplex acc(prec);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + BigComplex(*it, prec);
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return *this;
  return *this * leading().inverse();
}

Polynomial Polynomial::taylor_shift(const Rational& s) const {
  // Horner in the ring Q[x]: acc = acc * (x + s) + c_i.
  Polynomial acc;
  const Polynomial lin({s, Rational(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + Polynomial({*it});
  return acc;
}

Polynomial Polynomial::reflected() const {
  std::vector<Rational> v = c_;
  for (std::size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return Polynomial(std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + b * Rational(-1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(v));
}

Polynomial operator*(const Polynomial& a, const Rational& s) {
  std::vector<Rational> v = a.c_;
  for (auto& x : v) x *= s;
  return Polynomial(std::move(v));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rational> rem = c_;
  const long dd = d.degree();
  if (degree() < dd) return {Polynomial(), *this};
  std::vector<Rational> quo(static_cast<std::size_t>(degree() - dd + 1), Rational(0));
  const Rational lead_inv = d.leading().inverse();
  for (long k = degree() - dd; k >= 0; --k) {
    const Rational coef = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
    quo[static_cast<std::size_t>(k)] = coef;
    if (coef.is_zero()) continue;
    for (long i = 0; i <= dd; ++i) rem[static_cast<std::size_t>(k + i)] -= coef * d.c_[static_cast<std::size_t>(i)];
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

std::string Polynomial::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (!unit || i == 0) os << mag;
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

namespace {

// Yun's square-free decomposition: p = c * prod_i f_i^i.
std::vector<Polynomial> squarefree_factors(const Polynomial& p) {
  std::vector<Polynomial> out;
  Polynomial a = p.monic();
  Polynomial b = a.derivative();
  Polynomial c = gcd(a, b);
  Polynomial w = a.divmod(c).first;
  Polynomial y = b.divmod(c).first;
  Polynomial z = y - w.derivative();
  while (w.degree() > 0) {
    Polynomial g = gcd(w, z);
    out.push_back(g);
    w = w.divmod(g).first;
    y = z.divmod(g).first;
    z = y - w.derivative();
  }
  return out;
}

std::vector<BigComplex> aberth(const Polynomial& f, Precision prec) {
  const long n = f.degree();
  if (n < 1) return {};
  const Polynomial m = f.monic();
  const Precision work = prec + 32;
  if (n == 1) return {BigComplex(-m[0], work)};

  double radius = 0;
  for (long k = 1; k <= n; ++k) {
    const double c = std::abs(m[static_cast<std::size_t>(n - k)].to_double());
    if (c > 0) radius = std::max(radius, 2 * std::pow(c, 1.0 / static_cast<double>(k)));
  }
  if (radius == 0) radius = 1;
  std::vector<BigComplex> z;
  for (long k = 0; k < n; ++k) {
    const double angle = 2 * M_PI * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z.emplace_back(radius * std::cos(angle), radius * std::sin(angle), work);
  }
  const Polynomial d = m.derivative();
  const BigFloat one(1L, work);
  for (int iter = 0; iter < 2000; ++iter) {
    bool done = true;
    for (long k = 0; k < n; ++k) {
      auto& zk = z[static_cast<std::size_t>(k)];
      const BigComplex pv = m.evaluate(zk);
      if (pv.is_zero()) continue;
      const BigComplex w = pv / d.evaluate(zk);
      BigComplex s(work);
      for (long j = 0; j < n; ++j) {
        if (j != k) s += BigComplex(1L, work) / (zk - z[static_cast<std::size_t>(j)]);
      }
      const BigComplex step = w / (BigComplex(1L, work) - w * s);
      zk -= step;
      BigFloat scale = abs(zk);
      if (scale < one) scale = one;
      if (abs(step) > ldexp(scale, -(static_cast<long>(prec) + 8))) done = false;
    }
    if (done) break;
  }
  return z;
}

}  // namespace

std::pair<std::vector<RationalRoot>, Polynomial> rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error("rational roots of the zero polynomial");
  std::vector<RationalRoot> roots;
  Polynomial rest = p;
  // Denominators of rational roots divide the leading coefficient of the
  // integral primitive form, so the numeric candidates only need that bound.
  BigInt den_lcm(1);
  for (const auto& c : p.coefficients()) den_lcm = lcm(den_lcm, c.den());
  const BigInt lead = abs(BigInt(p.leading().num() * (den_lcm / p.leading().den())));
  const Precision prec = 128 + 4 * static_cast<Precision>(mpz_sizeinbase(lead.get_mpz_t(), 2));
  std::vector<Rational> candidates;
  if (p[0].is_zero()) candidates.push_back(Rational(0));
  for (const auto& f : squarefree_factors(p)) {
    for (const auto& z : aberth(f, prec)) {
      if (abs(z.imag()).exponent2() > -static_cast<long>(prec) / 2) continue;
      auto r = rational_reconstruct(z.real(), BigInt(lead + 1));
      if (r) candidates.push_back(*r);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& r : candidates) {
    const Polynomial lin({-r, Rational(1)});
    unsigned mult = 0;
    while (rest.degree() > 0) {
      auto [quo, rem] = rest.divmod(lin);
      if (!rem.is_zero()) break;
      rest = std::move(quo);
      ++mult;
    }
    if (mult > 0) roots.push_back({r, mult});
  }
  return {roots, rest};
}

std::vector<NumericRoot> numeric_roots(const Polynomial& p, Precision precision) {
  if (p.is_zero()) throw Error("roots of the zero polynomial");
  std::vector<NumericRoot> out;
  unsigned mult = 0;
  for (const auto& f : squarefree_factors(p)) {
    ++mult;
    for (const auto& z : aberth(f, precision)) out.push_back({z.with_precision(precision), mult});
  }
  return out;
}

}  // namespace mumhodge

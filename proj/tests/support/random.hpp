#pragma once

#include <random>
#include <vector>

#include "mumhodge/rational.hpp"
#include "mumhodge/series.hpp"
#include "mumhodge/symplectic.hpp"

// Hand-rolled generators for the property tests. Fixed seeds keep failures
// reproducible.
namespace mumhodge::testing {

class Generator {
 public:
  explicit Generator(unsigned seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long max_num = 20, long max_den = 12) {
    return Rational(BigInt(integer(-max_num, max_num)), BigInt(integer(1, max_den)));
  }

  RationalSeries series(std::size_t order, bool zero_constant) {
    std::vector<Rational> c;
    for (std::size_t i = 0; i <= order; ++i) c.push_back(rational(9, 5));
    if (zero_constant) c[0] = Rational(0);
    return RationalSeries(std::move(c));
  }

  // Normal form satisfying integrality and polarization.
  NormalForm normal_form() {
    long a = 0;
    while (a == 0) a = integer(-4, 4);
    const long b = integer(1, 60);
    const Rational ab(a * b);
    const Rational e = Rational(integer(-20, 20)) + (ab / Rational(2) - Rational((a * b) / 2));
    const Rational f = Rational(integer(-40, 40)) + Rational(a * a * b) / Rational(6);
    return {Rational(a), Rational(b), e, f};
  }

  // Element of G_Z(W): p, q in Z, r +- pq/2 in Z, s - p^2 q/6 in Z.
  WeightStabilizerElement weight_stabilizer() {
    const long p = integer(-6, 6);
    const long q = integer(-6, 6);
    const Rational pq(p * q);
    const Rational r = Rational(integer(-10, 10)) + (pq / Rational(2) - Rational((p * q) / 2));
    const Rational s = Rational(integer(-10, 10)) + Rational(p * p * q) / Rational(6);
    return {Rational(p), Rational(q), r, s};
  }

  // Product of a few symplectic transvections x -> x + k <x, v> v.
  RationalMatrix symplectic_integral(int factors = 4) {
    RationalMatrix g = RationalMatrix::identity(Rational(0));
    for (int i = 0; i < factors; ++i) {
      RationalVector v{Rational(integer(-2, 2)), Rational(integer(-2, 2)), Rational(integer(-2, 2)),
                       Rational(integer(-2, 2))};
      const Rational k(integer(-2, 2));
      const RationalVector jv = gram_matrix() * v;
      RationalMatrix t = RationalMatrix::identity(Rational(0));
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c) t(r, c) += k * v[r] * jv[c];
      g = g * t;
    }
    return g;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace mumhodge::testing

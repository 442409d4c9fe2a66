#include "mumhodge/reconstruct.hpp"

namespace mumhodge {

Rational to_rational(const BigFloat& x) {
  if (!x.is_finite()) throw Error("cannot convert a non-finite value to a rational");
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x.get());
  return Rational(q);
}

std::optional<Rational> rational_reconstruct(const BigFloat& x, const BigInt& denominator_bound) {
  return rational_reconstruct(x, denominator_bound, static_cast<long>(x.precision() / 2));
}

std::optional<Rational> rational_reconstruct(const BigFloat& x, const BigInt& denominator_bound,
                                             long tolerance_bits) {
  if (denominator_bound < 1) throw Error("denominator bound must be at least 1");
  if (!x.is_finite()) return std::nullopt;

  const Rational exact = to_rational(x);
  const Rational tolerance = tolerance_bits >= 0
                                ? Rational(BigInt(1), BigInt(BigInt(1) << static_cast<unsigned long>(tolerance_bits)))
                                : Rational(BigInt(BigInt(1) << static_cast<unsigned long>(-tolerance_bits)));

  // Convergents h_k / k_k of the exact binary value.
  BigInt h_prev = 1, h_prev2 = 0;
  BigInt k_prev = 0, k_prev2 = 1;
  Rational rest = exact;
  while (true) {
    const BigInt a = rest.floor();
    const BigInt h = a * h_prev + h_prev2;
    const BigInt k = a * k_prev + k_prev2;
    if (k > denominator_bound) return std::nullopt;
    const Rational candidate(h, k);
    if ((exact - candidate).abs() < tolerance) return candidate;
    const Rational frac = rest - Rational(a);
    if (frac.is_zero()) return std::nullopt;
    rest = frac.inverse();
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
  }
}

}  // namespace mumhodge

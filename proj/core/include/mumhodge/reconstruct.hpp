#pragma once

#include <optional>

#include "mumhodge/bigfloat.hpp"

namespace mumhodge {

// Continued-fraction recognition of a real value as a small rational.
//
// Walks the convergents p/q of x with q <= denominator_bound and returns the
// first one with |x - p/q| < 2^(-tolerance_bits). The default tolerance is
// half of x's working precision.
std::optional<Rational> rational_reconstruct(const BigFloat& x, const BigInt& denominator_bound);
std::optional<Rational> rational_reconstruct(const BigFloat& x, const BigInt& denominator_bound,
                                             long tolerance_bits);

// Exact value held by x, as a rational.
Rational to_rational(const BigFloat& x);

}  // namespace mumhodge

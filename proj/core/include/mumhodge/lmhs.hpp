#pragma once

#include <array>
#include <optional>
#include <string>

#include "mumhodge/bigfloat.hpp"
#include "mumhodge/matrix.hpp"
#include "mumhodge/symplectic.hpp"

namespace mumhodge {

// Lower unitriangular period matrix [w3 w2 w1 w0] of a limit filtration in
// the basis e3..e0:
//
//     [ 1    0                 0    0 ]
//     [ p2   1                 0    0 ]
//     [ p1   (b/a)p2 + e/a     1    0 ]
//     [ p0   (e/a)p2 + f/a - p1  -p2  1 ]
struct PeriodMatrix {
  ComplexMatrix matrix;

  static PeriodMatrix from_parameters(const NormalForm& nf, const BigComplex& pi2, const BigComplex& pi1,
                                      const BigComplex& pi0);

  const BigComplex& pi2() const { return matrix(1, 0); }
  const BigComplex& pi1() const { return matrix(2, 0); }
  const BigComplex& pi0() const { return matrix(3, 0); }
};

struct LMHSPoint {
  NormalForm normal_form;
  BigComplex pi;

  Rational f_over_2a() const { return normal_form.f / (Rational(2) * normal_form.a); }
  Rational e_over_a() const { return normal_form.e / normal_form.a; }
  // The normalized matrix with p2 = 0 and p1 = f/2a.
  PeriodMatrix period_matrix() const;
};

// Kills p2 with exp(-(p2/a)N) and reads off (f/2a, e/a, pi). The shape and
// the bilinear relation are checked to 2^-tolerance_bits (default: half the
// working precision).
LMHSPoint normalize_lhf(const PeriodMatrix& pm, const NormalForm& nf);
LMHSPoint normalize_lhf(const PeriodMatrix& pm, const NormalForm& nf, long tolerance_bits);

// [1, 0, f/2a, pi].
std::array<BigComplex, 4> lhf_vector(const LMHSPoint& point);

enum class TorelliVerdict { distinguishable, inconclusive };
enum class TorelliBranch { b_differs, pi_difference_not_rational, pi_difference_rational };

std::string to_string(TorelliVerdict v);
std::string to_string(TorelliBranch b);

struct TorelliEvidence {
  TorelliVerdict verdict;
  TorelliBranch branch;
  Rational b1, b2;
  std::optional<BigComplex> pi_difference;
  std::optional<Rational> recognized;
  // |Im(pi1 - pi2)| plus, when a rational was recognized, its distance to Re.
  std::optional<BigFloat> residual;
  Precision precision = 0;
  BigInt denominator_bound;

  std::string summary() const;
};

TorelliEvidence torelli_distinguish(const LMHSPoint& p1, const LMHSPoint& p2, const BigInt& denominator_bound,
                                    Precision precision);

struct MirrorInvariants {
  BigInt degree;
  BigInt c2H;
  BigInt chi;
  Rational twist;  // 1 for even degree, -1/2 for odd

  static MirrorInvariants make(BigInt degree, BigInt c2H, BigInt chi);
  friend bool operator==(const MirrorInvariants&, const MirrorInvariants&) = default;
};

std::ostream& operator<<(std::ostream& os, const MirrorInvariants& mi);

// Integral frame (A_0, A_1, B^1, B^0) = S (omega_3, .., omega_0) predicted
// by the mirror invariants:
//
//     [ 1        0        0      0     ]
//     [ 0        1        0      0     ]
//     [ -c2H/24  twist    deg/2  0     ]
//     [ chi k    -c2H/24  0      -deg/6 ]
KappaMatrix mirror_frame(const MirrorInvariants& mi);

// a = 1, b = degree, e = twist, f = -c2H/12, pi = chi * kappa.
LMHSPoint mirror_to_hodge(const MirrorInvariants& mi, Precision precision);

// Inverse of mirror_to_hodge on points in the gauge a = 1, e in {1, -1/2}.
// Throws a recognition error when chi cannot be identified as an integer.
MirrorInvariants hodge_to_mirror(const LMHSPoint& point, const BigInt& denominator_bound);

}  // namespace mumhodge

#pragma once

#include <array>
#include <string>
#include <vector>

#include "mumhodge/matrix.hpp"
#include "mumhodge/rational.hpp"

// Exact algebra of the rank-4 symplectic lattice with basis (e3, e2, e1, e0)
// and <e3, e0> = <e2, e1> = 1.
namespace mumhodge {

using RationalVector = RationalMatrix::Vec;

// Gram matrix J of the fixed symplectic form, <x, y> = x^T J y.
const RationalMatrix& gram_matrix();
Rational pairing(const RationalVector& x, const RationalVector& y);

bool is_integral(const RationalMatrix& m);
bool is_symplectic(const RationalMatrix& m);                 // M^T J M = J
bool is_infinitesimally_symplectic(const RationalMatrix& n);  // N^T J + J N = 0

// Entries of a MUM nilpotent in an adapted symplectic basis:
//
//     [ 0  0  0  0 ]
//     [ a  0  0  0 ]
//     [ e  b  0  0 ]
//     [ f  e -a  0 ]
struct NormalForm {
  Rational a, b, e, f;

  RationalMatrix nilpotent() const;
  RationalMatrix unipotent() const { return exp_nilpotent(nilpotent()); }
  static NormalForm from_nilpotent(const RationalMatrix& n);

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

std::ostream& operator<<(std::ostream& os, const NormalForm& nf);

// Element exp(M) of the weight stabilizer G_Z(W), with M shaped like a
// normal-form nilpotent in (p, q, r, s):
//
//     [ 0  0  0  0 ]
//     [ p  0  0  0 ]
//     [ r  q  0  0 ]
//     [ s  r -p  0 ]
struct WeightStabilizerElement {
  Rational p, q, r, s;

  RationalMatrix generator() const;
  RationalMatrix matrix() const { return exp_nilpotent(generator()); }
  // p, q in Z, r +- pq/2 in Z, s - p^2 q/6 in Z; equivalently exp(M) integral.
  bool is_integral() const;
  static WeightStabilizerElement from_matrix(const RationalMatrix& a);
};

// Weight filtration W0 c W2 c W4 c W6 of a MUM nilpotent, each level as a
// list of rational basis vectors.
struct WeightFiltration {
  std::vector<RationalVector> w0, w2, w4, w6;
};

WeightFiltration weight_filtration(const RationalMatrix& n);

enum class BoundaryType { type_I, type_II, mum };
std::string to_string(BoundaryType t);

BoundaryType classify_nilpotent(const RationalMatrix& n);

// log T for unipotent T, via the terminating series. Exact.
RationalMatrix log_unipotent(const RationalMatrix& t);

struct NormalFormResult {
  NormalForm form;
  // Columns are the adapted basis vectors f3, f2, f1, f0 written in the input
  // coordinates; integral and symplectic. The nilpotent in the new basis is
  // basis^{-1} * log(T) * basis.
  RationalMatrix basis;
};

// Adapted integral symplectic basis for an integral symplectic MUM unipotent.
// The sign of a is normalized to be positive.
NormalFormResult normal_form(const RationalMatrix& t);

// Literal transcription of the G_Z(W) action on (a, b, e, f):
// e -> e - b p + a q, f -> f - 2 e p + b p^2 - a p q + 2 a r.
NormalForm act_weight_stabilizer(const WeightStabilizerElement& g, const NormalForm& nf);

// Basis change e3 -> -e3, e0 -> -e0: (a, b, e, f) -> (-a, b, -e, f).
NormalForm sign_flip(const NormalForm& nf);

struct ResidueClass {
  BigInt residue;  // in [0, modulus)
  BigInt modulus;
  bool doubled;    // true when the class is of 2e rather than e

  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;
};

struct NormalFormInvariants {
  Rational b;
  Rational abs_a;
  ResidueClass e_class;

  friend bool operator==(const NormalFormInvariants&, const NormalFormInvariants&) = default;
};

std::ostream& operator<<(std::ostream& os, const NormalFormInvariants& inv);

// b, |a| and, with m = gcd(a, b), [e] in Z/mZ (ab even) or [2e] in Z/2mZ (ab odd).
NormalFormInvariants invariants(const NormalForm& nf);

struct IntegrityCheck {
  std::string condition;
  bool passed;
};

struct IntegralityReport {
  std::vector<IntegrityCheck> checks;

  bool passed() const;
  std::vector<std::string> failures() const;
};

IntegralityReport check_integrality_polarization(const NormalForm& nf);

// Moves a normal form with |a| = 1 into the gauge a = 1, e in {1, -1/2}
// (e = 1 for even b) using the sign flip and an element with p = r = s = 0.
struct MirrorGauge {
  NormalForm form;
  bool flipped;
  WeightStabilizerElement shift;
};
MirrorGauge reduce_to_mirror_gauge(const NormalForm& nf);

}  // namespace mumhodge

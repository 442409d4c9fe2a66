#include "mumhodge/lmhs.hpp"

#include <algorithm>
#include <sstream>

#include "mumhodge/constants.hpp"
#include "mumhodge/reconstruct.hpp"

namespace mumhodge {

namespace {

BigComplex cplx(const Rational& r, Precision prec) { return BigComplex(r, prec); }

bool close(const BigComplex& x, const BigComplex& y, const BigFloat& tol) { return abs(x - y) <= tol; }

Rational twist_for(const BigInt& degree) { return degree % 2 == 0 ? Rational(1) : Rational(BigInt(-1), BigInt(2)); }

}  // namespace

PeriodMatrix PeriodMatrix::from_parameters(const NormalForm& nf, const BigComplex& pi2, const BigComplex& pi1,
                                           const BigComplex& pi0) {
  if (nf.a.is_zero()) throw Error("normal form with a = 0 has no limit period matrix");
  const Precision prec = std::min({pi2.precision(), pi1.precision(), pi0.precision()});
  ComplexMatrix m = ComplexMatrix::identity(BigComplex(prec));
  m(1, 0) = pi2;
  m(2, 0) = pi1;
  m(3, 0) = pi0;
  m(2, 1) = pi2 * cplx(nf.b / nf.a, prec) + cplx(nf.e / nf.a, prec);
  m(3, 1) = pi2 * cplx(nf.e / nf.a, prec) + cplx(nf.f / nf.a, prec) - pi1;
  m(3, 2) = -pi2;
  return {m};
}

PeriodMatrix LMHSPoint::period_matrix() const {
  const Precision prec = pi.precision();
  return PeriodMatrix::from_parameters(normal_form, BigComplex(prec), cplx(f_over_2a(), prec), pi);
}

LMHSPoint normalize_lhf(const PeriodMatrix& pm, const NormalForm& nf) {
  return normalize_lhf(pm, nf, pm.matrix.like().precision() / 2);
}

LMHSPoint normalize_lhf(const PeriodMatrix& pm, const NormalForm& nf, long tolerance_bits) {
  if (nf.a.is_zero()) throw Error("normal form with a = 0 has no limit period matrix");
  const ComplexMatrix& m = pm.matrix;
  const Precision prec = m.like().precision();
  BigFloat scale = max_abs(m);
  if (scale < BigFloat(1L, prec)) scale = BigFloat(1L, prec);
  const BigFloat tol = pow2(-tolerance_bits, prec) * scale;

  const PeriodMatrix expected = PeriodMatrix::from_parameters(nf, m(1, 0), m(2, 0), m(3, 0));
  if (max_abs(m - expected.matrix) > tol) throw Error("input is not a limit period matrix");

  ComplexMatrix n = to_complex(nf.nilpotent(), prec);
  n *= -m(1, 0) / cplx(nf.a, prec);
  const ComplexMatrix normalized = exp_nilpotent(n) * m;

  // Second bilinear relation: both off-diagonal slots equal f/2a.
  const BigComplex half = cplx(nf.f / (Rational(2) * nf.a), prec);
  if (!close(normalized(1, 0), BigComplex(prec), tol) || !close(normalized(2, 0), half, tol) ||
      !close(normalized(3, 1), half, tol)) {
    throw Error("input is not a limit period matrix");
  }
  return {nf, normalized(3, 0)};
}

std::array<BigComplex, 4> lhf_vector(const LMHSPoint& point) {
  const Precision prec = point.pi.precision();
  return {BigComplex(1L, prec), BigComplex(prec), cplx(point.f_over_2a(), prec), point.pi};
}

std::string to_string(TorelliVerdict v) {
  return v == TorelliVerdict::distinguishable ? "distinguishable" : "inconclusive";
}

std::string to_string(TorelliBranch b) {
  switch (b) {
    case TorelliBranch::b_differs:
      return "b_differs";
    case TorelliBranch::pi_difference_not_rational:
      return "pi_difference_not_rational";
    case TorelliBranch::pi_difference_rational:
      return "pi_difference_rational";
  }
  return "unknown";
}

std::string TorelliEvidence::summary() const {
  std::ostringstream os;
  switch (branch) {
    case TorelliBranch::b_differs:
      os << "b differs (" << b1 << " vs " << b2 << ")";
      break;
    case TorelliBranch::pi_difference_not_rational:
      os << "pi1 - pi2 is not a rational with denominator <= " << denominator_bound << " at " << precision
         << " bits (evidence at working precision, not a proof)";
      break;
    case TorelliBranch::pi_difference_rational:
      os << "pi1 - pi2 recognized as " << *recognized << " at " << precision << " bits";
      break;
  }
  os << ": " << to_string(verdict);
  return os.str();
}

TorelliEvidence torelli_distinguish(const LMHSPoint& p1, const LMHSPoint& p2, const BigInt& denominator_bound,
                                    Precision precision) {
  TorelliEvidence ev{TorelliVerdict::inconclusive, TorelliBranch::pi_difference_rational,
                     p1.normal_form.b, p2.normal_form.b, std::nullopt, std::nullopt, std::nullopt,
                     0, denominator_bound};
  if (p1.normal_form.b != p2.normal_form.b) {
    ev.verdict = TorelliVerdict::distinguishable;
    ev.branch = TorelliBranch::b_differs;
    return ev;
  }
  const Precision prec = std::min({precision, p1.pi.precision(), p2.pi.precision()});
  ev.precision = prec;
  const BigComplex diff = p1.pi.with_precision(prec) - p2.pi.with_precision(prec);
  ev.pi_difference = diff;
  const long tol_bits = prec / 2;
  const BigFloat tol = pow2(-tol_bits, prec);
  const BigFloat im = abs(diff.imag());
  std::optional<Rational> r;
  if (im < tol) {
    // Recognize |Re| so the verdict does not depend on argument order.
    r = rational_reconstruct(abs(diff.real()), denominator_bound, tol_bits);
    if (r && diff.real().sign() < 0) r = -*r;
  }
  if (r) {
    ev.recognized = r;
    ev.residual = im + abs(diff.real() - BigFloat(*r, prec));
  } else {
    ev.verdict = TorelliVerdict::distinguishable;
    ev.branch = TorelliBranch::pi_difference_not_rational;
    ev.residual = im;
  }
  return ev;
}

MirrorInvariants MirrorInvariants::make(BigInt degree, BigInt c2H, BigInt chi) {
  if (degree < 1) throw Error("degree must be a positive integer");
  Rational twist = twist_for(degree);
  return {std::move(degree), std::move(c2H), std::move(chi), std::move(twist)};
}

std::ostream& operator<<(std::ostream& os, const MirrorInvariants& mi) {
  return os << "(degree " << mi.degree << ", c2H " << mi.c2H << ", chi " << mi.chi << ")";
}

KappaMatrix mirror_frame(const MirrorInvariants& mi) {
  const Rational c24(BigInt(-mi.c2H), BigInt(24));
  RationalMatrix s = RationalMatrix::identity(Rational(0));
  s(2, 0) = c24;
  s(2, 1) = mi.twist;
  s(2, 2) = Rational(mi.degree, BigInt(2));
  s(3, 1) = c24;
  s(3, 3) = Rational(BigInt(-mi.degree), BigInt(6));
  RationalMatrix k(Rational(0));
  k(3, 0) = Rational(mi.chi);
  return {s, k};
}

LMHSPoint mirror_to_hodge(const MirrorInvariants& mi, Precision precision) {
  if (mi.degree < 1) throw Error("degree must be a positive integer");
  NormalForm nf{Rational(1), Rational(mi.degree), twist_for(mi.degree), Rational(BigInt(-mi.c2H), BigInt(12))};
  return {nf, kappa(precision) * BigComplex(Rational(mi.chi), precision)};
}

MirrorInvariants hodge_to_mirror(const LMHSPoint& point, const BigInt& denominator_bound) {
  const NormalForm& nf = point.normal_form;
  if (nf.a != Rational(1) || !nf.b.is_integer() || nf.b.sign() <= 0 || nf.e != twist_for(nf.b.num())) {
    throw Error("not in mirror gauge");
  }
  const Rational c2H = -Rational(12) * nf.f;
  if (!c2H.is_integer()) throw Error("c2H = -12 f is not an integer");

  const Precision prec = point.pi.precision();
  const long tol_bits = prec / 2;
  BigFloat scale = abs(point.pi);
  if (scale < BigFloat(1L, prec)) scale = BigFloat(1L, prec);
  if (abs(point.pi.real()) > pow2(-tol_bits, prec) * scale) {
    throw Error(ErrorKind::recognition, "pi has a non-zero real part");
  }
  const BigFloat chi = point.pi.imag() / kappa(prec).imag();
  const auto r = rational_reconstruct(abs(chi), denominator_bound, tol_bits);
  if (!r || !r->is_integer()) throw Error(ErrorKind::recognition, "chi is not recognized as an integer");
  const BigInt chi_int = chi.sign() < 0 ? BigInt(-r->num()) : r->num();
  return MirrorInvariants::make(nf.b.num(), c2H.num(), chi_int);
}

}  // namespace mumhodge

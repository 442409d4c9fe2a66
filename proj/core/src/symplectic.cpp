#include "mumhodge/symplectic.hpp"

#include <ostream>

namespace mumhodge {

namespace {

const Rational kZero(0);

bool integral(const Rational& x) { return x.is_integer(); }

RationalMatrix shaped(const Rational& a, const Rational& b, const Rational& e, const Rational& f) {
  RationalMatrix m(kZero);
  m(1, 0) = a;
  m(2, 0) = e;
  m(3, 0) = f;
  m(2, 1) = b;
  m(3, 1) = e;
  m(3, 2) = -a;
  return m;
}

RationalVector zero_vector() { return {kZero, kZero, kZero, kZero}; }

RationalVector scaled(const RationalVector& v, const Rational& s) {
  RationalVector r = v;
  for (auto& x : r) x *= s;
  return r;
}

RationalVector add(const RationalVector& x, const RationalVector& y) {
  RationalVector r = x;
  for (std::size_t i = 0; i < 4; ++i) r[i] += y[i];
  return r;
}

bool is_zero_vector(const RationalVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

// Primitive integral vector on the line through v, with its last non-zero
// coordinate (the one nearest e0) positive.
RationalVector primitive(const RationalVector& v) {
  BigInt l = 1;
  for (const auto& x : v) l = lcm(l, x.den());
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, BigInt(x.num() * (l / x.den())));
  if (g == 0) throw Error("primitive vector of zero");
  RationalVector r = scaled(v, Rational(l, g));
  for (std::size_t i = 4; i-- > 0;) {
    if (r[i].is_zero()) continue;
    if (r[i].sign() < 0) r = scaled(r, Rational(-1));
    break;
  }
  return r;
}

// Integer vector y with sum c_i y_i = 1, for integral primitive c.
RationalVector solve_unimodular(const RationalVector& c) {
  BigInt g = 0;
  std::array<BigInt, 4> coef{0, 0, 0, 0};
  for (std::size_t i = 0; i < 4; ++i) {
    if (!c[i].is_integer()) throw Error("expected an integral vector");
    const BigInt ci = c[i].num();
    if (ci == 0) continue;
    BigInt ng, s, t;
    mpz_gcdext(ng.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), ci.get_mpz_t());
    for (auto& x : coef) x *= s;
    coef[i] += t;
    g = ng;
  }
  if (g != 1) throw Error("linear form is not primitive on the lattice");
  return {Rational(coef[0]), Rational(coef[1]), Rational(coef[2]), Rational(coef[3])};
}

// The functional x -> <x, v> as a coefficient vector (J v).
RationalVector pairing_functional(const RationalVector& v) { return gram_matrix() * v; }

}  // namespace

const RationalMatrix& gram_matrix() {
  static const RationalMatrix j = to_rational_matrix({{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {-1, 0, 0, 0}}});
  return j;
}

Rational pairing(const RationalVector& x, const RationalVector& y) {
  const RationalVector jy = gram_matrix() * y;
  Rational s(0);
  for (std::size_t i = 0; i < 4; ++i) s += x[i] * jy[i];
  return s;
}

bool is_integral(const RationalMatrix& m) {
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (!m(i, j).is_integer()) return false;
  return true;
}

bool is_symplectic(const RationalMatrix& m) { return m.transpose() * gram_matrix() * m == gram_matrix(); }

bool is_infinitesimally_symplectic(const RationalMatrix& n) {
  return (n.transpose() * gram_matrix() + gram_matrix() * n).is_zero();
}

RationalMatrix NormalForm::nilpotent() const { return shaped(a, b, e, f); }

NormalForm NormalForm::from_nilpotent(const RationalMatrix& n) {
  if (!(n == shaped(n(1, 0), n(2, 1), n(2, 0), n(3, 0)))) {
    throw Error("matrix is not in the (a, b, e, f) normal shape");
  }
  return {n(1, 0), n(2, 1), n(2, 0), n(3, 0)};
}

std::ostream& operator<<(std::ostream& os, const NormalForm& nf) {
  return os << "(a=" << nf.a << ", b=" << nf.b << ", e=" << nf.e << ", f=" << nf.f << ")";
}

RationalMatrix WeightStabilizerElement::generator() const { return shaped(p, q, r, s); }

bool WeightStabilizerElement::is_integral() const {
  const Rational half_pq = p * q / Rational(2);
  return integral(p) && integral(q) && integral(r + half_pq) && integral(r - half_pq) &&
         integral(s - p * p * q / Rational(6));
}

WeightStabilizerElement WeightStabilizerElement::from_matrix(const RationalMatrix& a) {
  const NormalForm m = NormalForm::from_nilpotent(log_unipotent(a));
  return {m.a, m.b, m.e, m.f};
}

WeightFiltration weight_filtration(const RationalMatrix& n) {
  if (!n.power(4).is_zero() || n.power(3).is_zero()) {
    throw Error("weight filtration implemented only for MUM type");
  }
  WeightFiltration w;
  w.w0 = column_space_basis(n.power(3));
  w.w2 = column_space_basis(n.power(2));
  w.w4 = column_space_basis(n);
  w.w6 = column_space_basis(RationalMatrix::identity(kZero));
  return w;
}

std::string to_string(BoundaryType t) {
  switch (t) {
    case BoundaryType::type_I: return "type-I";
    case BoundaryType::type_II: return "type-II";
    case BoundaryType::mum: return "MUM";
  }
  return "unknown";
}

BoundaryType classify_nilpotent(const RationalMatrix& n) {
  if (n.is_zero()) throw Error("zero nilpotent generates no boundary type");
  if (!n.power(4).is_zero()) throw Error("matrix is not nilpotent");
  if (!is_infinitesimally_symplectic(n)) throw Error("nilpotent is not infinitesimally symplectic");
  if (!n.power(3).is_zero()) return BoundaryType::mum;
  if (!n.power(2).is_zero()) throw Error("nilpotent has no polarizable boundary type");
  switch (rank(n)) {
    case 1: return BoundaryType::type_I;
    case 2: return BoundaryType::type_II;
    default: throw Error("nilpotent has no polarizable boundary type");
  }
}

RationalMatrix log_unipotent(const RationalMatrix& t) {
  const RationalMatrix u = t - RationalMatrix::identity(kZero);
  if (!u.power(4).is_zero()) throw Error("matrix is not unipotent");
  return log_unipotent_series(t);
}

NormalFormResult normal_form(const RationalMatrix& t) {
  if (!is_integral(t)) throw Error("monodromy matrix is not integral");
  if (!is_symplectic(t)) throw Error("monodromy matrix is not symplectic");
  const RationalMatrix n = log_unipotent(t);
  if (n.power(3).is_zero()) throw Error("monodromy is not of MUM type");
  const WeightFiltration w = weight_filtration(n);

  // f0 spans W0; f3 pairs to one with it. Their orthogonal complement U is
  // a unimodular rank-2 summand, reached by the integral projection below.
  const RationalVector f0 = primitive(w.w0.front());
  const RationalVector f3 = solve_unimodular(pairing_functional(f0));
  auto project = [&](const RationalVector& x) {
    return add(add(x, scaled(f3, -pairing(x, f0))), scaled(f0, pairing(x, f3)));
  };

  RationalVector line = zero_vector();
  for (const auto& v : w.w2) {
    line = project(v);
    if (!is_zero_vector(line)) break;
  }
  RationalVector f1 = primitive(line);
  RationalVector f2 = project(solve_unimodular(pairing_functional(f1)));

  auto assemble = [&] {
    RationalMatrix basis(kZero);
    basis.set_column(0, f3);
    basis.set_column(1, f2);
    basis.set_column(2, f1);
    basis.set_column(3, f0);
    return basis;
  };
  RationalMatrix basis = assemble();
  RationalMatrix adapted = *basis.inverse() * n * basis;
  if (adapted(1, 0).sign() < 0) {
    f1 = scaled(f1, Rational(-1));
    f2 = scaled(f2, Rational(-1));
    basis = assemble();
    adapted = *basis.inverse() * n * basis;
  }

  const NormalForm form = NormalForm::from_nilpotent(adapted);
  if (form.b.sign() <= 0 || (form.a * form.a * form.b).sign() <= 0) {
    throw Error("not a polarizable nilpotent orbit");
  }
  return {form, basis};
}

NormalForm act_weight_stabilizer(const WeightStabilizerElement& g, const NormalForm& nf) {
  const auto& [p, q, r, s] = g;
  (void)s;
  NormalForm out = nf;
  out.e = nf.e - nf.b * p + nf.a * q;
  out.f = nf.f - Rational(2) * nf.e * p + nf.b * p * p - nf.a * p * q + Rational(2) * nf.a * r;
  return out;
}

NormalForm sign_flip(const NormalForm& nf) { return {-nf.a, nf.b, -nf.e, nf.f}; }

std::ostream& operator<<(std::ostream& os, const NormalFormInvariants& inv) {
  os << "(b=" << inv.b << ", |a|=" << inv.abs_a << ", [" << (inv.e_class.doubled ? "2e" : "e")
     << "]=" << inv.e_class.residue << " mod " << inv.e_class.modulus << ")";
  return os;
}

NormalFormInvariants invariants(const NormalForm& nf) {
  if (!nf.a.is_integer() || !nf.b.is_integer()) throw Error("normal form violates integrality: a, b must be integers");
  if (nf.b.sign() <= 0 || nf.a.is_zero()) throw Error("normal form violates polarization");
  const BigInt a = nf.a.num();
  const BigInt b = nf.b.num();
  const BigInt m = gcd(a, b);
  const bool ab_even = ((a * b) % 2) == 0;
  ResidueClass cls;
  if (ab_even) {
    if (!nf.e.is_integer()) throw Error("normal form violates integrality: e must be integral when ab is even");
    cls = {mod_floor(nf.e.num(), m), m, false};
  } else {
    const Rational twice = Rational(2) * nf.e;
    if (!twice.is_integer()) throw Error("normal form violates integrality: 2e must be integral");
    cls = {mod_floor(twice.num(), BigInt(2 * m)), BigInt(2 * m), true};
  }
  return {nf.b, nf.a.abs(), cls};
}

bool IntegralityReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::vector<std::string> IntegralityReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (!c.passed) out.push_back(c.condition);
  return out;
}

IntegralityReport check_integrality_polarization(const NormalForm& nf) {
  const Rational ab = nf.a * nf.b;
  const Rational a2b = nf.a * nf.a * nf.b;
  IntegralityReport r;
  r.checks = {
      {"a in Z", integral(nf.a)},
      {"b in Z", integral(nf.b)},
      {"e + ab/2 in Z", integral(nf.e + ab / Rational(2))},
      {"e - ab/2 in Z", integral(nf.e - ab / Rational(2))},
      {"f - a^2 b/6 in Z", integral(nf.f - a2b / Rational(6))},
      {"a^2 b > 0", a2b.sign() > 0},
      {"b > 0", nf.b.sign() > 0},
  };
  return r;
}

MirrorGauge reduce_to_mirror_gauge(const NormalForm& nf) {
  if (nf.a.abs() != Rational(1)) throw Error("not in mirror gauge: |a| must be 1");
  MirrorGauge g{nf, false, {kZero, kZero, kZero, kZero}};
  if (nf.a.sign() < 0) {
    g.form = sign_flip(nf);
    g.flipped = true;
  }
  if (!g.form.b.is_integer() || g.form.b.sign() <= 0) throw Error("not in mirror gauge: b must be a positive integer");
  const bool even = (g.form.b.num() % 2) == 0;
  const Rational target = even ? Rational(1) : Rational(-1) / Rational(2);
  const Rational q = target - g.form.e;
  if (!q.is_integer()) throw Error("not in mirror gauge: e cannot be shifted to the mirror value");
  g.shift = {kZero, q, kZero, kZero};
  g.form = act_weight_stabilizer(g.shift, g.form);
  return g;
}

}  // namespace mumhodge

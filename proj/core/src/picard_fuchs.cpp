#include "mumhodge/picard_fuchs.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mumhodge/reconstruct.hpp"

namespace mumhodge {

namespace {

// Stirling numbers of the second kind S(i, k) for i, k <= 4.
long stirling2(std::size_t i, std::size_t k) {
  static const long table[5][5] = {
      {1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 1, 3, 1, 0}, {0, 1, 7, 6, 1}};
  return table[i][k];
}

// Falling factorial rho (rho - 1) ... (rho - k + 1).
Polynomial falling(std::size_t k) {
  Polynomial p({Rational(1)});
  for (std::size_t i = 0; i < k; ++i) p = p * Polynomial({Rational(-static_cast<long>(i)), Rational(1)});
  return p;
}

RationalSeries shift_up(const RationalSeries& s, std::size_t j) {
  std::vector<Rational> c(s.order() + 1, Rational(0));
  for (std::size_t n = j; n <= s.order(); ++n) c[n] = s[n - j];
  return RationalSeries(std::move(c));
}

// Taylor data of the d/dz coefficients at a point, each list indexed by the
// power of t = z - s. The flag marks coefficients known to be zero.
struct LocalExpansion {
  std::array<std::vector<Rational>, 5> coeffs;
  std::array<std::vector<bool>, 5> zero;
};

long valuation(const std::vector<bool>& zero) {
  for (std::size_t m = 0; m < zero.size(); ++m)
    if (!zero[m]) return static_cast<long>(m);
  return -1;
}

LocalExpansion expand_exact(const PFOperator& op, const Rational& s) {
  LocalExpansion e;
  const auto r = op.dz_form();
  for (std::size_t k = 0; k < 5; ++k) {
    const Polynomial t = r[k].taylor_shift(s);
    for (long m = 0; m <= t.degree(); ++m) {
      e.coeffs[k].push_back(t[static_cast<std::size_t>(m)]);
      e.zero[k].push_back(t[static_cast<std::size_t>(m)].is_zero());
    }
  }
  return e;
}

// Taylor coefficients p^(m)(s)/m! by repeated synthetic division.
std::vector<BigComplex> taylor_numeric(const Polynomial& p, const BigComplex& s) {
  const Precision prec = s.precision();
  std::vector<BigComplex> c;
  for (const auto& x : p.coefficients()) c.emplace_back(x, prec);
  std::vector<BigComplex> out;
  while (!c.empty()) {
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i - 1] += c[i] * s;
    out.push_back(c.front());
    c.erase(c.begin());
  }
  return out;
}

IndicialData finish_indicial(Polynomial poly) {
  IndicialData d;
  if (poly.is_zero()) throw Error("degenerate indicial polynomial");
  d.polynomial = poly.monic();
  auto [roots, rest] = rational_roots(d.polynomial);
  d.rational_roots = roots;
  d.all_roots_rational = rest.degree() == 0;
  if (d.polynomial.degree() == 4 && roots.size() == 1 && roots.front().multiplicity == 4) {
    d.is_mum = true;
    d.mum_exponent = roots.front().value;
  }
  return d;
}

struct IndicialShape {
  long delta = 0;
  bool singular = false;
};

IndicialShape indicial_shape(const std::array<std::vector<bool>, 5>& zero) {
  IndicialShape sh;
  bool any = false;
  long mu = 0;
  for (std::size_t k = 0; k < 5; ++k) {
    const long v = valuation(zero[k]);
    if (v < 0) continue;
    const long d = v - static_cast<long>(k);
    if (!any || d < sh.delta) sh.delta = d;
    if (!any || v < mu) mu = v;
    any = true;
  }
  if (!any) throw Error("zero operator");
  const long v4 = valuation(zero[4]);
  sh.singular = v4 < 0 || v4 > mu;
  return sh;
}

// Exact translated indicial polynomial at a rational point.
std::pair<Polynomial, bool> indicial_exact(const PFOperator& op, const Rational& s) {
  const LocalExpansion e = expand_exact(op, s);
  const IndicialShape sh = indicial_shape(e.zero);
  Polynomial poly;
  for (std::size_t k = 0; k < 5; ++k) {
    const long m = static_cast<long>(k) + sh.delta;
    if (m < 0 || m >= static_cast<long>(e.coeffs[k].size())) continue;
    poly = poly + falling(k) * e.coeffs[k][static_cast<std::size_t>(m)];
  }
  return {poly, sh.singular};
}

// Numeric version at an approximate point; coefficients of the monic
// polynomial must be recognizable as rationals.
std::pair<Polynomial, bool> indicial_numeric(const PFOperator& op, const BigComplex& s) {
  const Precision prec = s.precision();
  const auto r = op.dz_form();
  std::array<std::vector<BigComplex>, 5> coeffs;
  std::array<std::vector<bool>, 5> zero;
  BigFloat scale(1L, prec);
  for (std::size_t k = 0; k < 5; ++k) {
    coeffs[k] = taylor_numeric(r[k], s);
    for (const auto& c : coeffs[k]) scale = std::max(scale, abs(c));
  }
  const BigFloat tol = ldexp(scale, -static_cast<long>(prec) / 2);
  for (std::size_t k = 0; k < 5; ++k)
    for (const auto& c : coeffs[k]) zero[k].push_back(abs(c) < tol);
  const IndicialShape sh = indicial_shape(zero);
  std::array<BigComplex, 5> poly{BigComplex(prec), BigComplex(prec), BigComplex(prec), BigComplex(prec),
                                 BigComplex(prec)};
  for (std::size_t k = 0; k < 5; ++k) {
    const long m = static_cast<long>(k) + sh.delta;
    if (m < 0 || m >= static_cast<long>(coeffs[k].size()) || zero[k][static_cast<std::size_t>(m)]) continue;
    const Polynomial f = falling(k);
    for (long i = 0; i <= f.degree(); ++i)
      poly[static_cast<std::size_t>(i)] += coeffs[k][static_cast<std::size_t>(m)] *
                                           BigComplex(f[static_cast<std::size_t>(i)], prec);
  }
  std::size_t top = 4;
  while (top > 0 && abs(poly[top]) < tol) --top;
  const BigComplex lead = poly[top];
  std::vector<Rational> exact;
  for (std::size_t i = 0; i <= top; ++i) {
    const BigComplex c = poly[i] / lead;
    if (abs(c.imag()) > tol) throw Error(ErrorKind::recognition, "indicial coefficient is not real");
    auto q = rational_reconstruct(c.real(), BigInt(1000000));
    if (!q) throw Error(ErrorKind::recognition, "indicial coefficient is not recognized as a rational");
    exact.push_back(*q);
  }
  return {Polynomial(std::move(exact)), sh.singular};
}

using Jet = std::array<Rational, 4>;

Jet jet_mul(const Jet& a, const Jet& b) {
  Jet r{Rational(0), Rational(0), Rational(0), Rational(0)};
  for (std::size_t i = 0; i < 4; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < 4; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Jet jet_inverse(const Jet& a) {
  Jet r{Rational(0), Rational(0), Rational(0), Rational(0)};
  r[0] = a[0].inverse();
  for (std::size_t k = 1; k < 4; ++k) {
    Rational acc(0);
    for (std::size_t i = 1; i <= k; ++i) acc += a[i] * r[k - i];
    r[k] = -acc * r[0];
  }
  return r;
}

// Q(x + eps) mod eps^4.
Jet jet_at(const Polynomial& q, long x) {
  const Polynomial t = q.taylor_shift(Rational(x));
  return {t[0], t[1], t[2], t[3]};
}

}  // namespace

PFOperator::PFOperator(std::vector<Row> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && std::all_of(rows_.back().begin(), rows_.back().end(), [](const Rational& r) {
           return r.is_zero();
         }))
    rows_.pop_back();
  if (rows_.empty()) throw Error("zero operator");
  bool has_theta4 = false;
  for (const auto& row : rows_) has_theta4 = has_theta4 || !row[4].is_zero();
  if (!has_theta4) throw Error("operator is not of order four");
}

Polynomial PFOperator::theta_part(std::size_t j) const {
  if (j >= rows_.size()) return {};
  return Polynomial(std::vector<Rational>(rows_[j].begin(), rows_[j].end()));
}

Polynomial PFOperator::z_part(std::size_t i) const {
  std::vector<Rational> c;
  for (const auto& row : rows_) c.push_back(row[i]);
  return Polynomial(std::move(c));
}

std::array<Polynomial, 5> PFOperator::dz_form() const {
  std::array<Polynomial, 5> r;
  for (std::size_t k = 0; k < 5; ++k) {
    Polynomial acc;
    for (std::size_t i = k; i < 5; ++i) {
      const long s = stirling2(i, k);
      if (s != 0) acc = acc + z_part(i) * Rational(s);
    }
    r[k] = acc * Polynomial::monomial(Rational(1), k);
  }
  return r;
}

PFOperator PFOperator::at_infinity() const {
  const std::size_t deg = z_degree();
  std::vector<Row> rows(deg + 1);
  for (std::size_t j = 0; j <= deg; ++j) {
    const Polynomial q = theta_part(j).reflected();
    for (std::size_t i = 0; i < 5; ++i) rows[deg - j][i] = q[i];
  }
  return PFOperator(std::move(rows));
}

PFOperator PFOperator::shifted(const Rational& rho) const {
  std::vector<Row> rows(rows_.size());
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const Polynomial q = theta_part(j).taylor_shift(rho);
    for (std::size_t i = 0; i < 5; ++i) rows[j][i] = q[i];
  }
  return PFOperator(std::move(rows));
}

LogSeries apply_operator(const PFOperator& op, const LogSeries& f) {
  const std::size_t n = f[0].order();
  LogSeries out{RationalSeries::constant(Rational(0), n), RationalSeries::constant(Rational(0), n),
                RationalSeries::constant(Rational(0), n), RationalSeries::constant(Rational(0), n)};
  // powers[i] = Theta^i f, with Theta(log^m S) = m log^{m-1} S + log^m Theta S.
  std::array<LogSeries, 5> powers;
  powers[0] = f;
  for (std::size_t i = 1; i < 5; ++i) {
    for (std::size_t m = 0; m < 4; ++m) {
      powers[i][m] = powers[i - 1][m].theta();
      if (m + 1 < 4) powers[i][m] += powers[i - 1][m + 1] * Rational(static_cast<long>(m + 1));
    }
  }
  for (std::size_t j = 0; j <= op.z_degree(); ++j) {
    for (std::size_t m = 0; m < 4; ++m) {
      RationalSeries acc = RationalSeries::constant(Rational(0), n);
      for (std::size_t i = 0; i < 5; ++i)
        if (!op.coefficient(j, i).is_zero()) acc += powers[i][m] * op.coefficient(j, i);
      out[m] += shift_up(acc, j);
    }
  }
  return out;
}

SingularLocation SingularLocation::at(const Rational& z, Precision prec) {
  return {Kind::finite, z, BigComplex(z, prec)};
}

SingularLocation SingularLocation::numeric(const BigComplex& z) { return {Kind::finite, std::nullopt, z}; }

SingularLocation SingularLocation::infinity(Precision prec) { return {Kind::infinity, std::nullopt, BigComplex(prec)}; }

std::string SingularLocation::str(int digits) const {
  if (is_infinity()) return "infinity";
  if (exact) return exact->str();
  return approx.str(digits);
}

bool is_singular(const PFOperator& op, const SingularLocation& point) {
  if (point.is_infinity()) return is_singular(op.at_infinity(), SingularLocation::at(Rational(0), 64));
  if (point.exact) return indicial_exact(op, *point.exact).second;
  const auto r = op.dz_form();
  // At an approximate root only the leading coefficient decides.
  const Precision prec = point.approx.precision();
  return abs(r[4].evaluate(point.approx)) < ldexp(BigFloat(1L, prec), -static_cast<long>(prec) / 2);
}

IndicialData indicial_polynomial(const PFOperator& op, const SingularLocation& point) {
  if (point.is_infinity()) return indicial_polynomial(op.at_infinity(), SingularLocation::at(Rational(0), 64));
  auto [poly, singular] = point.exact ? indicial_exact(op, *point.exact) : indicial_numeric(op, point.approx);
  if (!singular) throw Error("ordinary point has trivial indicial data");
  return finish_indicial(std::move(poly));
}

std::vector<SingularPointReport> singular_points(const PFOperator& op, Precision precision) {
  std::vector<SingularPointReport> out;
  const Polynomial lead = op.leading_coefficient();
  auto [roots, rest] = rational_roots(lead);
  bool zero_listed = false;
  for (const auto& r : roots) {
    out.push_back({SingularLocation::at(r.value, precision), r.multiplicity, std::nullopt});
    zero_listed = zero_listed || r.value.is_zero();
  }
  if (rest.degree() > 0)
    for (const auto& r : numeric_roots(rest, precision))
      out.push_back({SingularLocation::numeric(r.value), r.multiplicity, std::nullopt});
  if (!zero_listed && is_singular(op, SingularLocation::at(Rational(0), precision)))
    out.push_back({SingularLocation::at(Rational(0), precision), 0, std::nullopt});

  std::sort(out.begin(), out.end(), [](const SingularPointReport& a, const SingularPointReport& b) {
    const double ma = abs(a.location.approx).to_double(), mb = abs(b.location.approx).to_double();
    if (ma != mb) return ma < mb;
    return arg(a.location.approx).to_double() < arg(b.location.approx).to_double();
  });
  const SingularLocation inf = SingularLocation::infinity(precision);
  if (is_singular(op, inf)) out.push_back({inf, 0, std::nullopt});

  for (auto& rep : out) {
    try {
      rep.indicial = indicial_polynomial(op, rep.location);
    } catch (const Error&) {
      rep.indicial.reset();
    }
  }
  return out;
}

LogSeries FrobeniusBasis::scaled_solution(std::size_t k) const {
  static const long binom[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
  LogSeries s{RationalSeries::constant(Rational(0), order), RationalSeries::constant(Rational(0), order),
              RationalSeries::constant(Rational(0), order), RationalSeries::constant(Rational(0), order)};
  for (std::size_t m = 0; m <= k; ++m) s[m] = psi[k - m] * Rational(binom[k][m]);
  return s;
}

FrobeniusBasis frobenius_basis(const PFOperator& op, std::size_t order) {
  const Polynomial q0 = op.theta_part(0);
  if (q0.degree() != 4 || q0 != Polynomial::monomial(q0.leading(), 4)) throw Error("origin is not a MUM point");

  std::vector<Jet> a(order + 1);
  a[0] = {Rational(1), Rational(0), Rational(0), Rational(0)};
  std::vector<Polynomial> q;
  for (std::size_t j = 0; j <= op.z_degree(); ++j) q.push_back(op.theta_part(j));
  for (std::size_t n = 1; n <= order; ++n) {
    Jet acc{Rational(0), Rational(0), Rational(0), Rational(0)};
    for (std::size_t j = 1; j <= std::min(n, op.z_degree()); ++j) {
      if (q[j].is_zero()) continue;
      const Jet t = jet_mul(jet_at(q[j], static_cast<long>(n - j)), a[n - j]);
      for (std::size_t m = 0; m < 4; ++m) acc[m] += t[m];
    }
    const Jet r = jet_mul(acc, jet_inverse(jet_at(q[0], static_cast<long>(n))));
    for (std::size_t m = 0; m < 4; ++m) a[n][m] = -r[m];
  }

  FrobeniusBasis fb;
  fb.order = order;
  static const long scale[4] = {1, 1, 2, 6};
  for (std::size_t m = 0; m < 4; ++m) {
    std::vector<Rational> c;
    c.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n) c.push_back(a[n][m] * Rational(scale[m]));
    fb.psi[m] = RationalSeries(std::move(c));
  }
  return fb;
}

MirrorMap mirror_map(const FrobeniusBasis& fb, const Rational& a) {
  if (fb.psi[0][0] != Rational(1)) throw Error("mirror map requires psi_3(0) = 1");
  if (a.is_zero()) throw Error("mirror map requires a != 0");
  const RationalSeries ratio = fb.psi[1] * series_inverse(fb.psi[0]) * a.inverse();
  const RationalSeries e = series_exp(ratio);
  std::vector<Rational> c(fb.order + 1, Rational(0));
  for (std::size_t n = 1; n <= fb.order; ++n) c[n] = e[n - 1];
  MirrorMap mm{RationalSeries(std::move(c)), RationalSeries::constant(Rational(0), 0)};
  mm.z_of_q = series_reversion(mm.q);
  return mm;
}

RationalMatrix pascal_matrix() { return to_rational_matrix({{{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}}}); }

RationalMatrix local_monodromy_mum(const FrobeniusBasis&) { return pascal_matrix(); }

}  // namespace mumhodge

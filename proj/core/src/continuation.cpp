#include "mumhodge/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <sstream>

#include "mumhodge/constants.hpp"
#include "mumhodge/reconstruct.hpp"

namespace mumhodge {

namespace {

using cd = std::complex<double>;

cd to_cd(const BigComplex& z) { return {z.real().to_double(), z.imag().to_double()}; }

BigComplex from_cd(cd z, Precision prec) { return BigComplex(z.real(), z.imag(), prec); }

double segment_distance(cd a, cd b, cd p) {
  const cd ab = b - a;
  const double len2 = std::norm(ab);
  double t = len2 == 0 ? 0 : std::real((p - a) * std::conj(ab)) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return std::abs(a + t * ab - p);
}

// Taylor coefficients p^(m)(s)/m! by repeated synthetic division.
std::vector<BigComplex> taylor_at(const std::vector<BigComplex>& coeffs, const BigComplex& s) {
  std::vector<BigComplex> c = coeffs;
  std::vector<BigComplex> out;
  while (!c.empty()) {
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i - 1].add_product(c[i], s);
    out.push_back(c.front());
    c.erase(c.begin());
  }
  return out;
}

long falling(long j, long k) {
  long r = 1;
  for (long i = 0; i < k; ++i) r *= j - i;
  return r;
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Truncated power series in t of order 3 over BigComplex.
struct Jet {
  std::array<BigComplex, 4> c;

  static Jet constant(const BigComplex& v) {
    const Precision p = v.precision();
    return {{v, BigComplex(p), BigComplex(p), BigComplex(p)}};
  }
  friend Jet operator+(Jet a, const Jet& b) {
    for (std::size_t i = 0; i < 4; ++i) a.c[i] += b.c[i];
    return a;
  }
  friend Jet operator*(const Jet& a, const Jet& b) {
    const Precision p = a.c[0].precision();
    Jet r{{BigComplex(p), BigComplex(p), BigComplex(p), BigComplex(p)}};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; i + j < 4; ++j) r.c[i + j].add_product(a.c[i], b.c[j]);
    return r;
  }
  friend Jet operator*(Jet a, const BigComplex& s) {
    for (auto& x : a.c) x *= s;
    return a;
  }
};

// log(1 + x) and exp(x) for x with zero constant term.
Jet log1p_jet(const Jet& x) {
  const Jet x2 = x * x;
  const Jet x3 = x2 * x;
  const Precision p = x.c[0].precision();
  return x + x2 * BigComplex(Rational(-1, 2), p) + x3 * BigComplex(Rational(1, 3), p);
}

Jet exp_jet(const Jet& x) {
  const Precision p = x.c[0].precision();
  const Jet x2 = x * x;
  const Jet x3 = x2 * x;
  return Jet::constant(BigComplex(1L, p)) + x + x2 * BigComplex(Rational(1, 2), p) +
         x3 * BigComplex(Rational(1, 6), p);
}

// sum_d D_d x^d for x with zero constant term.
Jet compose_jet(const std::array<BigComplex, 4>& d, const Jet& x) {
  Jet acc = Jet::constant(d[0]);
  Jet power = x;
  for (std::size_t k = 1; k < 4; ++k) {
    acc = acc + power * d[k];
    power = power * x;
  }
  return acc;
}

BigFloat tolerance_scale(const ComplexMatrix& m, long bits) {
  const Precision prec = m.like().precision();
  BigFloat s = max_abs(m);
  if (s < BigFloat(1L, prec)) s = BigFloat(1L, prec);
  return ldexp(s, -bits);
}

}  // namespace

PathSpec PathSpec::reversed() const {
  PathSpec r = *this;
  std::reverse(r.waypoints.begin(), r.waypoints.end());
  return r;
}

PathSpec PathSpec::then(const PathSpec& next) const {
  if (waypoints.empty()) return next;
  if (next.waypoints.empty()) return *this;
  if (!(end() == next.start())) throw Error("paths do not connect");
  PathSpec r = *this;
  r.waypoints.insert(r.waypoints.end(), next.waypoints.begin() + 1, next.waypoints.end());
  r.closed = r.start() == r.end();
  r.clearance = std::min(clearance, next.clearance);
  return r;
}

Continuator::Continuator(const PFOperator& op, Precision precision) : prec_(precision), dz_(op.dz_form()) {
  for (const auto& rep : singular_points(op, precision)) {
    if (rep.location.is_infinity()) continue;
    sing_.push_back(rep.location.approx.with_precision(precision));
    sing_d_.push_back(to_cd(rep.location.approx));
  }
}

double Continuator::distance_to_singularities(const BigComplex& z) const {
  const cd p = to_cd(z);
  double d = std::numeric_limits<double>::infinity();
  for (const auto& s : sing_d_) d = std::min(d, std::abs(p - s));
  return d;
}

void Continuator::check_clearance(const PathSpec& path) const {
  for (std::size_t i = 0; i + 1 < path.waypoints.size(); ++i) {
    const cd a = to_cd(path.waypoints[i]), b = to_cd(path.waypoints[i + 1]);
    for (const auto& s : sing_d_)
      if (segment_distance(a, b, s) < path.clearance)
        throw Error("path passes within the clearance radius of a singular point");
  }
}

BigFloat Continuator::step(ComplexMatrix& jets, const BigComplex& c, const BigComplex& h) const {
  std::array<std::vector<BigComplex>, 5> r;
  std::size_t max_deg = 0;
  for (std::size_t k = 0; k < 5; ++k) {
    std::vector<BigComplex> coeffs;
    for (const auto& x : dz_[k].coefficients()) coeffs.emplace_back(x, prec_);
    r[k] = taylor_at(coeffs, c);
    max_deg = std::max(max_deg, r[k].size());
  }
  const BigComplex inv_lead = BigComplex(1L, prec_) / r[4][0];

  std::vector<std::array<BigComplex, 4>> y;
  for (std::size_t n = 0; n < 4; ++n) y.push_back({jets(n, 0), jets(n, 1), jets(n, 2), jets(n, 3)});

  const BigFloat habs = abs(h);
  const BigFloat tol = pow2(-static_cast<long>(prec_) - 10, prec_);
  BigFloat scale(prec_), hpow(1L, prec_);
  std::vector<BigFloat> term_size;
  const auto record = [&](std::size_t n) {
    BigFloat m(prec_);
    for (const auto& v : y[n]) m = std::max(m, abs(v));
    m *= hpow;
    hpow *= habs;
    scale = std::max(scale, m);
    const double nn = static_cast<double>(n) + 1;
    term_size.push_back(m * BigFloat(nn * nn * nn, prec_));
  };
  for (std::size_t n = 0; n < 4; ++n) record(n);

  const std::size_t cap = 40 * static_cast<std::size_t>(prec_) + 1000;
  BigFloat tail(prec_);
  for (long big_n = 0;; ++big_n) {
    std::array<BigComplex, 4> acc{BigComplex(prec_), BigComplex(prec_), BigComplex(prec_), BigComplex(prec_)};
    for (long k = 0; k < 5; ++k) {
      for (long m = 0; m < static_cast<long>(r[static_cast<std::size_t>(k)].size()); ++m) {
        if (k == 4 && m == 0) continue;
        const long j = big_n - m + k;
        if (j < 0) continue;
        const auto& coef = r[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
        if (coef.is_zero()) continue;
        BigComplex t = coef;
        t *= falling(j, k);
        for (std::size_t col = 0; col < 4; ++col) acc[col].add_product(t, y[static_cast<std::size_t>(j)][col]);
      }
    }
    BigComplex denom = inv_lead;
    denom /= falling(big_n + 4, 4);
    for (auto& a : acc) a = -(a * denom);
    y.push_back(acc);
    const std::size_t n = y.size() - 1;
    record(n);
    if (n >= 12) {
      bool small = true;
      BigFloat last(prec_);
      for (std::size_t i = n - 3; i <= n; ++i) {
        if (term_size[i] > tol * scale) small = false;
        last = std::max(last, term_size[i]);
      }
      if (small) {
        tail = last / scale;
        break;
      }
    }
    if (n > cap) throw Error(ErrorKind::precision, "Taylor series did not converge; increase the precision");
  }

  for (std::size_t d = 0; d < 4; ++d) {
    for (std::size_t col = 0; col < 4; ++col) {
      BigComplex acc(prec_);
      for (std::size_t n = y.size(); n-- > d;) {
        acc = acc * h;
        BigComplex t = y[n][col];
        t *= binomial(static_cast<long>(n), static_cast<long>(d));
        acc += t;
      }
      jets(d, col) = acc;
    }
  }
  (void)max_deg;
  return tail;
}

TransportMatrix Continuator::fundamental(const PathSpec& path) const {
  ComplexMatrix jets = ComplexMatrix::identity(BigComplex(prec_));
  TransportMatrix out{jets, prec_, BigFloat(prec_)};
  if (path.waypoints.size() < 2) return out;
  check_clearance(path);
  BigFloat err(prec_);
  long steps = 0;
  for (std::size_t i = 0; i + 1 < path.waypoints.size(); ++i) {
    const BigComplex target = path.waypoints[i + 1].with_precision(prec_);
    BigComplex c = path.waypoints[i].with_precision(prec_);
    while (!(c == target)) {
      const double remaining = std::abs(to_cd(target) - to_cd(c));
      const double reach = eta * distance_to_singularities(c);
      BigComplex next = target;
      if (remaining > reach) {
        BigComplex dir = target - c;
        dir *= BigFloat(reach / remaining, prec_);
        next = c + dir;
      }
      err += step(jets, c, next - c);
      ++steps;
      c = next;
    }
  }
  const BigFloat size = max_abs(jets);
  out.matrix = jets;
  out.error_estimate = (err + BigFloat(static_cast<double>(steps), prec_) * pow2(-static_cast<long>(prec_), prec_)) *
                       std::max(size, BigFloat(1L, prec_));
  if (out.error_estimate > pow2(-static_cast<long>(prec_) / 4, prec_) * std::max(size, BigFloat(1L, prec_)))
    throw Error(ErrorKind::precision, "continuation error estimate exceeds tolerance; increase the precision");
  return out;
}

MUMFrame::MUMFrame(const PFOperator& op, Location location)
    : local_(location == Location::origin ? op : op.at_infinity()), location_(location) {
  const IndicialData d = indicial_polynomial(local_, SingularLocation::at(Rational(0), 64));
  if (!d.is_mum) throw Error("point is not a MUM point");
  exponent_ = *d.mum_exponent;
  if (!exponent_.is_zero()) local_ = local_.shifted(exponent_);
  radius_ = std::numeric_limits<double>::infinity();
  for (const auto& rep : singular_points(op, 64)) {
    if (rep.location.is_infinity()) continue;
    const double m = abs(rep.location.approx).to_double();
    if (location == Location::origin && m > 0) radius_ = std::min(radius_, m);
    if (location == Location::infinity && m > 0) radius_ = std::min(radius_, 1 / m);
  }
}

BigComplex MUMFrame::local_coordinate(const BigComplex& z) const {
  return location_ == Location::origin ? z : BigComplex(1L, z.precision()) / z;
}

const FrobeniusBasis& MUMFrame::basis(std::size_t order) const {
  if (!cache_ || cache_->order < order) cache_ = frobenius_basis(local_, order);
  return *cache_;
}

ComplexMatrix MUMFrame::jets(const BigComplex& z, Precision prec) const {
  const Precision work = prec + 32;
  const BigComplex zw = z.with_precision(work);
  const BigComplex u0 = local_coordinate(zw);
  const double ratio = abs(u0).to_double() / radius_;
  if (!(ratio < 0.9)) throw Error("evaluation point is outside the Frobenius disc");
  const std::size_t order =
      ratio == 0 ? 8 : static_cast<std::size_t>(std::ceil((static_cast<double>(prec) + 40) / -std::log2(ratio))) + 10;
  const FrobeniusBasis& fb = basis(order);

  Jet u{{u0, BigComplex(work), BigComplex(work), BigComplex(work)}};
  if (location_ == Location::origin) {
    u.c[1] = BigComplex(1L, work);
  } else {
    const BigComplex inv = u0;
    BigComplex p = inv;
    for (std::size_t n = 1; n < 4; ++n) {
      p = p * inv;
      u.c[n] = (n % 2 == 1) ? -p : p;
    }
  }
  Jet delta = u;
  delta.c[0] = BigComplex(work);
  const BigComplex log_u0 = log(u0);
  Jet rel = delta * (BigComplex(1L, work) / u0);
  Jet log_tail = log1p_jet(rel);
  const Jet logu = Jet::constant(log_u0) + log_tail;
  Jet prefactor = Jet::constant(BigComplex(1L, work));
  if (!exponent_.is_zero()) {
    const BigComplex rho(exponent_, work);
    prefactor = exp_jet(log_tail * rho) * exp(log_u0 * rho);
  }

  std::array<Jet, 4> psi_at;
  for (std::size_t k = 0; k < 4; ++k) {
    std::vector<BigComplex> coeffs;
    for (const auto& x : fb.psi[k].coefficients()) coeffs.emplace_back(x, work);
    // Horner with derivatives up to order 3.
    std::array<BigComplex, 4> d{BigComplex(work), BigComplex(work), BigComplex(work), BigComplex(work)};
    for (std::size_t n = coeffs.size(); n-- > 0;) {
      for (std::size_t m = 3; m > 0; --m) d[m] = d[m] * u0 + d[m - 1];
      d[0] = d[0] * u0 + coeffs[n];
    }
    psi_at[k] = compose_jet(d, delta);
  }

  std::array<Jet, 4> logpow;
  logpow[0] = Jet::constant(BigComplex(1L, work));
  for (std::size_t m = 1; m < 4; ++m) logpow[m] = logpow[m - 1] * logu;

  const BigComplex tpi = two_pi_i(work);
  ComplexMatrix w{BigComplex(prec)};
  BigComplex scale(1L, work);
  for (std::size_t k = 0; k < 4; ++k) {
    Jet f = Jet::constant(BigComplex(work));
    for (std::size_t m = 0; m <= k; ++m)
      f = f + logpow[m] * psi_at[k - m] * BigComplex(binomial(static_cast<long>(k), static_cast<long>(m)), work);
    f = f * prefactor * (BigComplex(1L, work) / scale);
    for (std::size_t d = 0; d < 4; ++d) w(d, k) = f.c[d].with_precision(prec);
    scale = scale * tpi;
  }
  return w;
}

ComplexMatrix relate_frames(const ComplexMatrix& w_start, const ComplexMatrix& phi, const ComplexMatrix& w_end) {
  const auto inv = w_end.inverse();
  if (!inv) throw Error("singular frame matrix");
  return (*inv * phi * w_start).transpose();
}

TransportMatrix transport(const Continuator& c, const ComplexMatrix& w_start, const ComplexMatrix& w_end,
                          const PathSpec& path) {
  const TransportMatrix phi = c.fundamental(path);
  TransportMatrix out = phi;
  out.matrix = relate_frames(w_start, phi.matrix, w_end);
  return out;
}

PathSpec loop_around(const BigComplex& base, const BigComplex& center, double radius, int points) {
  const Precision prec = base.precision();
  const cd b = to_cd(base), s = to_cd(center);
  if (std::abs(b - s) <= radius) throw Error("base point lies inside the loop circle");
  const cd dir = (b - s) / std::abs(b - s);
  PathSpec p;
  p.waypoints.push_back(base);
  const BigComplex start = center + from_cd(radius * dir, prec);
  p.waypoints.push_back(start);
  for (int j = 1; j < points; ++j) {
    const double angle = 2 * M_PI * j / points;
    p.waypoints.push_back(center + from_cd(radius * dir * std::polar(1.0, angle), prec));
  }
  p.waypoints.push_back(start);
  p.waypoints.push_back(base);
  p.closed = true;
  return p;
}

BigComplex default_base_point(const PFOperator& op, Precision precision) {
  double r = std::numeric_limits<double>::infinity();
  for (const auto& rep : singular_points(op, 64)) {
    if (rep.location.is_infinity()) continue;
    const double m = abs(rep.location.approx).to_double();
    if (m > 0) r = std::min(r, m);
  }
  if (!std::isfinite(r)) r = 1;
  return BigComplex(0.0, r / 4, precision);
}

LoopSystem standard_loops(const PFOperator& op, const BigComplex& base, Precision precision) {
  LoopSystem sys{base, {}, {}};
  std::vector<SingularLocation> finite;
  for (const auto& rep : singular_points(op, precision))
    if (!rep.location.is_infinity()) finite.push_back(rep.location);
  if (finite.empty()) throw Error("operator has no finite singular points");
  const cd b = to_cd(base);
  std::vector<double> angle;
  for (const auto& s : finite) angle.push_back(std::arg(to_cd(s.approx) - b));

  std::vector<double> sorted = angle;
  std::sort(sorted.begin(), sorted.end());
  double cut = sorted.front() - M_PI, gap = -1;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double next = i + 1 < sorted.size() ? sorted[i + 1] : sorted.front() + 2 * M_PI;
    if (next - sorted[i] > gap) {
      gap = next - sorted[i];
      cut = sorted[i] + gap / 2;
    }
  }
  std::vector<std::size_t> order(finite.size());
  std::iota(order.begin(), order.end(), 0);
  const auto rel = [&](std::size_t i) {
    double a = angle[i] - cut;
    while (a < 0) a += 2 * M_PI;
    while (a >= 2 * M_PI) a -= 2 * M_PI;
    return a;
  };
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return rel(x) < rel(y); });

  double outer = std::abs(b);
  for (std::size_t i : order) {
    const cd s = to_cd(finite[i].approx);
    outer = std::max(outer, std::abs(s));
    double radius = std::abs(b - s);
    for (std::size_t j = 0; j < finite.size(); ++j)
      if (j != i) radius = std::min(radius, std::abs(to_cd(finite[j].approx) - s));
    sys.points.push_back(finite[i]);
    sys.loops.push_back(loop_around(base, finite[i].approx.with_precision(precision), radius / 2));
  }

  // Clockwise circle about the origin, reached along the cut direction.
  const double big = 2 * outer + 1;
  const cd d = std::polar(1.0, cut);
  const double proj = std::real(std::conj(b) * d);
  const double len = -proj + std::sqrt(proj * proj - std::norm(b) + big * big);
  const BigComplex start = base + from_cd(len * d, precision);
  PathSpec inf;
  inf.waypoints.push_back(base);
  inf.waypoints.push_back(start);
  const int points = 32;
  for (int j = 1; j < points; ++j)
    inf.waypoints.push_back(start * from_cd(std::polar(1.0, -2 * M_PI * j / points), precision));
  inf.waypoints.push_back(start);
  inf.waypoints.push_back(base);
  inf.closed = true;
  sys.points.push_back(SingularLocation::infinity(precision));
  sys.loops.push_back(inf);
  return sys;
}

std::vector<TransportMatrix> monodromy_representation(const Continuator& c, const ComplexMatrix& frame,
                                                      const std::vector<PathSpec>& loops) {
  std::vector<TransportMatrix> out;
  for (const auto& loop : loops) out.push_back(transport(c, frame, frame, loop));
  return out;
}

UnipotencyReport verify_unipotent_log(const ComplexMatrix& t, unsigned k) {
  const Precision prec = t.like().precision();
  const ComplexMatrix u = t - ComplexMatrix::identity(t.like());
  UnipotencyReport rep{k, BigFloat(prec), false, std::nullopt};
  rep.norm = max_abs(u.power(k));
  BigFloat tol = tolerance_scale(t, static_cast<long>(prec) / 2);
  for (unsigned i = 1; i < k; ++i) tol *= std::max(max_abs(t), BigFloat(1L, prec));
  rep.passed = rep.norm <= tol;
  if (rep.passed) {
    ComplexMatrix log = ComplexMatrix::zero(t.like());
    ComplexMatrix power = ComplexMatrix::identity(t.like());
    for (unsigned j = 1; j < k; ++j) {
      power = power * u;
      ComplexMatrix term = power;
      term *= BigComplex(Rational(BigInt((j % 2 == 1) ? 1 : -1), BigInt(static_cast<long>(j))), prec);
      log += term;
    }
    rep.log = log;
  }
  return rep;
}

std::optional<RecognizedMatrix> recognize_matrix(const ComplexMatrix& t, const BigInt& denominator_bound) {
  const Precision prec = t.like().precision();
  const long tol_bits = static_cast<long>(prec) / 2;
  const BigFloat k_im = kappa(prec).imag();
  const auto signed_reconstruct = [&](const BigFloat& x) -> std::optional<Rational> {
    auto r = rational_reconstruct(abs(x), denominator_bound, tol_bits);
    if (r && x.sign() < 0) r = -*r;
    return r;
  };
  RecognizedMatrix out{KappaMatrix{RationalMatrix(Rational(0)), RationalMatrix(Rational(0))}, BigFloat(prec)};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const auto p = signed_reconstruct(t(i, j).real());
      const auto q = signed_reconstruct(t(i, j).imag() / k_im);
      if (!p || !q) return std::nullopt;
      out.value.rational(i, j) = *p;
      out.value.kappa_part(i, j) = *q;
    }
  out.residual = max_abs(t - out.value.evaluate(prec));
  return out;
}

}  // namespace mumhodge

namespace mumhodge {

namespace {

bool small(const BigFloat& x, const BigFloat& scale, long bits) { return abs(x) <= ldexp(scale, -bits); }

std::optional<Rational> recognize_real(const BigFloat& x, const BigInt& bound, long bits) {
  auto r = rational_reconstruct(abs(x), bound, bits);
  if (r && x.sign() < 0) r = -*r;
  return r;
}

ComplexMatrix conjugate(const KappaMatrix& s, const ComplexMatrix& t, Precision prec) {
  const ComplexMatrix sm = s.evaluate(prec);
  const auto inv = sm.inverse();
  if (!inv) throw Error("singular frame matrix");
  return sm * t * *inv;
}

bool frame_is_integral(const KappaMatrix& s, const std::vector<TransportMatrix>& loops, const BigInt& bound) {
  for (const auto& t : loops) {
    const auto r = recognize_matrix(conjugate(s, t.matrix, t.precision), bound);
    if (!r || !r->value.is_rational() || !is_integral(r->value.rational) || !is_symplectic(r->value.rational))
      return false;
  }
  return true;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  mpz_class r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

const RationalMatrix& flip_matrix() {
  static const RationalMatrix f = [] {
    RationalMatrix m = RationalMatrix::identity(Rational(0));
    m(0, 0) = Rational(-1);
    m(3, 3) = Rational(-1);
    return m;
  }();
  return f;
}

// Period matrix of the limit line spanned by v (integral-frame coordinates)
// in the adapted basis of the normal form.
LMHSPoint limit_point(const NormalFormResult& nfr, const ComplexMatrix::Vec& v, Precision prec) {
  const auto inv = to_complex(nfr.basis, prec).inverse();
  if (!inv) throw Error("singular adapted basis");
  auto w = *inv * v;
  if (small(abs(w[0]), max_abs(*inv), static_cast<long>(prec) / 2))
    throw Error(ErrorKind::recognition, "limit Hodge line has no e3 component");
  const BigComplex lead = w[0];
  for (auto& x : w) x /= lead;
  return normalize_lhf(PeriodMatrix::from_parameters(nfr.form, w[1], w[2], w[3]), nfr.form);
}

// Mirror invariants read off in the gauge a = 1, e in {1, -1/2}.
std::optional<MirrorInvariants> mirror_reading(const NormalFormResult& nfr, const RationalMatrix& n,
                                               const ComplexMatrix::Vec& v, const BigInt& bound, Precision prec,
                                               std::vector<std::string>& notes) {
  try {
    const MirrorGauge g = reduce_to_mirror_gauge(nfr.form);
    const RationalMatrix flip = g.flipped ? flip_matrix() : RationalMatrix::identity(Rational(0));
    const RationalMatrix shift = g.shift.matrix();
    const RationalMatrix shift_inv = *shift.inverse();
    for (const RationalMatrix& change : {flip * shift, flip * shift_inv, shift * flip, shift_inv * flip}) {
      const RationalMatrix basis = nfr.basis * change;
      const auto inv = basis.inverse();
      if (!inv || !is_integral(basis) || !is_symplectic(basis)) continue;
      if (!(NormalForm::from_nilpotent(*inv * n * basis) == g.form)) continue;
      const LMHSPoint p = limit_point({g.form, basis}, v, prec);
      return hodge_to_mirror(p, bound);
    }
    notes.push_back("mirror gauge basis not found");
  } catch (const Error& e) {
    notes.push_back(std::string("no mirror reading: ") + e.what());
  }
  return std::nullopt;
}

MUMPointResult analyze_point(const SingularLocation& loc, const Rational& exponent, const ComplexMatrix& t,
                             const ComplexMatrix::Vec& v, const BigInt& bound, Precision prec) {
  MUMPointResult res{loc, exponent, std::nullopt, std::nullopt, std::nullopt, std::nullopt, std::nullopt, {}};
  res.monodromy = recognize_matrix(t, bound);
  if (!res.monodromy) {
    res.notes.push_back("monodromy not recognized over Q + Q kappa");
    return res;
  }
  const KappaMatrix& k = res.monodromy->value;
  if (!k.is_rational() || !is_integral(k.rational) || !is_symplectic(k.rational))
    throw Error(ErrorKind::recognition, "mirror frame hypothesis violated");
  res.normal_form = normal_form(k.rational);
  res.invariants = invariants(res.normal_form->form);
  res.point = limit_point(*res.normal_form, v, prec);
  res.mirror = mirror_reading(*res.normal_form, log_unipotent(k.rational), v, bound, prec, res.notes);
  return res;
}

bool same_recognition(const CrossMUMReport& a, const CrossMUMReport& b) {
  const auto mono = [](const std::optional<MUMPointResult>& p) -> std::optional<KappaMatrix> {
    if (!p || !p->monodromy) return std::nullopt;
    return p->monodromy->value;
  };
  if (!(a.frame_invariants == b.frame_invariants)) return false;
  if (!(mono(a.first) == mono(b.first)) || !(mono(a.second) == mono(b.second))) return false;
  if (a.loops.size() != b.loops.size()) return false;
  for (std::size_t i = 0; i < a.loops.size(); ++i) {
    const auto& x = a.loops[i].recognized;
    const auto& y = b.loops[i].recognized;
    if (x.has_value() != y.has_value() || (x && !(x->value == y->value))) return false;
  }
  return true;
}

CrossMUMReport cross_mum_once(const PFOperator& op, const std::optional<MirrorInvariants>& at_origin,
                              Precision prec, const BigInt& bound, const std::optional<BigComplex>& base) {
  CrossMUMReport rep;
  rep.precision = prec;
  rep.frame_supplied = at_origin.has_value();
  const auto points = singular_points(op, prec);
  bool infinity_mum = false;
  for (const auto& p : points)
    if (p.location.is_infinity() && p.indicial && p.indicial->is_mum) infinity_mum = true;

  const Continuator cont(op, prec);
  const MUMFrame origin(op, MUMFrame::Location::origin);
  rep.base_point = base ? base->with_precision(prec) : default_base_point(op, prec);
  const LoopSystem sys = standard_loops(op, rep.base_point, prec);
  const ComplexMatrix w0 = origin.jets(rep.base_point, prec);
  const auto ts = monodromy_representation(cont, w0, sys.loops);
  ComplexMatrix product = ComplexMatrix::identity(BigComplex(prec));
  for (const auto& t : ts) product = product * t.matrix;
  rep.loop_product_residual = max_abs(product - ComplexMatrix::identity(BigComplex(prec)));

  rep.frame_invariants = at_origin;
  if (!rep.frame_invariants) {
    rep.frame_invariants = discover_mirror_frame(ts, bound);
    rep.notes.push_back(rep.frame_invariants ? "integral frame found by search (conjectural)"
                                             : "no integral mirror frame found");
  }
  rep.first.location = SingularLocation::at(Rational(0), prec);
  if (!rep.frame_invariants) return rep;

  const KappaMatrix s = mirror_frame(*rep.frame_invariants);
  const ComplexMatrix sm = s.evaluate(prec);
  rep.loops = check_frame(s, sys, ts, bound);
  for (const auto& l : rep.loops)
    if (!l.integral || !l.symplectic)
      rep.notes.push_back("loop around " + l.location.str(12) + " is not integral symplectic in this frame");

  const RationalMatrix pascal = pascal_matrix();
  const ComplexMatrix pc = to_complex(pascal, prec);
  ComplexMatrix::Vec e3{BigComplex(1L, prec), BigComplex(prec), BigComplex(prec), BigComplex(prec)};
  rep.first = analyze_point(SingularLocation::at(Rational(0), prec), Rational(0), conjugate(s, pc, prec),
                            sm * e3, bound, prec);

  if (!infinity_mum) {
    rep.notes.push_back("single MUM point: the Torelli property holds at it directly");
    return rep;
  }
  const MUMFrame inf(op, MUMFrame::Location::infinity);
  const BigComplex spoke = sys.loops.back().waypoints[1] - rep.base_point;
  const BigComplex dir = spoke * (BigFloat(1L, prec) / abs(spoke));
  double outer = std::abs(to_cd(rep.base_point));
  for (const auto& z : cont.singularities()) outer = std::max(outer, std::abs(to_cd(z)));
  const double target = std::isfinite(inf.radius()) ? 4 / inf.radius() : 4 * std::max(1.0, outer);
  const cd b = to_cd(rep.base_point), d = to_cd(dir);
  const double proj = std::real(std::conj(b) * d);
  const double len = -proj + std::sqrt(proj * proj - std::norm(b) + target * target);
  const BigComplex far = rep.base_point + dir * BigFloat(len, prec);
  PathSpec path;
  path.waypoints = {rep.base_point, far};
  const ComplexMatrix m = transport(cont, w0, inf.jets(far, prec), path).matrix;
  const auto m_inv = m.inverse();
  if (!m_inv) throw Error(ErrorKind::precision, "singular transport matrix");
  const ComplexMatrix t_inf = m * pc * *m_inv;
  const BigFloat mismatch = max_abs(t_inf - ts.back().matrix);
  std::ostringstream os;
  os << "loop at infinity vs transported local monodromy: residual " << mismatch.str(3);
  rep.notes.push_back(os.str());

  rep.second = analyze_point(SingularLocation::infinity(prec), inf.exponent(), conjugate(s, t_inf, prec),
                             sm * (m * e3), bound, prec);
  if (rep.second->mirror)
    rep.second->notes.push_back("c2H read in the adapted basis at this point; only its class mod 24 is invariant");
  if (rep.first.point && rep.second->point)
    rep.torelli = torelli_distinguish(*rep.first.point, *rep.second->point, bound, prec);
  return rep;
}

}  // namespace

std::vector<LoopCheck> check_frame(const KappaMatrix& s, const LoopSystem& system,
                                   const std::vector<TransportMatrix>& loops, const BigInt& denominator_bound) {
  std::vector<LoopCheck> out;
  for (std::size_t i = 0; i < loops.size(); ++i) {
    LoopCheck c{system.points.at(i), recognize_matrix(conjugate(s, loops[i].matrix, loops[i].precision),
                                                      denominator_bound),
                false, false};
    if (c.recognized && c.recognized->value.is_rational()) {
      c.integral = is_integral(c.recognized->value.rational);
      c.symplectic = is_symplectic(c.recognized->value.rational);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<MirrorInvariants> discover_mirror_frame(const std::vector<TransportMatrix>& loops,
                                                      const BigInt& denominator_bound) {
  for (const auto& t : loops) {
    const Precision prec = t.precision;
    const long bits = static_cast<long>(prec) / 2;
    const ComplexMatrix u = t.matrix - ComplexMatrix::identity(BigComplex(prec));
    const BigFloat scale = std::max(max_abs(t.matrix), BigFloat(1L, prec));
    if (small(max_abs(u), scale, bits) || !small(max_abs(u * u), scale * scale, bits)) continue;
    std::size_t row = 0;
    BigFloat best(prec);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (abs(u(i, j)) > best) {
          best = abs(u(i, j));
          row = i;
        }
    bool rank_one = true;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (!small(abs(u(row, 0) * u(i, j) - u(i, 0) * u(row, j)) + abs(u(row, 3) * u(i, j) - u(i, 3) * u(row, j)),
                   scale * scale, bits))
          rank_one = false;
    if (!rank_one) continue;
    const BigComplex w3 = u(row, 3);
    if (small(abs(w3), best, bits)) continue;
    if (!small(abs(u(row, 2) / w3), BigFloat(1L, prec), bits)) continue;
    const BigComplex r1 = u(row, 1) / w3;
    const BigComplex r0 = u(row, 0) / w3 / kappa(prec);
    if (!small(r1.imag(), BigFloat(1L, prec), bits) || !small(r0.imag(), BigFloat(1L, prec), bits)) continue;
    BigFloat chi_ratio = r0.real();
    chi_ratio /= -6L;
    BigFloat c_ratio = r1.real();
    c_ratio *= 4L;
    const auto c_per_d = recognize_real(c_ratio, denominator_bound, bits);
    const auto chi_per_d = recognize_real(chi_ratio, denominator_bound, bits);
    if (!c_per_d || !chi_per_d) continue;
    // The node count of this conifold scales with the degree; the largest
    // integral candidate has a primitive vanishing cycle.
    const BigInt step = lcm(c_per_d->den(), chi_per_d->den());
    std::optional<MirrorInvariants> found;
    for (long k = 1; k <= 1000; ++k) {
      const BigInt d = step * BigInt(k);
      const Rational c = *c_per_d * Rational(d);
      const Rational chi = *chi_per_d * Rational(d);
      const auto mi = MirrorInvariants::make(d, c.num(), chi.num());
      if (frame_is_integral(mirror_frame(mi), loops, denominator_bound)) found = mi;
    }
    if (found) return found;
  }
  return std::nullopt;
}

CrossMUMReport cross_mum_invariants(const PFOperator& op, const std::optional<MirrorInvariants>& at_origin,
                                    Precision precision, const BigInt& denominator_bound, Precision precision_cap,
                                    const std::optional<BigComplex>& base_point) {
  CrossMUMReport current = cross_mum_once(op, at_origin, precision, denominator_bound, base_point);
  if (precision_cap <= precision) return current;
  for (Precision p = 2 * precision; p <= precision_cap; p *= 2) {
    CrossMUMReport next = cross_mum_once(op, at_origin, p, denominator_bound, base_point);
    if (same_recognition(current, next)) {
      std::ostringstream os;
      os << "recognized matrices stable from " << current.precision << " to " << p << " bits";
      next.notes.push_back(os.str());
      return next;
    }
    current = std::move(next);
  }
  current.notes.push_back("recognized matrices not stable below the precision cap");
  return current;
}

}  // namespace mumhodge

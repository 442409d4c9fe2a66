#include "mumhodge/bigfloat.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace mumhodge {

namespace {

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

Precision clamp_prec(Precision p) { return std::max<Precision>(p, MPFR_PREC_MIN); }

void narrow_to(mpfr_ptr x, Precision p) {
  if (p < mpfr_get_prec(x)) mpfr_prec_round(x, p, kRnd);
}

}  // namespace

BigFloat::BigFloat(Precision prec) {
  mpfr_init2(v_, clamp_prec(prec));
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long value, Precision prec) {
  mpfr_init2(v_, clamp_prec(prec));
  mpfr_set_si(v_, value, kRnd);
}

BigFloat::BigFloat(double value, Precision prec) {
  mpfr_init2(v_, clamp_prec(prec));
  mpfr_set_d(v_, value, kRnd);
}

BigFloat::BigFloat(const Rational& value, Precision prec) {
  mpfr_init2(v_, clamp_prec(prec));
  mpfr_set_q(v_, value.raw().get_mpq_t(), kRnd);
}

BigFloat::BigFloat(const BigInt& value, Precision prec) {
  mpfr_init2(v_, clamp_prec(prec));
  mpfr_set_z(v_, value.get_mpz_t(), kRnd);
}

BigFloat BigFloat::parse(const std::string& text, Precision prec) {
  BigFloat r(prec);
  char* end = nullptr;
  mpfr_strtofr(r.v_, text.c_str(), &end, 10, kRnd);
  if (end == text.c_str() || *end != '\0') throw Error(ErrorKind::parse, "malformed number '" + text + "'");
  return r;
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, kRnd);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, kRnd);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::with_precision(Precision prec) const {
  BigFloat r(prec);
  mpfr_set(r.v_, v_, kRnd);
  return r;
}

long BigFloat::exponent2() const {
  if (mpfr_zero_p(v_)) return std::numeric_limits<long>::min() / 4;
  return mpfr_get_exp(v_);
}

BigInt BigFloat::round_to_integer() const {
  BigInt r;
  mpfr_get_z(r.get_mpz_t(), v_, MPFR_RNDN);
  return r;
}

std::string BigFloat::str(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, v_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  narrow_to(v_, o.precision());
  mpfr_add(v_, v_, o.v_, kRnd);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  narrow_to(v_, o.precision());
  mpfr_sub(v_, v_, o.v_, kRnd);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  narrow_to(v_, o.precision());
  mpfr_mul(v_, v_, o.v_, kRnd);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  narrow_to(v_, o.precision());
  mpfr_div(v_, v_, o.v_, kRnd);
  return *this;
}

BigFloat& BigFloat::operator*=(long o) {
  mpfr_mul_si(v_, v_, o, kRnd);
  return *this;
}

BigFloat& BigFloat::operator/=(long o) {
  mpfr_div_si(v_, v_, o, kRnd);
  return *this;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::min(a.precision(), b.precision()));
  mpfr_add(r.v_, a.v_, b.v_, kRnd);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::min(a.precision(), b.precision()));
  mpfr_sub(r.v_, a.v_, b.v_, kRnd);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::min(a.precision(), b.precision()));
  mpfr_mul(r.v_, a.v_, b.v_, kRnd);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(std::min(a.precision(), b.precision()));
  mpfr_div(r.v_, a.v_, b.v_, kRnd);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, kRnd);
  return r;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

BigFloat abs(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_abs(r.get(), x.get(), kRnd);
  return r;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sqrt(r.get(), x.get(), kRnd);
  return r;
}

BigFloat exp(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_exp(r.get(), x.get(), kRnd);
  return r;
}

BigFloat log(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_log(r.get(), x.get(), kRnd);
  return r;
}

BigFloat sin(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_sin(r.get(), x.get(), kRnd);
  return r;
}

BigFloat cos(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_cos(r.get(), x.get(), kRnd);
  return r;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(std::min(x.precision(), y.precision()));
  mpfr_atan2(r.get(), y.get(), x.get(), kRnd);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(std::min(x.precision(), y.precision()));
  mpfr_hypot(r.get(), x.get(), y.get(), kRnd);
  return r;
}

BigFloat ldexp(const BigFloat& x, long e) {
  BigFloat r(x.precision());
  mpfr_mul_2si(r.get(), x.get(), e, kRnd);
  return r;
}

BigFloat pow2(long e, Precision prec) {
  BigFloat r(1L, prec);
  mpfr_mul_2si(r.get(), r.get(), e, kRnd);
  return r;
}

// ---------------------------------------------------------------- complex

BigComplex::BigComplex(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
  const auto p = std::min(re_.precision(), im_.precision());
  if (re_.precision() != p) re_ = re_.with_precision(p);
  if (im_.precision() != p) im_ = im_.with_precision(p);
}

BigComplex BigComplex::with_precision(Precision prec) const {
  return {re_.with_precision(prec), im_.with_precision(prec)};
}

std::string BigComplex::str(int digits) const {
  std::string s = re_.str(digits);
  if (im_.sign() < 0) {
    s += " - " + abs(im_).str(digits) + "i";
  } else {
    s += " + " + im_.str(digits) + "i";
  }
  return s;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
  const auto p = std::min(a.precision(), b.precision());
  BigComplex r(p);
  mpfr_fmms(r.re_.get(), a.re_.get(), b.re_.get(), a.im_.get(), b.im_.get(), kRnd);
  mpfr_fmma(r.im_.get(), a.re_.get(), b.im_.get(), a.im_.get(), b.re_.get(), kRnd);
  return r;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
  *this = *this * o;
  return *this;
}

BigComplex& BigComplex::operator/=(const BigComplex& o) {
  const auto p = std::min(precision(), o.precision());
  BigFloat denom(p);
  mpfr_fmma(denom.get(), o.re_.get(), o.re_.get(), o.im_.get(), o.im_.get(), kRnd);
  BigFloat re(p), im(p);
  mpfr_fmma(re.get(), re_.get(), o.re_.get(), im_.get(), o.im_.get(), kRnd);
  mpfr_fmms(im.get(), im_.get(), o.re_.get(), re_.get(), o.im_.get(), kRnd);
  re /= denom;
  im /= denom;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

BigComplex& BigComplex::operator*=(const BigFloat& o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

BigComplex& BigComplex::operator*=(long o) {
  re_ *= o;
  im_ *= o;
  return *this;
}

BigComplex& BigComplex::operator/=(long o) {
  re_ /= o;
  im_ /= o;
  return *this;
}

void BigComplex::add_product(const BigComplex& a, const BigComplex& b) {
  // Exact-rounded fused forms keep the inner loops of the continuation cheap.
  BigFloat t(precision());
  mpfr_fmms(t.get(), a.re_.get(), b.re_.get(), a.im_.get(), b.im_.get(), kRnd);
  mpfr_add(re_.get(), re_.get(), t.get(), kRnd);
  mpfr_fmma(t.get(), a.re_.get(), b.im_.get(), a.im_.get(), b.re_.get(), kRnd);
  mpfr_add(im_.get(), im_.get(), t.get(), kRnd);
}

BigFloat abs(const BigComplex& z) { return hypot(z.real(), z.imag()); }

BigFloat arg(const BigComplex& z) { return atan2(z.imag(), z.real()); }

BigComplex exp(const BigComplex& z) { return polar(exp(z.real()), z.imag()); }

BigComplex log(const BigComplex& z) {
  if (z.is_zero()) throw Error("logarithm of zero");
  return {log(abs(z)), arg(z)};
}

BigComplex polar(const BigFloat& radius, const BigFloat& angle) {
  return {radius * cos(angle), radius * sin(angle)};
}

BigComplex pow(const BigComplex& z, unsigned n) {
  BigComplex r(1L, z.precision());
  for (unsigned i = 0; i < n; ++i) r *= z;
  return r;
}

}  // namespace mumhodge

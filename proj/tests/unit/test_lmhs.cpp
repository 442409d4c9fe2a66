#include "doctest.h"
#include "mumhodge/constants.hpp"
#include "mumhodge/lmhs.hpp"
#include "support/random.hpp"

using namespace mumhodge;

namespace {

constexpr Precision kPrec = 128;

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

const NormalForm kQuintic{q(1), q(5), q(-1, 2), q(-25, 6)};

// -25 i zeta(3) / pi^3 = -200 zeta(3) / (2 pi i)^3, built from raw MPFR calls.
BigComplex quintic_pi_direct(Precision prec) {
  BigFloat z3(prec), pi(prec);
  mpfr_zeta_ui(z3.get(), 3, MPFR_RNDN);
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  return BigComplex(BigFloat(prec), BigFloat(-25L, prec) * z3 / (pi * pi * pi));
}

// p1 forced by the bilinear relation for given p2.
BigComplex consistent_pi1(const NormalForm& nf, const BigComplex& p2) {
  const Precision prec = p2.precision();
  return BigComplex(nf.f / (q(2) * nf.a), prec) + p2 * p2 * BigComplex(nf.b / (q(2) * nf.a), prec) +
         p2 * BigComplex(nf.e / nf.a, prec);
}

BigComplex random_complex(testing::Generator& gen, Precision prec) {
  return BigComplex(BigFloat(gen.rational(50, 7), prec), BigFloat(gen.rational(50, 11), prec));
}

bool near(const BigComplex& x, const BigComplex& y, long bits) { return abs(x - y) < pow2(-bits, x.precision()); }

LMHSPoint point_with(long b, const BigComplex& pi) { return {NormalForm{q(1), q(b), q(1), q(-7)}, pi}; }

}  // namespace

TEST_CASE("mirror_to_hodge") {
  SUBCASE("quintic") {
    const auto point = mirror_to_hodge(MirrorInvariants::make(5, 50, -200), kPrec);
    CHECK(point.normal_form == kQuintic);
    CHECK(abs(point.pi - quintic_pi_direct(kPrec)) < BigFloat(1e-30, kPrec));
    CHECK(point.f_over_2a() == q(-25, 12));
    CHECK(check_integrality_polarization(point.normal_form).passed());
  }
  SUBCASE("chi = 0 gives pi = 0") { CHECK(mirror_to_hodge(MirrorInvariants::make(5, 50, 0), kPrec).pi.is_zero()); }
  SUBCASE("even degree") {
    const auto point = mirror_to_hodge(MirrorInvariants::make(42, 84, -98), kPrec);
    CHECK(point.normal_form.e == q(1));
    CHECK(point.normal_form.b == q(42));
    CHECK(check_integrality_polarization(point.normal_form).passed());
  }
  SUBCASE("twist follows parity") {
    CHECK(MirrorInvariants::make(14, 56, -98).twist == q(1));
    CHECK(MirrorInvariants::make(5, 50, -200).twist == q(-1, 2));
    CHECK_THROWS_AS(MirrorInvariants::make(0, 0, 0), Error);
  }
  SUBCASE("pi is purely imaginary") {
    CHECK(mirror_to_hodge(MirrorInvariants::make(7, 10, 33), kPrec).pi.real().is_zero());
  }
}

TEST_CASE("hodge_to_mirror") {
  const BigInt bound(1000000);
  SUBCASE("quintic") {
    const LMHSPoint point{kQuintic, quintic_pi_direct(kPrec)};
    CHECK(hodge_to_mirror(point, bound) == MirrorInvariants::make(5, 50, -200));
  }
  SUBCASE("pi = 0") { CHECK(hodge_to_mirror({kQuintic, BigComplex(kPrec)}, bound).chi == 0); }
  SUBCASE("round trip") {
    testing::Generator gen(17);
    for (int trial = 0; trial < 100; ++trial) {
      const auto mi = MirrorInvariants::make(gen.integer(1, 200), gen.integer(-500, 500), gen.integer(-5000, 5000));
      CHECK(hodge_to_mirror(mirror_to_hodge(mi, kPrec), bound) == mi);
    }
  }
  SUBCASE("gauge violations") {
    CHECK_THROWS_WITH_AS(hodge_to_mirror({NormalForm{q(-1), q(5), q(11, 2), q(-25, 6)}, BigComplex(kPrec)}, bound),
                         "not in mirror gauge", Error);
    CHECK_THROWS_WITH_AS(hodge_to_mirror({NormalForm{q(1), q(5, 2), q(1), q(-1)}, BigComplex(kPrec)}, bound),
                         "not in mirror gauge", Error);
    CHECK_THROWS_WITH_AS(hodge_to_mirror({NormalForm{q(1), q(4), q(-1, 2), q(-1)}, BigComplex(kPrec)}, bound),
                         "not in mirror gauge", Error);
  }
  SUBCASE("real part must vanish") {
    const LMHSPoint point{kQuintic, quintic_pi_direct(kPrec) + BigComplex(q(1, 3), kPrec)};
    try {
      hodge_to_mirror(point, bound);
      FAIL("expected a recognition error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::recognition);
    }
  }
  SUBCASE("non-integral chi is rejected") {
    const LMHSPoint point{kQuintic, kappa(kPrec) * BigComplex(q(1, 2), kPrec)};
    CHECK_THROWS_AS(hodge_to_mirror(point, bound), Error);
  }
}

TEST_CASE("normalize_lhf") {
  SUBCASE("p2 = 0 is a fixed point") {
    const LMHSPoint point{kQuintic, quintic_pi_direct(kPrec)};
    const auto pm = point.period_matrix();
    const auto again = normalize_lhf(pm, kQuintic);
    CHECK(again.normal_form == kQuintic);
    CHECK(near(again.pi, point.pi, 120));
    CHECK(max_abs(again.period_matrix().matrix - pm.matrix) < pow2(-120, kPrec));
  }
  SUBCASE("quintic with random p2") {
    testing::Generator gen(23);
    for (int trial = 0; trial < 20; ++trial) {
      const auto p2 = random_complex(gen, kPrec);
      const auto p0 = random_complex(gen, kPrec);
      const auto pm = PeriodMatrix::from_parameters(kQuintic, p2, consistent_pi1(kQuintic, p2), p0);
      const auto point = normalize_lhf(pm, kQuintic);
      CHECK(point.f_over_2a() == q(-25, 12));
      CHECK(point.e_over_a() == q(-1, 2));
      // Oracle: entry (3, 0) of exp(-p2 N) * pm expanded by hand for a = 1.
      const auto p1 = consistent_pi1(kQuintic, p2);
      const auto expected = p0 + p1 * p2 - p2 * p2 * p2 * BigComplex(q(5, 3), kPrec) +
                            p2 * p2 * BigComplex(q(1, 2), kPrec) + p2 * BigComplex(q(25, 6), kPrec);
      CHECK(near(point.pi, expected, 100));
      // Idempotent.
      CHECK(near(normalize_lhf(point.period_matrix(), kQuintic).pi, point.pi, 100));
    }
  }
  SUBCASE("random normal forms") {
    testing::Generator gen(29);
    for (int trial = 0; trial < 20; ++trial) {
      const auto nf = gen.normal_form();
      const auto p2 = random_complex(gen, kPrec);
      const auto pm = PeriodMatrix::from_parameters(nf, p2, consistent_pi1(nf, p2), random_complex(gen, kPrec));
      const auto point = normalize_lhf(pm, nf);
      const auto normalized = point.period_matrix().matrix;
      CHECK(near(normalized(2, 0), normalized(3, 1), 120));
      CHECK(near(normalized(2, 0), BigComplex(nf.f / (q(2) * nf.a), kPrec), 120));
    }
  }
  SUBCASE("Deligne basis turns N into the three-entry form") {
    testing::Generator gen(31);
    const auto nf = gen.normal_form();
    const auto p2 = random_complex(gen, kPrec);
    const auto pm = PeriodMatrix::from_parameters(nf, p2, random_complex(gen, kPrec), random_complex(gen, kPrec));
    const auto n = to_complex(nf.nilpotent(), kPrec);
    const auto n_omega = *pm.matrix.inverse() * n * pm.matrix;
    RationalMatrix expected(q(0));
    expected(1, 0) = nf.a;
    expected(2, 1) = nf.b;
    expected(3, 2) = -nf.a;
    CHECK(max_abs(n_omega - to_complex(expected, kPrec)) < pow2(-100, kPrec));
  }
  SUBCASE("shape violations") {
    auto pm = LMHSPoint{kQuintic, quintic_pi_direct(kPrec)}.period_matrix();
    auto broken = pm;
    broken.matrix(0, 3) = BigComplex(1L, kPrec);
    CHECK_THROWS_WITH_AS(normalize_lhf(broken, kQuintic), "input is not a limit period matrix", Error);
    broken = pm;
    broken.matrix(2, 1) += BigComplex(q(1, 1000), kPrec);
    CHECK_THROWS_WITH_AS(normalize_lhf(broken, kQuintic), "input is not a limit period matrix", Error);
    // Consistent shape but p1 off the bilinear relation.
    const auto off = PeriodMatrix::from_parameters(kQuintic, BigComplex(kPrec), BigComplex(q(3), kPrec),
                                                   BigComplex(kPrec));
    CHECK_THROWS_WITH_AS(normalize_lhf(off, kQuintic), "input is not a limit period matrix", Error);
  }
}

TEST_CASE("lhf_vector") {
  const auto point = mirror_to_hodge(MirrorInvariants::make(5, 50, -200), kPrec);
  const auto v = lhf_vector(point);
  CHECK(v[0] == BigComplex(1L, kPrec));
  CHECK(v[1].is_zero());
  CHECK(v[2] == BigComplex(q(-25, 12), kPrec));
  CHECK(near(v[3], quintic_pi_direct(kPrec), 120));
  const auto column = point.period_matrix().matrix.column(0);
  for (std::size_t i = 0; i < 4; ++i) CHECK(column[i] == v[i]);
  const auto zero = lhf_vector(LMHSPoint{kQuintic, BigComplex(kPrec)});
  CHECK(zero[3].is_zero());
}

TEST_CASE("torelli_distinguish") {
  const BigInt bound(1000000);
  const auto x = mirror_to_hodge(MirrorInvariants::make(42, 84, -98), kPrec);
  const auto y = mirror_to_hodge(MirrorInvariants::make(14, 56, -98), kPrec);
  SUBCASE("degrees 42 and 14") {
    const auto ev = torelli_distinguish(x, y, bound, kPrec);
    CHECK(ev.verdict == TorelliVerdict::distinguishable);
    CHECK(ev.branch == TorelliBranch::b_differs);
  }
  SUBCASE("identical points") {
    const auto ev = torelli_distinguish(x, x, bound, kPrec);
    CHECK(ev.verdict == TorelliVerdict::inconclusive);
    REQUIRE(ev.recognized.has_value());
    CHECK(*ev.recognized == q(0));
  }
  SUBCASE("rational difference 1/2") {
    const auto p1 = point_with(6, kappa(kPrec) * BigComplex(3L, kPrec) + BigComplex(q(1, 2), kPrec));
    const auto p2 = point_with(6, kappa(kPrec) * BigComplex(3L, kPrec));
    const auto ev = torelli_distinguish(p1, p2, bound, kPrec);
    CHECK(ev.verdict == TorelliVerdict::inconclusive);
    CHECK(ev.branch == TorelliBranch::pi_difference_rational);
    REQUIRE(ev.recognized.has_value());
    CHECK(*ev.recognized == q(1, 2));
    const auto swapped = torelli_distinguish(p2, p1, bound, kPrec);
    CHECK(swapped.verdict == ev.verdict);
    CHECK(*swapped.recognized == q(-1, 2));
  }
  SUBCASE("kappa multiple is not rational") {
    const auto p1 = point_with(6, kappa(kPrec) * BigComplex(2L, kPrec));
    const auto p2 = point_with(6, BigComplex(kPrec));
    const auto ev = torelli_distinguish(p1, p2, bound, kPrec);
    CHECK(ev.verdict == TorelliVerdict::distinguishable);
    CHECK(ev.branch == TorelliBranch::pi_difference_not_rational);
    CHECK(ev.summary().find("working precision") != std::string::npos);
  }
  SUBCASE("real irrational difference") {
    const auto p1 = point_with(6, BigComplex(sqrt(BigFloat(2L, kPrec)), BigFloat(kPrec)));
    const auto p2 = point_with(6, BigComplex(kPrec));
    CHECK(torelli_distinguish(p1, p2, bound, kPrec).verdict == TorelliVerdict::distinguishable);
  }
  SUBCASE("symmetry on random pairs") {
    testing::Generator gen(37);
    for (int trial = 0; trial < 50; ++trial) {
      const long b1 = gen.integer(1, 3), b2 = gen.integer(1, 3);
      const auto p1 = point_with(b1, BigComplex(gen.rational(), kPrec));
      const auto p2 = point_with(b2, BigComplex(gen.rational(), kPrec) + kappa(kPrec) * BigComplex(q(gen.integer(0, 1)), kPrec));
      const auto ab = torelli_distinguish(p1, p2, bound, kPrec);
      const auto ba = torelli_distinguish(p2, p1, bound, kPrec);
      CHECK(ab.verdict == ba.verdict);
      CHECK(ab.branch == ba.branch);
    }
  }
}

#include "doctest.h"
#include "mumhodge/constants.hpp"
#include "mumhodge/continuation.hpp"
#include "support/operators.hpp"

using namespace mumhodge;

namespace {

constexpr Precision kPrec = 128;

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

BigComplex c(double re, double im, Precision prec = kPrec) { return BigComplex(re, im, prec); }

ComplexMatrix identity(Precision prec = kPrec) { return ComplexMatrix::identity(BigComplex(prec)); }

BigFloat distance(const ComplexMatrix& a, const ComplexMatrix& b) { return max_abs(a - b); }

BigFloat tenth_power(long e, Precision prec = kPrec) {
  BigFloat r(1L, prec);
  for (long i = 0; i < e; ++i) r /= 10L;
  return r;
}

const PFOperator& gr25() {
  static const PFOperator op = testing::gr25();
  return op;
}

struct Gr25Loops {
  Continuator cont{gr25(), kPrec};
  MUMFrame origin{gr25(), MUMFrame::Location::origin};
  BigComplex base = default_base_point(gr25(), kPrec);
  LoopSystem system = standard_loops(gr25(), base, kPrec);
  ComplexMatrix frame = origin.jets(base, kPrec);
  std::vector<TransportMatrix> loops = monodromy_representation(cont, frame, system.loops);
};

const Gr25Loops& gr25_loops() {
  static const Gr25Loops l;
  return l;
}

}  // namespace

TEST_CASE("transport basics") {
  const Continuator cont(gr25(), kPrec);

  SUBCASE("empty path gives the identity") {
    PathSpec empty;
    CHECK(cont.fundamental(empty).matrix == identity());
    PathSpec single;
    single.waypoints = {c(0.1, 0.1)};
    CHECK(cont.fundamental(single).matrix == identity());
  }
  SUBCASE("loop encircling no singular point") {
    const PathSpec loop = loop_around(c(0, 0.002), c(0.4, 0.4), 0.1);
    const auto t = cont.fundamental(loop);
    CHECK(distance(t.matrix, identity()) < tenth_power(25));
  }
  SUBCASE("paths compose") {
    PathSpec a, b;
    a.waypoints = {c(0, 0.002), c(0.3, 0.2)};
    b.waypoints = {c(0.3, 0.2), c(0.6, -0.3), c(-0.5, -0.1)};
    const auto whole = cont.fundamental(a.then(b));
    const auto parts = cont.fundamental(b).matrix * cont.fundamental(a).matrix;
    CHECK(distance(whole.matrix, parts) < tenth_power(25));
  }
  SUBCASE("reversed path inverts") {
    PathSpec a;
    a.waypoints = {c(0, 0.002), c(2, 1), c(3, -4)};
    const auto there = cont.fundamental(a).matrix;
    const auto back = cont.fundamental(a.reversed()).matrix;
    CHECK(distance(back * there, identity()) < tenth_power(25));
  }
  SUBCASE("clearance violation") {
    PathSpec through;
    through.waypoints = {c(-0.5, 0), c(0.5, 0)};
    CHECK_THROWS_AS(cont.fundamental(through), Error);
  }
  SUBCASE("step never exceeds the convergence disc") {
    CHECK(Continuator::eta <= 0.5);
    CHECK(cont.distance_to_singularities(c(-0.5, 0)) == doctest::Approx(0.5));
  }
}

TEST_CASE("Frobenius frames") {
  const Continuator cont(gr25(), kPrec);
  SUBCASE("frame at the origin is stable under short transport") {
    const MUMFrame f(gr25(), MUMFrame::Location::origin);
    const BigComplex a = c(0.001, 0.002), b = c(-0.001, 0.003);
    PathSpec p;
    p.waypoints = {a, b};
    const auto m = transport(cont, f.jets(a, kPrec), f.jets(b, kPrec), p);
    CHECK(distance(m.matrix, identity()) < tenth_power(28));
  }
  SUBCASE("frame at infinity is stable under short transport") {
    const MUMFrame f(gr25(), MUMFrame::Location::infinity);
    CHECK(f.exponent() == q(1));
    const BigComplex a = c(300, 500), b = c(-200, 700);
    PathSpec p;
    p.waypoints = {a, b};
    const auto m = transport(cont, f.jets(a, kPrec), f.jets(b, kPrec), p);
    CHECK(distance(m.matrix, identity()) < tenth_power(28));
  }
  SUBCASE("evaluation outside the disc") {
    const MUMFrame f(gr25(), MUMFrame::Location::origin);
    CHECK_THROWS_AS(f.jets(c(0.5, 0), kPrec), Error);
  }
  SUBCASE("non-MUM location") {
    const PFOperator shifted = testing::quintic().at_infinity();
    CHECK_THROWS_AS(MUMFrame(shifted, MUMFrame::Location::origin), Error);
  }
}

TEST_CASE("local monodromy at the origin") {
  const ComplexMatrix pascal = to_complex(pascal_matrix(), kPrec);
  for (const PFOperator& op : {gr25(), testing::quintic()}) {
    const Continuator cont(op, kPrec);
    const MUMFrame f(op, MUMFrame::Location::origin);
    const BigComplex base = default_base_point(op, kPrec);
    const double r = abs(base).to_double() / 2;
    const PathSpec loop = loop_around(base, BigComplex(kPrec), r);
    const auto t = transport(cont, f.jets(base, kPrec), f.jets(base, kPrec), loop);
    CHECK(distance(t.matrix, pascal) < tenth_power(kPrec / 4));
  }
}

TEST_CASE("monodromy representation of the two-MUM operator") {
  const auto& l = gr25_loops();
  const auto& pts = l.system.points;
  REQUIRE(pts.size() == 6);
  CHECK(*pts[0].exact == q(-1));
  CHECK(*pts[1].exact == q(0));
  CHECK(abs(pts[2].approx - c(0.00813061875578, 0)).to_double() < 1e-12);
  CHECK(*pts[3].exact == q(1));
  CHECK(abs(pts[4].approx - c(122.991869381, 0)).to_double() < 1e-8);
  CHECK(pts[5].is_infinity());

  SUBCASE("ordered product is the identity") {
    ComplexMatrix prod = identity();
    for (const auto& t : l.loops) prod = prod * t.matrix;
    CHECK(distance(prod, identity()) < tenth_power(20));
  }
  SUBCASE("loop at the origin matches the single-loop transport") {
    CHECK(distance(l.loops[1].matrix, to_complex(pascal_matrix(), kPrec)) < tenth_power(kPrec / 4));
  }
  SUBCASE("homotopic loops agree") {
    const PathSpec coarse = loop_around(l.base, c(1, 0), 0.3, 12);
    const PathSpec fine = loop_around(l.base, c(1, 0), 0.45, 40);
    const auto a = transport(l.cont, l.frame, l.frame, coarse);
    const auto b = transport(l.cont, l.frame, l.frame, fine);
    CHECK(distance(a.matrix, b.matrix) < tenth_power(25));
    CHECK(distance(a.matrix, l.loops[3].matrix) < tenth_power(25));
  }
  SUBCASE("apparent singularity has trivial monodromy") {
    CHECK(distance(l.loops[3].matrix, identity()) < tenth_power(25));
  }
  SUBCASE("conifold loops are reflections") {
    for (std::size_t i : {0u, 2u, 4u}) {
      const auto rep = verify_unipotent_log(l.loops[i].matrix, 2);
      CHECK(rep.passed);
      CHECK_FALSE(verify_unipotent_log(l.loops[i].matrix, 1).passed);
    }
  }
  SUBCASE("maximal unipotency at both ends") {
    for (std::size_t i : {1u, 5u}) {
      CHECK(verify_unipotent_log(l.loops[i].matrix, 4).passed);
      CHECK_FALSE(verify_unipotent_log(l.loops[i].matrix, 3).passed);
    }
  }
}

TEST_CASE("unipotent logarithm") {
  SUBCASE("Pascal matrix") {
    const auto rep = verify_unipotent_log(to_complex(pascal_matrix(), kPrec), 4);
    CHECK(rep.passed);
    CHECK(rep.norm.is_zero());
    REQUIRE(rep.log);
    RationalMatrix expected(q(0));
    expected(1, 0) = q(1);
    expected(2, 1) = q(2);
    expected(3, 2) = q(3);
    CHECK(*rep.log == to_complex(expected, kPrec));
  }
  SUBCASE("identity") {
    const auto rep = verify_unipotent_log(identity(), 1);
    CHECK(rep.passed);
    REQUIRE(rep.log);
    CHECK(rep.log->is_zero());
  }
  SUBCASE("square-zero") {
    RationalMatrix t = RationalMatrix::identity(q(0));
    t(0, 3) = q(1);
    const ComplexMatrix tc = to_complex(t, kPrec);
    CHECK(verify_unipotent_log(tc, 2).passed);
    CHECK_FALSE(verify_unipotent_log(tc, 1).passed);
    CHECK_FALSE(verify_unipotent_log(tc, 1).log.has_value());
  }
}

TEST_CASE("matrix recognition") {
  const BigInt bound(1000000);
  SUBCASE("rational entry") {
    ComplexMatrix m = identity();
    m(2, 1) = BigComplex(q(1, 2), kPrec);
    const auto r = recognize_matrix(m, bound);
    REQUIRE(r);
    CHECK(r->value.rational(2, 1) == q(1, 2));
    CHECK(r->value.is_rational());
  }
  SUBCASE("multiple of kappa at 300 bits") {
    const Precision p = 300;
    BigFloat z3(p), pi(p);
    mpfr_zeta_ui(z3.get(), 3, MPFR_RNDN);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    ComplexMatrix m = identity(p);
    m(3, 0) = BigComplex(BigFloat(p), BigFloat(-25L, p) * z3 / (pi * pi * pi));
    const auto r = recognize_matrix(m, bound);
    REQUIRE(r);
    CHECK(r->value.rational(3, 0) == q(0));
    CHECK(r->value.kappa_part(3, 0) == q(-200));
    CHECK(r->residual < pow2(-280, p));
  }
  SUBCASE("inverse square root of two") {
    const BigFloat x = sqrt(BigFloat(2L, kPrec)) / BigFloat(2L, kPrec);
    // Every close approximation is a convergent of [0; 1, 2, 2, ...]; none
    // with denominator <= 10^6 is within the recognition tolerance.
    BigInt p0(0), q0(1), p1(1), q1(1);
    while (q1 <= 1000000) {
      CHECK(abs(x - BigFloat(Rational(p1, q1), kPrec)) > pow2(-64, kPrec));
      const BigInt p2 = 2 * p1 + p0, q2 = 2 * q1 + q0;
      p0 = p1;
      q0 = q1;
      p1 = p2;
      q1 = q2;
    }
    ComplexMatrix m = identity();
    m(0, 1) = BigComplex(x, BigFloat(kPrec));
    CHECK_FALSE(recognize_matrix(m, bound).has_value());
  }
}

TEST_CASE("cross-MUM comparison") {
  const BigInt bound(1000000);
  SUBCASE("quintic with supplied invariants") {
    const auto mi = MirrorInvariants::make(5, 50, -200);
    const auto rep = cross_mum_invariants(testing::quintic(), mi, kPrec, bound);
    REQUIRE(rep.first.normal_form);
    CHECK(rep.first.normal_form->form == NormalForm{q(1), q(5), q(-1, 2), q(-25, 6)});
    REQUIRE(rep.first.point);
    const BigComplex expected = kappa(kPrec) * BigComplex(q(-200), kPrec);
    CHECK(abs(rep.first.point->pi - expected) < pow2(-60, kPrec));
    REQUIRE(rep.first.mirror);
    CHECK(*rep.first.mirror == mi);
    CHECK_FALSE(rep.second.has_value());
  }
  SUBCASE("two-MUM operator") {
    const auto rep = cross_mum_invariants(gr25(), std::nullopt, kPrec, bound);
    CHECK(rep.loop_product_residual < tenth_power(20));
    REQUIRE(rep.frame_invariants);
    for (const auto& l : rep.loops) {
      CHECK(l.integral);
      CHECK(l.symplectic);
    }
    REQUIRE(rep.first.invariants);
    REQUIRE(rep.second);
    REQUIRE(rep.second->invariants);
    CHECK(*rep.first.invariants == *rep.second->invariants);
    CHECK(rep.second->exponent == q(1));
    REQUIRE(rep.torelli);
    CHECK(rep.torelli->verdict == TorelliVerdict::inconclusive);
  }
}

#include "doctest.h"
#include "mumhodge/symplectic.hpp"
#include "support/random.hpp"

using namespace mumhodge;

namespace {

Rational q(long n, long d = 1) { return Rational(BigInt(n), BigInt(d)); }

const NormalForm kQuintic{q(1), q(5), q(-1, 2), q(-25, 6)};

RationalVector unit(std::size_t i) {
  RationalVector v{q(0), q(0), q(0), q(0)};
  v[i] = q(1);
  return v;
}

// Index of e_k in the (e3, e2, e1, e0) coordinate order.
std::size_t idx(int k) { return static_cast<std::size_t>(3 - k); }

bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b) {
  auto rank_of = [](const std::vector<RationalVector>& vs) {
    RationalMatrix m(q(0));
    for (std::size_t j = 0; j < vs.size(); ++j) m.set_column(j, vs[j]);
    return rank(m);
  };
  if (a.size() > 3 || rank_of(a) != rank_of(b)) return a.size() == 4 && b.size() == 4;
  for (const auto& v : b) {
    auto extended = a;
    extended.push_back(v);
    if (rank_of(extended) != rank_of(a)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("gram matrix convention") {
  CHECK(pairing(unit(idx(3)), unit(idx(0))) == q(1));
  CHECK(pairing(unit(idx(2)), unit(idx(1))) == q(1));
  CHECK(pairing(unit(idx(0)), unit(idx(3))) == q(-1));
  CHECK(pairing(unit(idx(3)), unit(idx(2))) == q(0));
  // Polarization signs come out as a^2 b and b under this convention.
  const RationalMatrix n = kQuintic.nilpotent();
  CHECK(-pairing(unit(idx(3)), n.power(3) * unit(idx(3))) == kQuintic.a * kQuintic.a * kQuintic.b);
  CHECK(pairing(unit(idx(2)), n * unit(idx(2))) == kQuintic.b);
  CHECK(is_infinitesimally_symplectic(n));
}

TEST_CASE("weight filtration") {
  SUBCASE("quintic normal form") {
    const auto w = weight_filtration(kQuintic.nilpotent());
    CHECK(same_span(w.w0, {unit(idx(0))}));
    CHECK(same_span(w.w2, {unit(idx(0)), unit(idx(1))}));
    CHECK(same_span(w.w4, {unit(idx(0)), unit(idx(1)), unit(idx(2))}));
    CHECK(w.w6.size() == 4);
  }
  SUBCASE("random normal forms") {
    testing::Generator gen(21);
    for (int trial = 0; trial < 20; ++trial) {
      NormalForm nf{gen.rational(), q(gen.integer(1, 30), gen.integer(1, 5)), gen.rational(), gen.rational()};
      while (nf.a.is_zero()) nf.a = gen.rational();
      const auto w = weight_filtration(nf.nilpotent());
      CHECK(same_span(w.w0, {unit(idx(0))}));
      CHECK(same_span(w.w2, {unit(idx(0)), unit(idx(1))}));
      CHECK(same_span(w.w4, {unit(idx(0)), unit(idx(1)), unit(idx(2))}));
    }
  }
  SUBCASE("equivariance under G_Z(W) conjugation") {
    testing::Generator gen(22);
    for (int trial = 0; trial < 10; ++trial) {
      const RationalMatrix g = gen.symplectic_integral();
      const RationalMatrix gi = *g.inverse();
      const RationalMatrix n = kQuintic.nilpotent();
      const auto w = weight_filtration(n);
      const auto wg = weight_filtration(g * n * gi);
      auto moved = [&](const std::vector<RationalVector>& vs) {
        std::vector<RationalVector> out;
        for (const auto& v : vs) out.push_back(g * v);
        return out;
      };
      CHECK(same_span(moved(w.w0), wg.w0));
      CHECK(same_span(moved(w.w2), wg.w2));
      CHECK(same_span(moved(w.w4), wg.w4));
    }
  }
  SUBCASE("non-MUM input") {
    RationalMatrix n(q(0));
    n(3, 0) = q(1);
    CHECK_THROWS_WITH_AS(weight_filtration(n), "weight filtration implemented only for MUM type", Error);
  }
}

TEST_CASE("classify_nilpotent") {
  CHECK_THROWS_WITH_AS(classify_nilpotent(RationalMatrix(q(0))), "zero nilpotent generates no boundary type", Error);
  CHECK(classify_nilpotent(kQuintic.nilpotent()) == BoundaryType::mum);

  RationalMatrix type1(q(0));
  type1(3, 0) = q(1);  // e3 -> e0
  CHECK(classify_nilpotent(type1) == BoundaryType::type_I);

  RationalMatrix type2(q(0));
  type2(3, 0) = q(1);
  type2(2, 1) = q(1);  // e3 -> e0, e2 -> e1
  CHECK(classify_nilpotent(type2) == BoundaryType::type_II);

  RationalMatrix not_symplectic(q(0));
  not_symplectic(1, 0) = q(1);
  CHECK_THROWS_AS(classify_nilpotent(not_symplectic), Error);
  CHECK_THROWS_AS(classify_nilpotent(RationalMatrix::identity(q(0))), Error);
}

TEST_CASE("log_unipotent") {
  CHECK(log_unipotent(RationalMatrix::identity(q(0))).is_zero());
  const RationalMatrix t = kQuintic.unipotent();
  CHECK(log_unipotent(t) == kQuintic.nilpotent());
  CHECK(exp_nilpotent(log_unipotent(t)) == t);

  SUBCASE("displayed unipotent matrix") {
    testing::Generator gen(4);
    for (int trial = 0; trial < 20; ++trial) {
      const NormalForm nf = gen.normal_form();
      const auto& [a, b, e, f] = nf;
      const Rational half_ab = a * b / q(2);
      RationalMatrix expected = RationalMatrix::identity(q(0));
      expected(1, 0) = a;
      expected(2, 0) = e + half_ab;
      expected(3, 0) = f - a * a * b / q(6);
      expected(2, 1) = b;
      expected(3, 1) = e - half_ab;
      expected(3, 2) = -a;
      CHECK(nf.unipotent() == expected);
      CHECK(is_integral(expected));
      CHECK(is_symplectic(expected));
    }
  }
  SUBCASE("non-unipotent input") {
    RationalMatrix t2 = RationalMatrix::identity(q(0));
    t2(0, 0) = q(2);
    CHECK_THROWS_AS(log_unipotent(t2), Error);
  }
}

TEST_CASE("act_weight_stabilizer") {
  SUBCASE("identity element") {
    CHECK(act_weight_stabilizer({q(0), q(0), q(0), q(0)}, kQuintic) == kQuintic);
  }
  SUBCASE("quintic normalization step") {
    const NormalForm start{q(1), q(5), q(-11, 2), q(-25, 6)};
    CHECK(act_weight_stabilizer({q(0), q(5), q(0), q(0)}, start) == kQuintic);
  }
  SUBCASE("formula agrees with Ad(exp M) N") {
    testing::Generator gen(9);
    for (int trial = 0; trial < 100; ++trial) {
      const NormalForm nf = gen.normal_form();
      const WeightStabilizerElement g = gen.weight_stabilizer();
      REQUIRE(g.is_integral());
      REQUIRE(is_integral(g.matrix()));
      const RationalMatrix a = g.matrix();
      const RationalMatrix conj = a * nf.nilpotent() * *a.inverse();
      CHECK(NormalForm::from_nilpotent(conj) == act_weight_stabilizer(g, nf));
    }
  }
  SUBCASE("group law: g1 then g2 equals g2 * g1") {
    testing::Generator gen(10);
    for (int trial = 0; trial < 100; ++trial) {
      const NormalForm nf = gen.normal_form();
      const auto g1 = gen.weight_stabilizer();
      const auto g2 = gen.weight_stabilizer();
      const auto product = WeightStabilizerElement::from_matrix(g2.matrix() * g1.matrix());
      CHECK(product.is_integral());
      CHECK(act_weight_stabilizer(g2, act_weight_stabilizer(g1, nf)) == act_weight_stabilizer(product, nf));
    }
  }
  SUBCASE("a and b are fixed") {
    testing::Generator gen(12);
    for (int trial = 0; trial < 50; ++trial) {
      const NormalForm nf = gen.normal_form();
      const auto out = act_weight_stabilizer(gen.weight_stabilizer(), nf);
      CHECK(out.a == nf.a);
      CHECK(out.b == nf.b);
    }
  }
}

TEST_CASE("invariants") {
  SUBCASE("quintic") {
    const auto inv = invariants(kQuintic);
    CHECK(inv.b == q(5));
    CHECK(inv.abs_a == q(1));
    CHECK(inv.e_class.doubled);
    CHECK(inv.e_class.modulus == 2);
    CHECK(inv.e_class.residue == 1);
  }
  SUBCASE("ab even with gcd one") {
    const auto inv = invariants({q(1), q(2), q(3), q(7, 3)});
    CHECK_FALSE(inv.e_class.doubled);
    CHECK(inv.e_class.modulus == 1);
    CHECK(inv.e_class.residue == 0);
  }
  SUBCASE("invariance under 500 random weight-stabilizer elements") {
    testing::Generator gen(13);
    for (int trial = 0; trial < 500; ++trial) {
      const NormalForm nf = gen.normal_form();
      const auto g = gen.weight_stabilizer();
      CHECK(invariants(act_weight_stabilizer(g, nf)) == invariants(nf));
    }
  }
  SUBCASE("non-integral input") { CHECK_THROWS_AS(invariants({q(1, 2), q(5), q(0), q(0)}), Error); }
}

TEST_CASE("check_integrality_polarization") {
  CHECK(check_integrality_polarization(kQuintic).passed());

  const auto bad_e = check_integrality_polarization({q(1), q(5), q(0), q(0)});
  CHECK_FALSE(bad_e.passed());
  const auto failures = bad_e.failures();
  CHECK(std::find(failures.begin(), failures.end(), "e + ab/2 in Z") != failures.end());
  CHECK(std::find(failures.begin(), failures.end(), "e - ab/2 in Z") != failures.end());

  const auto negative_b = check_integrality_polarization({q(1), q(-5), q(1, 2), q(5, 6)});
  const auto nb = negative_b.failures();
  CHECK(std::find(nb.begin(), nb.end(), "b > 0") != nb.end());
  CHECK(std::find(nb.begin(), nb.end(), "a^2 b > 0") != nb.end());

  SUBCASE("passing forms have integral unipotent") {
    testing::Generator gen(14);
    for (int trial = 0; trial < 50; ++trial) {
      const NormalForm nf = gen.normal_form();
      REQUIRE(check_integrality_polarization(nf).passed());
      CHECK(is_integral(nf.unipotent()));
    }
  }
}

TEST_CASE("normal_form") {
  SUBCASE("fixed point") {
    const auto result = normal_form(kQuintic.unipotent());
    CHECK(result.form == kQuintic);
    CHECK(result.basis == RationalMatrix::identity(q(0)));
  }
  SUBCASE("quintic presentations agree on invariants") {
    const NormalForm ggk{q(-1), q(5), q(11, 2), q(-25, 6)};
    CHECK(invariants(ggk).b == invariants(kQuintic).b);
    CHECK(invariants(ggk).abs_a == invariants(kQuintic).abs_a);
    CHECK(invariants(sign_flip(ggk)) == invariants(kQuintic));
    CHECK(invariants(normal_form(ggk.unipotent()).form) == invariants(kQuintic));
  }
  SUBCASE("orbit stability under 50 random Sp(4,Z) conjugations") {
    testing::Generator gen(15);
    for (int trial = 0; trial < 50; ++trial) {
      NormalForm nf = gen.normal_form();
      if (nf.a.sign() < 0) nf = sign_flip(nf);
      const RationalMatrix g = gen.symplectic_integral();
      REQUIRE(is_symplectic(g));
      const RationalMatrix t = g * nf.unipotent() * *g.inverse();
      const auto result = normal_form(t);
      CHECK(invariants(result.form) == invariants(nf));
      CHECK(is_integral(result.basis));
      CHECK(is_symplectic(result.basis));
      CHECK(*result.basis.inverse() * log_unipotent(t) * result.basis == result.form.nilpotent());
      CHECK(check_integrality_polarization(result.form).passed());
    }
  }
  SUBCASE("errors") {
    RationalMatrix half = kQuintic.unipotent();
    half(1, 0) = q(1, 2);
    CHECK_THROWS_AS(normal_form(half), Error);
    CHECK_THROWS_WITH_AS(normal_form(NormalForm{q(1), q(-5), q(1, 2), q(-5, 6)}.unipotent()),
                         "not a polarizable nilpotent orbit", Error);
  }
}

TEST_CASE("mirror gauge reduction") {
  const auto g = reduce_to_mirror_gauge({q(-1), q(5), q(11, 2), q(-25, 6)});
  CHECK(g.flipped);
  CHECK(g.shift.q == q(5));
  CHECK(g.form == kQuintic);
  const auto even = reduce_to_mirror_gauge({q(1), q(42), q(-3), q(-7)});
  CHECK(even.form.e == q(1));
}

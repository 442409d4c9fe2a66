#pragma once

#include <map>

#include "mumhodge/picard_fuchs.hpp"

namespace mumhodge::testing {

inline PFOperator::Row row(long t0, long t1, long t2, long t3, long t4) {
  return {Rational(t0), Rational(t1), Rational(t2), Rational(t3), Rational(t4)};
}

inline PFOperator theta4() { return PFOperator({row(0, 0, 0, 0, 1)}); }

// Theta^4 - 5z (5 Theta + 1)(5 Theta + 2)(5 Theta + 3)(5 Theta + 4).
inline PFOperator quintic() { return PFOperator({row(0, 0, 0, 0, 1), row(-120, -1250, -4375, -6250, -3125)}); }

inline PFOperator gr25() {
  return PFOperator({row(0, 0, 0, 0, 1), row(-9, -66, -187, -242, -124), row(-124, -554, -787, -246, 123),
                     row(12, 210, 689, 738, 123), row(-12, -78, -205, -254, -124), row(1, 4, 6, 4, 1)});
}

// Operators as maps j -> Q_j(Theta) for z^j Q_j(Theta), with the rule
// (z^a A(Theta)) (z^b B(Theta)) = z^{a+b} A(Theta + b) B(Theta).
using OperatorTerms = std::map<std::size_t, Polynomial>;

inline OperatorTerms compose(const OperatorTerms& x, const OperatorTerms& y) {
  OperatorTerms r;
  for (const auto& [a, pa] : x)
    for (const auto& [b, pb] : y) r[a + b] = r[a + b] + pa.taylor_shift(Rational(static_cast<long>(b))) * pb;
  return r;
}

inline PFOperator to_operator(const OperatorTerms& t) {
  std::size_t deg = 0;
  for (const auto& [j, p] : t) deg = std::max(deg, j);
  std::vector<PFOperator::Row> rows(deg + 1);
  for (auto& rw : rows) rw.fill(Rational(0));
  for (const auto& [j, p] : t)
    for (std::size_t i = 0; i < 5; ++i) rows[j][i] = p[i];
  return PFOperator(std::move(rows));
}

// (Theta + h(z))^4 = exp(-g) Theta^4 exp(g) with h = Theta g, g(0) = 0.
// Its Frobenius data is psi_3 = exp(-g), psi_2 = psi_1 = psi_0 = 0.
inline PFOperator exp_conjugate_theta4(const std::vector<Rational>& g) {
  OperatorTerms base;
  base[0] = Polynomial({Rational(0), Rational(1)});
  for (std::size_t j = 1; j < g.size(); ++j)
    if (!g[j].is_zero()) base[j] = base[j] + Polynomial({g[j] * Rational(static_cast<long>(j))});
  OperatorTerms acc = base;
  for (int i = 1; i < 4; ++i) acc = compose(acc, base);
  return to_operator(acc);
}

}  // namespace mumhodge::testing

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "mumhodge/matrix.hpp"
#include "mumhodge/polynomial.hpp"
#include "mumhodge/series.hpp"

namespace mumhodge {

// Fourth-order operator sum_j z^j Q_j(Theta) = sum_i P_i(z) Theta^i, with
// Theta = z d/dz.
class PFOperator {
 public:
  using Row = std::array<Rational, 5>;

  // rows[j][i] is the coefficient of z^j Theta^i.
  explicit PFOperator(std::vector<Row> rows);

  std::size_t z_degree() const { return rows_.size() - 1; }
  const std::vector<Row>& rows() const { return rows_; }
  const Rational& coefficient(std::size_t j, std::size_t i) const { return rows_[j][i]; }

  // Q_j(Theta) as a polynomial in Theta.
  Polynomial theta_part(std::size_t j) const;
  // P_i(z).
  Polynomial z_part(std::size_t i) const;
  Polynomial leading_coefficient() const { return z_part(4); }

  // sum_k R_k(z) (d/dz)^k with R_k = z^k sum_i S(i, k) P_i, S the Stirling
  // numbers of the second kind.
  std::array<Polynomial, 5> dz_form() const;

  // The operator in w = 1/z, multiplied by w^deg: Q'_{deg-j}(Theta) = Q_j(-Theta).
  PFOperator at_infinity() const;

  // z^-rho L z^rho: Q_j(Theta) -> Q_j(Theta + rho).
  PFOperator shifted(const Rational& rho) const;

  friend bool operator==(const PFOperator&, const PFOperator&) = default;

 private:
  std::vector<Row> rows_;
};

// sum_m log(z)^m S_m(z) for m = 0..3.
using LogSeries = std::array<RationalSeries, 4>;

// The operator applied term by term; coefficients are exact through the
// truncation order of the input.
LogSeries apply_operator(const PFOperator& op, const LogSeries& f);

struct SingularLocation {
  enum class Kind { finite, infinity };
  Kind kind = Kind::finite;
  std::optional<Rational> exact;  // set for rational finite points
  BigComplex approx;              // always set for finite points

  static SingularLocation at(const Rational& z, Precision prec);
  static SingularLocation numeric(const BigComplex& z);
  static SingularLocation infinity(Precision prec);

  bool is_infinity() const { return kind == Kind::infinity; }
  std::string str(int digits = 20) const;
};

struct IndicialData {
  Polynomial polynomial;  // monic, degree 4 at regular singular points
  std::vector<RationalRoot> rational_roots;
  bool all_roots_rational = false;
  bool is_mum = false;
  std::optional<Rational> mum_exponent;
};

struct SingularPointReport {
  SingularLocation location;
  unsigned leading_multiplicity = 0;  // as a root of P_4
  std::optional<IndicialData> indicial;
};

// Roots of P_4 with 0 and infinity added when singular, ordered by modulus
// then argument, infinity last. Indicial data is attached where it can be
// computed exactly (rational points, or coefficients recognized as rationals).
std::vector<SingularPointReport> singular_points(const PFOperator& op, Precision precision);

bool is_singular(const PFOperator& op, const SingularLocation& point);

// Throws "ordinary point has trivial indicial data" at ordinary points.
IndicialData indicial_polynomial(const PFOperator& op, const SingularLocation& point);

// Normalized solutions at a MUM point z = 0 with exponent 0, in the basis
// order (omega_3, omega_2, omega_1, omega_0):
//   omega_3            = psi_3
//   2 pi i omega_2     = psi_3 log z + psi_2
//   (2 pi i)^2 omega_1 = psi_3 log^2 z + 2 psi_2 log z + psi_1
//   (2 pi i)^3 omega_0 = psi_3 log^3 z + 3 psi_2 log^2 z + 3 psi_1 log z + psi_0
struct FrobeniusBasis {
  std::array<RationalSeries, 4> psi;  // psi[0] = psi_3, ..., psi[3] = psi_0
  std::size_t order = 0;

  const RationalSeries& psi_label(int j) const { return psi[static_cast<std::size_t>(3 - j)]; }
  // (2 pi i)^k omega for basis index k (0 = omega_3).
  LogSeries scaled_solution(std::size_t k) const;
};

FrobeniusBasis frobenius_basis(const PFOperator& op, std::size_t order = 50);

struct MirrorMap {
  RationalSeries q;       // q(z) = z exp(psi_2 / (a psi_3))
  RationalSeries z_of_q;  // compositional inverse
};

MirrorMap mirror_map(const FrobeniusBasis& fb, const Rational& a = Rational(1));

// Action of z -> e^{2 pi i} z on (omega_3, .., omega_0): the lower Pascal matrix.
RationalMatrix local_monodromy_mum(const FrobeniusBasis& fb);
RationalMatrix pascal_matrix();

}  // namespace mumhodge

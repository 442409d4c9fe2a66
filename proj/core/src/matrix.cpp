#include "mumhodge/matrix.hpp"

#include "mumhodge/constants.hpp"

#include <algorithm>

namespace mumhodge {

RationalMatrix to_rational_matrix(const std::array<std::array<long, 4>, 4>& rows) {
  RationalMatrix r(Rational(0));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = Rational(rows[i][j]);
  return r;
}

ComplexMatrix to_complex(const RationalMatrix& m, Precision prec) {
  ComplexMatrix r{BigComplex(prec)};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) r(i, j) = BigComplex(m(i, j), prec);
  return r;
}

BigFloat max_abs(const ComplexMatrix& m) {
  BigFloat best(m.like().precision());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      BigFloat a = abs(m(i, j));
      if (a > best) best = a;
    }
  return best;
}

namespace {

// Column echelon form of the columns of m; returns the pivot columns.
std::vector<RationalMatrix::Vec> echelon_columns(const RationalMatrix& m) {
  std::vector<RationalMatrix::Vec> cols;
  for (std::size_t j = 0; j < 4; ++j) cols.push_back(m.column(j));
  std::vector<RationalMatrix::Vec> basis;
  std::size_t row = 0;
  for (std::size_t r = 0; r < 4 && !cols.empty(); ++r) {
    auto it = std::find_if(cols.begin(), cols.end(), [&](const auto& c) { return !c[r].is_zero(); });
    if (it == cols.end()) continue;
    const auto pivot = *it;
    cols.erase(it);
    for (auto& c : cols) {
      if (c[r].is_zero()) continue;
      const Rational f = c[r] / pivot[r];
      for (std::size_t i = 0; i < 4; ++i) c[i] -= f * pivot[i];
    }
    basis.push_back(pivot);
    ++row;
  }
  return basis;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) { return echelon_columns(m).size(); }

std::vector<RationalMatrix::Vec> column_space_basis(const RationalMatrix& m) { return echelon_columns(m); }

ComplexMatrix KappaMatrix::evaluate(Precision prec) const {
  ComplexMatrix k = to_complex(kappa_part, prec);
  k *= kappa(prec);
  return to_complex(rational, prec) + k;
}

}  // namespace mumhodge

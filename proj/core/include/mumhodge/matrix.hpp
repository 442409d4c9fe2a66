#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <ostream>
#include <vector>

#include "mumhodge/error.hpp"
#include "mumhodge/scalar.hpp"

namespace mumhodge {

// Dense 4x4 matrix. Rows and columns are indexed 0..3; in lattice
// coordinates index 0 is e_3 and index 3 is e_0.
template <typename T>
class Mat4 {
 public:
  static constexpr std::size_t N = 4;
  using Row = std::array<T, N>;
  using Vec = std::array<T, N>;

  explicit Mat4(const T& fill) {
    for (auto& row : m_) row.fill(scalar::zero_like(fill));
  }

  static Mat4 zero(const T& like) { return Mat4(like); }

  static Mat4 identity(const T& like) {
    Mat4 r(like);
    for (std::size_t i = 0; i < N; ++i) r(i, i) = scalar::one_like(like);
    return r;
  }

  static Mat4 from_rows(const std::array<Row, N>& rows) {
    Mat4 r(rows[0][0]);
    r.m_ = rows;
    return r;
  }

  T& operator()(std::size_t i, std::size_t j) { return m_[i][j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }
  const T& like() const { return m_[0][0]; }

  Vec column(std::size_t j) const {
    return {m_[0][j], m_[1][j], m_[2][j], m_[3][j]};
  }
  void set_column(std::size_t j, const Vec& v) {
    for (std::size_t i = 0; i < N; ++i) m_[i][j] = v[i];
  }

  Mat4& operator+=(const Mat4& o) {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m_[i][j] += o.m_[i][j];
    return *this;
  }
  Mat4& operator-=(const Mat4& o) {
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) m_[i][j] -= o.m_[i][j];
    return *this;
  }
  Mat4& operator*=(const T& s) {
    for (auto& row : m_)
      for (auto& x : row) x *= s;
    return *this;
  }

  friend Mat4 operator+(Mat4 a, const Mat4& b) { return a += b; }
  friend Mat4 operator-(Mat4 a, const Mat4& b) { return a -= b; }
  friend Mat4 operator*(Mat4 a, const T& s) { return a *= s; }

  friend Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r(a.like());
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        if (scalar::is_zero(a.m_[i][k])) continue;
        for (std::size_t j = 0; j < N; ++j) r.m_[i][j] += a.m_[i][k] * b.m_[k][j];
      }
    return r;
  }

  friend Vec operator*(const Mat4& a, const Vec& v) {
    Vec r{scalar::zero_like(a.like()), scalar::zero_like(a.like()), scalar::zero_like(a.like()),
          scalar::zero_like(a.like())};
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) r[i] += a.m_[i][k] * v[k];
    return r;
  }

  friend bool operator==(const Mat4& a, const Mat4& b) { return a.m_ == b.m_; }

  Mat4 transpose() const {
    Mat4 r(like());
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) r.m_[i][j] = m_[j][i];
    return r;
  }

  Mat4 power(unsigned k) const {
    Mat4 r = identity(like());
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  bool is_zero() const {
    for (const auto& row : m_)
      for (const auto& x : row)
        if (!scalar::is_zero(x)) return false;
    return true;
  }

  // Gauss-Jordan with partial pivoting on the first non-zero entry (exact
  // types) or the largest entry (numeric types, via the pivot selector).
  std::optional<Mat4> inverse() const {
    Mat4 a = *this;
    Mat4 inv = identity(like());
    for (std::size_t col = 0; col < N; ++col) {
      std::size_t pivot = N;
      for (std::size_t r = col; r < N; ++r) {
        if (scalar::is_zero(a.m_[r][col])) continue;
        if (pivot == N || pivot_better(a.m_[r][col], a.m_[pivot][col])) pivot = r;
      }
      if (pivot == N) return std::nullopt;
      std::swap(a.m_[pivot], a.m_[col]);
      std::swap(inv.m_[pivot], inv.m_[col]);
      const T p = a.m_[col][col];
      for (std::size_t j = 0; j < N; ++j) {
        a.m_[col][j] /= p;
        inv.m_[col][j] /= p;
      }
      for (std::size_t r = 0; r < N; ++r) {
        if (r == col || scalar::is_zero(a.m_[r][col])) continue;
        const T f = a.m_[r][col];
        for (std::size_t j = 0; j < N; ++j) {
          a.m_[r][j] -= f * a.m_[col][j];
          inv.m_[r][j] -= f * inv.m_[col][j];
        }
      }
    }
    return inv;
  }

  friend std::ostream& operator<<(std::ostream& os, const Mat4& m) {
    for (std::size_t i = 0; i < N; ++i) {
      os << "[";
      for (std::size_t j = 0; j < N; ++j) os << (j ? ", " : "") << m.m_[i][j];
      os << "]\n";
    }
    return os;
  }

 private:
  static bool pivot_better(const T& candidate, const T& current);

  std::array<Row, N> m_;
};

template <typename T>
bool Mat4<T>::pivot_better(const T&, const T&) {
  return false;
}

template <>
inline bool Mat4<BigComplex>::pivot_better(const BigComplex& candidate, const BigComplex& current) {
  return abs(candidate) > abs(current);
}

using RationalMatrix = Mat4<Rational>;
using ComplexMatrix = Mat4<BigComplex>;

// exp(N) for nilpotent N (N^4 = 0), exact for Rational.
template <typename T>
Mat4<T> exp_nilpotent(const Mat4<T>& n) {
  const T& l = n.like();
  Mat4<T> result = Mat4<T>::identity(l);
  Mat4<T> term = Mat4<T>::identity(l);
  for (long k = 1; k <= 3; ++k) {
    term = term * n;
    term *= scalar::one_like(l) / scalar::from_int_like(l, k);
    result += term;
  }
  return result;
}

// log(T) = sum_{k=1..3} (-1)^{k+1} (T - I)^k / k for unipotent T.
template <typename T>
Mat4<T> log_unipotent_series(const Mat4<T>& t) {
  const T& l = t.like();
  const Mat4<T> u = t - Mat4<T>::identity(l);
  Mat4<T> result(l);
  Mat4<T> power = Mat4<T>::identity(l);
  for (long k = 1; k <= 3; ++k) {
    power = power * u;
    Mat4<T> term = power;
    term *= scalar::from_int_like(l, (k % 2 == 1) ? 1 : -1) / scalar::from_int_like(l, k);
    result += term;
  }
  return result;
}

RationalMatrix to_rational_matrix(const std::array<std::array<long, 4>, 4>& rows);
ComplexMatrix to_complex(const RationalMatrix& m, Precision prec);

// Max-modulus entry, used for residual reporting.
BigFloat max_abs(const ComplexMatrix& m);

// Matrix P + Q * kappa with exact P, Q, kappa = zeta(3) / (2 pi i)^3.
struct KappaMatrix {
  RationalMatrix rational;
  RationalMatrix kappa_part;

  bool is_rational() const { return kappa_part.is_zero(); }
  ComplexMatrix evaluate(Precision prec) const;
  friend bool operator==(const KappaMatrix&, const KappaMatrix&) = default;
};

// Rank and a basis of the column space (exact).
std::size_t rank(const RationalMatrix& m);
std::vector<RationalMatrix::Vec> column_space_basis(const RationalMatrix& m);

}  // namespace mumhodge

/*
   Copyright 2026 The eaqecc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef EAQECC_POLY_MATRIX_HPP
#define EAQECC_POLY_MATRIX_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "eaqecc/laurent.hpp"
#include "eaqecc/rational.hpp"

namespace eaqecc {

/*
 * Rectangular matrix over GF(2)[D,D^-1] (T = LaurentPoly) or over the
 * fraction field GF(2)(D) (T = RationalFn).
 */
template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows, std::vector<T>(cols)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(LaurentPoly::one());
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& at(std::size_t r, std::size_t c) { return data_[r][c]; }
  const T& at(std::size_t r, std::size_t c) const { return data_[r][c]; }
  std::vector<T>& row(std::size_t r) { return data_[r]; }
  const std::vector<T>& row(std::size_t r) const { return data_[r]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& r : data_)
      for (const auto& e : r)
        if (!e.is_zero()) return false;
    return true;
  }

  Matrix operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("Matrix: shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = data_[i][j] + o.at(i, j);
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < o.cols_; ++j) {
        T s;
        for (std::size_t k = 0; k < cols_; ++k) s += data_[i][k] * o.at(k, j);
        r.at(i, j) = s;
      }
    return r;
  }

  Matrix transposed() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = data_[i][j];
    return r;
  }

  // Entrywise substitution D -> D^-1.
  Matrix reciprocal() const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = data_[i][j].reciprocal();
    return r;
  }

  // Transpose with D -> D^-1, the recurring M^T(D^-1) of the shifted
  // symplectic calculus.
  Matrix reciprocal_transposed() const { return reciprocal().transposed(); }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ", ";
        s += data_[i][j].str();
      }
      s += "\n";
    }
    return s;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<std::vector<T>> data_;
};

using PolyMatrix = Matrix<LaurentPoly>;
using RationalMatrix = Matrix<RationalFn>;

inline RationalMatrix to_rational(const PolyMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = RationalFn(m.at(i, j));
  return r;
}

inline PolyMatrix to_poly(const RationalMatrix& m) {
  PolyMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).to_poly();
  return r;
}

/*
 * Reduced row echelon form over GF(2)(D), in place; returns the rank.
 * Pivots are normalized to 1, so the RREF is a canonical representative of
 * the row space over the fraction field.
 */
inline std::size_t rational_rref(RationalMatrix& m) {
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t pr = pivot_row;
    while (pr < m.rows() && m.at(pr, c).is_zero()) ++pr;
    if (pr == m.rows()) continue;
    std::swap(m.row(pr), m.row(pivot_row));
    const RationalFn inv = m.at(pivot_row, c).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(pivot_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m.at(r, c).is_zero()) continue;
      const RationalFn f = m.at(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m.at(r, j) += f * m.at(pivot_row, j);
    }
    ++pivot_row;
  }
  return pivot_row;
}

inline std::size_t rank_rational(RationalMatrix m) { return rational_rref(m); }
inline std::size_t rank_rational(const PolyMatrix& m) { return rank_rational(to_rational(m)); }

// Row-space equality over GF(2)(D): equal canonical RREFs.
inline bool rational_row_space_equal(RationalMatrix a, RationalMatrix b) {
  if (a.cols() != b.cols()) return false;
  const std::size_t ra = rational_rref(a), rb = rational_rref(b);
  if (ra != rb) return false;
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != b.at(i, j)) return false;
  return true;
}

// Does v lie in the row space of m over GF(2)(D)?
inline bool rational_in_row_space(const RationalMatrix& m, const std::vector<RationalFn>& v) {
  if (v.size() != m.cols()) throw std::invalid_argument("rational_in_row_space: size mismatch");
  RationalMatrix stacked(m.rows() + 1, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) stacked.at(i, j) = m.at(i, j);
  for (std::size_t j = 0; j < m.cols(); ++j) stacked.at(m.rows(), j) = v[j];
  return rank_rational(stacked) == rank_rational(m);
}

}  // namespace eaqecc

#endif  // EAQECC_POLY_MATRIX_HPP

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

#ifndef EAQECC_GF4_HPP
#define EAQECC_GF4_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace eaqecc {

/*
 * GF(4) = {0, 1, w, wb} with w^2 = wb, w*wb = 1, wb = w + 1, conjugation
 * (the Frobenius map x -> x^2) swapping w and wb.  Encoded as 0,1,2,3.
 */
class Gf4 {
 public:
  static constexpr int ZERO = 0, ONE = 1, W = 2, WBAR = 3;

  constexpr Gf4() : v_(0) {}
  constexpr explicit Gf4(int v) : v_(v) {}

  int value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Gf4 operator+(Gf4 o) const {
    // Addition is characteristic 2: bit-pair XOR under the mapping
    // 0<->00, 1<->01, w<->10, wb<->11.
    return Gf4(v_ ^ o.v_);
  }
  Gf4 operator*(Gf4 o) const {
    static constexpr int table[4][4] = {
        {0, 0, 0, 0},
        {0, 1, 2, 3},
        {0, 2, 3, 1},  // w*w = wb, w*wb = 1
        {0, 3, 1, 2},  // wb*wb = w
    };
    return Gf4(table[v_][o.v_]);
  }
  Gf4 conj() const {
    if (v_ == W) return Gf4(WBAR);
    if (v_ == WBAR) return Gf4(W);
    return *this;
  }
  Gf4 inverse() const {
    if (v_ == 0) throw std::domain_error("Gf4: inverse of zero");
    if (v_ == 1) return Gf4(1);
    return Gf4(v_ == W ? WBAR : W);  // w * wb = 1
  }
  bool operator==(Gf4 o) const { return v_ == o.v_; }
  bool operator!=(Gf4 o) const { return v_ != o.v_; }

  std::string str() const {
    switch (v_) {
      case 0: return "0";
      case 1: return "1";
      case 2: return "w";
      default: return "wb";
    }
  }
  static Gf4 parse(const std::string& s) {
    if (s == "0") return Gf4(0);
    if (s == "1") return Gf4(1);
    if (s == "w") return Gf4(W);
    if (s == "wb" || s == "w~" || s == "wbar") return Gf4(WBAR);
    throw std::invalid_argument("Gf4: bad element '" + s + "'");
  }

 private:
  int v_;
};

class Gf4Matrix {
 public:
  Gf4Matrix() : rows_(0), cols_(0) {}
  Gf4Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows, std::vector<Gf4>(cols)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Gf4& at(std::size_t r, std::size_t c) { return data_[r][c]; }
  Gf4 at(std::size_t r, std::size_t c) const { return data_[r][c]; }

  Gf4Matrix operator*(const Gf4Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Gf4Matrix: shape mismatch");
    Gf4Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < o.cols_; ++j) {
        Gf4 s;
        for (std::size_t k = 0; k < cols_; ++k) s = s + data_[i][k] * o.at(k, j);
        r.at(i, j) = s;
      }
    return r;
  }

  // Conjugate transpose (dagger).
  Gf4Matrix dagger() const {
    Gf4Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = data_[i][j].conj();
    return r;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<std::vector<Gf4>> data_;
};

inline std::size_t gf4_rank(Gf4Matrix m) {
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t pr = pivot_row;
    while (pr < m.rows() && m.at(pr, c).is_zero()) ++pr;
    if (pr == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(pivot_row, j));
    const Gf4 inv = m.at(pivot_row, c).inverse();
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(pivot_row, j) = m.at(pivot_row, j) * inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m.at(r, c).is_zero()) continue;
      const Gf4 f = m.at(r, c);
      for (std::size_t j = 0; j < m.cols(); ++j)
        m.at(r, j) = m.at(r, j) + f * m.at(pivot_row, j);
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace eaqecc

#endif  // EAQECC_GF4_HPP

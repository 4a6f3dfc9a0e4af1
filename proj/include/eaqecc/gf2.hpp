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

#ifndef EAQECC_GF2_HPP
#define EAQECC_GF2_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace eaqecc {

// Dense binary matrix with plain GF(2) Gaussian elimination.
class BinMatrix {
 public:
  BinMatrix() : rows_(0), cols_(0) {}
  BinMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows, std::vector<uint8_t>(cols, 0)) {}

  static BinMatrix identity(std::size_t n) {
    BinMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  uint8_t& at(std::size_t r, std::size_t c) { return data_[r][c]; }
  uint8_t at(std::size_t r, std::size_t c) const { return data_[r][c]; }
  const std::vector<uint8_t>& row(std::size_t r) const { return data_[r]; }

  bool operator==(const BinMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  BinMatrix operator*(const BinMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("BinMatrix: shape mismatch");
    BinMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k)
        if (data_[i][k])
          for (std::size_t j = 0; j < o.cols_; ++j) r.data_[i][j] ^= o.data_[k][j];
    return r;
  }

  BinMatrix operator+(const BinMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("BinMatrix: shape mismatch");
    BinMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.data_[i][j] = data_[i][j] ^ o.data_[i][j];
    return r;
  }

  BinMatrix transposed() const {
    BinMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.data_[j][i] = data_[i][j];
    return r;
  }

  // Reduced row echelon form (in place); returns the rank.
  std::size_t rref() {
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols_ && pivot_row < rows_; ++c) {
      std::size_t pr = pivot_row;
      while (pr < rows_ && !data_[pr][c]) ++pr;
      if (pr == rows_) continue;
      std::swap(data_[pr], data_[pivot_row]);
      for (std::size_t r = 0; r < rows_; ++r)
        if (r != pivot_row && data_[r][c])
          for (std::size_t j = 0; j < cols_; ++j) data_[r][j] ^= data_[pivot_row][j];
      ++pivot_row;
    }
    return pivot_row;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<std::vector<uint8_t>> data_;
};

inline std::size_t gf2_rank(BinMatrix m) { return m.rref(); }

// Row-space equality over GF(2): identical RREFs after dropping zero rows.
inline bool gf2_row_space_equal(BinMatrix a, BinMatrix b) {
  if (a.cols() != b.cols()) return false;
  const std::size_t ra = a.rref(), rb = b.rref();
  if (ra != rb) return false;
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != b.at(i, j)) return false;
  return true;
}

}  // namespace eaqecc

#endif  // EAQECC_GF2_HPP

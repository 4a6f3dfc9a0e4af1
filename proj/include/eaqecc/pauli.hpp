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

#ifndef EAQECC_PAULI_HPP
#define EAQECC_PAULI_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "eaqecc/gf2.hpp"
#include "eaqecc/gf4.hpp"

namespace eaqecc {

/*
 * Phase-free Pauli strings and their binary symplectic images.  A letter maps
 * to a (z|x) bit pair: I -> (0|0), X -> (0|1), Y -> (1|1), Z -> (1|0).
 */
struct SymplecticVector {
  std::vector<uint8_t> z, x;

  SymplecticVector() = default;
  explicit SymplecticVector(std::size_t n) : z(n, 0), x(n, 0) {}
  std::size_t size() const { return z.size(); }

  bool operator==(const SymplecticVector& o) const { return z == o.z && x == o.x; }
};

using PauliString = std::string;  // letters over {I,X,Y,Z}

inline SymplecticVector p2b_forward(const PauliString& p) {
  SymplecticVector v(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    switch (p[i]) {
      case 'I': break;
      case 'X': v.x[i] = 1; break;
      case 'Y': v.z[i] = v.x[i] = 1; break;
      case 'Z': v.z[i] = 1; break;
      default: throw std::invalid_argument("p2b_forward: bad Pauli letter");
    }
  }
  return v;
}

inline PauliString p2b_inverse(const SymplecticVector& v) {
  PauliString p;
  for (std::size_t i = 0; i < v.size(); ++i) {
    p += "IXZY"[v.z[i] * 2 + v.x[i]];
  }
  return p;
}

// Symplectic product: 1 iff the two Pauli strings anticommute.
inline int symplectic_product(const SymplecticVector& u, const SymplecticVector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("symplectic_product: length mismatch");
  int s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s ^= (u.z[i] & v.x[i]) ^ (u.x[i] & v.z[i]);
  return s;
}

// Quantum check matrix [H_Z | H_X] for a block code.
struct BlockCheckMatrix {
  std::size_t n = 0;
  std::vector<SymplecticVector> rows;

  BlockCheckMatrix() = default;
  explicit BlockCheckMatrix(std::size_t n) : n(n) {}

  void add_row(const SymplecticVector& v) {
    if (v.size() != n) throw std::invalid_argument("BlockCheckMatrix: row size mismatch");
    rows.push_back(v);
  }
  void add_pauli(const PauliString& p) { add_row(p2b_forward(p)); }

  BinMatrix z_part() const { return part(true); }
  BinMatrix x_part() const { return part(false); }

  // Combined [Z|X] binary matrix, for row-space comparisons.
  BinMatrix as_binary() const {
    BinMatrix m(rows.size(), 2 * n);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) {
        m.at(i, j) = rows[i].z[j];
        m.at(i, n + j) = rows[i].x[j];
      }
    return m;
  }

  bool operator==(const BlockCheckMatrix& o) const { return n == o.n && rows == o.rows; }

 private:
  BinMatrix part(bool zside) const {
    BinMatrix m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = zside ? rows[i].z[j] : rows[i].x[j];
    return m;
  }
};

// Pairwise symplectic products: [Omega]_ij = h_i (.) h_j; symmetric with
// zero diagonal over GF(2).
inline BinMatrix symplectic_matrix(const BlockCheckMatrix& h) {
  BinMatrix om(h.rows.size(), h.rows.size());
  for (std::size_t i = 0; i < h.rows.size(); ++i)
    for (std::size_t j = 0; j < h.rows.size(); ++j)
      om.at(i, j) = symplectic_product(h.rows[i], h.rows[j]);
  return om;
}

/*
 * GF(4) -> Pauli map (augmenting the binary table): 0 -> I, w -> X,
 * 1 -> Y, wb -> Z.  A quaternary check matrix H imports as the stack of
 * gamma(w H) over gamma(wb H).
 */
inline SymplecticVector gf4_row_to_symplectic(const Gf4Matrix& h, std::size_t r, Gf4 mult) {
  SymplecticVector v(h.cols());
  for (std::size_t j = 0; j < h.cols(); ++j) {
    const Gf4 e = mult * h.at(r, j);
    switch (e.value()) {
      case Gf4::ZERO: break;
      case Gf4::W: v.x[j] = 1; break;                 // X
      case Gf4::ONE: v.z[j] = v.x[j] = 1; break;      // Y
      case Gf4::WBAR: v.z[j] = 1; break;              // Z
    }
  }
  return v;
}

inline BlockCheckMatrix gf4_import_block(const Gf4Matrix& h) {
  BlockCheckMatrix q(h.cols());
  for (std::size_t r = 0; r < h.rows(); ++r) q.add_row(gf4_row_to_symplectic(h, r, Gf4(Gf4::W)));
  for (std::size_t r = 0; r < h.rows(); ++r) q.add_row(gf4_row_to_symplectic(h, r, Gf4(Gf4::WBAR)));
  return q;
}

}  // namespace eaqecc

#endif  // EAQECC_PAULI_HPP

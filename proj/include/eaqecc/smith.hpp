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

#ifndef EAQECC_SMITH_HPP
#define EAQECC_SMITH_HPP

#include <stdexcept>
#include <vector>

#include "eaqecc/poly_matrix.hpp"

namespace eaqecc {

/*
 * Elementary row/column operation over GF(2)[D,D^-1].  SWAP exchanges two
 * lines; ADD adds f(D) times line j to line i; SCALE multiplies line i by
 * the unit D^shift.  All three are self-describing and invertible (SWAP and
 * ADD are involutions over GF(2); SCALE inverts by negating the shift).
 */
struct ElemOp {
  enum Kind { SWAP, ADD, SCALE } kind;
  std::size_t i = 0, j = 0;
  LaurentPoly f;   // ADD coefficient
  long shift = 0;  // SCALE exponent

  static ElemOp swap(std::size_t i, std::size_t j) { return {SWAP, i, j, {}, 0}; }
  static ElemOp add(std::size_t i, const LaurentPoly& f, std::size_t j) {
    return {ADD, i, j, f, 0};
  }
  static ElemOp scale(std::size_t i, long shift) { return {SCALE, i, i, {}, shift}; }

  ElemOp inverted() const {
    ElemOp r = *this;
    if (kind == SCALE) r.shift = -shift;
    return r;
  }
};

template <class T>
inline void apply_row_op(Matrix<T>& m, const ElemOp& op) {
  switch (op.kind) {
    case ElemOp::SWAP:
      std::swap(m.row(op.i), m.row(op.j));
      break;
    case ElemOp::ADD:
      for (std::size_t c = 0; c < m.cols(); ++c)
        m.at(op.i, c) += T(op.f) * m.at(op.j, c);
      break;
    case ElemOp::SCALE:
      for (std::size_t c = 0; c < m.cols(); ++c)
        m.at(op.i, c) *= T(LaurentPoly::monomial(op.shift));
      break;
  }
}

template <class T>
inline void apply_col_op(Matrix<T>& m, const ElemOp& op) {
  switch (op.kind) {
    case ElemOp::SWAP:
      for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, op.i), m.at(r, op.j));
      break;
    case ElemOp::ADD:
      for (std::size_t r = 0; r < m.rows(); ++r)
        m.at(r, op.i) += T(op.f) * m.at(r, op.j);
      break;
    case ElemOp::SCALE:
      for (std::size_t r = 0; r < m.rows(); ++r)
        m.at(r, op.i) *= T(LaurentPoly::monomial(op.shift));
      break;
  }
}

/*
 * Smith normal form M = A * [Gamma 0; 0 0] * B over GF(2)[D], with the full
 * elementary-operation logs retained: row_ops/col_ops applied to M in order
 * produce the diagonal form, A and B are the corresponding inverse products.
 * Invariant factors are delay-free with constant term 1 and each divides
 * the next; monomial units D^m in the input are normalized away by SCALE
 * operations.
 */
struct SmithDecomposition {
  PolyMatrix A, Gamma, B;
  std::size_t rank = 0;
  std::vector<ElemOp> row_ops, col_ops;  // in application order

  std::vector<LaurentPoly> invariant_factors() const {
    std::vector<LaurentPoly> f;
    for (std::size_t i = 0; i < rank; ++i) f.push_back(Gamma.at(i, i));
    return f;
  }
  bool factors_all_one() const {
    for (const auto& f : invariant_factors())
      if (!f.is_one()) return false;
    return true;
  }
  bool factors_all_monomial() const {
    for (const auto& f : invariant_factors())
      if (!f.is_monomial()) return false;
    return true;
  }
};

namespace detail {

// Width of the delay-free representative; the well-founded measure that
// drives pivot selection and termination.
inline long width(const LaurentPoly& p) { return p.deg() - p.del(); }

}  // namespace detail

inline SmithDecomposition smith_form(const PolyMatrix& input) {
  SmithDecomposition out;
  PolyMatrix m = input;
  const std::size_t R = m.rows(), C = m.cols();

  auto row_op = [&](const ElemOp& op) {
    apply_row_op(m, op);
    out.row_ops.push_back(op);
  };
  auto col_op = [&](const ElemOp& op) {
    apply_col_op(m, op);
    out.col_ops.push_back(op);
  };

  std::size_t t = 0;
  while (t < R && t < C) {
    // Locate a nonzero entry of minimal width in the trailing submatrix.
    bool found = false;
    std::size_t bi = t, bj = t;
    long best = 0;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j) {
        if (m.at(i, j).is_zero()) continue;
        const long w = detail::width(m.at(i, j));
        if (!found || w < best) {
          found = true;
          best = w;
          bi = i;
          bj = j;
        }
      }
    if (!found) break;
    if (bi != t) row_op(ElemOp::swap(t, bi));
    if (bj != t) col_op(ElemOp::swap(t, bj));

    // Clear row and column t; a nonzero remainder becomes the new, strictly
    // smaller pivot, so the loop terminates.
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (m.at(i, t).is_zero()) continue;
        const auto [q, r] = m.at(i, t).divmod(m.at(t, t));
        row_op(ElemOp::add(i, q, t));
        if (!r.is_zero()) {
          row_op(ElemOp::swap(t, i));
          clean = false;
          break;
        }
      }
      if (!clean) continue;
      for (std::size_t j = t + 1; j < C; ++j) {
        if (m.at(t, j).is_zero()) continue;
        const auto [q, r] = m.at(t, j).divmod(m.at(t, t));
        col_op(ElemOp::add(j, q, t));
        if (!r.is_zero()) {
          col_op(ElemOp::swap(t, j));
          clean = false;
          break;
        }
      }
    }

    // Enforce the divisibility chain: if some trailing entry is not a
    // multiple of the pivot, fold its row in and redo this pivot.
    bool redo = false;
    for (std::size_t i = t + 1; i < R && !redo; ++i)
      for (std::size_t j = t + 1; j < C && !redo; ++j) {
        if (m.at(i, j).is_zero()) continue;
        if (!m.at(i, j).divmod(m.at(t, t)).second.is_zero()) {
          row_op(ElemOp::add(t, LaurentPoly::one(), i));
          redo = true;
        }
      }
    if (redo) continue;

    // Normalize the pivot to its delay-free representative.
    const long d = m.at(t, t).del();
    if (d != 0) row_op(ElemOp::scale(t, -d));
    ++t;
  }

  out.rank = t;
  out.Gamma = PolyMatrix(R, C);
  for (std::size_t i = 0; i < t; ++i) out.Gamma.at(i, i) = m.at(i, i);

  // A = (R_k ... R_1)^-1 = R_1^-1 ... R_k^-1, built by right-multiplying the
  // identity in application order.  Right-multiplication by a row-operation
  // matrix acts as the column operation with ADD source/target exchanged
  // (I + f*E_ij adds f*col_i to col_j from the right); dually for B.
  auto dual = [](ElemOp op) {
    if (op.kind == ElemOp::ADD) std::swap(op.i, op.j);
    return op;
  };
  out.A = PolyMatrix::identity(R);
  for (const auto& op : out.row_ops) apply_col_op(out.A, dual(op.inverted()));
  out.B = PolyMatrix::identity(C);
  for (const auto& op : out.col_ops) apply_row_op(out.B, dual(op.inverted()));

  return out;
}

}  // namespace eaqecc

#endif  // EAQECC_SMITH_HPP

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

#ifndef EAQECC_BLOCK_EA_HPP
#define EAQECC_BLOCK_EA_HPP

#include <cassert>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eaqecc/gf2.hpp"
#include "eaqecc/gf4.hpp"
#include "eaqecc/pauli.hpp"

namespace eaqecc {

/*
 * Entanglement-assisted block codes: symplectic Gram-Schmidt over GF(2),
 * optimal ebit-count formulas, the Clifford column-operation engine, and
 * encoding-circuit synthesis reducing an arbitrary independent generator set
 * to canonical (ebit pair + ancilla) form.
 */

struct BlockGate {
  enum Kind { CNOT, H, P, SWAP };
  Kind kind;
  std::size_t i = 0, j = 0;  // 0-based qubit indices

  static BlockGate cnot(std::size_t c, std::size_t t) { return {CNOT, c, t}; }
  static BlockGate h(std::size_t q) { return {H, q, 0}; }
  static BlockGate p(std::size_t q) { return {P, q, 0}; }
  static BlockGate swap(std::size_t a, std::size_t b) { return {SWAP, a, b}; }

  // Serialized with 1-based qubit indices.
  std::string str() const {
    std::ostringstream os;
    switch (kind) {
      case CNOT: os << "CNOT " << i + 1 << ' ' << j + 1; break;
      case H: os << "H " << i + 1; break;
      case P: os << "P " << i + 1; break;
      case SWAP: os << "SWAP " << i + 1 << ' ' << j + 1; break;
    }
    return os.str();
  }

  static BlockGate parse(const std::string& line) {
    std::istringstream is(line);
    std::string name;
    is >> name;
    std::size_t a = 0, b = 0;
    if (name == "CNOT" || name == "SWAP") {
      if (!(is >> a >> b) || a == 0 || b == 0)
        throw std::invalid_argument("BlockGate::parse: " + line);
      return {name == "CNOT" ? CNOT : SWAP, a - 1, b - 1};
    }
    if (name == "H" || name == "P") {
      if (!(is >> a) || a == 0) throw std::invalid_argument("BlockGate::parse: " + line);
      return {name == "H" ? H : P, a - 1, 0};
    }
    throw std::invalid_argument("BlockGate::parse: " + line);
  }

  bool operator==(const BlockGate& o) const { return kind == o.kind && i == o.i && j == o.j; }
};

inline BlockCheckMatrix apply_block_gate(const BlockCheckMatrix& m, const BlockGate& g) {
  BlockCheckMatrix r = m;
  if (g.i >= m.n || ((g.kind == BlockGate::CNOT || g.kind == BlockGate::SWAP) && g.j >= m.n))
    throw std::out_of_range("apply_block_gate: qubit index");
  if ((g.kind == BlockGate::CNOT || g.kind == BlockGate::SWAP) && g.i == g.j)
    throw std::invalid_argument("apply_block_gate: control equals target");
  for (auto& row : r.rows) {
    switch (g.kind) {
      case BlockGate::CNOT:
        row.x[g.j] ^= row.x[g.i];
        row.z[g.i] ^= row.z[g.j];
        break;
      case BlockGate::H:
        std::swap(row.z[g.i], row.x[g.i]);
        break;
      case BlockGate::P:
        row.z[g.i] ^= row.x[g.i];
        break;
      case BlockGate::SWAP:
        std::swap(row.z[g.i], row.z[g.j]);
        std::swap(row.x[g.i], row.x[g.j]);
        break;
    }
  }
  return r;
}

struct BlockRowOp {
  enum Kind { SWAP, ADD };  // ADD: row i += row j
  Kind kind;
  std::size_t i = 0, j = 0;
};

// Result of symplectic Gram-Schmidt: rows reordered as c anticommuting pairs
// followed by a mutually commuting singles; 2c + a = row count.
struct EAStructure {
  std::size_t c = 0, a = 0;
  BlockCheckMatrix reordered;
  std::vector<BlockRowOp> row_ops;
};

namespace detail {
inline void require_independent(const BlockCheckMatrix& h, const char* who) {
  BinMatrix b = h.as_binary();
  if (gf2_rank(b) != h.rows.size())
    throw std::invalid_argument(std::string(who) + ": rows dependent over GF(2)");
}
}  // namespace detail

inline EAStructure block_sgsop(const BlockCheckMatrix& h) {
  detail::require_independent(h, "block_sgsop");
  EAStructure out;
  std::vector<SymplecticVector> pool = h.rows;
  std::vector<std::size_t> origin(pool.size());
  for (std::size_t i = 0; i < origin.size(); ++i) origin[i] = i;

  std::vector<SymplecticVector> pairs, singles;
  while (!pool.empty()) {
    SymplecticVector u = pool.front();
    std::size_t u_origin = origin.front();
    pool.erase(pool.begin());
    origin.erase(origin.begin());
    std::size_t partner = pool.size();
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (symplectic_product(u, pool[i])) { partner = i; break; }
    if (partner == pool.size()) {
      singles.push_back(u);
      continue;
    }
    SymplecticVector v = pool[partner];
    std::size_t v_origin = origin[partner];
    pool.erase(pool.begin() + partner);
    origin.erase(origin.begin() + partner);
    // Make every remaining row commute with both u and v.
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (symplectic_product(pool[i], v)) {
        for (std::size_t q = 0; q < h.n; ++q) {
          pool[i].z[q] ^= u.z[q];
          pool[i].x[q] ^= u.x[q];
        }
        out.row_ops.push_back({BlockRowOp::ADD, origin[i], u_origin});
      }
      if (symplectic_product(pool[i], u)) {
        for (std::size_t q = 0; q < h.n; ++q) {
          pool[i].z[q] ^= v.z[q];
          pool[i].x[q] ^= v.x[q];
        }
        out.row_ops.push_back({BlockRowOp::ADD, origin[i], v_origin});
      }
    }
    pairs.push_back(u);
    pairs.push_back(v);
  }
  out.c = pairs.size() / 2;
  out.a = singles.size();
  out.reordered = BlockCheckMatrix(h.n);
  for (auto& r : pairs) out.reordered.add_row(r);
  for (auto& r : singles) out.reordered.add_row(r);
  return out;
}

inline std::size_t ebits_general(const BlockCheckMatrix& h) {
  BinMatrix hz = h.z_part(), hx = h.x_part();
  BinMatrix om = hx * hz.transposed() + hz * hx.transposed();
  const std::size_t r = gf2_rank(om);
  assert(r % 2 == 0);
  return r / 2;
}

inline std::size_t ebits_css(const BinMatrix& h1, const BinMatrix& h2) {
  if (h1.cols() != h2.cols()) throw std::invalid_argument("ebits_css: column count mismatch");
  BinMatrix prod = h1 * h2.transposed();
  return gf2_rank(prod);
}

inline std::size_t ebits_gf4(const Gf4Matrix& h) {
  Gf4Matrix prod = h * h.dagger();
  return gf4_rank(prod);
}

/*
 * Encoding-circuit synthesis.  Reduces the generators to the canonical form
 * (one Z row and one X row on qubit i for each anticommuting pair i < c, then
 * a Z row per ancilla qubit c..c+a-1) using CNOT/H/P/SWAP column operations
 * plus free row operations.  Replaying the gates in reverse on the canonical
 * (ebit-augmented) stabilizer recovers the encoded stabilizer up to GF(2)
 * row-space equality.
 */
struct BlockSynthesis {
  std::vector<BlockGate> gates;  // sender-qubit indices
  std::size_t c = 0, a = 0;
  BlockCheckMatrix final;          // canonical form, sender columns only
  BlockCheckMatrix canonical_aug;  // canonical stabilizer with c receiver
                                   // columns prepended (row ops mix them)
};

inline BlockSynthesis synth_block_encoder(const BlockCheckMatrix& h) {
  EAStructure ea = block_sgsop(h);
  BlockSynthesis out;
  out.c = ea.c;
  out.a = ea.a;
  const std::size_t n = h.n;
  const std::size_t c = ea.c;

  // Work on the receiver-augmented matrix: the ebit halves ride along through
  // row operations so that the output canonical stabilizer is exactly the
  // gate image of the encoded stabilizer.  Pair row u (reduced to Z) carries
  // a receiver X half, its partner v (reduced to X) a receiver Z half.
  std::vector<SymplecticVector> rows;
  for (std::size_t r = 0; r < ea.reordered.rows.size(); ++r) {
    SymplecticVector v(n + c);
    for (std::size_t j = 0; j < n; ++j) {
      v.z[c + j] = ea.reordered.rows[r].z[j];
      v.x[c + j] = ea.reordered.rows[r].x[j];
    }
    if (r < 2 * c) {
      if (r % 2 == 0) v.x[r / 2] = 1;
      else v.z[r / 2] = 1;
    }
    rows.push_back(v);
  }

  auto apply = [&](const BlockGate& g) {
    out.gates.push_back(g);
    BlockGate shifted = g;
    shifted.i += c;
    if (g.kind == BlockGate::CNOT || g.kind == BlockGate::SWAP) shifted.j += c;
    BlockCheckMatrix tmp(n + c);
    tmp.rows = rows;
    rows = apply_block_gate(tmp, shifted).rows;
  };

  std::vector<bool> finished(n, false);
  // Sender-column accessors (receiver columns occupy 0..c-1 of the rows).
  auto zc = [&](std::size_t r, std::size_t q) -> uint8_t& { return rows[r].z[c + q]; };
  auto xc = [&](std::size_t r, std::size_t q) -> uint8_t& { return rows[r].x[c + q]; };
  auto row_add = [&](std::size_t dst, std::size_t src) {
    for (std::size_t t = 0; t < n + c; ++t) {
      rows[dst].z[t] ^= rows[src].z[t];
      rows[dst].x[t] ^= rows[src].x[t];
    }
  };

  // r1 -> pure X on column q, r0 -> pure Z on column q.
  auto reduce_pair = [&](std::size_t r0, std::size_t r1, std::size_t q) {
    // Pivot: an X entry on column q of row r1.
    if (!xc(r1, q)) {
      std::size_t t = n;
      for (std::size_t j = 0; j < n && t == n; ++j)
        if (!finished[j] && xc(r1, j)) t = j;
      if (t == n) {
        for (std::size_t j = 0; j < n && t == n; ++j)
          if (!finished[j] && zc(r1, j)) t = j;
        apply(BlockGate::h(t));
      }
      if (t != q) apply(BlockGate::swap(q, t));
    }
    for (std::size_t j = 0; j < n; ++j)
      if (j != q && xc(r1, j)) apply(BlockGate::cnot(q, j));
    for (std::size_t j = 0; j < n; ++j)
      if (j != q && zc(r1, j)) {
        // Controlled-Z composite clears a Z entry against the X pivot.
        apply(BlockGate::h(j));
        apply(BlockGate::cnot(q, j));
        apply(BlockGate::h(j));
      }
    if (zc(r1, q)) apply(BlockGate::p(q));
    // Partner row: the symplectic product with r1 guarantees a Z pivot at q.
    for (std::size_t j = 0; j < n; ++j)
      if (j != q && xc(r0, j)) {
        if (zc(r0, j)) apply(BlockGate::p(j));
        apply(BlockGate::h(j));
      }
    if (xc(r0, q)) row_add(r0, r1);
    for (std::size_t j = 0; j < n; ++j)
      if (j != q && zc(r0, j)) apply(BlockGate::cnot(j, q));
    finished[q] = true;
  };

  // Single commuting row -> pure Z on its assigned column.
  auto reduce_single = [&](std::size_t r, std::size_t q,
                           const std::vector<std::pair<std::size_t, std::size_t>>& done) {
    for (auto& [row_f, col_f] : done)
      if (zc(r, col_f)) row_add(r, row_f);
    for (std::size_t j = 0; j < n; ++j)
      if (xc(r, j)) {
        if (zc(r, j)) apply(BlockGate::p(j));
        apply(BlockGate::h(j));
      }
    if (!zc(r, q)) {
      std::size_t t = n;
      for (std::size_t j = 0; j < n && t == n; ++j)
        if (!finished[j] && j != q && zc(r, j)) t = j;
      apply(BlockGate::swap(q, t));
    }
    for (std::size_t j = 0; j < n; ++j)
      if (j != q && zc(r, j)) apply(BlockGate::cnot(j, q));
    finished[q] = true;
  };

  for (std::size_t p = 0; p < ea.c; ++p) reduce_pair(2 * p, 2 * p + 1, p);
  std::vector<std::pair<std::size_t, std::size_t>> done_singles;
  for (std::size_t s = 0; s < ea.a; ++s) {
    reduce_single(2 * ea.c + s, ea.c + s, done_singles);
    done_singles.emplace_back(2 * ea.c + s, ea.c + s);
  }

  out.canonical_aug = BlockCheckMatrix(n + c);
  out.canonical_aug.rows = rows;
  out.final = BlockCheckMatrix(n);
  for (auto& r : rows) {
    SymplecticVector v(n);
    for (std::size_t j = 0; j < n; ++j) {
      v.z[j] = r.z[c + j];
      v.x[j] = r.x[c + j];
    }
    out.final.add_row(v);
  }
  return out;
}

// Apply the synthesized gates in reverse to the (possibly augmented)
// canonical stabilizer; `offset` shifts gate indices past receiver columns.
// Every gate in the set is its own inverse on the binary representation.
inline BlockCheckMatrix replay_reverse(const BlockCheckMatrix& m,
                                       const std::vector<BlockGate>& gates,
                                       std::size_t offset = 0) {
  BlockCheckMatrix cur = m;
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    BlockGate g = *it;
    g.i += offset;
    if (g.kind == BlockGate::CNOT || g.kind == BlockGate::SWAP) g.j += offset;
    cur = apply_block_gate(cur, g);
  }
  return cur;
}

}  // namespace eaqecc

#endif  // EAQECC_BLOCK_EA_HPP

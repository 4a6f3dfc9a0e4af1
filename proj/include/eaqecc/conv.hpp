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

#ifndef EAQECC_CONV_HPP
#define EAQECC_CONV_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "eaqecc/poly_matrix.hpp"
#include "eaqecc/rational.hpp"

namespace eaqecc {

/*
 * Convolutional stabilizer generators in the polynomial formalism: a frame of
 * n qubits, each generator a row [z(D) | x(D)] of length-n polynomial (or,
 * during intermediate reductions, rational) vectors.
 */
struct ConvGenerator {
  std::size_t n = 0;
  std::vector<RationalFn> z, x;

  ConvGenerator() = default;
  explicit ConvGenerator(std::size_t n) : n(n), z(n), x(n) {}

  bool is_polynomial() const {
    for (auto& e : z)
      if (!e.is_poly()) return false;
    for (auto& e : x)
      if (!e.is_poly()) return false;
    return true;
  }

  bool is_zero() const {
    for (auto& e : z)
      if (!e.is_zero()) return false;
    for (auto& e : x)
      if (!e.is_zero()) return false;
    return true;
  }

  ConvGenerator& operator*=(const RationalFn& f) {
    for (auto& e : z) e = e * f;
    for (auto& e : x) e = e * f;
    return *this;
  }

  // this += f * other
  void add_scaled(const ConvGenerator& o, const RationalFn& f) {
    for (std::size_t i = 0; i < n; ++i) {
      z[i] = z[i] + f * o.z[i];
      x[i] = x[i] + f * o.x[i];
    }
  }

  bool operator==(const ConvGenerator& o) const { return n == o.n && z == o.z && x == o.x; }
};

struct ConvCheckMatrix {
  std::size_t n = 0;
  std::vector<ConvGenerator> gens;

  ConvCheckMatrix() = default;
  explicit ConvCheckMatrix(std::size_t n) : n(n) {}

  void add_gen(const ConvGenerator& g) {
    if (g.n != n) throw std::invalid_argument("ConvCheckMatrix: frame size mismatch");
    gens.push_back(g);
  }

  bool is_polynomial() const {
    for (auto& g : gens)
      if (!g.is_polynomial()) return false;
    return true;
  }

  RationalMatrix z_part() const { return part(true); }
  RationalMatrix x_part() const { return part(false); }

  bool operator==(const ConvCheckMatrix& o) const { return n == o.n && gens == o.gens; }

 private:
  RationalMatrix part(bool zside) const {
    RationalMatrix m(gens.size(), n);
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = zside ? gens[i].z[j] : gens[i].x[j];
    return m;
  }
};

// Shifted symplectic product (u (.) v)(D) = sum_i z_i(D) x'_i(D^-1) +
// x_i(D) z'_i(D^-1); the coefficient at D^i is 1 iff u anticommutes with v
// delayed by i frames.
inline RationalFn shifted_product(const ConvGenerator& u, const ConvGenerator& v) {
  if (u.n != v.n) throw std::invalid_argument("shifted_product: frame size mismatch");
  RationalFn s;
  for (std::size_t i = 0; i < u.n; ++i)
    s = s + u.z[i] * v.x[i].reciprocal() + u.x[i] * v.z[i].reciprocal();
  return s;
}

using ShiftedOmega = RationalMatrix;

inline ShiftedOmega shifted_omega(const ConvCheckMatrix& h) {
  ShiftedOmega om(h.gens.size(), h.gens.size());
  for (std::size_t i = 0; i < h.gens.size(); ++i)
    for (std::size_t j = 0; j < h.gens.size(); ++j)
      om.at(i, j) = shifted_product(h.gens[i], h.gens[j]);
  return om;
}

// Row operation R(D) acts on Omega as R(D) Omega(D) R^T(D^-1).
inline ShiftedOmega transform_omega(const ShiftedOmega& om, const RationalMatrix& r) {
  if (r.rows() != r.cols() || r.rows() != om.rows())
    throw std::invalid_argument("transform_omega: shape mismatch");
  RationalMatrix probe = r;
  if (rank_rational(probe) != r.rows())
    throw std::invalid_argument("transform_omega: singular row transformation");
  return r * om * r.reciprocal_transposed();
}

namespace detail {

// Expansion re-indexing of one Laurent polynomial entry: the expanded block
// entry (row block p, column block q) collects original coefficients at
// exponents s with s = q - p (mod l), re-indexed to D^{(s+p-q)/l}.
inline LaurentPoly expand_entry(const LaurentPoly& f, std::size_t l, std::size_t p,
                                std::size_t q) {
  LaurentPoly out;
  for (long s : f.exponents()) {
    long diff = s - (static_cast<long>(q) - static_cast<long>(p));
    long mod = diff % static_cast<long>(l);
    if (mod != 0) continue;
    out = out + LaurentPoly::monomial(diff / static_cast<long>(l));
  }
  return out;
}

}  // namespace detail

inline ConvCheckMatrix expand_check(const ConvCheckMatrix& h, std::size_t l) {
  if (l == 0) throw std::invalid_argument("expand_check: factor must be positive");
  if (!h.is_polynomial()) throw std::invalid_argument("expand_check: rational entries");
  if (l == 1) return h;
  const std::size_t m = h.gens.size();
  ConvCheckMatrix out(h.n * l);
  out.gens.assign(m * l, ConvGenerator(h.n * l));
  for (std::size_t p = 0; p < l; ++p)
    for (std::size_t r = 0; r < m; ++r) {
      ConvGenerator& g = out.gens[p * m + r];
      for (std::size_t q = 0; q < l; ++q)
        for (std::size_t c = 0; c < h.n; ++c) {
          g.z[q * h.n + c] = detail::expand_entry(h.gens[r].z[c].to_poly(), l, p, q);
          g.x[q * h.n + c] = detail::expand_entry(h.gens[r].x[c].to_poly(), l, p, q);
        }
    }
  return out;
}

inline ShiftedOmega expand_omega(const ShiftedOmega& om, std::size_t l) {
  if (l == 0) throw std::invalid_argument("expand_omega: factor must be positive");
  if (l == 1) return om;
  const std::size_t m = om.rows();
  ShiftedOmega out(m * l, m * l);
  for (std::size_t p = 0; p < l; ++p)
    for (std::size_t q = 0; q < l; ++q)
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < om.cols(); ++c) {
          if (!om.at(r, c).is_poly())
            throw std::invalid_argument("expand_omega: rational entries");
          out.at(p * m + r, q * m + c) =
              detail::expand_entry(om.at(r, c).to_poly(), l, p, q);
        }
  return out;
}

struct ConvRowOp {
  enum Kind { SWAP, ADD, SCALE };  // ADD: row i += f * row j; SCALE: row i *= f
  Kind kind;
  std::size_t i = 0, j = 0;
  RationalFn f;

  static ConvRowOp swap(std::size_t a, std::size_t b) { return {SWAP, a, b, RationalFn()}; }
  static ConvRowOp add(std::size_t i, std::size_t j, const RationalFn& f) {
    return {ADD, i, j, f};
  }
  static ConvRowOp scale(std::size_t i, const RationalFn& f) { return {SCALE, i, 0, f}; }
};

inline void apply_conv_row_op(ConvCheckMatrix& h, const ConvRowOp& op) {
  switch (op.kind) {
    case ConvRowOp::SWAP: std::swap(h.gens[op.i], h.gens[op.j]); break;
    case ConvRowOp::ADD: h.gens[op.i].add_scaled(h.gens[op.j], op.f); break;
    case ConvRowOp::SCALE: h.gens[op.i] *= op.f; break;
  }
}

/*
 * Result of the polynomial symplectic Gram-Schmidt procedure at expansion
 * factor l: c generator pairs with cross product exactly 1 (halves of ebits)
 * followed by a generators decoupled from everything.  Pair rows may carry
 * rational entries; `finitized` clears row denominators (a separate logged
 * stage, since the scaling changes the pair products away from 1).
 */
struct ConvDecomposition {
  std::size_t c = 0, a = 0, l = 1;
  ConvCheckMatrix reordered;
  std::vector<ConvRowOp> row_ops;
  ConvCheckMatrix finitized;
  std::vector<ConvRowOp> finitize_ops;
};

namespace detail {

inline bool is_monomial_scalar(const RationalFn& f, long& m) {
  if (!f.is_poly()) return false;
  LaurentPoly p = f.to_poly();
  if (p.is_zero() || !p.is_monomial()) return false;
  m = p.del();
  return true;
}

inline LaurentPoly poly_lcm(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly g = poly_gcd(a, b);
  return (a * b / g).delay_free();
}

}  // namespace detail

inline ConvDecomposition poly_sgsop(const ConvCheckMatrix& h, std::size_t l_max = 12) {
  for (std::size_t l = 1; l <= l_max; ++l) {
    ConvCheckMatrix base = expand_check(h, l);
    std::vector<ConvGenerator> rows;
    for (auto& g : base.gens) rows.push_back(g);
    std::vector<ConvRowOp> log;
    std::vector<std::size_t> pool(rows.size());
    for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> singles;

    auto prod = [&](std::size_t i, std::size_t j) { return shifted_product(rows[i], rows[j]); };
    auto remove2 = [&](std::size_t a, std::size_t b) {
      std::vector<std::size_t> next;
      for (std::size_t v : pool)
        if (v != a && v != b) next.push_back(v);
      pool = next;
    };

    auto decouple = [&](std::size_t i, std::size_t j) {
      for (std::size_t r : pool) {
        if (r == i || r == j) continue;
        RationalFn alpha = prod(r, j);  // coefficient on pair row i
        RationalFn beta = prod(r, i);   // coefficient on pair row j
        if (!alpha.is_zero()) {
          rows[r].add_scaled(rows[i], alpha);
          log.push_back(ConvRowOp::add(r, i, alpha));
        }
        if (!beta.is_zero()) {
          rows[r].add_scaled(rows[j], beta);
          log.push_back(ConvRowOp::add(r, j, beta));
        }
      }
    };

    bool stuck = false;
    while (!pool.empty() && !stuck) {
      bool changed = false;
      // Step 1: a generator decoupled from all the others.
      for (std::size_t idx : pool) {
        bool isolated = prod(idx, idx).is_zero();
        for (std::size_t other : pool)
          if (isolated && other != idx && !prod(idx, other).is_zero()) isolated = false;
        if (isolated) {
          singles.push_back(idx);
          remove2(idx, idx);
          changed = true;
          break;
        }
      }
      if (changed) continue;
      // Step 2: a pair with monomial cross product, normalized by a delay.
      for (std::size_t ii = 0; ii < pool.size() && !changed; ++ii)
        for (std::size_t jj = ii + 1; jj < pool.size() && !changed; ++jj) {
          std::size_t i = pool[ii], j = pool[jj];
          if (!prod(i, i).is_zero() || !prod(j, j).is_zero()) continue;
          long m = 0;
          if (!detail::is_monomial_scalar(prod(i, j), m)) continue;
          if (m != 0) {
            RationalFn f{LaurentPoly::monomial(m)};
            rows[j] *= f;
            log.push_back(ConvRowOp::scale(j, f));
          }
          decouple(i, j);
          pairs.emplace_back(i, j);
          remove2(i, j);
          changed = true;
        }
      if (changed) continue;
      // Step 3: a pair with general nonzero cross product, normalized by a
      // rational row scaling 1/(h_j (.) h_i)(D).
      for (std::size_t ii = 0; ii < pool.size() && !changed; ++ii)
        for (std::size_t jj = ii + 1; jj < pool.size() && !changed; ++jj) {
          std::size_t i = pool[ii], j = pool[jj];
          if (!prod(i, i).is_zero() || !prod(j, j).is_zero()) continue;
          RationalFn p = prod(j, i);
          if (p.is_zero()) continue;
          RationalFn f = p.inverse();
          rows[j] *= f;
          log.push_back(ConvRowOp::scale(j, f));
          decouple(i, j);
          pairs.emplace_back(i, j);
          remove2(i, j);
          changed = true;
        }
      if (!changed) stuck = true;
    }
    if (stuck) continue;  // expand by the next factor and retry

    // Reorder: pairs interleaved, then singles, realized as logged swaps.
    std::vector<std::size_t> order;
    for (auto& [i, j] : pairs) {
      order.push_back(i);
      order.push_back(j);
    }
    for (std::size_t s : singles) order.push_back(s);
    // Selection reordering with explicit swaps on the row vector.
    std::vector<std::size_t> current(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) current[i] = i;  // current[slot]=row id
    for (std::size_t slot = 0; slot < order.size(); ++slot) {
      std::size_t want = order[slot];
      std::size_t at = slot;
      while (current[at] != want) ++at;
      if (at != slot) {
        std::swap(rows[slot], rows[at]);
        std::swap(current[slot], current[at]);
        log.push_back(ConvRowOp::swap(slot, at));
      }
    }

    ConvDecomposition out;
    out.c = pairs.size();
    out.a = singles.size();
    out.l = l;
    out.row_ops = log;
    out.reordered = ConvCheckMatrix(base.n);
    for (auto& r : rows) out.reordered.add_gen(r);

    out.finitized = out.reordered;
    for (std::size_t r = 0; r < out.finitized.gens.size(); ++r) {
      LaurentPoly lcm = LaurentPoly::one();
      for (auto& e : out.finitized.gens[r].z) lcm = detail::poly_lcm(lcm, e.den());
      for (auto& e : out.finitized.gens[r].x) lcm = detail::poly_lcm(lcm, e.den());
      if (!lcm.is_one()) {
        RationalFn f{lcm};
        out.finitized.gens[r] *= f;
        out.finitize_ops.push_back(ConvRowOp::scale(r, f));
      }
    }
    return out;
  }
  throw std::runtime_error("EXPANSION_LIMIT");
}

}  // namespace eaqecc

#endif  // EAQECC_CONV_HPP

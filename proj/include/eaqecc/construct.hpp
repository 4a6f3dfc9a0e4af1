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

#ifndef EAQECC_CONSTRUCT_HPP
#define EAQECC_CONSTRUCT_HPP

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "eaqecc/circuits.hpp"
#include "eaqecc/conv.hpp"
#include "eaqecc/gf4.hpp"
#include "eaqecc/smith.hpp"

namespace eaqecc {

/*
 * Logical-operator bookkeeping: rows 0..k-1 are the logical Z rows and rows
 * k..2k-1 the logical X rows of the k information qubits, over the same
 * qubit stream as the stabilizer they accompany.
 */
struct InfoQubitMatrix {
  ConvCheckMatrix m;
  std::size_t k = 0;

  bool pairs_normalized() const {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        const RationalFn p = shifted_product(m.gens[i], m.gens[k + j]);
        if (i == j ? !(p.is_poly() && p.num().is_one() && p.den().is_one()) : !p.is_zero())
          return false;
      }
    return true;
  }
};

/*
 * An entanglement-assisted convolutional code: per frame it protects k
 * information qubits on n channel qubits using c ebits and a ancillas
 * (n = k + a + c).  Gate indices in encoder/decoder are absolute positions
 * in an (n+c)-qubit frame whose first c qubits are the receiver's ebit
 * halves and whose remaining n qubits are the sender's.  `initial` is the
 * unencoded stabilizer over that frame and `target` the n-column check
 * matrix the encoded stabilizer must span on the sender's columns.
 */
struct EAQConvCode {
  enum Klass { FINITE_DEPTH, INFINITE_DEPTH_ENCODER };
  std::size_t n = 0, k = 0, c = 0, a = 0;
  Klass klass = FINITE_DEPTH;
  std::vector<ConvGate> encoder, decoder;
  ConvCheckMatrix target;
  ConvCheckMatrix initial;
  InfoQubitMatrix initial_info;
  std::vector<ConvRowOp> row_ops;  // logged free row operations (scalings etc.)
};

// Optimal-entanglement estimate: half the rank over GF(2)(D) of the shifted
// symplectic Gram matrix.
inline std::size_t conv_ebits(const ConvCheckMatrix& h) {
  return rank_rational(shifted_omega(h)) / 2;
}

/* ------------------------------------------------------------------ */
/* GF(4) polynomial matrices                                          */
/* ------------------------------------------------------------------ */

struct Gf4Poly {
  std::map<long, Gf4> coef;  // exponent -> nonzero coefficient

  Gf4Poly() = default;
  static Gf4Poly term(Gf4 c, long e) {
    Gf4Poly p;
    if (!c.is_zero()) p.coef[e] = c;
    return p;
  }
  bool is_zero() const { return coef.empty(); }
  void add_term(long e, Gf4 c) {
    if (c.is_zero()) return;
    auto it = coef.find(e);
    if (it == coef.end()) {
      coef[e] = c;
    } else {
      it->second = it->second + c;
      if (it->second.is_zero()) coef.erase(it);
    }
  }
  Gf4Poly operator+(const Gf4Poly& o) const {
    Gf4Poly r = *this;
    for (auto& [e, c] : o.coef) r.add_term(e, c);
    return r;
  }
  Gf4Poly operator*(const Gf4Poly& o) const {
    Gf4Poly r;
    for (auto& [e1, c1] : coef)
      for (auto& [e2, c2] : o.coef) r.add_term(e1 + e2, c1 * c2);
    return r;
  }
  // Entrywise conjugation together with D -> D^-1.
  Gf4Poly conj_reciprocal() const {
    Gf4Poly r;
    for (auto& [e, c] : coef) r.coef[-e] = c.conj();
    return r;
  }
  bool operator==(const Gf4Poly& o) const { return coef == o.coef; }
};

using Gf4PolyMatrix = std::vector<std::vector<Gf4Poly>>;

// Rank over the field of fractions of GF(4)[D], by fraction-free elimination.
inline std::size_t gf4_poly_rank(Gf4PolyMatrix m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pr = rank;
    while (pr < rows && m[pr][col].is_zero()) ++pr;
    if (pr == rows) continue;
    std::swap(m[pr], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      const Gf4Poly p = m[rank][col], e = m[r][col];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = m[r][j] * p + m[rank][j] * e;
    }
    ++rank;
  }
  return rank;
}

inline std::size_t conv_ebits_gf4(const Gf4PolyMatrix& h) {
  if (h.empty()) return 0;
  const std::size_t rows = h.size(), cols = h[0].size();
  Gf4PolyMatrix m(rows, std::vector<Gf4Poly>(rows));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < rows; ++j) {
      Gf4Poly s;
      for (std::size_t t = 0; t < cols; ++t) s = s + h[i][t] * h[j][t].conj_reciprocal();
      m[i][j] = s;
    }
  return gf4_poly_rank(m);
}

// Binary expansion of a quaternary code: the w-multiples of the rows followed
// by the wbar-multiples, each symbol mapped by 0->I, w->X, 1->Y, wbar->Z.
inline ConvCheckMatrix gf4_import_conv(const Gf4PolyMatrix& h) {
  if (h.empty()) return ConvCheckMatrix();
  const std::size_t n = h[0].size();
  ConvCheckMatrix out(n);
  auto emit = [&](Gf4 unit) {
    for (const auto& row : h) {
      ConvGenerator g(n);
      for (std::size_t q = 0; q < n; ++q) {
        LaurentPoly z, x;
        for (auto& [e, coef] : row[q].coef) {
          const Gf4 s = unit * coef;
          if (s == Gf4(Gf4::ONE) || s == Gf4(Gf4::WBAR)) z += LaurentPoly::monomial(e);
          if (s == Gf4(Gf4::ONE) || s == Gf4(Gf4::W)) x += LaurentPoly::monomial(e);
        }
        g.z[q] = RationalFn(z);
        g.x[q] = RationalFn(x);
      }
      out.add_gen(g);
    }
  };
  emit(Gf4(Gf4::W));
  emit(Gf4(Gf4::WBAR));
  return out;
}

/* ------------------------------------------------------------------ */
/* Reduction machinery                                                */
/* ------------------------------------------------------------------ */

namespace detail {

struct GateRec {
  ConvCheckMatrix W;
  std::vector<ConvGate> gates;
  std::vector<ConvRowOp> row_ops;

  void g(const ConvGate& gate) {
    apply_conv_gate_inplace(W, gate);
    gates.push_back(gate);
  }
  void rop(const ConvRowOp& op) {
    apply_conv_row_op(W, op);
    row_ops.push_back(op);
  }
  const RationalFn& z(std::size_t r, std::size_t q) const { return W.gens[r].z[q]; }
  const RationalFn& x(std::size_t r, std::size_t q) const { return W.gens[r].x[q]; }
};

// Multiply each rational row by the lcm of its denominators (a logged free
// row scaling) so the working matrix is polynomial.
inline void clear_row_denominators(GateRec& rec) {
  for (std::size_t r = 0; r < rec.W.gens.size(); ++r) {
    LaurentPoly l = LaurentPoly::one();
    for (const auto& e : rec.W.gens[r].z) l = poly_lcm(l, e.den());
    for (const auto& e : rec.W.gens[r].x) l = poly_lcm(l, e.den());
    if (!l.is_one()) rec.rop(ConvRowOp::scale(r, RationalFn(l)));
  }
}

// Elementary column operation realized on the X side (CNOT/SWAP/DELAY), with
// column indices shifted by `off`.  ADD(i, f, j) means column i += f * col j.
inline void colop_gates_x(GateRec& rec, const ElemOp& op, std::size_t off) {
  switch (op.kind) {
    case ElemOp::ADD: rec.g(ConvGate::cnot(off + op.j, off + op.i, op.f)); break;
    case ElemOp::SWAP: rec.g(ConvGate::swap(off + op.i, off + op.j)); break;
    case ElemOp::SCALE: rec.g(ConvGate::delay(off + op.i, op.shift)); break;
  }
}

// Z_dst += f(D) Z_src via Hadamard-conjugated CNOT; side effect
// X_src += f(D^-1) X_dst.
inline void zadd_gadget(GateRec& rec, std::size_t dst, std::size_t src, const LaurentPoly& f) {
  rec.g(ConvGate::h(dst));
  rec.g(ConvGate::h(src));
  rec.g(ConvGate::cnot(src, dst, f));
  rec.g(ConvGate::h(dst));
  rec.g(ConvGate::h(src));
}

// Elementary column operation realized on the Z side.  When `counter_base`
// is set, the X-side side effects on the identity block starting at that row
// offset are cancelled by logged row operations.
inline void colop_gates_z(GateRec& rec, const ElemOp& op, std::size_t off, bool counter,
                          std::size_t counter_base) {
  switch (op.kind) {
    case ElemOp::ADD:
      zadd_gadget(rec, off + op.i, off + op.j, op.f);
      if (counter)
        rec.rop(ConvRowOp::add(counter_base + op.i, counter_base + op.j,
                               RationalFn(op.f.reciprocal())));
      break;
    case ElemOp::SWAP:
      rec.g(ConvGate::swap(off + op.i, off + op.j));
      if (counter) rec.rop(ConvRowOp::swap(counter_base + op.i, counter_base + op.j));
      break;
    case ElemOp::SCALE:
      rec.g(ConvGate::delay(off + op.i, op.shift));
      if (counter)
        rec.rop(ConvRowOp::scale(counter_base + op.i,
                                 RationalFn(LaurentPoly::monomial(-op.shift))));
      break;
  }
}

inline LaurentPoly entry_poly(const RationalFn& e) { return e.to_poly(); }

// Clear z = q * g on one column when the exact quotient is symmetric under
// D <-> D^-1, using P and the double-controlled-phase gates.  Returns false
// if the quotient is not symmetric (nothing emitted then).
inline bool clear_symmetric_z(GateRec& rec, std::size_t r, std::size_t q) {
  const LaurentPoly g = entry_poly(rec.x(r, q)), zz = entry_poly(rec.z(r, q));
  auto [quot, rem] = zz.divmod(g);
  if (!rem.is_zero()) return false;
  if (!(quot.reciprocal() == quot)) return false;
  for (long e : quot.exponents()) {
    if (e == 0)
      rec.g(ConvGate::p(q));
    else if (e > 0)
      rec.g(ConvGate::cphase_self(q, e));
  }
  return true;
}

/*
 * Reduce row r, within the column set `cols`, to a single X entry at
 * cols[0] (the accumulated gcd of the row's entries) with zero Z part.
 * Entries of row r outside `cols` are never touched; other rows transform
 * covariantly.  Preconditions: row r has zero Z entries outside `cols` and
 * zero shifted self product, which guarantees the final Z/X quotient is
 * symmetric and removable.
 */
inline void reduce_row_to_x_pivot(GateRec& rec, std::size_t r,
                                  const std::vector<std::size_t>& cols) {
  const std::size_t pivot = cols[0];
  int fuel = 600;
  auto euclid_into_pivot = [&](std::size_t q) {
    while (!rec.x(r, q).is_zero() && fuel-- > 0) {
      const LaurentPoly p = entry_poly(rec.x(r, pivot)), e = entry_poly(rec.x(r, q));
      auto [quot, rem] = e.divmod(p);
      (void)rem;
      if (!quot.is_zero()) rec.g(ConvGate::cnot(pivot, q, quot));
      if (!rec.x(r, q).is_zero()) rec.g(ConvGate::swap(pivot, q));
    }
  };

  while (fuel-- > 0) {
    // Seed the X pivot.
    if (rec.x(r, pivot).is_zero()) {
      bool found = false;
      for (std::size_t q : cols)
        if (!rec.x(r, q).is_zero()) {
          if (q != pivot) rec.g(ConvGate::swap(pivot, q));
          found = true;
          break;
        }
      if (!found)
        for (std::size_t q : cols)
          if (!rec.z(r, q).is_zero()) {
            rec.g(ConvGate::h(q));
            if (q != pivot) rec.g(ConvGate::swap(pivot, q));
            found = true;
            break;
          }
      if (!found) throw std::domain_error("conv reduction: row vanishes on the working columns");
    }
    // Merge every other column into the pivot.
    for (std::size_t q : cols) {
      if (q == pivot) continue;
      if (!rec.x(r, q).is_zero()) euclid_into_pivot(q);
      if (!rec.z(r, q).is_zero()) {
        rec.g(ConvGate::h(q));
        euclid_into_pivot(q);
      }
    }
    bool clean = true;
    for (std::size_t q : cols)
      if (q != pivot && (!rec.x(r, q).is_zero() || !rec.z(r, q).is_zero())) clean = false;
    if (!clean) continue;
    // Clear the pivot's own Z entry.
    if (rec.z(r, pivot).is_zero()) break;
    if (clear_symmetric_z(rec, r, pivot)) break;
    const LaurentPoly g = entry_poly(rec.x(r, pivot)), zz = entry_poly(rec.z(r, pivot));
    auto [quot, rem] = zz.divmod(g);
    (void)rem;
    if (!quot.is_zero() && cols.size() > 1) {
      // Park a copy of the pivot in a helper column, phase the quotient off,
      // then fold the helper back into the pivot.
      std::size_t helper = cols[0] == pivot ? cols[1] : cols[0];
      for (std::size_t q : cols)
        if (q != pivot) {
          helper = q;
          break;
        }
      rec.g(ConvGate::cnot(pivot, helper, LaurentPoly::one()));
      rec.g(ConvGate::cphase(helper, pivot, quot));
      // helper now carries (quot(D^-1) * g | g); the outer loop remerges it.
    } else {
      rec.g(ConvGate::h(pivot));
    }
  }
  if (fuel <= 0) throw std::domain_error("conv reduction: no convergence on one row");
  // Normalize the pivot to a delay-free polynomial.
  const LaurentPoly g = entry_poly(rec.x(r, pivot));
  if (!g.is_zero() && g.del() != 0) rec.g(ConvGate::delay(pivot, -g.del()));
}

// Embed an n-column check matrix into an (n+c)-column frame whose first c
// columns (the receiver's ebit halves) are zero.
inline ConvCheckMatrix embed_with_bob(const ConvCheckMatrix& t, std::size_t c) {
  ConvCheckMatrix out(t.n + c);
  for (const auto& g : t.gens) {
    ConvGenerator e(t.n + c);
    for (std::size_t q = 0; q < t.n; ++q) {
      e.z[c + q] = g.z[q];
      e.x[c + q] = g.x[q];
    }
    out.add_gen(e);
  }
  return out;
}

inline ConvGenerator unit_row(std::size_t width, std::size_t col, bool zside) {
  ConvGenerator g(width);
  (zside ? g.z : g.x)[col] = RationalFn(LaurentPoly::one());
  return g;
}

// H-conjugated RCNOT plus DELAY: multiply X column q by gamma(D) and Z
// column q by 1/gamma(D^-1), for polynomial gamma with gamma(0) = 1.
inline void scalar_stage(std::vector<ConvGate>& out, std::size_t q, const LaurentPoly& gamma) {
  if (gamma.is_one()) return;
  const LaurentPoly tilde = gamma.reciprocal().delay_free();
  out.push_back(ConvGate::h(q));
  out.push_back(ConvGate::rcnot(q, RationalFn(LaurentPoly::one(), tilde)));
  out.push_back(ConvGate::h(q));
  out.push_back(ConvGate::delay(q, gamma.deg()));
}

// RCNOT plus DELAY: multiply Z column q by gamma(D) and X column q by
// 1/gamma(D^-1).
inline void scalar_stage_z(std::vector<ConvGate>& out, std::size_t q, const LaurentPoly& gamma) {
  if (gamma.is_one()) return;
  const LaurentPoly tilde = gamma.reciprocal().delay_free();
  out.push_back(ConvGate::rcnot(q, RationalFn(LaurentPoly::one(), tilde)));
  out.push_back(ConvGate::delay(q, gamma.deg()));
}

inline void append_gates(std::vector<ConvGate>& dst, const std::vector<ConvGate>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

}  // namespace detail

/* ------------------------------------------------------------------ */
/* Encoder verification                                               */
/* ------------------------------------------------------------------ */

namespace detail {

inline std::vector<RationalFn> full_row(const ConvGenerator& g) {
  std::vector<RationalFn> v(2 * g.n);
  for (std::size_t q = 0; q < g.n; ++q) {
    v[q] = g.z[q];
    v[g.n + q] = g.x[q];
  }
  return v;
}

inline RationalMatrix full_matrix(const ConvCheckMatrix& m) {
  RationalMatrix r(m.gens.size(), 2 * m.n);
  for (std::size_t i = 0; i < m.gens.size(); ++i) {
    auto v = full_row(m.gens[i]);
    for (std::size_t j = 0; j < v.size(); ++j) r.at(i, j) = v[j];
  }
  return r;
}

inline std::vector<RationalFn> eliminate_against(const RationalMatrix& rref,
                                                 std::vector<RationalFn> v) {
  for (std::size_t r = 0; r < rref.rows(); ++r) {
    std::size_t lead = rref.cols();
    for (std::size_t c = 0; c < rref.cols(); ++c)
      if (!rref.at(r, c).is_zero()) {
        lead = c;
        break;
      }
    if (lead == rref.cols() || v[lead].is_zero()) continue;
    const RationalFn f = v[lead] / rref.at(r, lead);
    for (std::size_t c = 0; c < rref.cols(); ++c) v[c] = v[c] + f * rref.at(r, c);
  }
  return v;
}

}  // namespace detail

/*
 * Checks that the encoder carries the unencoded stabilizer onto the target:
 * the encoded stabilizer must commute, have full rational rank, and contain
 * every target row in the rational row space of its sender-column
 * restriction.  Then replays encoder followed by decoder on the logical
 * rows and requires each to return to its initial form up to stabilizer row
 * additions and one overall monomial delay.
 */
inline bool verify_encoding(const EAQConvCode& code, std::string* why = nullptr) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  const std::size_t N = code.n + code.c;
  if (code.initial.n != N) return fail("initial stabilizer frame size mismatch");
  const ConvCheckMatrix enc = replay_gates(code.initial, code.encoder);

  const ShiftedOmega om = shifted_omega(enc);
  for (std::size_t i = 0; i < om.rows(); ++i)
    for (std::size_t j = 0; j < om.cols(); ++j)
      if (!om.at(i, j).is_zero()) return fail("encoded stabilizer does not commute");

  RationalMatrix alice(enc.gens.size(), 2 * code.n);
  for (std::size_t i = 0; i < enc.gens.size(); ++i)
    for (std::size_t q = 0; q < code.n; ++q) {
      alice.at(i, q) = enc.gens[i].z[code.c + q];
      alice.at(i, code.n + q) = enc.gens[i].x[code.c + q];
    }
  if (rank_rational(alice) != enc.gens.size())
    return fail("encoded stabilizer is rationally degenerate on the sender's columns");
  const RationalMatrix tfull = detail::full_matrix(code.target);
  if (rank_rational(tfull) != code.target.gens.size())
    return fail("target check matrix is rationally degenerate");
  for (const auto& row : code.target.gens)
    if (!rational_in_row_space(alice, detail::full_row(row)))
      return fail("a target generator is outside the encoded row space");

  // Decode and compare logical rows modulo the decoded stabilizer.
  const ConvCheckMatrix dec = replay_gates(enc, code.decoder);
  const ConvCheckMatrix info_dec =
      replay_gates(replay_gates(code.initial_info.m, code.encoder), code.decoder);
  RationalMatrix sref = detail::full_matrix(dec);
  rational_rref(sref);
  for (std::size_t i = 0; i < code.initial_info.m.gens.size(); ++i) {
    const auto r_exp = detail::eliminate_against(sref, detail::full_row(code.initial_info.m.gens[i]));
    const auto r_got = detail::eliminate_against(sref, detail::full_row(info_dec.gens[i]));
    std::size_t lead = r_exp.size();
    for (std::size_t q = 0; q < r_exp.size(); ++q)
      if (!r_exp[q].is_zero()) {
        lead = q;
        break;
      }
    if (lead == r_exp.size()) return fail("a logical row lies inside the decoded stabilizer");
    std::size_t lead_got = r_got.size();
    for (std::size_t q = 0; q < r_got.size(); ++q)
      if (!r_got[q].is_zero()) {
        lead_got = q;
        break;
      }
    if (lead_got != lead) return fail("a decoded logical row has the wrong support");
    const RationalFn ratio = r_got[lead] / r_exp[lead];
    long shift = 0;
    if (!detail::is_monomial_scalar(ratio, shift))
      return fail("a decoded logical row differs by a non-monomial factor");
    for (std::size_t q = 0; q < r_exp.size(); ++q)
      if (!(r_got[q] == ratio * r_exp[q]))
        return fail("a decoded logical row does not return to its initial form");
  }
  return true;
}

/* ------------------------------------------------------------------ */
/* CSS construction                                                   */
/* ------------------------------------------------------------------ */

/*
 * Builds the entanglement-assisted code of two classical convolutional
 * check matrices H1 ((n-k1) x n) and H2 ((n-k2) x n): the stacked quantum
 * check matrix [H1|0; 0|H2] is reduced by Smith decompositions to unit form,
 * consuming c = rank H1(D) H2^T(D^-1) ebits per frame.  When every invariant
 * factor of that product is monomial the encoder is finite-depth; otherwise
 * the leftover factors are realized by infinite-depth column operations.
 */
inline EAQConvCode css_construct(const PolyMatrix& h1, const PolyMatrix& h2) {
  if (h1.cols() != h2.cols() || h1.cols() == 0)
    throw std::invalid_argument("css_construct: check matrices over different frame sizes");
  const std::size_t n = h1.cols(), r1 = h1.rows(), r2 = h2.rows();
  const SmithDecomposition s1 = smith_form(h1), s2 = smith_form(h2);
  if (s1.rank != r1 || !s1.factors_all_one() || s2.rank != r2 || !s2.factors_all_one())
    throw std::domain_error("CATASTROPHIC_INPUT: classical check matrix is not basic");

  // Ebit count and encoder class from the product matrix.
  PolyMatrix prod(r1, r2);
  {
    const PolyMatrix h2rt = h2.reciprocal_transposed();
    for (std::size_t i = 0; i < r1; ++i)
      for (std::size_t j = 0; j < r2; ++j) {
        LaurentPoly s;
        for (std::size_t t = 0; t < n; ++t) s += h1.at(i, t) * h2rt.at(t, j);
        prod.at(i, j) = s;
      }
  }
  const SmithDecomposition sprod = smith_form(prod);
  const std::size_t c = sprod.rank;
  const bool finite = sprod.factors_all_monomial();

  EAQConvCode code;
  code.n = n;
  code.c = c;
  code.k = n - r1 - r2 + c;
  code.a = r1 + r2 - 2 * c;
  code.klass = finite ? EAQConvCode::FINITE_DEPTH : EAQConvCode::INFINITE_DEPTH_ENCODER;

  // Target: stacked CSS form.
  code.target = ConvCheckMatrix(n);
  for (std::size_t i = 0; i < r1; ++i) {
    ConvGenerator g(n);
    for (std::size_t q = 0; q < n; ++q) g.z[q] = RationalFn(h1.at(i, q));
    code.target.add_gen(g);
  }
  for (std::size_t i = 0; i < r2; ++i) {
    ConvGenerator g(n);
    for (std::size_t q = 0; q < n; ++q) g.x[q] = RationalFn(h2.at(i, q));
    code.target.add_gen(g);
  }

  detail::GateRec rec;
  rec.W = detail::embed_with_bob(code.target, c);
  auto abs = [&](std::size_t q) { return c + q; };

  // Stage 1: bring the X block to [I 0] and read off the product block E.
  for (const auto& op : s2.col_ops) detail::colop_gates_x(rec, op, c);
  for (const auto& op : s2.row_ops) {
    if (op.kind == ElemOp::SWAP)
      rec.rop(ConvRowOp::swap(r1 + op.i, r1 + op.j));
    else if (op.kind == ElemOp::ADD)
      rec.rop(ConvRowOp::add(r1 + op.i, r1 + op.j, RationalFn(op.f)));
    else
      rec.rop(ConvRowOp::scale(r1 + op.i, RationalFn(LaurentPoly::monomial(op.shift))));
  }
  for (const auto& op : s1.row_ops) {
    if (op.kind == ElemOp::SWAP)
      rec.rop(ConvRowOp::swap(op.i, op.j));
    else if (op.kind == ElemOp::ADD)
      rec.rop(ConvRowOp::add(op.i, op.j, RationalFn(op.f)));
    else
      rec.rop(ConvRowOp::scale(op.i, RationalFn(LaurentPoly::monomial(op.shift))));
  }

  // Stage 2: Smith-reduce E (the top Z block over the first r2 columns),
  // counteracting column side effects on the bottom identity block.
  PolyMatrix E(r1, r2);
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t j = 0; j < r2; ++j) E.at(i, j) = detail::entry_poly(rec.z(i, abs(j)));
  const SmithDecomposition sE = smith_form(E);
  if (sE.rank != c) throw std::domain_error("css_construct: product rank mismatch");
  const std::size_t s_mono = [&] {
    std::size_t s = 0;
    for (const auto& f : sE.invariant_factors())
      if (f.is_one()) ++s;
    return s;
  }();
  for (const auto& op : sE.row_ops) {
    if (op.kind == ElemOp::SWAP)
      rec.rop(ConvRowOp::swap(op.i, op.j));
    else if (op.kind == ElemOp::ADD)
      rec.rop(ConvRowOp::add(op.i, op.j, RationalFn(op.f)));
    else
      rec.rop(ConvRowOp::scale(op.i, RationalFn(LaurentPoly::monomial(op.shift))));
  }
  for (const auto& op : sE.col_ops) detail::colop_gates_z(rec, op, c, true, r1);

  // Stage 3: clear the coupling block F over the first s_mono (finite: all c)
  // rows using their unit Z pivots.
  const std::size_t unit_rows = finite ? c : s_mono;
  for (std::size_t i = 0; i < unit_rows; ++i)
    for (std::size_t q = r2; q < n; ++q) {
      const RationalFn e = rec.z(i, abs(q));
      if (!e.is_zero()) detail::zadd_gadget(rec, abs(q), abs(i), detail::entry_poly(e));
    }

  // Stage 4: Smith-reduce the remaining coupling rows c..r1-1 over the
  // columns beyond r2 (the pure-ancilla block).
  if (r1 > c) {
    PolyMatrix F(r1 - c, n - r2);
    for (std::size_t i = 0; i < r1 - c; ++i)
      for (std::size_t j = 0; j < n - r2; ++j)
        F.at(i, j) = detail::entry_poly(rec.z(c + i, abs(r2 + j)));
    const SmithDecomposition sF = smith_form(F);
    if (sF.rank != r1 - c)
      throw std::domain_error("css_construct: dependent generators in the coupling block");
    for (const auto& op : sF.row_ops) {
      if (op.kind == ElemOp::SWAP)
        rec.rop(ConvRowOp::swap(c + op.i, c + op.j));
      else if (op.kind == ElemOp::ADD)
        rec.rop(ConvRowOp::add(c + op.i, c + op.j, RationalFn(op.f)));
      else
        rec.rop(ConvRowOp::scale(c + op.i, RationalFn(LaurentPoly::monomial(op.shift))));
    }
    for (const auto& op : sF.col_ops) detail::colop_gates_z(rec, op, c + r2, false, 0);
    for (std::size_t i = 0; i < r1 - c; ++i) {
      const RationalFn d = rec.z(c + i, abs(r2 + i));
      if (d.is_zero()) throw std::domain_error("css_construct: coupling reduction failed");
      if (!(d.is_poly() && d.to_poly().is_one()))
        rec.rop(ConvRowOp::scale(c + i, d.inverse()));
    }
    // Clear the non-unit rows' entries over the fresh pivot columns by free
    // row operations.
    for (std::size_t i = unit_rows; i < c; ++i)
      for (std::size_t t = 0; t < r1 - c; ++t) {
        const RationalFn e = rec.z(i, abs(r2 + t));
        if (!e.is_zero()) rec.rop(ConvRowOp::add(i, c + t, e));
      }
  }

  // Stage 5 (infinite class only): lower-triangularize the leftover coupling
  // entries of the non-monomial rows over the information columns.
  std::vector<std::vector<LaurentPoly>> L;  // (c - s_mono)^2, lower triangular
  const std::size_t info_base = r2 + (r1 - c);
  if (!finite) {
    const std::size_t g2 = c - s_mono;
    L.assign(g2, std::vector<LaurentPoly>(g2));
    for (std::size_t i = 0; i < g2; ++i) {
      const std::size_t r = s_mono + i;
      // Collect the row's entries over the active information columns into
      // column info_base + i by Euclid on the Z side.
      const std::size_t dst = info_base + i;
      int fuel = 300;
      while (fuel-- > 0) {
        std::size_t best = n, count = 0;
        for (std::size_t q = dst; q < n; ++q)
          if (!rec.z(r, abs(q)).is_zero()) {
            ++count;
            if (best == n ||
                detail::entry_poly(rec.z(r, abs(q))).delay_free().deg() <
                    detail::entry_poly(rec.z(r, abs(best))).delay_free().deg())
              best = q;
          }
        if (count == 0)
          throw std::domain_error("css_construct: vanishing coupling row");
        if (best != dst) rec.g(ConvGate::swap(abs(best), abs(dst)));
        if (count == 1) break;
        const LaurentPoly p = detail::entry_poly(rec.z(r, abs(dst)));
        for (std::size_t q = dst + 1; q < n; ++q) {
          const RationalFn e = rec.z(r, abs(q));
          if (e.is_zero()) continue;
          auto [quot, rem] = detail::entry_poly(e).divmod(p);
          (void)rem;
          if (!quot.is_zero()) detail::zadd_gadget(rec, abs(q), abs(dst), quot);
        }
      }
      for (std::size_t j = 0; j <= i; ++j) L[i][j] = detail::entry_poly(rec.z(r, abs(info_base + j)));
    }
  }

  // Stage 6: Hadamards turn the ancilla block of the X rows into Z rows.
  for (std::size_t q = c; q < r2; ++q) rec.g(ConvGate::h(abs(q)));

  // Unencoded stabilizer and logical rows.
  const std::size_t N = n + c;
  code.initial = ConvCheckMatrix(N);
  for (std::size_t i = 0; i < c; ++i) {
    ConvGenerator g(N);
    g.z[i] = RationalFn(LaurentPoly::one());
    g.z[abs(i)] = RationalFn(LaurentPoly::one());
    code.initial.add_gen(g);
  }
  for (std::size_t t = 0; t < r1 - c; ++t)
    code.initial.add_gen(detail::unit_row(N, abs(r2 + t), true));
  for (std::size_t i = 0; i < c; ++i) {
    ConvGenerator g(N);
    g.x[i] = RationalFn(LaurentPoly::one());
    g.x[abs(i)] = RationalFn(LaurentPoly::one());
    code.initial.add_gen(g);
  }
  for (std::size_t t = 0; t < r2 - c; ++t)
    code.initial.add_gen(detail::unit_row(N, abs(c + t), true));
  code.initial_info.k = code.k;
  code.initial_info.m = ConvCheckMatrix(N);
  for (std::size_t q = 0; q < code.k; ++q)
    code.initial_info.m.add_gen(detail::unit_row(N, abs(info_base + q), true));
  for (std::size_t q = 0; q < code.k; ++q)
    code.initial_info.m.add_gen(detail::unit_row(N, abs(info_base + q), false));

  // Assemble encoder and decoder.
  if (finite) {
    code.encoder = reversed_gates(rec.gates);
    code.decoder = rec.gates;
  } else {
    std::vector<ConvGate> enc;
    const auto factors = sE.invariant_factors();
    for (std::size_t i = 0; i < c - s_mono; ++i)
      for (std::size_t j = 0; j < c - s_mono; ++j)
        if (!L[i][j].is_zero() && !(i == j && L[i][j].is_one()))
          enc.push_back(
              ConvGate::cnot(abs(info_base + j), abs(s_mono + i), L[i][j].reciprocal()));
    for (std::size_t i = s_mono; i < c; ++i) detail::scalar_stage_z(enc, abs(i), factors[i]);
    detail::append_gates(enc, reversed_gates(rec.gates));
    code.encoder = enc;

    std::vector<ConvGate> dec = rec.gates;
    for (std::size_t i = 0; i < c - s_mono; ++i)
      for (std::size_t j = 0; j < c - s_mono; ++j)
        if (!L[i][j].is_zero() && !(i == j && L[i][j].is_one())) {
          // Z-side clearing of L sourced from the receiver's ebit half.
          dec.push_back(ConvGate::h(abs(info_base + j)));
          dec.push_back(ConvGate::h(s_mono + i));
          dec.push_back(ConvGate::cnot(s_mono + i, abs(info_base + j), L[i][j]));
          dec.push_back(ConvGate::h(abs(info_base + j)));
          dec.push_back(ConvGate::h(s_mono + i));
        }
    code.decoder = dec;
  }
  code.row_ops = rec.row_ops;
  return code;
}

/* ------------------------------------------------------------------ */
/* General construction                                               */
/* ------------------------------------------------------------------ */

/*
 * Builds the code of an arbitrary commuting generator set, starting from its
 * symplectic Gram-Schmidt decomposition: rows 2i/2i+1 are the i-th
 * anticommuting pair and the last a rows are decoupled.  The decoupled rows
 * are reduced to single Z generators, the pairs are triangularized to unit
 * form, and the pair rows' leftover numerators and denominators become CNOT
 * stages and infinite-depth column multiplications of the encoder.
 */
inline EAQConvCode general_construct(const ConvDecomposition& d) {
  const std::size_t c = d.c, a = d.a;
  const std::size_t n = d.reordered.n;
  if (d.reordered.gens.size() != 2 * c + a)
    throw std::invalid_argument("general_construct: malformed decomposition");

  EAQConvCode code;
  code.n = n;
  code.c = c;
  code.a = a;
  code.k = n - a - c;
  code.target = d.reordered;

  detail::GateRec rec;
  rec.W = detail::embed_with_bob(d.reordered, c);
  auto abs = [&](std::size_t q) { return c + q; };
  detail::clear_row_denominators(rec);

  // Decoupled rows down to single Z generators on the first a columns.
  for (std::size_t t = 0; t < a; ++t) {
    const std::size_t r = 2 * c + t;
    std::vector<std::size_t> cols;
    for (std::size_t q = t; q < n; ++q) cols.push_back(abs(q));
    detail::reduce_row_to_x_pivot(rec, r, cols);
    rec.g(ConvGate::h(abs(t)));
    const LaurentPoly gamma = detail::entry_poly(rec.z(r, abs(t)));
    if (!gamma.is_one()) rec.rop(ConvRowOp::scale(r, RationalFn(LaurentPoly::one(), gamma)));
    // Clear the finished column from every other row (free row operations);
    // X entries there are forced to zero by the commutation relations.
    for (std::size_t o = 0; o < rec.W.gens.size(); ++o) {
      if (o == r) continue;
      if (!rec.x(o, abs(t)).is_zero())
        throw std::domain_error("general_construct: generator fails to decouple");
      const RationalFn e = rec.z(o, abs(t));
      if (!e.is_zero()) rec.rop(ConvRowOp::add(o, r, e));
    }
  }

  // First pair halves to pure-X lower-triangular form on columns a..a+c-1.
  for (std::size_t i = 0; i < c; ++i) {
    std::vector<std::size_t> cols;
    for (std::size_t q = a + i; q < n; ++q) cols.push_back(abs(q));
    detail::reduce_row_to_x_pivot(rec, 2 * i, cols);
    for (std::size_t q = a; q < a + i; ++q)
      if (!rec.z(2 * i, abs(q)).is_zero())
        throw std::domain_error("general_construct: pair row fails to triangularize");
  }
  // Normalize the diagonal and cancel the off-diagonal entries (free row
  // operations; the scalings may introduce rational entries).
  for (std::size_t i = 0; i < c; ++i) {
    const RationalFn l = rec.x(2 * i, abs(a + i));
    if (!(l.is_poly() && l.to_poly().is_one())) rec.rop(ConvRowOp::scale(2 * i, l.inverse()));
  }
  for (std::size_t i = 1; i < c; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      const RationalFn e = rec.x(2 * i, abs(a + j));
      if (!e.is_zero()) rec.rop(ConvRowOp::add(2 * i, 2 * j, e));
    }
  for (std::size_t i = 0; i < c; ++i) {
    const RationalFn u = rec.z(2 * i + 1, abs(a + i));
    if (u.is_zero()) throw std::domain_error("general_construct: pair partner lost its pivot");
    if (!(u.is_poly() && u.to_poly().is_one())) rec.rop(ConvRowOp::scale(2 * i + 1, u.inverse()));
  }
  // The pair partners' X entries at pair columns are removable by free row
  // operations against the pure-X rows.
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      const RationalFn e = rec.x(2 * i + 1, abs(a + j));
      if (!e.is_zero()) rec.rop(ConvRowOp::add(2 * i + 1, 2 * j, e));
    }
  // Their foreign Z entries at pair columns form an upper-triangular block
  // (commutation forbids the lower side), removed by descending row
  // operations against the later partners.
  for (std::size_t i = c; i-- > 0;)
    for (std::size_t j = i + 1; j < c; ++j) {
      const RationalFn e = rec.z(2 * i + 1, abs(a + j));
      if (!e.is_zero()) rec.rop(ConvRowOp::add(2 * i + 1, 2 * j + 1, e));
    }
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!rec.z(2 * i + 1, abs(a + j)).is_zero())
        throw std::domain_error("general_construct: pair partner fails to decouple");
  // Hadamards on the ebit columns give the pairs their standard form.
  for (std::size_t i = 0; i < c; ++i) rec.g(ConvGate::h(abs(a + i)));

  // Read the pair partners' information-column blocks and their common
  // denominators.
  const std::size_t info_base = a + c;
  const std::size_t kk = code.k;
  std::vector<LaurentPoly> gammas(c, LaurentPoly::one());
  std::vector<std::vector<LaurentPoly>> z2n(c, std::vector<LaurentPoly>(kk)),
      x2n(c, std::vector<LaurentPoly>(kk));
  for (std::size_t i = 0; i < c; ++i) {
    const std::size_t r = 2 * i + 1;
    LaurentPoly den = LaurentPoly::one();
    for (std::size_t q = 0; q < kk; ++q) {
      den = detail::poly_lcm(den, rec.z(r, abs(info_base + q)).den());
      den = detail::poly_lcm(den, rec.x(r, abs(info_base + q)).den());
    }
    gammas[i] = den;
    for (std::size_t q = 0; q < kk; ++q) {
      z2n[i][q] = (rec.z(r, abs(info_base + q)) * RationalFn(den)).to_poly();
      x2n[i][q] = (rec.x(r, abs(info_base + q)) * RationalFn(den)).to_poly();
    }
  }
  bool finite = true;
  for (const auto& g : gammas)
    if (!g.is_one()) finite = false;
  code.klass = finite ? EAQConvCode::FINITE_DEPTH : EAQConvCode::INFINITE_DEPTH_ENCODER;

  // Unencoded stabilizer: ebit pairs plus Z ancillas.
  const std::size_t N = n + c;
  code.initial = ConvCheckMatrix(N);
  for (std::size_t i = 0; i < c; ++i) {
    ConvGenerator g(N);
    g.z[i] = RationalFn(LaurentPoly::one());
    g.z[abs(a + i)] = RationalFn(LaurentPoly::one());
    code.initial.add_gen(g);
  }
  for (std::size_t i = 0; i < c; ++i) {
    ConvGenerator g(N);
    g.x[i] = RationalFn(LaurentPoly::one());
    g.x[abs(a + i)] = RationalFn(LaurentPoly::one());
    code.initial.add_gen(g);
  }
  for (std::size_t t = 0; t < a; ++t) code.initial.add_gen(detail::unit_row(N, abs(t), true));
  code.initial_info.k = kk;
  code.initial_info.m = ConvCheckMatrix(N);
  for (std::size_t q = 0; q < kk; ++q)
    code.initial_info.m.add_gen(detail::unit_row(N, abs(info_base + q), true));
  for (std::size_t q = 0; q < kk; ++q)
    code.initial_info.m.add_gen(detail::unit_row(N, abs(info_base + q), false));

  // Encoder: numerator CNOT stages, denominator column multiplications, then
  // the reduction in reverse.
  std::vector<ConvGate> enc;
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t q = 0; q < kk; ++q)
      if (!z2n[i][q].is_zero())
        enc.push_back(ConvGate::cnot(abs(a + i), abs(info_base + q), z2n[i][q]));
  for (std::size_t q = 0; q < kk; ++q) enc.push_back(ConvGate::h(abs(info_base + q)));
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t q = 0; q < kk; ++q)
      if (!x2n[i][q].is_zero())
        enc.push_back(ConvGate::cnot(abs(a + i), abs(info_base + q), x2n[i][q]));
  for (std::size_t i = 0; i < c; ++i) detail::scalar_stage(enc, abs(a + i), gammas[i]);
  detail::append_gates(enc, reversed_gates(rec.gates));
  code.encoder = enc;

  if (finite) {
    code.decoder = reversed_gates(code.encoder);
  } else {
    // Finite-depth decoder: the reduction forward, then the numerator stages
    // sourced from the receiver's ebit halves.
    std::vector<ConvGate> dec = rec.gates;
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t q = 0; q < kk; ++q)
        if (!x2n[i][q].is_zero())
          dec.push_back(ConvGate::cnot(i, abs(info_base + q), x2n[i][q]));
    for (std::size_t q = 0; q < kk; ++q) dec.push_back(ConvGate::h(abs(info_base + q)));
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t q = 0; q < kk; ++q)
        if (!z2n[i][q].is_zero())
          dec.push_back(ConvGate::cnot(i, abs(info_base + q), z2n[i][q]));
    code.decoder = dec;
  }
  code.row_ops = rec.row_ops;
  return code;
}

/* ------------------------------------------------------------------ */
/* Free-entanglement construction                                     */
/* ------------------------------------------------------------------ */

/*
 * Builds a code directly from an arbitrary full-rank polynomial check
 * matrix, with no expansion and no Gram-Schmidt: one ebit per unit of rank
 * of the X block.  Entanglement-inefficient by design.
 */
inline EAQConvCode free_ent_construct(const ConvCheckMatrix& s) {
  if (!s.is_polynomial())
    throw std::invalid_argument("free_ent_construct: rational input (scale rows first)");
  const std::size_t n = s.n, m = s.gens.size();
  if (rank_rational(detail::full_matrix(s)) != m)
    throw std::domain_error("free_ent_construct: rank-deficient check matrix");

  const PolyMatrix X = to_poly(s.x_part());
  const SmithDecomposition sx = smith_form(X);
  const std::size_t c = sx.rank;
  std::size_t s_mono = 0;
  const auto factors = sx.invariant_factors();
  for (const auto& f : factors)
    if (f.is_one()) ++s_mono;

  EAQConvCode code;
  code.n = n;
  code.c = c;
  code.k = n - m;
  code.a = m - c;
  code.klass = s_mono == c ? EAQConvCode::FINITE_DEPTH : EAQConvCode::INFINITE_DEPTH_ENCODER;
  code.target = s;

  detail::GateRec rec;
  rec.W = detail::embed_with_bob(s, c);
  auto abs = [&](std::size_t q) { return c + q; };

  // Diagonalize the X block.
  for (const auto& op : sx.row_ops) {
    if (op.kind == ElemOp::SWAP)
      rec.rop(ConvRowOp::swap(op.i, op.j));
    else if (op.kind == ElemOp::ADD)
      rec.rop(ConvRowOp::add(op.i, op.j, RationalFn(op.f)));
    else
      rec.rop(ConvRowOp::scale(op.i, RationalFn(LaurentPoly::monomial(op.shift))));
  }
  for (const auto& op : sx.col_ops) detail::colop_gates_x(rec, op, c);

  // Hadamards move the trailing Z entries to the X side.
  for (std::size_t q = c; q < n; ++q) rec.g(ConvGate::h(abs(q)));

  // Unit rows clear their own X tails.
  for (std::size_t i = 0; i < s_mono; ++i)
    for (std::size_t q = c; q < n; ++q) {
      const RationalFn e = rec.x(i, abs(q));
      if (!e.is_zero()) rec.g(ConvGate::cnot(abs(i), abs(q), detail::entry_poly(e)));
    }

  // Smith-reduce the decoupled rows' X block over the trailing columns.
  if (m > c) {
    PolyMatrix F(m - c, n - c);
    for (std::size_t i = 0; i < m - c; ++i)
      for (std::size_t j = 0; j < n - c; ++j)
        F.at(i, j) = detail::entry_poly(rec.x(c + i, abs(c + j)));
    const SmithDecomposition sF = smith_form(F);
    if (sF.rank != m - c)
      throw std::domain_error("free_ent_construct: dependent decoupled generators");
    for (const auto& op : sF.row_ops) {
      if (op.kind == ElemOp::SWAP)
        rec.rop(ConvRowOp::swap(c + op.i, c + op.j));
      else if (op.kind == ElemOp::ADD)
        rec.rop(ConvRowOp::add(c + op.i, c + op.j, RationalFn(op.f)));
      else
        rec.rop(ConvRowOp::scale(c + op.i, RationalFn(LaurentPoly::monomial(op.shift))));
    }
    for (const auto& op : sF.col_ops) detail::colop_gates_x(rec, op, 2 * c);
    for (std::size_t i = 0; i < m - c; ++i) {
      const RationalFn dgn = rec.x(c + i, abs(c + i));
      if (dgn.is_zero()) throw std::domain_error("free_ent_construct: reduction failed");
      if (!(dgn.is_poly() && dgn.to_poly().is_one()))
        rec.rop(ConvRowOp::scale(c + i, dgn.inverse()));
    }
    // Clear the non-unit rows' entries over the pivot columns by free row
    // operations.
    for (std::size_t i = s_mono; i < c; ++i)
      for (std::size_t t = 0; t < m - c; ++t) {
        const RationalFn e = rec.x(i, abs(c + t));
        if (!e.is_zero()) rec.rop(ConvRowOp::add(i, c + t, e));
      }
  }

  // Lower-triangularize the non-unit rows' X tails over the information
  // columns.
  const std::size_t g2 = c - s_mono;
  std::vector<std::vector<LaurentPoly>> L(g2, std::vector<LaurentPoly>(g2));
  for (std::size_t i = 0; i < g2; ++i) {
    const std::size_t r = s_mono + i;
    const std::size_t dst = m + i;
    int fuel = 300;
    while (fuel-- > 0) {
      std::size_t best = n, count = 0;
      for (std::size_t q = dst; q < n; ++q)
        if (!rec.x(r, abs(q)).is_zero()) {
          ++count;
          if (best == n || detail::entry_poly(rec.x(r, abs(q))).delay_free().deg() <
                               detail::entry_poly(rec.x(r, abs(best))).delay_free().deg())
            best = q;
        }
      if (count == 0) throw std::domain_error("free_ent_construct: vanishing coupling row");
      if (best != dst) rec.g(ConvGate::swap(abs(best), abs(dst)));
      if (count == 1) break;
      const LaurentPoly p = detail::entry_poly(rec.x(r, abs(dst)));
      for (std::size_t q = dst + 1; q < n; ++q) {
        const RationalFn e = rec.x(r, abs(q));
        if (e.is_zero()) continue;
        auto [quot, rem] = detail::entry_poly(e).divmod(p);
        (void)rem;
        if (!quot.is_zero()) rec.g(ConvGate::cnot(abs(dst), abs(q), quot));
      }
    }
    for (std::size_t j = 0; j <= i; ++j) L[i][j] = detail::entry_poly(rec.x(r, abs(m + j)));
  }

  // Unencoded stabilizer: c ebit pairs and m - c X-type ancillas.
  const std::size_t N = n + c;
  code.initial = ConvCheckMatrix(N);
  for (std::size_t i = 0; i < c; ++i) {
    ConvGenerator g(N);
    g.z[i] = RationalFn(LaurentPoly::one());
    g.z[abs(i)] = RationalFn(LaurentPoly::one());
    code.initial.add_gen(g);
  }
  for (std::size_t i = 0; i < c; ++i) {
    ConvGenerator g(N);
    g.x[i] = RationalFn(LaurentPoly::one());
    g.x[abs(i)] = RationalFn(LaurentPoly::one());
    code.initial.add_gen(g);
  }
  for (std::size_t t = 0; t < m - c; ++t)
    code.initial.add_gen(detail::unit_row(N, abs(c + t), false));
  code.initial_info.k = code.k;
  code.initial_info.m = ConvCheckMatrix(N);
  for (std::size_t q = 0; q < code.k; ++q)
    code.initial_info.m.add_gen(detail::unit_row(N, abs(m + q), true));
  for (std::size_t q = 0; q < code.k; ++q)
    code.initial_info.m.add_gen(detail::unit_row(N, abs(m + q), false));

  // Encoder: append L to the non-unit ebit X rows, multiply their columns by
  // the invariant factors, then the reduction in reverse.
  std::vector<ConvGate> enc;
  for (std::size_t i = 0; i < g2; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!L[i][j].is_zero())
        enc.push_back(ConvGate::cnot(abs(s_mono + i), abs(m + j), L[i][j]));
  for (std::size_t i = s_mono; i < c; ++i) detail::scalar_stage(enc, abs(i), factors[i]);
  detail::append_gates(enc, reversed_gates(rec.gates));
  code.encoder = enc;

  if (code.klass == EAQConvCode::FINITE_DEPTH) {
    code.decoder = reversed_gates(code.encoder);
  } else {
    std::vector<ConvGate> dec = rec.gates;
    for (std::size_t i = 0; i < g2; ++i)
      for (std::size_t j = 0; j <= i; ++j)
        if (!L[i][j].is_zero()) dec.push_back(ConvGate::cnot(s_mono + i, abs(m + j), L[i][j]));
    code.decoder = dec;
  }
  code.row_ops = rec.row_ops;
  return code;
}

}  // namespace eaqecc

#endif  // EAQECC_CONSTRUCT_HPP

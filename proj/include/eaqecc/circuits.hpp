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

#ifndef EAQECC_CIRCUITS_HPP
#define EAQECC_CIRCUITS_HPP

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eaqecc/block_ea.hpp"
#include "eaqecc/conv.hpp"
#include "eaqecc/rational.hpp"

namespace eaqecc {

/*
 * One gate of the shift-invariant Clifford group acting on a qubit stream.
 * Qubit indices are 0-based positions within a frame (serialized 1-based).
 * All gates except RCNOT are finite-depth; RCNOT multiplies a column by a
 * rational polynomial 1/f(D) and requires an infinite-depth circuit.
 */
struct ConvGate {
  enum Kind { CNOT, H, P, CPHASE, CPHASE_SELF, SWAP, DELAY, RCNOT };
  Kind kind = H;
  std::size_t i = 0, j = 0;
  LaurentPoly f;   // CNOT / CPHASE coefficient
  long k = 0;      // CPHASE_SELF exponent or DELAY amount
  RationalFn r;    // RCNOT rational 1/f

  static ConvGate cnot(std::size_t i, std::size_t j, const LaurentPoly& f) {
    ConvGate g;
    g.kind = CNOT;
    g.i = i;
    g.j = j;
    g.f = f;
    return g;
  }
  static ConvGate h(std::size_t i) {
    ConvGate g;
    g.kind = H;
    g.i = i;
    return g;
  }
  static ConvGate p(std::size_t i) {
    ConvGate g;
    g.kind = P;
    g.i = i;
    return g;
  }
  static ConvGate cphase(std::size_t i, std::size_t j, const LaurentPoly& f) {
    ConvGate g;
    g.kind = CPHASE;
    g.i = i;
    g.j = j;
    g.f = f;
    return g;
  }
  static ConvGate cphase_self(std::size_t i, long k) {
    ConvGate g;
    g.kind = CPHASE_SELF;
    g.i = i;
    g.k = k;
    return g;
  }
  static ConvGate swap(std::size_t i, std::size_t j) {
    ConvGate g;
    g.kind = SWAP;
    g.i = i;
    g.j = j;
    return g;
  }
  static ConvGate delay(std::size_t i, long l) {
    ConvGate g;
    g.kind = DELAY;
    g.i = i;
    g.k = l;
    return g;
  }
  static ConvGate rcnot(std::size_t i, const RationalFn& r) {
    ConvGate g;
    g.kind = RCNOT;
    g.i = i;
    g.r = r;
    return g;
  }

  // Every finite-depth gate is an involution over GF(2) except DELAY.
  ConvGate inverted() const {
    ConvGate g = *this;
    if (kind == DELAY) g.k = -k;
    return g;
  }

  bool operator==(const ConvGate& o) const {
    return kind == o.kind && i == o.i && j == o.j && f == o.f && k == o.k && r == o.r;
  }

  std::string str() const {
    std::ostringstream s;
    switch (kind) {
      case CNOT: s << "CNOT " << i + 1 << " " << j + 1 << " " << f.str(); break;
      case H: s << "H " << i + 1; break;
      case P: s << "P " << i + 1; break;
      case CPHASE: s << "CPHASE " << i + 1 << " " << j + 1 << " " << f.str(); break;
      case CPHASE_SELF: s << "CPHASESELF " << i + 1 << " " << k; break;
      case SWAP: s << "SWAP " << i + 1 << " " << j + 1; break;
      case DELAY: s << "DELAY " << i + 1 << " " << k; break;
      case RCNOT:
        s << "RCNOT " << i + 1 << " (" << r.num().str() << ")/(" << r.den().str() << ")";
        break;
    }
    return s.str();
  }

  static ConvGate parse(const std::string& text) {
    std::istringstream s(text);
    std::string word;
    if (!(s >> word)) throw std::invalid_argument("ConvGate: empty text");
    auto idx = [&]() {
      long v;
      if (!(s >> v) || v < 1) throw std::invalid_argument("ConvGate: bad index: " + text);
      return static_cast<std::size_t>(v - 1);
    };
    auto num = [&]() {
      long v;
      if (!(s >> v)) throw std::invalid_argument("ConvGate: bad integer: " + text);
      return v;
    };
    auto poly = [&]() {
      std::string p;
      if (!(s >> p)) throw std::invalid_argument("ConvGate: missing polynomial: " + text);
      return LaurentPoly::parse(p);
    };
    if (word == "CNOT") {
      std::size_t a = idx(), b = idx();
      return cnot(a, b, poly());
    }
    if (word == "H") return h(idx());
    if (word == "P") return p(idx());
    if (word == "CPHASE") {
      std::size_t a = idx(), b = idx();
      return cphase(a, b, poly());
    }
    if (word == "CPHASESELF") {
      std::size_t a = idx();
      return cphase_self(a, num());
    }
    if (word == "SWAP") {
      std::size_t a = idx(), b = idx();
      return swap(a, b);
    }
    if (word == "DELAY") {
      std::size_t a = idx();
      return delay(a, num());
    }
    if (word == "RCNOT") {
      std::size_t a = idx();
      std::string frac;
      if (!(s >> frac)) throw std::invalid_argument("ConvGate: missing rational: " + text);
      return rcnot(a, RationalFn::parse(frac));
    }
    throw std::invalid_argument("ConvGate: unknown gate: " + text);
  }
};

/*
 * Column action of one gate on a check matrix (every generator row at once).
 * CNOT(i,j,f):      X_j += f(D) X_i,  Z_i += f(D^-1) Z_j
 * H(i):             swap Z_i and X_i
 * P(i):             Z_i += X_i
 * CPHASE(i,j,f):    Z_j += f(D) X_i,  Z_i += f(D^-1) X_j
 * CPHASE_SELF(i,k): Z_i += (D^k + D^-k) X_i
 * SWAP(i,j):        exchange columns i and j on both sides
 * DELAY(i,l):       multiply both columns i by D^l
 * RCNOT(i,1/f):     X_i *= 1/f(D),  Z_i *= f(D^-1)
 * Shifted symplectic products of the rows are invariant under all of them.
 */
inline void apply_conv_gate_inplace(ConvCheckMatrix& m, const ConvGate& g) {
  const std::size_t n = m.n;
  auto check = [&](std::size_t q) {
    if (q >= n) throw std::invalid_argument("apply_conv_gate: index out of range");
  };
  check(g.i);
  switch (g.kind) {
    case ConvGate::CNOT: {
      check(g.j);
      if (g.i == g.j) throw std::invalid_argument("apply_conv_gate: CNOT on a single qubit");
      if (g.f.is_zero()) throw std::invalid_argument("apply_conv_gate: zero CNOT coefficient");
      RationalFn fwd{g.f}, rev{g.f.reciprocal()};
      for (auto& row : m.gens) {
        row.x[g.j] = row.x[g.j] + fwd * row.x[g.i];
        row.z[g.i] = row.z[g.i] + rev * row.z[g.j];
      }
      break;
    }
    case ConvGate::H:
      for (auto& row : m.gens) std::swap(row.z[g.i], row.x[g.i]);
      break;
    case ConvGate::P:
      for (auto& row : m.gens) row.z[g.i] = row.z[g.i] + row.x[g.i];
      break;
    case ConvGate::CPHASE: {
      check(g.j);
      if (g.i == g.j) throw std::invalid_argument("apply_conv_gate: CPHASE on a single qubit");
      if (g.f.is_zero()) throw std::invalid_argument("apply_conv_gate: zero CPHASE coefficient");
      RationalFn fwd{g.f}, rev{g.f.reciprocal()};
      for (auto& row : m.gens) {
        row.z[g.j] = row.z[g.j] + fwd * row.x[g.i];
        row.z[g.i] = row.z[g.i] + rev * row.x[g.j];
      }
      break;
    }
    case ConvGate::CPHASE_SELF: {
      RationalFn f{LaurentPoly::monomial(g.k) + LaurentPoly::monomial(-g.k)};
      for (auto& row : m.gens) row.z[g.i] = row.z[g.i] + f * row.x[g.i];
      break;
    }
    case ConvGate::SWAP:
      check(g.j);
      if (g.i == g.j) throw std::invalid_argument("apply_conv_gate: SWAP on a single qubit");
      for (auto& row : m.gens) {
        std::swap(row.z[g.i], row.z[g.j]);
        std::swap(row.x[g.i], row.x[g.j]);
      }
      break;
    case ConvGate::DELAY: {
      RationalFn d{LaurentPoly::monomial(g.k)};
      for (auto& row : m.gens) {
        row.z[g.i] = row.z[g.i] * d;
        row.x[g.i] = row.x[g.i] * d;
      }
      break;
    }
    case ConvGate::RCNOT: {
      if (g.r.is_zero()) throw std::invalid_argument("apply_conv_gate: zero RCNOT rational");
      if (!g.r.num().is_one())
        throw std::invalid_argument("apply_conv_gate: RCNOT numerator must be 1");
      RationalFn inv_f = g.r;                       // 1/f(D)
      RationalFn f_rev{g.r.den().reciprocal()};     // f(D^-1)
      for (auto& row : m.gens) {
        row.x[g.i] = row.x[g.i] * inv_f;
        row.z[g.i] = row.z[g.i] * f_rev;
      }
      break;
    }
  }
}

inline ConvCheckMatrix apply_conv_gate(const ConvCheckMatrix& m, const ConvGate& g) {
  ConvCheckMatrix out = m;
  apply_conv_gate_inplace(out, g);
  return out;
}

inline ConvCheckMatrix replay_gates(const ConvCheckMatrix& m, const std::vector<ConvGate>& gs) {
  ConvCheckMatrix out = m;
  for (const auto& g : gs) apply_conv_gate_inplace(out, g);
  return out;
}

// The same gate list inverted and reversed; undoes replay_gates exactly.
inline std::vector<ConvGate> reversed_gates(const std::vector<ConvGate>& gs) {
  std::vector<ConvGate> out;
  for (auto it = gs.rbegin(); it != gs.rend(); ++it) out.push_back(it->inverted());
  return out;
}

/*
 * Sliding-window realization of the infinite-depth column operation 1/f(D):
 * a window of N = deg(f) - del(f) + 1 qubits slides one qubit per frame, and
 * the same CNOT pattern fires in every window position.  The pattern is the
 * set of CNOTs that carries the single-frame Z generator on the last window
 * qubit onto the qubits selected by the reversed polynomial, so that the
 * induced X-side recursion performs the long division of 1/f(D).  The first
 * deg(f) - del(f) frames prime the window with scratch qubits.
 */
struct InfiniteDepthRealization {
  std::size_t scratch_frames = 0;
  std::size_t window = 1;  // N
  std::vector<BlockGate> per_frame_gates;
};

inline InfiniteDepthRealization realize_infinite_depth(const RationalFn& r) {
  if (r.is_zero()) throw std::invalid_argument("realize_infinite_depth: zero rational");
  if (!r.num().is_one())
    throw std::invalid_argument("realize_infinite_depth: expected a 1/f(D) rational");
  const LaurentPoly f = r.den();  // canonical: delay-free with constant term 1
  InfiniteDepthRealization out;
  const long width = f.is_zero() ? 0 : f.deg() - f.del();
  out.window = static_cast<std::size_t>(width) + 1;
  out.scratch_frames = static_cast<std::size_t>(width);
  const std::size_t N = out.window;
  for (long e : f.exponents()) {
    if (e == f.del()) continue;  // the window qubit itself
    // Feedback tap at distance e: CNOT from window qubit N-e to qubit N.
    out.per_frame_gates.push_back(
        BlockGate::cnot(N - 1 - static_cast<std::size_t>(e - f.del()), N - 1));
  }
  return out;
}

}  // namespace eaqecc

#endif  // EAQECC_CIRCUITS_HPP

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

#ifndef EAQECC_GRANDFATHER_HPP
#define EAQECC_GRANDFATHER_HPP

#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "eaqecc/circuits.hpp"
#include "eaqecc/conv.hpp"

namespace eaqecc {

/*
 * A hybrid classical-quantum convolutional code: per frame it encodes k
 * information qubits and l classical bits using c ebits, r gauge qubits and
 * a = n-k-l-c-r ancillas.  Alice's frame layout is ebit halves, ancillas,
 * gauge qubits, classical bits, information qubits, in that order; the
 * measured stabilizer S_full additionally carries Bob's c ebit halves as its
 * first columns.
 */
struct GrandfatherParams {
  std::size_t n = 0, k = 0, l = 0, r = 0, c = 0;
};

struct GrandfatherCode {
  std::size_t n = 0, k = 0, l = 0, r = 0, c = 0, a = 0;
  ConvCheckMatrix S_E, S_I, S_G, S_C;  // encoded subgroups over Alice's n columns
  ConvCheckMatrix S_full;              // measured stabilizer over n+c columns
  std::vector<ConvGate> encoder;       // over Alice's n columns, 0-based
};

enum class ErrorClass { ACTIVE, PASSIVE, UNDETECTED_LOGICAL };

struct SyndromeTable {
  std::size_t window = 0;
  std::size_t generators = 0;
  std::map<std::string, std::vector<int>> entries;  // error label -> bits
};

namespace detail {

inline ConvGenerator grand_unit(std::size_t n, std::size_t col, bool zside) {
  ConvGenerator g(n);
  (zside ? g.z : g.x)[col] = RationalFn(LaurentPoly::one());
  return g;
}

inline ConvGenerator embed_alice(const ConvGenerator& g, std::size_t c) {
  ConvGenerator e(g.n + c);
  for (std::size_t q = 0; q < g.n; ++q) {
    e.z[c + q] = g.z[q];
    e.x[c + q] = g.x[q];
  }
  return e;
}

inline ConvGate shift_gate(ConvGate g, std::size_t off) {
  g.i += off;
  if (g.kind == ConvGate::CNOT || g.kind == ConvGate::CPHASE || g.kind == ConvGate::SWAP)
    g.j += off;
  return g;
}

}  // namespace detail

inline GrandfatherCode build_grandfather(const GrandfatherParams& p,
                                         const std::vector<ConvGate>& encoder) {
  if (p.k + p.l + p.r + p.c > p.n)
    throw std::invalid_argument("build_grandfather: parameters exceed the frame size");
  GrandfatherCode code;
  code.n = p.n;
  code.k = p.k;
  code.l = p.l;
  code.r = p.r;
  code.c = p.c;
  code.a = p.n - p.k - p.l - p.c - p.r;
  code.encoder = encoder;
  for (const auto& g : encoder)
    if (g.kind == ConvGate::RCNOT)
      throw std::invalid_argument("build_grandfather: encoder must be finite-depth");

  const std::size_t n = p.n, c = p.c, a = code.a;
  const std::size_t gauge0 = c + a, cls0 = gauge0 + p.r, info0 = cls0 + p.l;

  // Unencoded subgroups over Alice's columns, plus the logical rows of the
  // information qubits for the relation check.
  ConvCheckMatrix tracked(n);
  ConvCheckMatrix e0(n), i0(n), g0(n), c0(n);
  for (std::size_t i = 0; i < c; ++i) {
    e0.add_gen(detail::grand_unit(n, i, true));
    e0.add_gen(detail::grand_unit(n, i, false));
  }
  for (std::size_t t = 0; t < a; ++t) i0.add_gen(detail::grand_unit(n, c + t, true));
  for (std::size_t t = 0; t < p.r; ++t) g0.add_gen(detail::grand_unit(n, gauge0 + t, true));
  for (std::size_t t = 0; t < p.r; ++t) g0.add_gen(detail::grand_unit(n, gauge0 + t, false));
  for (std::size_t t = 0; t < p.l; ++t) c0.add_gen(detail::grand_unit(n, cls0 + t, true));
  for (const auto& m : {e0, i0, g0, c0})
    for (const auto& row : m.gens) tracked.add_gen(row);
  for (std::size_t q = 0; q < p.k; ++q) tracked.add_gen(detail::grand_unit(n, info0 + q, true));
  for (std::size_t q = 0; q < p.k; ++q) tracked.add_gen(detail::grand_unit(n, info0 + q, false));

  const ShiftedOmega before = shifted_omega(tracked);
  const ConvCheckMatrix tracked_enc = replay_gates(tracked, encoder);
  const ShiftedOmega after = shifted_omega(tracked_enc);
  for (std::size_t i = 0; i < before.rows(); ++i)
    for (std::size_t j = 0; j < before.cols(); ++j)
      if (!(before.at(i, j) == after.at(i, j)))
        throw std::domain_error("build_grandfather: encoder breaks the commutation relations");

  code.S_E = replay_gates(e0, encoder);
  code.S_I = replay_gates(i0, encoder);
  code.S_G = replay_gates(g0, encoder);
  code.S_C = replay_gates(c0, encoder);

  // Measured stabilizer: ebit pairs spanning Bob's columns, then ancillas.
  ConvCheckMatrix full(n + c);
  for (std::size_t i = 0; i < c; ++i) {
    ConvGenerator gz(n + c);
    gz.z[i] = RationalFn(LaurentPoly::one());
    gz.z[c + i] = RationalFn(LaurentPoly::one());
    full.add_gen(gz);
  }
  for (std::size_t i = 0; i < c; ++i) {
    ConvGenerator gx(n + c);
    gx.x[i] = RationalFn(LaurentPoly::one());
    gx.x[c + i] = RationalFn(LaurentPoly::one());
    full.add_gen(gx);
  }
  for (std::size_t t = 0; t < a; ++t)
    full.add_gen(detail::grand_unit(n + c, c + c + t, true));
  std::vector<ConvGate> shifted;
  for (const auto& g : encoder) shifted.push_back(detail::shift_gate(g, c));
  code.S_full = replay_gates(full, shifted);
  return code;
}

namespace detail {

// Coefficient of D^{-t} of the shifted product between an error acting in
// frame 0 and a measured generator: 1 iff the error anticommutes with the
// generator's part delayed by t frames.
inline int syndrome_bit(const RationalFn& product, long t) {
  if (product.is_zero()) return 0;
  const LaurentPoly p = product.to_poly();
  for (long e : p.exponents())
    if (e == -t) return 1;
  return 0;
}

inline void grand_error_patterns(std::size_t n, std::size_t weight, std::size_t first,
                                 const std::string& label, const ConvGenerator& err,
                                 const std::function<void(const std::string&, const ConvGenerator&)>& emit) {
  if (!label.empty()) emit(label, err);
  if (weight == 0) return;
  static const char* paulis[3] = {"X", "Y", "Z"};
  for (std::size_t q = first; q < n; ++q)
    for (int pk = 0; pk < 3; ++pk) {
      ConvGenerator next = err;
      if (pk != 0) next.z[q] = RationalFn(LaurentPoly::one());
      if (pk != 2) next.x[q] = RationalFn(LaurentPoly::one());
      grand_error_patterns(n, weight - 1, q + 1, label + paulis[pk] + std::to_string(q + 1),
                           next, emit);
    }
}

}  // namespace detail

inline std::vector<int> grand_syndrome(const GrandfatherCode& code, const ConvGenerator& e,
                                       std::size_t window) {
  if (e.n != code.n) throw std::invalid_argument("grand_syndrome: frame size mismatch");
  const ConvGenerator err = detail::embed_alice(e, code.c);
  std::vector<int> bits;
  for (const auto& g : code.S_full.gens) {
    const RationalFn p = shifted_product(err, g);
    for (std::size_t t = 0; t < window; ++t)
      bits.push_back(detail::syndrome_bit(p, static_cast<long>(t)));
  }
  return bits;
}

inline SyndromeTable syndrome_table(const GrandfatherCode& code, std::size_t weight,
                                    std::size_t window) {
  if (weight == 0) throw std::invalid_argument("syndrome_table: weight must be positive");
  SyndromeTable table;
  table.window = window;
  table.generators = code.S_full.gens.size();
  detail::grand_error_patterns(
      code.n, weight, 0, "", ConvGenerator(code.n),
      [&](const std::string& label, const ConvGenerator& err) {
        table.entries[label] = grand_syndrome(code, err, window);
      });
  return table;
}

inline ErrorClass classify_error(const GrandfatherCode& code, const ConvGenerator& e) {
  if (e.n != code.n) throw std::invalid_argument("classify_error: frame size mismatch");
  const ConvGenerator err = detail::embed_alice(e, code.c);
  for (const auto& g : code.S_full.gens)
    if (!shifted_product(err, g).is_zero()) return ErrorClass::ACTIVE;

  ConvCheckMatrix passive(code.n);
  for (const auto& m : {code.S_I, code.S_G, code.S_C})
    for (const auto& row : m.gens) passive.add_gen(row);
  RationalMatrix rows(passive.gens.size(), 2 * code.n);
  for (std::size_t i = 0; i < passive.gens.size(); ++i)
    for (std::size_t q = 0; q < code.n; ++q) {
      rows.at(i, q) = passive.gens[i].z[q];
      rows.at(i, code.n + q) = passive.gens[i].x[q];
    }
  std::vector<RationalFn> v(2 * code.n);
  for (std::size_t q = 0; q < code.n; ++q) {
    v[q] = e.z[q];
    v[code.n + q] = e.x[q];
  }
  if (rational_in_row_space(rows, v)) return ErrorClass::PASSIVE;
  return ErrorClass::UNDETECTED_LOGICAL;
}

}  // namespace eaqecc

#endif  // EAQECC_GRANDFATHER_HPP

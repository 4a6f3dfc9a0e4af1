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

#ifndef EAQECC_DISTILL_HPP
#define EAQECC_DISTILL_HPP

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "eaqecc/conv.hpp"

namespace eaqecc {

/*
 * Entanglement-distillation constructions: a set of (possibly noncommuting)
 * Pauli generators chosen for error correction is made into a commuting
 * stabilizer by appending noiseless-ebit columns whose entries cancel the
 * shifted symplectic products.
 */
struct DistillConstruction {
  ConvCheckMatrix stabilizer;   // over n + aug_cols columns, the last aug_cols noiseless
  std::size_t n = 0;            // noisy ebits per frame
  std::size_t aug_cols = 0;     // appended noiseless columns per frame
  std::size_t catalytic_ebits = 0;  // (n + aug_cols) * constraint length
};

// Terms of p with nonnegative exponent (exponent 0 included).
inline LaurentPoly positive_part(const LaurentPoly& p) {
  LaurentPoly out;
  for (long e : p.exponents())
    if (e >= 0) out = out + LaurentPoly::monomial(e);
  return out;
}

namespace detail {

// Constraint length: after shifting each generator delay-free, the largest
// degree appearing among its entries, maximized over generators.
inline std::size_t constraint_length(const ConvCheckMatrix& h) {
  long nu = 0;
  for (const auto& g : h.gens) {
    long lo = 0, hi = 0;
    bool any = false;
    for (const auto& side : {g.z, g.x})
      for (const auto& e : side) {
        if (e.is_zero()) continue;
        const LaurentPoly p = e.to_poly();
        lo = any ? std::min(lo, p.del()) : p.del();
        hi = any ? std::max(hi, p.deg()) : p.deg();
        any = true;
      }
    if (any) nu = std::max(nu, hi - lo);
  }
  return static_cast<std::size_t>(nu);
}

inline void require_polynomial(const ConvGenerator& g, const char* who) {
  if (!g.is_polynomial()) throw std::invalid_argument(std::string(who) + ": entries must be polynomial");
}

}  // namespace detail

/*
 * Append one qubit per frame with Z-entry (u (.) u)(D)^+ and X-entry 1.  The
 * appended pair reproduces the generator's own commutation relations, so the
 * augmented generator commutes with all of its shifts.
 */
inline ConvGenerator augment_single(const ConvGenerator& u) {
  detail::require_polynomial(u, "augment_single");
  ConvGenerator out(u.n + 1);
  for (std::size_t q = 0; q < u.n; ++q) {
    out.z[q] = u.z[q];
    out.x[q] = u.x[q];
  }
  out.z[u.n] = RationalFn(positive_part(shifted_product(u, u).to_poly()));
  out.x[u.n] = RationalFn(LaurentPoly::one());
  return out;
}

/*
 * Append m columns carrying the triangular matrix of cross products with an
 * identity X block: row i gains Z-entries (u_i (.) u_i)^+ on the diagonal and
 * (u_i (.) u_j)(D) for j > i (or j < i with lower_triangular), plus X-entry 1
 * at its own new column.
 */
inline DistillConstruction augment_multi(const ConvCheckMatrix& u, bool lower_triangular = false) {
  const std::size_t m = u.gens.size(), n = u.n;
  DistillConstruction out;
  out.n = n;
  out.aug_cols = m;
  out.stabilizer = ConvCheckMatrix(n + m);
  for (std::size_t i = 0; i < m; ++i) {
    detail::require_polynomial(u.gens[i], "augment_multi");
    ConvGenerator g(n + m);
    for (std::size_t q = 0; q < n; ++q) {
      g.z[q] = u.gens[i].z[q];
      g.x[q] = u.gens[i].x[q];
    }
    g.z[n + i] = RationalFn(positive_part(shifted_product(u.gens[i], u.gens[i]).to_poly()));
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      if (lower_triangular ? j < i : j > i)
        g.z[n + j] = shifted_product(u.gens[i], u.gens[j]);
    }
    g.x[n + i] = RationalFn(LaurentPoly::one());
    out.stabilizer.add_gen(g);
  }
  out.catalytic_ebits = (n + m) * detail::constraint_length(out.stabilizer);
  return out;
}

namespace detail {

inline bool pure_z(const ConvGenerator& g) {
  for (const auto& e : g.x)
    if (!e.is_zero()) return false;
  return true;
}

inline bool pure_x(const ConvGenerator& g) {
  for (const auto& e : g.z)
    if (!e.is_zero()) return false;
  return true;
}

inline void scale_gen(ConvGenerator& g, const RationalFn& f) {
  for (auto& e : g.z) e *= f;
  for (auto& e : g.x) e *= f;
}

inline void add_scaled(ConvGenerator& g, const RationalFn& f, const ConvGenerator& o) {
  for (std::size_t q = 0; q < g.n; ++q) {
    g.z[q] += f * o.z[q];
    g.x[q] += f * o.x[q];
  }
}

// Divide a generator by the greatest common factor of its nonzero entries.
inline void divide_by_gcf(ConvGenerator& g) {
  LaurentPoly gcf;
  bool any = false;
  for (const auto& side : {g.z, g.x})
    for (const auto& e : side) {
      if (e.is_zero()) continue;
      gcf = any ? poly_gcd(gcf, e.to_poly()) : e.to_poly().delay_free();
      any = true;
    }
  if (!any || gcf.is_one()) return;
  scale_gen(g, RationalFn(LaurentPoly::one(), gcf));
}

}  // namespace detail

/*
 * CSS-like construction: the input stacks the parity checks of two classical
 * binary codes, pure-Z rows first, pure-X rows after.  A pairing
 * Gram-Schmidt procedure isolates c noncommuting pairs (u_i, v_i) with
 * (u_i (.) v_j)(D) = f_i(D) delta_ij, after which only c noiseless columns
 * are needed: f_i(D) on the Z side of u_i, an identity X block on the v_i.
 */
inline DistillConstruction css_distill_augment(const ConvCheckMatrix& w_in) {
  const std::size_t m = w_in.gens.size(), n = w_in.n;
  std::size_t p = 0;
  while (p < m && detail::pure_z(w_in.gens[p])) ++p;
  for (std::size_t i = p; i < m; ++i)
    if (!detail::pure_x(w_in.gens[i]))
      throw std::invalid_argument("css_distill_augment: rows must be pure-Z then pure-X");
  for (const auto& g : w_in.gens) detail::require_polynomial(g, "css_distill_augment");

  std::vector<ConvGenerator> w = w_in.gens;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (u index, v index)
  std::vector<std::size_t> singles;
  std::size_t c = 0, l = 0;
  while (2 * c + l < m) {
    const std::size_t h = 2 * c + l;
    std::size_t j = h + 1;
    while (j < m && shifted_product(w[h], w[j]).is_zero()) ++j;
    if (j == m) {
      singles.push_back(h);
      ++l;
      continue;
    }
    std::swap(w[h + 1], w[j]);
    for (std::size_t r = h + 2; r < m; ++r) {
      if (!detail::pure_z(w[r]) && !detail::pure_x(w[r])) continue;
      // Zero (w_r (.) t) by adding the complementary pair member g: scale
      // w_r by (g (.) t)(D) and add (w_r (.) t)(D) copies of g; over GF(2)
      // the two contributions cancel exactly.
      if (detail::pure_z(w[r])) {
        const RationalFn s = shifted_product(w[h], w[h + 1]);
        const RationalFn coeff = shifted_product(w[r], w[h + 1]);
        detail::scale_gen(w[r], s);
        detail::add_scaled(w[r], coeff, w[h]);
      } else {
        const RationalFn s = shifted_product(w[h + 1], w[h]);
        const RationalFn coeff = shifted_product(w[r], w[h]);
        detail::scale_gen(w[r], s);
        detail::add_scaled(w[r], coeff, w[h + 1]);
      }
      detail::divide_by_gcf(w[r]);
    }
    pairs.emplace_back(h, h + 1);
    ++c;
  }

  // Reorder as u_1..u_c, v_1..v_c, then the isotropic rows, and append the
  // c-column augmentation.
  DistillConstruction out;
  out.n = n;
  out.aug_cols = c;
  out.stabilizer = ConvCheckMatrix(n + c);
  auto embed = [&](const ConvGenerator& g) {
    ConvGenerator e(n + c);
    for (std::size_t q = 0; q < n; ++q) {
      e.z[q] = g.z[q];
      e.x[q] = g.x[q];
    }
    return e;
  };
  for (std::size_t i = 0; i < c; ++i) {
    ConvGenerator g = embed(w[pairs[i].first]);
    g.z[n + i] = shifted_product(w[pairs[i].first], w[pairs[i].second]);
    out.stabilizer.add_gen(g);
  }
  for (std::size_t i = 0; i < c; ++i) {
    ConvGenerator g = embed(w[pairs[i].second]);
    g.x[n + i] = RationalFn(LaurentPoly::one());
    out.stabilizer.add_gen(g);
  }
  for (std::size_t s : singles) out.stabilizer.add_gen(embed(w[s]));
  out.catalytic_ebits = (n + c) * detail::constraint_length(out.stabilizer);
  return out;
}

/*
 * Net yield per frame: the protocol measures one generator per stabilizer row
 * over n noisy ebits, producing n ebits and consuming the noiseless ones, for
 * (n - #generators)/n; reduced to lowest terms.
 */
inline std::pair<long, long> protocol_yield(const DistillConstruction& d) {
  const long num = static_cast<long>(d.n) - static_cast<long>(d.stabilizer.gens.size());
  const long den = static_cast<long>(d.n);
  if (den == 0) throw std::invalid_argument("protocol_yield: empty frame");
  const long g = std::gcd(num < 0 ? -num : num, den);
  return {g ? num / g : num, g ? den / g : den};
}

}  // namespace eaqecc

#endif  // EAQECC_DISTILL_HPP

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

#ifndef EAQECC_SIM_HPP
#define EAQECC_SIM_HPP

#include <cstdint>
#include <cstddef>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "eaqecc/grandfather.hpp"

namespace eaqecc {

/*
 * Pauli-frame Monte-Carlo machinery: i.i.d. Pauli channel sampling per qubit
 * per frame, windowed syndrome extraction, and table-lookup correction with
 * residual classification.
 */
struct PauliChannel {
  double p_x = 0, p_y = 0, p_z = 0;

  static PauliChannel depolarizing(double p) { return PauliChannel{p / 3, p / 3, p / 3}; }

  void validate() const {
    if (p_x < 0 || p_y < 0 || p_z < 0 || p_x + p_y + p_z > 1)
      throw std::invalid_argument("PauliChannel: probabilities must be >= 0 and sum <= 1");
  }
};

struct TrialReport {
  std::size_t trials = 0;
  std::size_t frames = 0;
  double raw_error_rate = 0;
  double residual_logical_rate = 0;
  double syndrome_miss_rate = 0;
  std::uint64_t seed = 0;
};

// Sample an i.i.d. Pauli error stream: exponent f marks frame f.  Columns
// listed in noiseless never receive errors.
inline ConvGenerator sample_errors(const PauliChannel& ch, std::size_t qubits,
                                   std::size_t frames, std::uint64_t seed,
                                   const std::vector<std::size_t>& noiseless = {}) {
  ch.validate();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  ConvGenerator e(qubits);
  std::vector<bool> quiet(qubits, false);
  for (std::size_t q : noiseless) quiet.at(q) = true;
  std::vector<std::set<long>> zexp(qubits), xexp(qubits);
  for (std::size_t f = 0; f < frames; ++f)
    for (std::size_t q = 0; q < qubits; ++q) {
      const double u = unif(rng);
      if (quiet[q] || u >= ch.p_x + ch.p_y + ch.p_z) continue;
      if (u < ch.p_x + ch.p_y) xexp[q].insert(static_cast<long>(f));
      if (u >= ch.p_x) zexp[q].insert(static_cast<long>(f));
    }
  for (std::size_t q = 0; q < qubits; ++q) {
    e.z[q] = RationalFn(LaurentPoly::from_exponents(std::move(zexp[q])));
    e.x[q] = RationalFn(LaurentPoly::from_exponents(std::move(xexp[q])));
  }
  return e;
}

/*
 * Windowed syndrome bits: row f holds, for each measured generator g and
 * window slot t, the coefficient of D^(f-t) in the shifted product of the
 * error with g — the anticommutation bit of the frame-f measurement of g's
 * part delayed by t frames.  Linear in the error.
 */
inline std::vector<std::vector<int>> syndromes_of(const ConvCheckMatrix& measured,
                                                  const ConvGenerator& error,
                                                  std::size_t window, std::size_t frames = 0) {
  if (error.n != measured.n) throw std::invalid_argument("syndromes_of: frame size mismatch");
  if (frames == 0) {
    long hi = 0;
    for (const auto& side : {error.z, error.x})
      for (const auto& e : side)
        if (!e.is_zero()) hi = std::max(hi, e.to_poly().deg());
    frames = static_cast<std::size_t>(hi) + 1;
  }
  std::vector<std::vector<int>> rows(frames);
  std::vector<RationalFn> prods;
  for (const auto& g : measured.gens) prods.push_back(shifted_product(error, g));
  for (std::size_t f = 0; f < frames; ++f)
    for (const auto& p : prods)
      for (std::size_t t = 0; t < window; ++t)
        rows[f].push_back(detail::syndrome_bit(p, static_cast<long>(t) - static_cast<long>(f)));
  return rows;
}

/*
 * Everything a table decoder needs: the measured generators (over the same
 * columns the errors live on), the weight-1 window table with its inverse
 * map, the frame stride between decoded windows, and the row space of
 * harmless residuals.
 */
struct DecodeSetup {
  ConvCheckMatrix measured;
  SyndromeTable table;
  std::map<std::vector<int>, ConvGenerator> patterns;  // syndrome -> frame-0 error
  RationalMatrix passive;                              // 2n-wide harmless row space
  std::size_t stride = 2;
};

namespace detail {

inline RationalMatrix symplectic_rows(const std::vector<ConvGenerator>& gens, std::size_t n) {
  RationalMatrix m(gens.size(), 2 * n);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t q = 0; q < n; ++q) {
      m.at(i, q) = gens[i].z[q];
      m.at(i, n + q) = gens[i].x[q];
    }
  return m;
}

inline SyndromeTable table_for(const ConvCheckMatrix& measured, std::size_t weight,
                               std::size_t window) {
  SyndromeTable table;
  table.window = window;
  table.generators = measured.gens.size();
  grand_error_patterns(measured.n, weight, 0, "", ConvGenerator(measured.n),
                       [&](const std::string& label, const ConvGenerator& err) {
                         std::vector<int> bits;
                         for (const auto& g : measured.gens) {
                           const RationalFn p = shifted_product(err, g);
                           for (std::size_t t = 0; t < window; ++t)
                             bits.push_back(syndrome_bit(p, static_cast<long>(t)));
                         }
                         table.entries[label] = bits;
                       });
  return table;
}

inline ConvGenerator pattern_of(std::size_t n, const std::string& label) {
  ConvGenerator g(n);
  std::size_t i = 0;
  while (i < label.size()) {
    const char p = label[i++];
    std::size_t q = 0;
    while (i < label.size() && isdigit(static_cast<unsigned char>(label[i])))
      q = q * 10 + static_cast<std::size_t>(label[i++] - '0');
    --q;  // labels are 1-based
    if (p != 'X') g.z[q] += RationalFn(LaurentPoly::one());
    if (p != 'Z') g.x[q] += RationalFn(LaurentPoly::one());
  }
  return g;
}

inline void fill_patterns(DecodeSetup& s) {
  for (const auto& [label, bits] : s.table.entries)
    s.patterns[bits] = pattern_of(s.measured.n, label);
}

}  // namespace detail

// Decoder for a hybrid code: measured generators restricted to the sender's
// columns; residuals in <S_I, S_G, S_C> are harmless.
inline DecodeSetup decode_setup(const GrandfatherCode& code, std::size_t window = 2,
                                std::size_t stride = 2, std::size_t weight = 1) {
  DecodeSetup s;
  s.measured = ConvCheckMatrix(code.n);
  for (const auto& g : code.S_full.gens) {
    ConvGenerator a(code.n);
    for (std::size_t q = 0; q < code.n; ++q) {
      a.z[q] = g.z[code.c + q];
      a.x[q] = g.x[code.c + q];
    }
    s.measured.add_gen(a);
  }
  s.table = detail::table_for(s.measured, weight, window);
  s.stride = stride;
  std::vector<ConvGenerator> harmless;
  for (const auto& m : {code.S_I, code.S_G, code.S_C})
    for (const auto& g : m.gens) harmless.push_back(g);
  s.passive = detail::symplectic_rows(harmless, code.n);
  detail::fill_patterns(s);
  return s;
}

// Decoder for a plain convolutional stabilizer: residuals inside the
// stabilizer's own row space are harmless.
inline DecodeSetup decode_setup(const ConvCheckMatrix& stabilizer, std::size_t window = 2,
                                std::size_t stride = 2, std::size_t weight = 1) {
  DecodeSetup s;
  s.measured = stabilizer;
  s.table = detail::table_for(stabilizer, weight, window);
  s.stride = stride;
  s.passive = detail::symplectic_rows(stabilizer.gens, stabilizer.n);
  detail::fill_patterns(s);
  return s;
}

struct DecodeOutcome {
  ConvGenerator residual;
  bool success = false;        // residual lies in the harmless row space
  std::size_t misses = 0;      // nonzero windows with no table match
  std::size_t corrections = 0;
};

// Frame-by-frame table decode: at every stride-th frame, look the window bits
// of the current residual up in the table and subtract the matched pattern.
inline DecodeOutcome table_decode(const DecodeSetup& s, const ConvGenerator& error,
                                  std::size_t frames) {
  DecodeOutcome out;
  out.residual = error;
  const std::size_t gens = s.measured.gens.size();
  for (std::size_t f = 0; f < frames; f += s.stride) {
    std::vector<int> bits;
    bool nonzero = false;
    for (const auto& g : s.measured.gens) {
      const RationalFn p = shifted_product(out.residual, g);
      for (std::size_t t = 0; t < s.table.window; ++t) {
        bits.push_back(detail::syndrome_bit(p, static_cast<long>(t) - static_cast<long>(f)));
        nonzero = nonzero || bits.back();
      }
    }
    (void)gens;
    if (!nonzero) continue;
    const auto it = s.patterns.find(bits);
    if (it == s.patterns.end()) {
      ++out.misses;
      continue;
    }
    ++out.corrections;
    const RationalFn shift(LaurentPoly::monomial(static_cast<long>(f)));
    for (std::size_t q = 0; q < out.residual.n; ++q) {
      out.residual.z[q] += shift * it->second.z[q];
      out.residual.x[q] += shift * it->second.x[q];
    }
  }
  std::vector<RationalFn> v(2 * out.residual.n);
  for (std::size_t q = 0; q < out.residual.n; ++q) {
    v[q] = out.residual.z[q];
    v[out.residual.n + q] = out.residual.x[q];
  }
  out.success = rational_in_row_space(s.passive, v);
  return out;
}

// Every single-qubit error at every decoded frame must be recovered exactly;
// returns the number of placements with a nonzero residual.
inline std::size_t exhaustive_single_check(const DecodeSetup& s, std::size_t frames) {
  std::size_t failures = 0;
  for (std::size_t f = 0; f < frames; f += s.stride)
    for (const auto& [label, bits] : s.table.entries) {
      ConvGenerator e(s.measured.n);
      const ConvGenerator base = detail::pattern_of(s.measured.n, label);
      const RationalFn shift(LaurentPoly::monomial(static_cast<long>(f)));
      for (std::size_t q = 0; q < e.n; ++q) {
        e.z[q] = shift * base.z[q];
        e.x[q] = shift * base.x[q];
      }
      const DecodeOutcome out = table_decode(s, e, frames);
      bool zero = true;
      for (const auto& side : {out.residual.z, out.residual.x})
        for (const auto& entry : side) zero = zero && entry.is_zero();
      if (!zero) ++failures;
    }
  return failures;
}

inline TrialReport run_correction(const DecodeSetup& s, const PauliChannel& ch,
                                  std::size_t trials, std::size_t frames, std::uint64_t seed,
                                  const std::vector<std::size_t>& noiseless = {}) {
  ch.validate();
  TrialReport rep;
  rep.trials = trials;
  rep.frames = frames;
  rep.seed = seed;
  std::size_t erred_slots = 0, failures = 0, missed_trials = 0;
  std::size_t noisy_cols = s.measured.n - noiseless.size();
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = seed ^ (0x9e3779b97f4a7c15ULL * (t + 1));
    const ConvGenerator e = sample_errors(ch, s.measured.n, frames, trial_seed, noiseless);
    for (std::size_t q = 0; q < e.n; ++q)
      for (long f = 0; f < static_cast<long>(frames); ++f)
        if (detail::syndrome_bit(e.z[q], -f) || detail::syndrome_bit(e.x[q], -f)) ++erred_slots;
    const DecodeOutcome out = table_decode(s, e, frames);
    if (!out.success) ++failures;
    if (out.misses) ++missed_trials;
  }
  const double slots = static_cast<double>(trials * frames * (noisy_cols ? noisy_cols : 1));
  rep.raw_error_rate = static_cast<double>(erred_slots) / slots;
  rep.residual_logical_rate = trials ? static_cast<double>(failures) / trials : 0;
  rep.syndrome_miss_rate = trials ? static_cast<double>(missed_trials) / trials : 0;
  return rep;
}

}  // namespace eaqecc

#endif  // EAQECC_SIM_HPP

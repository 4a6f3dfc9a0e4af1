// Copyright 2026
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "eaqecc/circuits.hpp"
#include "eaqecc/construct.hpp"
#include "eaqecc/conv.hpp"
#include "eaqecc/distill.hpp"
#include "eaqecc/grandfather.hpp"
#include "eaqecc/sim.hpp"

namespace eaqecc {

inline constexpr int kFormatVersion = 1;

/* ------------------------------------------------------------------ */
/* Check-matrix text format                                           */
/*                                                                    */
/*   frame n=<n>                                                      */
/*   z1, z2, ..., zn | x1, x2, ..., xn                                */
/*   ...                                                              */
/*                                                                    */
/* Entries use the polynomial syntax ("1+D^2") or, for rational       */
/* entries, "(num)/(den)".  Blank lines and lines starting with '#'   */
/* are ignored.                                                       */
/* ------------------------------------------------------------------ */

inline std::string write_check_matrix(const ConvCheckMatrix& m) {
  std::ostringstream out;
  out << "frame n=" << m.n << "\n";
  for (const auto& g : m.gens) {
    for (std::size_t i = 0; i < m.n; ++i) out << (i ? ", " : "") << g.z[i].str();
    out << " | ";
    for (std::size_t i = 0; i < m.n; ++i) out << (i ? ", " : "") << g.x[i].str();
    out << "\n";
  }
  return out.str();
}

namespace detail {

inline std::string strip_ws(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace detail

inline ConvCheckMatrix parse_check_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool have_header = false;
  ConvCheckMatrix m;
  while (std::getline(in, line)) {
    line = detail::strip_ws(line);
    if (line.empty() || line[0] == '#') continue;
    if (!have_header) {
      if (line.rfind("frame", 0) != 0)
        throw std::invalid_argument("check matrix: expected 'frame n=<n>' header, got: " + line);
      std::size_t eq = line.find("n=");
      if (eq == std::string::npos)
        throw std::invalid_argument("check matrix: malformed header: " + line);
      long n = 0;
      try {
        n = std::stol(line.substr(eq + 2));
      } catch (const std::exception&) {
        throw std::invalid_argument("check matrix: malformed frame size: " + line);
      }
      if (n <= 0) throw std::invalid_argument("check matrix: frame size must be positive");
      m = ConvCheckMatrix(static_cast<std::size_t>(n));
      have_header = true;
      continue;
    }
    auto halves = detail::split(line, '|');
    if (halves.size() != 2)
      throw std::invalid_argument("check matrix: expected one '|' per generator line: " + line);
    ConvGenerator g(m.n);
    for (int side = 0; side < 2; ++side) {
      auto parts = detail::split(halves[side], ',');
      if (parts.size() != m.n)
        throw std::invalid_argument("check matrix: expected " + std::to_string(m.n) +
                                    " entries per side: " + line);
      for (std::size_t i = 0; i < m.n; ++i) {
        RationalFn v = RationalFn::parse(detail::strip_ws(parts[i]));
        (side == 0 ? g.z : g.x)[i] = v;
      }
    }
    m.add_gen(g);
  }
  if (!have_header) throw std::invalid_argument("check matrix: missing 'frame n=<n>' header");
  return m;
}

/* ------------------------------------------------------------------ */
/* Gate lists: one gate per line in ConvGate text syntax.             */
/* ------------------------------------------------------------------ */

inline std::string write_gates(const std::vector<ConvGate>& gates) {
  std::ostringstream out;
  for (const auto& g : gates) out << g.str() << "\n";
  return out.str();
}

inline std::vector<ConvGate> parse_gates(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<ConvGate> out;
  while (std::getline(in, line)) {
    line = detail::strip_ws(line);
    if (line.empty() || line[0] == '#') continue;
    out.push_back(ConvGate::parse(line));
  }
  return out;
}

/* ------------------------------------------------------------------ */
/* JSON code bundle: {version, params, encoder, decoder, target}.     */
/* ------------------------------------------------------------------ */

inline nlohmann::json check_matrix_json(const ConvCheckMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  std::istringstream in(write_check_matrix(m));
  std::string line;
  std::getline(in, line);  // drop the frame header; n is stored alongside
  while (std::getline(in, line)) rows.push_back(line);
  return nlohmann::json{{"n", m.n}, {"generators", rows}};
}

inline ConvCheckMatrix check_matrix_from_json(const nlohmann::json& j) {
  std::ostringstream text;
  text << "frame n=" << j.at("n").get<std::size_t>() << "\n";
  for (const auto& row : j.at("generators")) text << row.get<std::string>() << "\n";
  return parse_check_matrix(text.str());
}

inline nlohmann::json code_to_json(const EAQConvCode& code) {
  nlohmann::json enc = nlohmann::json::array(), dec = nlohmann::json::array();
  for (const auto& g : code.encoder) enc.push_back(g.str());
  for (const auto& g : code.decoder) dec.push_back(g.str());
  return nlohmann::json{
      {"version", kFormatVersion},
      {"params",
       {{"n", code.n},
        {"k", code.k},
        {"c", code.c},
        {"a", code.a},
        {"finite_depth", code.klass == EAQConvCode::FINITE_DEPTH}}},
      {"encoder", enc},
      {"decoder", dec},
      {"target", check_matrix_json(code.target)},
      {"initial", check_matrix_json(code.initial)},
      {"initial_info",
       {{"k", code.initial_info.k}, {"matrix", check_matrix_json(code.initial_info.m)}}}};
}

inline EAQConvCode code_from_json(const nlohmann::json& j) {
  if (j.at("version").get<int>() != kFormatVersion)
    throw std::invalid_argument("code bundle: unsupported version");
  EAQConvCode code;
  const auto& p = j.at("params");
  code.n = p.at("n").get<std::size_t>();
  code.k = p.at("k").get<std::size_t>();
  code.c = p.at("c").get<std::size_t>();
  code.a = p.at("a").get<std::size_t>();
  code.klass = p.at("finite_depth").get<bool>() ? EAQConvCode::FINITE_DEPTH
                                                : EAQConvCode::INFINITE_DEPTH_ENCODER;
  for (const auto& g : j.at("encoder")) code.encoder.push_back(ConvGate::parse(g.get<std::string>()));
  for (const auto& g : j.at("decoder")) code.decoder.push_back(ConvGate::parse(g.get<std::string>()));
  code.target = check_matrix_from_json(j.at("target"));
  code.initial = check_matrix_from_json(j.at("initial"));
  code.initial_info.k = j.at("initial_info").at("k").get<std::size_t>();
  code.initial_info.m = check_matrix_from_json(j.at("initial_info").at("matrix"));
  return code;
}

/* ------------------------------------------------------------------ */
/* Syndrome table CSV: error,syndrome_bits — weight-one entries are   */
/* listed qubit by qubit (X, Y, Z); other labels follow alphabetically. */
/* ------------------------------------------------------------------ */

namespace detail {

// Sort key: weight-one labels like "X3" order by qubit then letter; anything
// else sorts after them, alphabetically.
inline std::pair<long, std::string> label_key(const std::string& label) {
  if (label.size() >= 2 && (label[0] == 'X' || label[0] == 'Y' || label[0] == 'Z')) {
    bool digits = true;
    for (std::size_t i = 1; i < label.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(label[i]))) digits = false;
    if (digits) return {std::stol(label.substr(1)), label.substr(0, 1)};
  }
  return {std::numeric_limits<long>::max(), label};
}

}  // namespace detail

inline std::string syndrome_table_csv(const SyndromeTable& table) {
  std::vector<std::string> labels;
  for (const auto& [label, bits] : table.entries) labels.push_back(label);
  std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
    return detail::label_key(a) < detail::label_key(b);
  });
  std::ostringstream out;
  out << "error,syndrome_bits\n";
  for (const auto& label : labels) {
    out << label << ",";
    for (int b : table.entries.at(label)) out << b;
    out << "\n";
  }
  return out.str();
}

/* ------------------------------------------------------------------ */
/* Distillation summary and trial report JSON.                        */
/* ------------------------------------------------------------------ */

inline nlohmann::json distill_summary_json(const DistillConstruction& d) {
  auto y = protocol_yield(d);
  nlohmann::json noiseless = nlohmann::json::array();
  for (std::size_t i = 0; i < d.aug_cols; ++i) noiseless.push_back(d.n + i);
  return nlohmann::json{{"version", kFormatVersion},
                        {"n", d.n},
                        {"m", d.stabilizer.gens.size()},
                        {"yield", std::to_string(y.first) + "/" + std::to_string(y.second)},
                        {"catalytic_ebits", d.catalytic_ebits},
                        {"noiseless_columns", noiseless},
                        {"stabilizer", check_matrix_json(d.stabilizer)}};
}

inline nlohmann::json trial_report_json(const TrialReport& r) {
  return nlohmann::json{{"version", kFormatVersion},
                        {"trials", r.trials},
                        {"frames", r.frames},
                        {"raw_error_rate", r.raw_error_rate},
                        {"residual_logical_rate", r.residual_logical_rate},
                        {"syndrome_miss_rate", r.syndrome_miss_rate},
                        {"seed", r.seed}};
}

}  // namespace eaqecc

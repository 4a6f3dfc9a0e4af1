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
//
// Command-line front end for the entanglement-assisted coding toolkit.
// Exit codes: 0 success, 1 construction/verification error, 2 parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "eaqecc/block_ea.hpp"
#include "eaqecc/construct.hpp"
#include "eaqecc/distill.hpp"
#include "eaqecc/grandfather.hpp"
#include "eaqecc/io.hpp"
#include "eaqecc/sim.hpp"

using namespace eaqecc;

namespace {

// Thrown for any malformed input file; mapped to exit status 2.
struct ParseFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseFailure("cannot open file: " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> content_lines(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> out;
  while (std::getline(in, line)) {
    line = detail::strip_ws(line);
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

template <typename F>
auto parsing(const std::string& path, F f) {
  try {
    return f(slurp(path));
  } catch (const ParseFailure&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseFailure(path + ": " + e.what());
  }
}

// One Pauli string (letters over IXYZ) per line.
BlockCheckMatrix load_pauli_matrix(const std::string& path) {
  return parsing(path, [&](const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseFailure(path + ": no Pauli rows");
    BlockCheckMatrix m(lines[0].size());
    for (const auto& line : lines) m.add_pauli(line);
    return m;
  });
}

// Rows of 0/1 entries, optionally separated by spaces or commas.
BinMatrix load_binary_matrix(const std::string& path) {
  return parsing(path, [&](const std::string& text) {
    auto lines = content_lines(text);
    std::vector<std::vector<uint8_t>> rows;
    for (const auto& line : lines) {
      std::vector<uint8_t> row;
      for (char ch : line) {
        if (ch == ' ' || ch == '\t' || ch == ',') continue;
        if (ch != '0' && ch != '1') throw ParseFailure(path + ": binary entries must be 0 or 1");
        row.push_back(ch == '1');
      }
      if (!row.empty()) rows.push_back(row);
    }
    if (rows.empty()) throw ParseFailure(path + ": no rows");
    BinMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols()) throw ParseFailure(path + ": ragged rows");
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  });
}

// Rows of GF(4) symbols 0, 1, w, W (W denotes the conjugate of w).
Gf4Matrix load_gf4_matrix(const std::string& path) {
  return parsing(path, [&](const std::string& text) {
    auto lines = content_lines(text);
    std::vector<std::vector<Gf4>> rows;
    for (const auto& line : lines) {
      std::vector<Gf4> row;
      for (char ch : line) {
        switch (ch) {
          case ' ':
          case '\t':
          case ',': break;
          case '0': row.push_back(Gf4(Gf4::ZERO)); break;
          case '1': row.push_back(Gf4(Gf4::ONE)); break;
          case 'w': row.push_back(Gf4(Gf4::W)); break;
          case 'W': row.push_back(Gf4(Gf4::WBAR)); break;
          default: throw ParseFailure(path + ": GF(4) entries must be 0, 1, w, or W");
        }
      }
      if (!row.empty()) rows.push_back(row);
    }
    if (rows.empty()) throw ParseFailure(path + ": no rows");
    Gf4Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols()) throw ParseFailure(path + ": ragged rows");
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  });
}

// Rows of comma-separated polynomials in D.
PolyMatrix load_poly_matrix(const std::string& path) {
  return parsing(path, [&](const std::string& text) {
    auto lines = content_lines(text);
    std::vector<std::vector<LaurentPoly>> rows;
    for (const auto& line : lines) {
      std::vector<LaurentPoly> row;
      for (const auto& cell : detail::split(line, ','))
        row.push_back(LaurentPoly::parse(detail::strip_ws(cell)));
      rows.push_back(row);
    }
    if (rows.empty()) throw ParseFailure(path + ": no rows");
    PolyMatrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols()) throw ParseFailure(path + ": ragged rows");
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  });
}

ConvCheckMatrix load_conv_matrix(const std::string& path) {
  return parsing(path, [](const std::string& text) { return parse_check_matrix(text); });
}

nlohmann::json load_json(const std::string& path) {
  return parsing(path, [](const std::string& text) { return nlohmann::json::parse(text); });
}

// Grandfather bundle: {version, params:{n,k,l,r,c}, encoder:[gate lines]}.
GrandfatherCode load_grandfather(const std::string& path) {
  nlohmann::json j = load_json(path);
  GrandfatherParams p;
  std::vector<ConvGate> encoder;
  try {
    const auto& jp = j.at("params");
    p.n = jp.at("n").get<std::size_t>();
    p.k = jp.at("k").get<std::size_t>();
    p.l = jp.at("l").get<std::size_t>();
    p.r = jp.at("r").get<std::size_t>();
    p.c = jp.at("c").get<std::size_t>();
    for (const auto& g : j.at("encoder")) encoder.push_back(ConvGate::parse(g.get<std::string>()));
  } catch (const std::exception& e) {
    throw ParseFailure(path + ": " + e.what());
  }
  return build_grandfather(p, encoder);
}

std::string pauli_of(const SymplecticVector& v) { return p2b_inverse(v); }

void emit_number(const std::string& key, std::size_t value, bool json) {
  if (json) {
    std::cout << nlohmann::json{{"version", kFormatVersion}, {key, value}}.dump(2) << "\n";
  } else {
    std::cout << value << "\n";
  }
}

void emit_matrix(const ConvCheckMatrix& m, bool json) {
  if (json) {
    std::cout << nlohmann::json{{"version", kFormatVersion}, {"matrix", check_matrix_json(m)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << write_check_matrix(m);
  }
}

void emit_code(const EAQConvCode& code, bool json) {
  if (json) {
    std::cout << code_to_json(code).dump(2) << "\n";
    return;
  }
  std::cout << "n=" << code.n << " k=" << code.k << " c=" << code.c << " a=" << code.a
            << " class=" << (code.klass == EAQConvCode::FINITE_DEPTH ? "finite" : "infinite")
            << "\n";
  std::cout << "target:\n" << write_check_matrix(code.target);
  std::cout << "encoder:\n" << write_gates(code.encoder);
  std::cout << "decoder:\n" << write_gates(code.decoder);
}

int dispatch(CLI::App& app, bool json, const std::function<void()>& body);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for entanglement-assisted stabilizer codes"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // --- ebits -------------------------------------------------------------
  auto* ebits = app.add_subcommand("ebits", "Entanglement requirement of a check matrix");
  std::vector<std::string> ebits_files;
  bool eb_css = false, eb_conv = false, eb_gf4 = false;
  ebits->add_option("files", ebits_files, "Input matrix file(s)")->required();
  ebits->add_flag("--css", eb_css, "Two binary parity-check matrices");
  ebits->add_flag("--conv", eb_conv, "Polynomial check matrix");
  ebits->add_flag("--gf4", eb_gf4, "Quaternary check matrix");

  // --- gramschmidt ---------------------------------------------------------
  auto* gs = app.add_subcommand("gramschmidt", "Symplectic Gram-Schmidt pair structure");
  std::string gs_file;
  bool gs_conv = false;
  std::size_t l_max = 12;
  gs->add_option("file", gs_file, "Check matrix file")->required();
  gs->add_flag("--conv", gs_conv, "Polynomial input (default: Pauli rows)");
  gs->add_option("--l-max", l_max, "Maximum expansion factor to try");

  // --- expand --------------------------------------------------------------
  auto* expand = app.add_subcommand("expand", "l-fold expansion of a polynomial check matrix");
  std::string ex_file;
  std::size_t ex_factor = 2;
  expand->add_option("file", ex_file, "Polynomial check matrix file")->required();
  expand->add_option("--factor", ex_factor, "Expansion factor")->required();

  // --- css-construct ---------------------------------------------------------
  auto* cssc = app.add_subcommand("css-construct", "CSS code from two classical poly matrices");
  std::string css_h1, css_h2;
  cssc->add_option("h1", css_h1, "First parity-check polynomial matrix")->required();
  cssc->add_option("h2", css_h2, "Second parity-check polynomial matrix")->required();

  // --- construct -------------------------------------------------------------
  auto* cons = app.add_subcommand("construct", "General code from a polynomial check matrix");
  std::string cons_file;
  cons->add_option("file", cons_file, "Polynomial check matrix file")->required();
  cons->add_option("--l-max", l_max, "Maximum expansion factor to try");

  // --- free-construct ----------------------------------------------------------
  auto* freec = app.add_subcommand("free-construct", "Free-entanglement code construction");
  std::string free_file;
  freec->add_option("file", free_file, "Polynomial check matrix file")->required();

  // --- distill --------------------------------------------------------------
  auto* dist = app.add_subcommand("distill", "Entanglement distillation augmentation");
  std::string dist_file, dist_mode = "single";
  bool dist_lower = false;
  dist->add_option("file", dist_file, "Polynomial check matrix file")->required();
  dist->add_option("--mode", dist_mode, "single, multi, or css")
      ->check(CLI::IsMember({"single", "multi", "css"}));
  dist->add_flag("--lower", dist_lower, "Lower-triangular augmentation block");

  // --- grandfather-table --------------------------------------------------------
  auto* gft = app.add_subcommand("grandfather-table", "Syndrome lookup table CSV");
  std::string gft_file;
  std::size_t gft_weight = 1, gft_window = 2;
  gft->add_option("file", gft_file, "Grandfather code bundle (JSON)")->required();
  gft->add_option("--weight", gft_weight, "Maximum error weight");
  gft->add_option("--window", gft_window, "Syndrome window in frames");

  // --- simulate --------------------------------------------------------------
  auto* simc = app.add_subcommand("simulate", "Monte-Carlo correction trials");
  std::string sim_file;
  double sim_p = 0.1;
  std::uint64_t sim_seed = 1;
  std::size_t sim_trials = 100, sim_frames = 20, sim_window = 2, sim_stride = 2;
  bool sim_grand = false;
  simc->add_option("file", sim_file, "Code input (check matrix, or JSON bundle with --grandfather)")
      ->required();
  simc->add_flag("--grandfather", sim_grand, "Input is a grandfather JSON bundle");
  simc->add_option("--p", sim_p, "Depolarizing parameter");
  simc->add_option("--seed", sim_seed, "RNG seed");
  simc->add_option("--trials", sim_trials, "Number of trials");
  simc->add_option("--frames", sim_frames, "Frames per trial");
  simc->add_option("--window", sim_window, "Decoding window in frames");
  simc->add_option("--stride", sim_stride, "Frame stride between correctable errors");

  // --- verify -------------------------------------------------------------
  auto* ver = app.add_subcommand("verify", "Check a JSON code bundle's encoder");
  std::string ver_file;
  ver->add_option("file", ver_file, "JSON code bundle")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const bool json = format == "json";

  if (*ebits) {
    return dispatch(app, json, [&] {
      std::size_t c = 0;
      if (eb_css) {
        if (ebits_files.size() != 2) throw ParseFailure("ebits --css needs two files");
        c = ebits_css(load_binary_matrix(ebits_files[0]), load_binary_matrix(ebits_files[1]));
      } else if (ebits_files.size() != 1) {
        throw ParseFailure("ebits needs one file");
      } else if (eb_conv) {
        c = conv_ebits(load_conv_matrix(ebits_files[0]));
      } else if (eb_gf4) {
        c = ebits_gf4(load_gf4_matrix(ebits_files[0]));
      } else {
        c = ebits_general(load_pauli_matrix(ebits_files[0]));
      }
      emit_number("ebits", c, json);
    });
  }

  if (*gs) {
    return dispatch(app, json, [&] {
      if (gs_conv) {
        ConvDecomposition d = poly_sgsop(load_conv_matrix(gs_file), l_max);
        if (json) {
          std::cout << nlohmann::json{{"version", kFormatVersion},
                                      {"c", d.c},
                                      {"a", d.a},
                                      {"expansion", d.l},
                                      {"reordered", check_matrix_json(d.reordered)}}
                           .dump(2)
                    << "\n";
        } else {
          std::cout << "c=" << d.c << " a=" << d.a << " expansion=" << d.l << "\n"
                    << write_check_matrix(d.reordered);
        }
      } else {
        EAStructure ea = block_sgsop(load_pauli_matrix(gs_file));
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : ea.reordered.rows) rows.push_back(pauli_of(r));
        if (json) {
          std::cout << nlohmann::json{
                           {"version", kFormatVersion}, {"c", ea.c}, {"a", ea.a}, {"rows", rows}}
                           .dump(2)
                    << "\n";
        } else {
          std::cout << "c=" << ea.c << " a=" << ea.a << "\n";
          for (const auto& r : ea.reordered.rows) std::cout << pauli_of(r) << "\n";
        }
      }
    });
  }

  if (*expand)
    return dispatch(app, json,
                    [&] { emit_matrix(expand_check(load_conv_matrix(ex_file), ex_factor), json); });

  if (*cssc)
    return dispatch(app, json, [&] {
      emit_code(css_construct(load_poly_matrix(css_h1), load_poly_matrix(css_h2)), json);
    });

  if (*cons)
    return dispatch(app, json, [&] {
      emit_code(general_construct(poly_sgsop(load_conv_matrix(cons_file), l_max)), json);
    });

  if (*freec)
    return dispatch(app, json,
                    [&] { emit_code(free_ent_construct(load_conv_matrix(free_file)), json); });

  if (*dist) {
    return dispatch(app, json, [&] {
      ConvCheckMatrix m = load_conv_matrix(dist_file);
      DistillConstruction d;
      if (dist_mode == "css") {
        d = css_distill_augment(m);
      } else {
        if (dist_mode == "single" && m.gens.size() != 1)
          throw ParseFailure("distill --mode single expects exactly one generator");
        d = augment_multi(m, dist_lower);
      }
      if (json) {
        std::cout << distill_summary_json(d).dump(2) << "\n";
      } else {
        auto y = protocol_yield(d);
        std::cout << "n=" << d.n << " m=" << d.stabilizer.gens.size() << " yield=" << y.first
                  << "/" << y.second << " catalytic_ebits=" << d.catalytic_ebits << "\n"
                  << write_check_matrix(d.stabilizer);
      }
    });
  }

  if (*gft)
    return dispatch(app, json, [&] {
      SyndromeTable t = syndrome_table(load_grandfather(gft_file), gft_weight, gft_window);
      std::cout << syndrome_table_csv(t);
    });

  if (*simc) {
    return dispatch(app, json, [&] {
      DecodeSetup setup = sim_grand
                              ? decode_setup(load_grandfather(sim_file), sim_window, sim_stride)
                              : decode_setup(load_conv_matrix(sim_file), sim_window, sim_stride);
      TrialReport rep = run_correction(setup, PauliChannel::depolarizing(sim_p), sim_trials,
                                       sim_frames, sim_seed);
      if (json) {
        std::cout << trial_report_json(rep).dump(2) << "\n";
      } else {
        std::cout << "# seed=" << rep.seed << " trials=" << rep.trials
                  << " frames=" << rep.frames << "\n"
                  << "raw_error_rate,residual_logical_rate,syndrome_miss_rate\n"
                  << rep.raw_error_rate << "," << rep.residual_logical_rate << ","
                  << rep.syndrome_miss_rate << "\n";
      }
    });
  }

  if (*ver) {
    return dispatch(app, json, [&] {
      EAQConvCode code = code_from_json(load_json(ver_file));
      std::string why;
      bool ok = verify_encoding(code, &why);
      if (json) {
        std::cout << nlohmann::json{{"version", kFormatVersion}, {"ok", ok}, {"detail", why}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << (ok ? "ok" : "FAIL: " + why) << "\n";
      }
      if (!ok) throw std::runtime_error("verification failed: " + why);
    });
  }

  return 2;
}

namespace {

int dispatch(CLI::App&, bool, const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const ParseFailure& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

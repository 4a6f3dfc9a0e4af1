#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "eaqecc/grandfather.hpp"

using namespace eaqecc;

namespace {

RationalFn rf(const std::string& s) { return RationalFn::parse(s); }
LaurentPoly lp(const std::string& s) { return LaurentPoly::parse(s); }

ConvGenerator gen(std::size_t n, const std::vector<std::string>& zs,
                  const std::vector<std::string>& xs) {
  ConvGenerator g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.z[i] = rf(zs[i]);
    g.x[i] = rf(xs[i]);
  }
  return g;
}

bool gen_eq(const ConvGenerator& a, const ConvGenerator& b) {
  if (a.n != b.n) return false;
  for (std::size_t i = 0; i < a.n; ++i)
    if (a.z[i] != b.z[i] || a.x[i] != b.x[i]) return false;
  return true;
}

GrandfatherParams example_params() {
  GrandfatherParams p;
  p.n = 5;
  p.k = 1;
  p.l = 1;
  p.r = 1;
  p.c = 1;
  return p;
}

// Finite-depth encoder of the rate-1/5 hybrid example, indexed over Alice's
// five qubits (0-based).
std::vector<ConvGate> example_encoder() {
  const LaurentPoly d = lp("D"), od = lp("1+D");
  return {
      ConvGate::h(1),
      ConvGate::cnot(1, 2, d),
      ConvGate::cnot(1, 3, od),
      ConvGate::cnot(1, 4, d),
      ConvGate::h(2),
      ConvGate::h(3),
      ConvGate::h(4),
      ConvGate::cnot(1, 2, d),
      ConvGate::cnot(1, 4, d),
      ConvGate::h(1),
      ConvGate::cnot(0, 1, d),
      ConvGate::cnot(0, 3, od),
      ConvGate::cnot(0, 4, od),
      ConvGate::h(0),
      ConvGate::h(1),
      ConvGate::h(2),
      ConvGate::h(3),
      ConvGate::h(4),
      ConvGate::cnot(0, 2, d),
      ConvGate::cnot(0, 3, od),
      ConvGate::cnot(0, 4, od),
      ConvGate::swap(0, 3),
  };
}

GrandfatherCode example_code() { return build_grandfather(example_params(), example_encoder()); }

ConvGenerator pauli_error(std::size_t n, const std::string& label) {
  // label like "X1", "Z3", or concatenations "X1Z3" with 1-based positions.
  ConvGenerator g(n);
  for (std::size_t i = 0; i + 1 < label.size() + 1; i += 2) {
    if (i + 1 >= label.size()) break;
    char p = label[i];
    std::size_t q = static_cast<std::size_t>(label[i + 1] - '1');
    if (p == 'Z' || p == 'Y') g.z[q] = rf("1");
    if (p == 'X' || p == 'Y') g.x[q] = rf("1");
  }
  return g;
}

}  // namespace

TEST_CASE("hybrid code parameters and encoded stabilizer", "[grandfather]") {
  const GrandfatherCode code = example_code();
  CHECK(code.n == 5);
  CHECK(code.k == 1);
  CHECK(code.l == 1);
  CHECK(code.r == 1);
  CHECK(code.c == 1);
  CHECK(code.a == 1);

  REQUIRE(code.S_full.n == 6);
  REQUIRE(code.S_full.gens.size() == 3);
  CHECK(gen_eq(code.S_full.gens[0],
               gen(6, {"1", "0", "0", "0", "0", "0"}, {"0", "1+D", "0", "D", "1", "1+D"})));
  CHECK(gen_eq(code.S_full.gens[1],
               gen(6, {"0", "1+D", "D", "0", "1", "1+D"}, {"1", "0", "0", "0", "0", "0"})));
  CHECK(gen_eq(code.S_full.gens[2],
               gen(6, {"0", "0", "0", "D", "D", "D"}, {"0", "0", "1", "0", "1", "1"})));
}

TEST_CASE("hybrid code encoded subgroups", "[grandfather]") {
  const GrandfatherCode code = example_code();

  REQUIRE(code.S_E.gens.size() == 2);
  CHECK(gen_eq(code.S_E.gens[0],
               gen(5, {"0", "0", "0", "0", "0"}, {"1+D", "0", "D", "1", "1+D"})));
  CHECK(gen_eq(code.S_E.gens[1],
               gen(5, {"1+D", "D", "0", "1", "1+D"}, {"0", "0", "0", "0", "0"})));

  REQUIRE(code.S_I.gens.size() == 1);
  CHECK(gen_eq(code.S_I.gens[0], gen(5, {"0", "0", "D", "D", "D"}, {"0", "1", "0", "1", "1"})));

  REQUIRE(code.S_G.gens.size() == 2);
  CHECK(gen_eq(code.S_G.gens[0],
               gen(5, {"0", "D^-1", "1", "D^-1", "0"}, {"0", "0", "0", "0", "0"})));
  CHECK(gen_eq(code.S_G.gens[1],
               gen(5, {"0", "D^-1", "0", "0", "0"}, {"0", "0", "1", "0", "0"})));

  REQUIRE(code.S_C.gens.size() == 1);
  CHECK(gen_eq(code.S_C.gens[0],
               gen(5, {"1", "1+D^-1", "0", "1+D^-1", "0"}, {"0", "0", "0", "0", "0"})));
}

TEST_CASE("identity encoder leaves the initial layout", "[grandfather]") {
  const GrandfatherCode code = build_grandfather(example_params(), {});
  CHECK(gen_eq(code.S_E.gens[0], gen(5, {"1", "0", "0", "0", "0"}, {"0", "0", "0", "0", "0"})));
  CHECK(gen_eq(code.S_E.gens[1], gen(5, {"0", "0", "0", "0", "0"}, {"1", "0", "0", "0", "0"})));
  CHECK(gen_eq(code.S_I.gens[0], gen(5, {"0", "1", "0", "0", "0"}, {"0", "0", "0", "0", "0"})));
  CHECK(gen_eq(code.S_G.gens[0], gen(5, {"0", "0", "1", "0", "0"}, {"0", "0", "0", "0", "0"})));
  CHECK(gen_eq(code.S_G.gens[1], gen(5, {"0", "0", "0", "0", "0"}, {"0", "0", "1", "0", "0"})));
  CHECK(gen_eq(code.S_C.gens[0], gen(5, {"0", "0", "0", "1", "0"}, {"0", "0", "0", "0", "0"})));
  CHECK(gen_eq(code.S_full.gens[0],
               gen(6, {"1", "1", "0", "0", "0", "0"}, {"0", "0", "0", "0", "0", "0"})));
  CHECK(gen_eq(code.S_full.gens[1],
               gen(6, {"0", "0", "0", "0", "0", "0"}, {"1", "1", "0", "0", "0", "0"})));
  CHECK(gen_eq(code.S_full.gens[2],
               gen(6, {"0", "0", "1", "0", "0", "0"}, {"0", "0", "0", "0", "0", "0"})));
}

TEST_CASE("bad hybrid parameters and infinite-depth encoders throw", "[grandfather]") {
  GrandfatherParams p = example_params();
  p.k = 3;  // k + l + r + c = 6 > n
  CHECK_THROWS_AS(build_grandfather(p, {}), std::invalid_argument);
  CHECK_THROWS_AS(build_grandfather(example_params(), {ConvGate::rcnot(0, RationalFn(lp("1"), lp("1+D")))}),
                  std::invalid_argument);
}

TEST_CASE("random finite-depth encoders keep commutation relations", "[grandfather]") {
  std::mt19937 rng(20260826);
  std::uniform_int_distribution<int> kind(0, 4), qubit(0, 4), deg(0, 2), bit(0, 1);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<ConvGate> enc;
    for (int s = 0; s < 12; ++s) {
      int i = qubit(rng), j = qubit(rng);
      if (j == i) j = (j + 1) % 5;
      LaurentPoly f;
      for (int d = 0; d <= deg(rng); ++d)
        if (bit(rng)) f = f + LaurentPoly::monomial(d);
      if (f.is_zero()) f = LaurentPoly::one();
      switch (kind(rng)) {
        case 0: enc.push_back(ConvGate::cnot(i, j, f)); break;
        case 1: enc.push_back(ConvGate::h(i)); break;
        case 2: enc.push_back(ConvGate::p(i)); break;
        case 3: enc.push_back(ConvGate::cphase(i, j, f)); break;
        default: enc.push_back(ConvGate::swap(i, j)); break;
      }
    }
    REQUIRE_NOTHROW(build_grandfather(example_params(), enc));
  }
}

TEST_CASE("single-error syndrome table", "[grandfather]") {
  const GrandfatherCode code = example_code();
  const SyndromeTable table = syndrome_table(code, 1, 2);
  CHECK(table.window == 2);
  CHECK(table.generators == 3);
  REQUIRE(table.entries.size() == 15);

  const std::map<std::string, std::vector<int>> expected = {
      {"X1", {0, 0, 1, 1, 0, 0}}, {"Y1", {1, 1, 1, 1, 0, 0}}, {"Z1", {1, 1, 0, 0, 0, 0}},
      {"X2", {0, 0, 0, 1, 0, 0}}, {"Y2", {0, 0, 0, 1, 1, 0}}, {"Z2", {0, 0, 0, 0, 1, 0}},
      {"X3", {0, 0, 0, 0, 0, 1}}, {"Y3", {0, 1, 0, 0, 0, 1}}, {"Z3", {0, 1, 0, 0, 0, 0}},
      {"X4", {0, 0, 1, 0, 0, 1}}, {"Y4", {1, 0, 1, 0, 1, 1}}, {"Z4", {1, 0, 0, 0, 1, 0}},
      {"X5", {0, 0, 1, 1, 0, 1}}, {"Y5", {1, 1, 1, 1, 1, 1}}, {"Z5", {1, 1, 0, 0, 1, 0}},
  };
  for (const auto& [label, bits] : expected) {
    INFO(label);
    REQUIRE(table.entries.count(label) == 1);
    CHECK(table.entries.at(label) == bits);
  }

  // Single-frame single errors are pairwise distinguishable.
  std::set<std::vector<int>> distinct;
  for (const auto& [label, bits] : table.entries) distinct.insert(bits);
  CHECK(distinct.size() == 15);
}

TEST_CASE("syndromes are additive and vanish on the identity", "[grandfather]") {
  const GrandfatherCode code = example_code();
  CHECK(grand_syndrome(code, ConvGenerator(5), 2) == std::vector<int>(6, 0));

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 30; ++trial) {
    ConvGenerator e1(5), e2(5), sum(5);
    for (std::size_t q = 0; q < 5; ++q) {
      if (bit(rng)) e1.z[q] = rf("1");
      if (bit(rng)) e1.x[q] = rf("1");
      if (bit(rng)) e2.z[q] = rf("1");
      if (bit(rng)) e2.x[q] = rf("1");
      sum.z[q] = e1.z[q] + e2.z[q];
      sum.x[q] = e1.x[q] + e2.x[q];
    }
    const auto s1 = grand_syndrome(code, e1, 3);
    const auto s2 = grand_syndrome(code, e2, 3);
    const auto ss = grand_syndrome(code, sum, 3);
    for (std::size_t b = 0; b < ss.size(); ++b) CHECK(ss[b] == (s1[b] ^ s2[b]));
  }
}

TEST_CASE("error classification", "[grandfather]") {
  const GrandfatherCode code = example_code();

  CHECK(classify_error(code, pauli_error(5, "X1")) == ErrorClass::ACTIVE);
  CHECK(classify_error(code, pauli_error(5, "Z1")) == ErrorClass::ACTIVE);
  CHECK(classify_error(code, pauli_error(5, "Y3")) == ErrorClass::ACTIVE);

  CHECK(classify_error(code, ConvGenerator(5)) == ErrorClass::PASSIVE);

  // A frame shift of a gauge generator times the classical generator is
  // still passive.
  ConvGenerator shifted(5);
  for (std::size_t q = 0; q < 5; ++q) {
    shifted.z[q] = code.S_G.gens[0].z[q] * rf("D") + code.S_C.gens[0].z[q];
    shifted.x[q] = code.S_G.gens[0].x[q] * rf("D") + code.S_C.gens[0].x[q];
  }
  CHECK(classify_error(code, shifted) == ErrorClass::PASSIVE);

  // Products of gauge and classical generators stay passive.
  ConvGenerator prod(5);
  for (std::size_t q = 0; q < 5; ++q) {
    prod.z[q] = code.S_G.gens[0].z[q] + code.S_C.gens[0].z[q];
    prod.x[q] = code.S_G.gens[0].x[q] + code.S_C.gens[0].x[q];
  }
  CHECK(classify_error(code, prod) == ErrorClass::PASSIVE);
  for (const auto& m : {code.S_I, code.S_G, code.S_C})
    for (const auto& row : m.gens) CHECK(classify_error(code, row) == ErrorClass::PASSIVE);

  // The encoded logical operators of the information qubit escape detection.
  ConvCheckMatrix logical(5);
  ConvGenerator lz(5), lx(5);
  lz.z[4] = rf("1");
  lx.x[4] = rf("1");
  logical.add_gen(lz);
  logical.add_gen(lx);
  const ConvCheckMatrix enc = replay_gates(logical, example_encoder());
  CHECK(classify_error(code, enc.gens[0]) == ErrorClass::UNDETECTED_LOGICAL);
  CHECK(classify_error(code, enc.gens[1]) == ErrorClass::UNDETECTED_LOGICAL);
}

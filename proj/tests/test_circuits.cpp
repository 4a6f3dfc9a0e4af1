#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "eaqecc/circuits.hpp"

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

// Two-qubit repetition-style stream code plus one ebit column in front.
ConvCheckMatrix ebit_stream_start() {
  ConvCheckMatrix m(3);
  m.add_gen(gen(3, {"1", "1", "0"}, {"0", "0", "0"}));
  m.add_gen(gen(3, {"0", "0", "0"}, {"1", "1", "0"}));
  return m;
}

ConvCheckMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t n) {
  std::uniform_int_distribution<int> bit(0, 1);
  ConvCheckMatrix m(n);
  for (std::size_t r = 0; r < rows; ++r) {
    ConvGenerator g(n);
    for (std::size_t q = 0; q < n; ++q) {
      LaurentPoly z, x;
      for (long e = -1; e <= 2; ++e) {
        if (bit(rng)) z += LaurentPoly::monomial(e);
        if (bit(rng)) x += LaurentPoly::monomial(e);
      }
      g.z[q] = RationalFn(z);
      g.x[q] = RationalFn(x);
    }
    m.add_gen(g);
  }
  return m;
}

std::vector<ConvGate> random_gates(std::mt19937& rng, std::size_t n, std::size_t count) {
  std::uniform_int_distribution<int> kind(0, 6);
  std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
  std::uniform_int_distribution<long> expo(-1, 2);
  std::vector<ConvGate> out;
  auto poly = [&] {
    LaurentPoly f = LaurentPoly::monomial(expo(rng));
    const LaurentPoly g = LaurentPoly::monomial(expo(rng));
    if (!(f == g)) f += g;
    return f;
  };
  while (out.size() < count) {
    const std::size_t i = qubit(rng);
    std::size_t j = qubit(rng);
    if (j == i) j = (i + 1) % n;
    switch (kind(rng)) {
      case 0: out.push_back(ConvGate::cnot(i, j, poly())); break;
      case 1: out.push_back(ConvGate::h(i)); break;
      case 2: out.push_back(ConvGate::p(i)); break;
      case 3: out.push_back(ConvGate::cphase(i, j, poly())); break;
      case 4: out.push_back(ConvGate::cphase_self(i, 1 + (expo(rng) > 0))); break;
      case 5: out.push_back(ConvGate::swap(i, j)); break;
      case 6: out.push_back(ConvGate::delay(i, expo(rng))); break;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("the two-qubit stream code is encoded by the textbook gate sequence") {
  // Columns: 0 is the receiver's ebit half, 1-2 the sender's qubits.
  ConvCheckMatrix m = ebit_stream_start();
  apply_conv_gate_inplace(m, ConvGate::cnot(1, 2, lp("D")));
  apply_conv_gate_inplace(m, ConvGate::cnot(1, 2, lp("D^2")));
  CHECK(m.gens[0] == gen(3, {"1", "1", "0"}, {"0", "0", "0"}));
  CHECK(m.gens[1] == gen(3, {"0", "0", "0"}, {"1", "1", "D+D^2"}));

  apply_conv_gate_inplace(m, ConvGate::h(1));
  apply_conv_gate_inplace(m, ConvGate::h(2));
  CHECK(m.gens[0] == gen(3, {"1", "0", "0"}, {"0", "1", "0"}));
  CHECK(m.gens[1] == gen(3, {"0", "1", "D+D^2"}, {"1", "0", "0"}));

  apply_conv_gate_inplace(m, ConvGate::cnot(1, 2, lp("D")));
  CHECK(m.gens[0] == gen(3, {"1", "0", "0"}, {"0", "1", "D"}));
  CHECK(m.gens[1] == gen(3, {"0", "D", "D+D^2"}, {"1", "0", "0"}));

  apply_conv_gate_inplace(m, ConvGate::cnot(2, 1, lp("D")));
  CHECK(m.gens[0] == gen(3, {"1", "0", "0"}, {"0", "1+D^2", "D"}));
  CHECK(m.gens[1] == gen(3, {"0", "D", "1+D+D^2"}, {"1", "0", "0"}));

  apply_conv_gate_inplace(m, ConvGate::cnot(1, 2, lp("1")));
  CHECK(m.gens[0] == gen(3, {"1", "0", "0"}, {"0", "1+D^2", "1+D+D^2"}));
  CHECK(m.gens[1] == gen(3, {"0", "1+D^2", "1+D+D^2"}, {"1", "0", "0"}));
}

TEST_CASE("an infinite-depth column operation divides the X column") {
  ConvCheckMatrix m(3);
  m.add_gen(gen(3, {"1", "1", "0"}, {"0", "0", "0"}));
  m.add_gen(gen(3, {"0", "0", "0"}, {"1", "1", "1"}));
  apply_conv_gate_inplace(m, ConvGate::rcnot(2, rf("(1)/(1+D)")));
  CHECK(m.gens[0] == gen(3, {"1", "1", "0"}, {"0", "0", "0"}));
  CHECK(m.gens[1].x[2] == rf("(1)/(1+D)"));
  CHECK(m.gens[1].x[1] == rf("1"));
  CHECK(m.gens[1].z[2] == rf("0"));
}

TEST_CASE("rcnot rejects a non-unit numerator") {
  ConvCheckMatrix m = ebit_stream_start();
  CHECK_THROWS_AS(apply_conv_gate_inplace(m, ConvGate::rcnot(1, rf("(1+D)/(1+D+D^2)"))),
                  std::invalid_argument);
}

TEST_CASE("every finite gate is an involution and delay inverts by negation") {
  std::mt19937 rng(20260826);
  for (int trial = 0; trial < 50; ++trial) {
    const ConvCheckMatrix m = random_matrix(rng, 3, 4);
    for (const auto& g : random_gates(rng, 4, 8)) {
      const ConvCheckMatrix once = apply_conv_gate(m, g);
      CHECK(apply_conv_gate(once, g.inverted()) == m);
    }
  }
}

TEST_CASE("gates preserve the shifted symplectic matrix") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    const ConvCheckMatrix m = random_matrix(rng, 3, 4);
    const auto gates = random_gates(rng, 4, 10);
    const ConvCheckMatrix t = replay_gates(m, gates);
    const ShiftedOmega before = shifted_omega(m), after = shifted_omega(t);
    for (std::size_t i = 0; i < before.rows(); ++i)
      for (std::size_t j = 0; j < before.cols(); ++j) CHECK(after.at(i, j) == before.at(i, j));
  }
}

TEST_CASE("reversed gate lists undo their forward application") {
  std::mt19937 rng(99);
  const ConvCheckMatrix m = random_matrix(rng, 4, 5);
  const auto gates = random_gates(rng, 5, 20);
  CHECK(replay_gates(replay_gates(m, gates), reversed_gates(gates)) == m);
}

TEST_CASE("gate serialization round trips with 1-based indices") {
  const std::vector<ConvGate> gates = {
      ConvGate::cnot(0, 2, lp("1+D")),     ConvGate::h(1),
      ConvGate::p(3),                      ConvGate::cphase(1, 0, lp("D^-1+D")),
      ConvGate::cphase_self(2, 3),         ConvGate::swap(0, 4),
      ConvGate::delay(2, -2),              ConvGate::rcnot(1, rf("(1)/(1+D+D^2)")),
  };
  for (const auto& g : gates) {
    CAPTURE(g.str());
    CHECK(ConvGate::parse(g.str()) == g);
  }
  CHECK(ConvGate::cnot(0, 2, lp("1+D")).str() == "CNOT 1 3 1+D");
  CHECK(ConvGate::rcnot(1, rf("(1)/(1+D)")).str() == "RCNOT 2 (1)/(1+D)");
  CHECK(ConvGate::delay(2, -2).str() == "DELAY 3 -2");
}

TEST_CASE("an infinite-depth operation unrolls to a block circuit window") {
  SECTION("trivial denominator needs no gates") {
    const auto r = realize_infinite_depth(rf("1"));
    CHECK(r.scratch_frames == 0);
    CHECK(r.per_frame_gates.empty());
  }
  SECTION("first-order denominator") {
    const auto r = realize_infinite_depth(rf("(1)/(1+D)"));
    CHECK(r.scratch_frames == 1);
    REQUIRE(r.per_frame_gates.size() == 1);
    CHECK(r.per_frame_gates[0].str() == BlockGate::cnot(0, 1).str());
  }
  SECTION("third-order denominator") {
    const auto r = realize_infinite_depth(rf("(1)/(1+D+D^3)"));
    CHECK(r.scratch_frames == 3);
    REQUIRE(r.per_frame_gates.size() == 2);
    CHECK(r.per_frame_gates[0].str() == BlockGate::cnot(2, 3).str());
    CHECK(r.per_frame_gates[1].str() == BlockGate::cnot(0, 3).str());
  }
  SECTION("non-unit numerator is rejected") {
    CHECK_THROWS_AS(realize_infinite_depth(rf("(1+D)/(1+D+D^2)")), std::invalid_argument);
  }
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "eaqecc/block_ea.hpp"

using namespace eaqecc;

namespace {

BlockCheckMatrix five_qubit_code() {
  BlockCheckMatrix h(5);
  h.add_pauli("XZZXI");
  h.add_pauli("IXZZX");
  h.add_pauli("XIXZZ");
  h.add_pauli("ZXIXZ");
  return h;
}

BlockCheckMatrix four_qubit_example() {
  BlockCheckMatrix h(4);
  h.add_pauli("ZXZI");
  h.add_pauli("ZZIZ");
  h.add_pauli("XYXI");
  h.add_pauli("XXIX");
  return h;
}

BinMatrix hamming74() {
  BinMatrix h(3, 7);
  for (std::size_t col = 0; col < 7; ++col) {
    const std::size_t v = col + 1;
    h.at(0, col) = (v >> 2) & 1;
    h.at(1, col) = (v >> 1) & 1;
    h.at(2, col) = v & 1;
  }
  return h;
}

// Random independent generator set on n qubits.
BlockCheckMatrix random_independent(std::mt19937& rng, std::size_t n, std::size_t want_rows) {
  BlockCheckMatrix h(n);
  std::uniform_int_distribution<int> bit(0, 1);
  while (h.rows.size() < want_rows) {
    SymplecticVector v(n);
    bool nonzero = false;
    for (std::size_t j = 0; j < n; ++j) {
      v.z[j] = bit(rng);
      v.x[j] = bit(rng);
      nonzero |= v.z[j] || v.x[j];
    }
    if (!nonzero) continue;
    BlockCheckMatrix trial = h;
    trial.add_row(v);
    BinMatrix b = trial.as_binary();
    if (gf2_rank(b) == trial.rows.size()) h = trial;
  }
  return h;
}

BlockGate random_gate(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
  std::size_t i = qubit(rng), j = qubit(rng);
  while (j == i) j = qubit(rng);
  switch (kind(rng)) {
    case 0: return BlockGate::cnot(i, j);
    case 1: return BlockGate::h(i);
    case 2: return BlockGate::p(i);
    default: return BlockGate::swap(i, j);
  }
}

}  // namespace

TEST_CASE("symplectic Gram-Schmidt structure") {
  EAStructure five = block_sgsop(five_qubit_code());
  CHECK(five.c == 0);
  CHECK(five.a == 4);
  CHECK(five.reordered == five_qubit_code());

  EAStructure ea = block_sgsop(four_qubit_example());
  CHECK(ea.c == 1);
  CHECK(ea.a == 2);
  // The anticommuting pair is the first two original generators, unchanged.
  CHECK(p2b_inverse(ea.reordered.rows[0]) == "ZXZI");
  CHECK(p2b_inverse(ea.reordered.rows[1]) == "ZZIZ");
  // The third generator is multiplied by the second.
  CHECK(p2b_inverse(ea.reordered.rows[2]) == "YXXZ");

  BlockCheckMatrix pair(1);
  pair.add_pauli("Z");
  pair.add_pauli("X");
  EAStructure tiny = block_sgsop(pair);
  CHECK(tiny.c == 1);
  CHECK(tiny.a == 0);

  BlockCheckMatrix dep(2);
  dep.add_pauli("XX");
  dep.add_pauli("XX");
  CHECK_THROWS(block_sgsop(dep));
}

TEST_CASE("Gram-Schmidt output has standard commutation form") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> nn(1, 6);
    std::size_t n = nn(rng);
    std::uniform_int_distribution<std::size_t> mm(1, std::min<std::size_t>(6, 2 * n));
    BlockCheckMatrix h = random_independent(rng, n, mm(rng));
    EAStructure ea = block_sgsop(h);
    REQUIRE(2 * ea.c + ea.a == h.rows.size());
    REQUIRE(ea.c == ebits_general(h));
    BinMatrix om = symplectic_matrix(ea.reordered);
    for (std::size_t i = 0; i < om.rows(); ++i)
      for (std::size_t j = 0; j < om.cols(); ++j) {
        const bool paired =
            i < 2 * ea.c && j < 2 * ea.c && (i / 2 == j / 2) && i != j;
        REQUIRE(om.at(i, j) == (paired ? 1 : 0));
      }
    // Row operations preserve the row space.
    BinMatrix a = ea.reordered.as_binary(), b = h.as_binary();
    REQUIRE(gf2_row_space_equal(a, b));
  }
}

TEST_CASE("ebit formulas") {
  CHECK(ebits_general(four_qubit_example()) == 1);
  CHECK(ebits_general(five_qubit_code()) == 0);

  BlockCheckMatrix allz(3);
  allz.add_pauli("ZZI");
  allz.add_pauli("IZZ");
  CHECK(ebits_general(allz) == 0);

  BinMatrix ham = hamming74();
  CHECK(ebits_css(ham, ham) == 0);

  BinMatrix h10(1, 2);
  h10.at(0, 0) = 1;
  CHECK(ebits_css(h10, h10) == 1);

  BinMatrix h11(1, 2);
  h11.at(0, 0) = h11.at(0, 1) = 1;
  CHECK(ebits_css(h11, h11) == 0);
  CHECK_THROWS(ebits_css(h10, hamming74()));

  Gf4Matrix one(1, 1);
  one.at(0, 0) = Gf4(Gf4::ONE);
  CHECK(ebits_gf4(one) == 1);
  Gf4Matrix wwb(1, 2);
  wwb.at(0, 0) = Gf4(Gf4::W);
  wwb.at(0, 1) = Gf4(Gf4::WBAR);
  CHECK(ebits_gf4(wwb) == 0);
  CHECK(ebits_gf4(Gf4Matrix(2, 2)) == 0);
}

TEST_CASE("ebits formula equivalences on random inputs") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int> quad(0, 3);
  for (int trial = 0; trial < 100; ++trial) {
    // CSS stacking: ebits_css(H1, H2) = ebits_general([H1|0; 0|H2]).
    BinMatrix h1(3, 5), h2(3, 5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) {
        h1.at(i, j) = bit(rng);
        h2.at(i, j) = bit(rng);
      }
    BlockCheckMatrix css(5);
    for (std::size_t i = 0; i < 3; ++i) {
      SymplecticVector v(5);
      for (std::size_t j = 0; j < 5; ++j) v.z[j] = h1.at(i, j);
      css.add_row(v);
    }
    for (std::size_t i = 0; i < 3; ++i) {
      SymplecticVector v(5);
      for (std::size_t j = 0; j < 5; ++j) v.x[j] = h2.at(i, j);
      css.add_row(v);
    }
    REQUIRE(ebits_css(h1, h2) == ebits_general(css));

    // GF(4) import: c equals the general formula on the imported matrix.
    Gf4Matrix h4(2, 4);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 4; ++j) h4.at(i, j) = Gf4(quad(rng));
    REQUIRE(ebits_gf4(h4) == ebits_general(gf4_import_block(h4)));
  }
}

TEST_CASE("gate application rules") {
  BlockCheckMatrix h = four_qubit_example();
  BlockCheckMatrix swapped = apply_block_gate(h, BlockGate::swap(0, 1));
  BlockCheckMatrix expect(4);
  expect.add_row(p2b_forward("XZZI"));
  expect.add_row(p2b_forward("ZZIZ"));
  expect.add_row(p2b_forward("YXXI"));
  expect.add_row(p2b_forward("XXIX"));
  CHECK(swapped == expect);

  BlockCheckMatrix twice = apply_block_gate(apply_block_gate(h, BlockGate::h(2)), BlockGate::h(2));
  CHECK(twice == h);
  CHECK_THROWS(apply_block_gate(h, BlockGate::h(7)));
  CHECK_THROWS(apply_block_gate(h, BlockGate::cnot(1, 1)));

  std::mt19937 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    BlockCheckMatrix m = random_independent(rng, 4, 3);
    BlockGate g = random_gate(rng, 4);
    REQUIRE(symplectic_matrix(apply_block_gate(m, g)) == symplectic_matrix(m));
  }
}

TEST_CASE("gate serialization round trip") {
  for (const char* s : {"CNOT 1 4", "H 2", "P 3", "SWAP 1 2"}) {
    CHECK(BlockGate::parse(s).str() == s);
  }
  CHECK_THROWS(BlockGate::parse("CPHASE 1 2"));
}

TEST_CASE("encoder synthesis reaches the canonical form") {
  BlockSynthesis syn = synth_block_encoder(four_qubit_example());
  CHECK(syn.c == 1);
  CHECK(syn.a == 2);
  BlockCheckMatrix golden(4);
  golden.add_row(p2b_forward("ZIII"));
  golden.add_row(p2b_forward("XIII"));
  golden.add_row(p2b_forward("IZII"));
  golden.add_row(p2b_forward("IIZI"));
  CHECK(syn.final == golden);

  // Replaying the gates in reverse on the augmented canonical stabilizer
  // recovers the encoded stabilizer (receiver column leftmost).
  BlockCheckMatrix replay = replay_reverse(syn.canonical_aug, syn.gates, syn.c);
  BlockCheckMatrix encoded(5);
  encoded.add_pauli("XZXZI");
  encoded.add_pauli("ZZZIZ");
  encoded.add_pauli("IYXXZ");
  encoded.add_pauli("IZYYX");
  BinMatrix a = replay.as_binary(), b = encoded.as_binary();
  CHECK(gf2_row_space_equal(a, b));
}

TEST_CASE("canonical input needs no gates") {
  BlockCheckMatrix canon(3);
  canon.add_pauli("ZII");
  canon.add_pauli("XII");
  canon.add_pauli("IZI");
  BlockSynthesis syn = synth_block_encoder(canon);
  CHECK(syn.gates.empty());
  CHECK(syn.final == canon);
}

TEST_CASE("reverse replay reproduces the input row space") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 150; ++trial) {
    std::uniform_int_distribution<std::size_t> nn(1, 5);
    std::size_t n = nn(rng);
    std::uniform_int_distribution<std::size_t> mm(1, n);
    BlockCheckMatrix h = random_independent(rng, n, mm(rng));
    BlockSynthesis syn = synth_block_encoder(h);
    REQUIRE(syn.c == ebits_general(h));

    BlockCheckMatrix back = replay_reverse(syn.final, syn.gates);
    BinMatrix a = back.as_binary(), b = h.as_binary();
    REQUIRE(gf2_row_space_equal(a, b));

    // Augmented replay: globally commuting, and its sender restriction spans
    // the input.
    BlockCheckMatrix aug = replay_reverse(syn.canonical_aug, syn.gates, syn.c);
    REQUIRE(symplectic_matrix(aug) == BinMatrix(aug.rows.size(), aug.rows.size()));
    BlockCheckMatrix sender(n);
    for (auto& r : aug.rows) {
      SymplecticVector v(n);
      for (std::size_t j = 0; j < n; ++j) {
        v.z[j] = r.z[syn.c + j];
        v.x[j] = r.x[syn.c + j];
      }
      sender.add_row(v);
    }
    BinMatrix sb = sender.as_binary();
    REQUIRE(gf2_row_space_equal(sb, b));
  }
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "qsv/state.hpp"
#include "test_util.hpp"

using namespace qsv;
using testutil::from_amplitudes;
using testutil::max_amp_diff;

namespace {
const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;
}

TEST_CASE("basis labels map to indices with qubit 0 leftmost") {
  CHECK(index_of_label("1101") == 13);
  CHECK(index_of_label("0") == 0);
  CHECK(index_of_label("0110") == 6);
  CHECK(label_of_index(13, 4) == "1101");
  CHECK(label_of_index(0, 1) == "0");
}

TEST_CASE("basis_state places unit amplitude at the label's index") {
  const StateVector s = basis_state("1101");
  REQUIRE(s.num_qubits == 4);
  REQUIRE(s.amplitudes.size() == 16);
  CHECK(s.amplitudes[13] == Amplitude{1.0, 0.0});
  CHECK(std::abs(norm_sq(s) - 1.0) < 1e-15);
}

TEST_CASE("basis_state rejects bad labels") {
  CHECK_THROWS_AS(basis_state(""), std::invalid_argument);
  CHECK_THROWS_AS(basis_state("01a"), std::invalid_argument);
  CHECK_THROWS_AS(basis_state(std::string(25, '0')), std::invalid_argument);
}

TEST_CASE("basis_state round-trips through probabilities, exhaustive to 6 qubits") {
  for (int n = 1; n <= 6; ++n)
    for (std::size_t i = 0; i < dim_of(n); ++i) {
      const std::string label = label_of_index(i, n);
      const auto d = probabilities(basis_state(label));
      REQUIRE(d.entries.size() == dim_of(n));
      for (const auto& [k, p] : d.entries)
        CHECK(p == (k == label ? 1.0 : 0.0));
    }
}

TEST_CASE("uniform_state matches an H layer on |0...0>") {
  const StateVector u = uniform_state(3);
  for (const auto& a : u.amplitudes) CHECK(std::abs(a - Amplitude{1.0 / (2.0 * std::numbers::sqrt2), 0.0}) < 1e-15);

  for (int n = 1; n <= 6; ++n) {
    StateVector s = basis_state(std::string(static_cast<std::size_t>(n), '0'));
    for (int q = 0; q < n; ++q) apply_op(s, GateOp::h(q));
    CHECK(max_amp_diff(s, uniform_state(n)) < 1e-12);
  }
}

TEST_CASE("H acts as the usual 2x2 on each basis state") {
  StateVector s = basis_state("0");
  apply_op(s, GateOp::h(0));
  CHECK(std::abs(s.amplitudes[0] - kInvSqrt2) < 1e-15);
  CHECK(std::abs(s.amplitudes[1] - kInvSqrt2) < 1e-15);

  s = basis_state("1");
  apply_op(s, GateOp::h(0));
  CHECK(std::abs(s.amplitudes[0] - kInvSqrt2) < 1e-15);
  CHECK(std::abs(s.amplitudes[1] + kInvSqrt2) < 1e-15);
}

TEST_CASE("X and Z act on the addressed qubit only") {
  StateVector s = basis_state("010");
  apply_op(s, GateOp::x(2));
  CHECK(s.amplitudes[index_of_label("011")] == Amplitude{1.0, 0.0});

  s = basis_state("110");
  apply_op(s, GateOp::z(0));
  CHECK(s.amplitudes[index_of_label("110")] == Amplitude{-1.0, 0.0});
  apply_op(s, GateOp::z(2));
  CHECK(s.amplitudes[index_of_label("110")] == Amplitude{-1.0, 0.0});
}

TEST_CASE("MCZ flips exactly the all-ones-on-operands components") {
  StateVector s = uniform_state(4);
  apply_op(s, GateOp::mcz({1}, 2));
  for (std::size_t i = 0; i < 16; ++i) {
    const bool hit = i == 6 || i == 7 || i == 14 || i == 15;
    CHECK(std::abs(s.amplitudes[i] - (hit ? -0.25 : 0.25)) < 1e-15);
  }
}

TEST_CASE("MCZ treats controls and target symmetrically") {
  std::mt19937_64 rng(7);
  StateVector a = uniform_state(4);
  StateVector b = a;
  for (int trial = 0; trial < 32; ++trial) {
    auto qs = testutil::distinct_qubits(rng, 4, 3);
    apply_op(a, GateOp::mcz({qs[0], qs[1]}, qs[2]));
    apply_op(b, GateOp::mcz({qs[2], qs[1]}, qs[0]));
  }
  CHECK(max_amp_diff(a, b) == 0.0);
}

TEST_CASE("MCZ with no controls degenerates to Z") {
  StateVector a = uniform_state(2);
  StateVector b = a;
  apply_op(a, GateOp::mcz({}, 1));
  apply_op(b, GateOp::z(1));
  CHECK(max_amp_diff(a, b) == 0.0);
}

TEST_CASE("SWAP exchanges qubit values") {
  StateVector s = basis_state("100");
  apply_op(s, GateOp::swap(0, 2));
  CHECK(s.amplitudes[index_of_label("001")] == Amplitude{1.0, 0.0});
}

TEST_CASE("CSWAP swaps only when the control is set") {
  StateVector s = basis_state("101");
  apply_op(s, GateOp::cswap(0, 1, 2));
  CHECK(s.amplitudes[index_of_label("110")] == Amplitude{1.0, 0.0});

  s = basis_state("001");
  apply_op(s, GateOp::cswap(0, 1, 2));
  CHECK(s.amplitudes[index_of_label("001")] == Amplitude{1.0, 0.0});
}

TEST_CASE("every gate is its own inverse on random states") {
  std::mt19937_64 rng(11);
  StateVector s = uniform_state(4);
  apply_circuit(s, testutil::random_circuit(rng, 4, 64));
  for (int trial = 0; trial < 200; ++trial) {
    const GateOp op = testutil::random_op(rng, 4);
    StateVector t = s;
    apply_op(t, op);
    apply_op(t, op);
    CHECK(max_amp_diff(t, s) < 1e-12);
  }
}

TEST_CASE("apply_op validates operands") {
  StateVector s = uniform_state(3);
  CHECK_THROWS_AS(apply_op(s, GateOp::h(3)), std::invalid_argument);
  CHECK_THROWS_AS(apply_op(s, GateOp::h(-1)), std::invalid_argument);
  CHECK_THROWS_AS(apply_op(s, GateOp::swap(1, 1)), std::invalid_argument);
  CHECK_THROWS_AS(apply_op(s, GateOp::mcz({0, 1}, 1)), std::invalid_argument);
  CHECK_THROWS_AS(apply_op(s, GateOp::cswap(2, 2, 0)), std::invalid_argument);
}

TEST_CASE("apply_circuit requires matching register width") {
  StateVector s = uniform_state(3);
  Circuit c;
  c.num_qubits = 4;
  CHECK_THROWS_AS(apply_circuit(s, c), std::invalid_argument);
}

TEST_CASE("empty circuit leaves the state untouched") {
  StateVector s = uniform_state(3);
  const StateVector before = s;
  apply_circuit(s, Circuit{3, {}});
  CHECK(max_amp_diff(s, before) == 0.0);
}

TEST_CASE("norm survives ten thousand random ops") {
  std::mt19937_64 rng(23);
  StateVector s = uniform_state(5);
  apply_circuit(s, testutil::random_circuit(rng, 5, 10000));
  CHECK(std::abs(norm_sq(s) - 1.0) < 1e-10);
}

TEST_CASE("probabilities keeps zero entries at small sizes and prunes above") {
  const auto small = probabilities(basis_state("000000"));
  CHECK(small.entries.size() == 64);

  const auto big = probabilities(basis_state("0000000"));
  CHECK(big.entries.size() == 1);
  CHECK(big.entries.at("0000000") == 1.0);
}

TEST_CASE("probabilities rejects unnormalized states") {
  StateVector s = basis_state("00");
  s.amplitudes[0] = 0.5;
  CHECK_THROWS_AS(probabilities(s), std::invalid_argument);
}

TEST_CASE("marginalize sums out the dropped qubits") {
  MeasurementDistribution d;
  d.entries = {{"00", 0.5}, {"01", 0.5}, {"10", 0.0}, {"11", 0.0}};
  const auto kept0 = marginalize(d, {0});
  CHECK(kept0.entries.at("0") == 1.0);
  const auto kept1 = marginalize(d, {1});
  CHECK(kept1.entries.at("0") == 0.5);
  CHECK(kept1.entries.at("1") == 0.5);
}

TEST_CASE("marginalize keeping everything is the identity") {
  const auto d = probabilities(uniform_state(3));
  const auto kept = marginalize(d, {0, 1, 2});
  CHECK(kept.entries == d.entries);
}

TEST_CASE("marginalize validates the keep set") {
  const auto d = probabilities(uniform_state(2));
  CHECK_THROWS_AS(marginalize(d, {}), std::invalid_argument);
  CHECK_THROWS_AS(marginalize(d, {2}), std::invalid_argument);
  CHECK_THROWS_AS(marginalize(d, {0, 0}), std::invalid_argument);
}

TEST_CASE("global-phase comparison accepts sign and i factors") {
  const StateVector a = from_amplitudes(2, {-kInvSqrt2, 0.0, kInvSqrt2, 0.0});
  const StateVector b = from_amplitudes(2, {kInvSqrt2, 0.0, -kInvSqrt2, 0.0});
  CHECK(equal_up_to_global_phase(a, b));

  StateVector c = b;
  for (auto& amp : c.amplitudes) amp *= Amplitude{0.0, 1.0};
  CHECK(equal_up_to_global_phase(b, c));

  const StateVector d = from_amplitudes(2, {kInvSqrt2, kInvSqrt2, 0.0, 0.0});
  CHECK_FALSE(equal_up_to_global_phase(a, d));

  const StateVector e = from_amplitudes(1, {1.0, 0.0});
  CHECK_THROWS_AS(equal_up_to_global_phase(a, e), std::invalid_argument);
}

TEST_CASE("depth counts greedily packed layers") {
  CHECK(circuit_depth(Circuit{3, {GateOp::h(0), GateOp::h(1), GateOp::h(2)}}) == 1);
  CHECK(circuit_depth(Circuit{2, {GateOp::h(0), GateOp::mcz({0}, 1)}}) == 2);
  CHECK(circuit_depth(Circuit{2, {}}) == 0);
  CHECK(circuit_depth(Circuit{3, {GateOp::h(0), GateOp::h(0), GateOp::h(1)}}) == 2);
}

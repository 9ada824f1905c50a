#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qsv/dense.hpp"
#include "qsv/state.hpp"

namespace qsv {

using Qubit = std::array<Amplitude, 2>;

inline double qubit_norm_sq(const Qubit& q) {
  return std::norm(q[0]) + std::norm(q[1]);
}

inline void require_normalized(const Qubit& q) {
  if (std::abs(qubit_norm_sq(q) - 1.0) > 1e-12)
    throw std::invalid_argument("single-qubit state is not normalized");
}

inline StateVector kron_state(const std::vector<Qubit>& factors) {
  if (factors.empty()) throw std::invalid_argument("no factors");
  StateVector s;
  s.num_qubits = static_cast<int>(factors.size());
  s.amplitudes.assign(dim_of(s.num_qubits), Amplitude{1.0, 0.0});
  for (std::size_t i = 0; i < s.amplitudes.size(); ++i)
    for (int q = 0; q < s.num_qubits; ++q)
      s.amplitudes[i] *= factors[static_cast<std::size_t>(q)][(i >> bit_shift(s.num_qubits, q)) & 1];
  return s;
}

// 8x8 controlled swap in (control, a, b) order: identity except |101> <-> |110>.
inline Matrix cswap_matrix() {
  Matrix m = Matrix::identity(8);
  m.at(5, 5) = 0.0;
  m.at(6, 6) = 0.0;
  m.at(5, 6) = 1.0;
  m.at(6, 5) = 1.0;
  return m;
}

// P(control reads 1) = (1 - |<phi|psi>|^2) / 2.
inline double swap_test_probability(const Qubit& phi, const Qubit& psi) {
  require_normalized(phi);
  require_normalized(psi);
  StateVector s = kron_state({Qubit{1.0, 0.0}, phi, psi});
  apply_op(s, GateOp::h(0));
  apply_op(s, GateOp::cswap(0, 1, 2));
  apply_op(s, GateOp::h(0));
  double p1 = 0.0;
  for (std::size_t i = 4; i < 8; ++i) p1 += std::norm(s.amplitudes[i]);
  return p1;
}

struct OvpInstance {
  Qubit reference{};
  std::vector<Qubit> tests;
};

inline void validate_ovp_instance(const OvpInstance& inst) {
  if (inst.tests.size() != 2) throw std::invalid_argument("exactly two test states required");
  require_normalized(inst.reference);
  for (const auto& t : inst.tests) require_normalized(t);
}

// Layout: q0,q1 read out; q2,q3 hold the test states; q4 holds the shared
// reference. The closing H of each swap test is deliberately absent before
// the oracle; the diffuser's leading H layer takes its place.
inline Circuit ovp_gsa_circuit() {
  Circuit c;
  c.num_qubits = 5;
  c.ops = {
      GateOp::h(0), GateOp::h(1),
      GateOp::cswap(0, 2, 4), GateOp::cswap(1, 3, 4),
      // oracle: flip every (q0,q1) component except |00>
      GateOp::z(0), GateOp::z(1), GateOp::mcz({0}, 1),
      // diffuser
      GateOp::h(0), GateOp::h(1),
      GateOp::z(0), GateOp::z(1), GateOp::mcz({0}, 1),
      GateOp::h(0), GateOp::h(1),
  };
  return c;
}

inline StateVector ovp_gsa_initial_state(const OvpInstance& inst) {
  validate_ovp_instance(inst);
  return kron_state({Qubit{1.0, 0.0}, Qubit{1.0, 0.0}, inst.tests[0], inst.tests[1], inst.reference});
}

inline MeasurementDistribution run_ovp_gsa(const OvpInstance& inst) {
  StateVector s = ovp_gsa_initial_state(inst);
  apply_circuit(s, ovp_gsa_circuit());
  return marginalize(probabilities(s), {0, 1});
}

// Two-qubit walkthrough of the oracle + diffuser acting on a bare state:
// returns {initial, after oracle, after H layer, after CZ.ZZ, after H layer}.
inline std::vector<StateVector> simplified_diffuser_trace(const StateVector& initial) {
  if (initial.num_qubits != 2) throw std::invalid_argument("trace is defined on 2 qubits");
  std::vector<StateVector> trace;
  trace.push_back(initial);
  StateVector s = initial;
  auto flip_all_but_00 = [&]() {
    apply_op(s, GateOp::z(0));
    apply_op(s, GateOp::z(1));
    apply_op(s, GateOp::mcz({0}, 1));
  };
  flip_all_but_00();
  trace.push_back(s);
  apply_op(s, GateOp::h(0));
  apply_op(s, GateOp::h(1));
  trace.push_back(s);
  flip_all_but_00();
  trace.push_back(s);
  apply_op(s, GateOp::h(0));
  apply_op(s, GateOp::h(1));
  trace.push_back(s);
  return trace;
}

struct TwoByTwoMatrix {
  // row-major: [m00 m01; m10 m11]
  std::array<Amplitude, 4> e{};
};

inline bool check_unitary(const TwoByTwoMatrix& m, double tol = 1e-10) {
  const Amplitude a = m.e[0], b = m.e[1], c = m.e[2], d = m.e[3];
  const Amplitude g00 = std::conj(a) * a + std::conj(c) * c;
  const Amplitude g01 = std::conj(a) * b + std::conj(c) * d;
  const Amplitude g10 = std::conj(b) * a + std::conj(d) * c;
  const Amplitude g11 = std::conj(b) * b + std::conj(d) * d;
  return std::abs(g00 - 1.0) <= tol && std::abs(g11 - 1.0) <= tol &&
         std::abs(g01) <= tol && std::abs(g10) <= tol;
}

struct LinearConstraint {
  Qubit input{};
  Qubit target{};
};

// Unique M with M * c1.input = c1.target and M * c2.input = c2.target,
// unnormalized column convention.
inline TwoByTwoMatrix solve_uf(const LinearConstraint& c1, const LinearConstraint& c2) {
  const Amplitude u0 = c1.input[0], u1 = c1.input[1];
  const Amplitude v0 = c2.input[0], v1 = c2.input[1];
  const Amplitude det = u0 * v1 - u1 * v0;
  if (std::abs(det) < 1e-12) throw std::invalid_argument("singular constraint system");
  // Row r of M solves [u0 u1; v0 v1] * (m_r0, m_r1)^T = (target1_r, target2_r)^T.
  TwoByTwoMatrix m;
  for (int r = 0; r < 2; ++r) {
    const Amplitude p = c1.target[static_cast<std::size_t>(r)];
    const Amplitude q = c2.target[static_cast<std::size_t>(r)];
    m.e[static_cast<std::size_t>(2 * r)] = (p * v1 - q * u1) / det;
    m.e[static_cast<std::size_t>(2 * r + 1)] = (q * u0 - p * v0) / det;
  }
  return m;
}

}  // namespace qsv

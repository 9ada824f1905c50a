#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsv/state.hpp"

namespace qsv {

struct WinnerSet {
  int num_qubits = 0;
  std::set<std::string> winners;  // lexicographic, so oracle blocks are emitted deterministically
};

inline void validate_winner_set(const WinnerSet& ws) {
  if (ws.num_qubits < 1 || ws.num_qubits > 24) throw std::invalid_argument("qubit count out of range");
  if (ws.winners.empty()) throw std::invalid_argument("winner set is empty");
  if (ws.winners.size() >= dim_of(ws.num_qubits))
    throw std::invalid_argument("winner set covers the whole space");
  for (const auto& w : ws.winners) {
    if (static_cast<int>(w.size()) != ws.num_qubits)
      throw std::invalid_argument("winner length mismatch: " + w);
    index_of_label(w);  // charset check
  }
}

enum class OracleStyle { direct_phase, ancilla_mcmt };

struct GroverPlan {
  OracleStyle oracle_style = OracleStyle::direct_phase;
  int iterations = 1;
};

namespace detail {

// X-sandwich turning |w> into |1...1>, so a single MCZ marks exactly w.
inline void emit_marking_block(std::vector<GateOp>& ops, const std::string& w,
                               const std::vector<int>& mcz_controls, int mcz_target) {
  std::vector<int> flips;
  for (int q = 0; q < static_cast<int>(w.size()); ++q)
    if (w[static_cast<std::size_t>(q)] == '0') flips.push_back(q);
  for (int q : flips) ops.push_back(GateOp::x(q));
  ops.push_back(GateOp::mcz(mcz_controls, mcz_target));
  for (int q : flips) ops.push_back(GateOp::x(q));
}

}  // namespace detail

inline Circuit build_phase_oracle(const WinnerSet& ws) {
  validate_winner_set(ws);
  Circuit c;
  c.num_qubits = ws.num_qubits;
  std::vector<int> controls;
  for (int q = 0; q + 1 < ws.num_qubits; ++q) controls.push_back(q);
  for (const auto& w : ws.winners)
    detail::emit_marking_block(c.ops, w, controls, ws.num_qubits - 1);
  return c;
}

// Same marking, phrased as a multi-controlled flip onto one extra qubit that
// the caller prepares in |1>. The phase kicks back onto the data register.
inline Circuit build_ancilla_oracle(const WinnerSet& ws) {
  validate_winner_set(ws);
  Circuit c;
  c.num_qubits = ws.num_qubits + 1;
  std::vector<int> controls;
  for (int q = 0; q < ws.num_qubits; ++q) controls.push_back(q);
  for (const auto& w : ws.winners)
    detail::emit_marking_block(c.ops, w, controls, ws.num_qubits);
  return c;
}

inline Circuit build_diffuser(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 24) throw std::invalid_argument("qubit count out of range");
  Circuit c;
  c.num_qubits = num_qubits;
  for (int q = 0; q < num_qubits; ++q) c.ops.push_back(GateOp::h(q));
  for (int q = 0; q < num_qubits; ++q) c.ops.push_back(GateOp::x(q));
  std::vector<int> controls;
  for (int q = 0; q + 1 < num_qubits; ++q) controls.push_back(q);
  c.ops.push_back(GateOp::mcz(controls, num_qubits - 1));
  for (int q = 0; q < num_qubits; ++q) c.ops.push_back(GateOp::x(q));
  for (int q = 0; q < num_qubits; ++q) c.ops.push_back(GateOp::h(q));
  return c;
}

inline int recommended_iterations(std::size_t num_states, std::size_t num_winners) {
  if (num_winners < 1 || num_winners > num_states) throw std::invalid_argument("bad winner count");
  const int t = static_cast<int>(std::floor(std::numbers::pi / 4.0 *
                                            std::sqrt(static_cast<double>(num_states) / static_cast<double>(num_winners))));
  return t < 1 ? 1 : t;
}

inline double closed_form_success_probability(std::size_t num_states, std::size_t num_winners, int iterations) {
  if (num_winners < 1 || num_winners > num_states) throw std::invalid_argument("bad winner count");
  if (iterations < 0) throw std::invalid_argument("negative iteration count");
  const double theta = std::asin(std::sqrt(static_cast<double>(num_winners) / static_cast<double>(num_states)));
  const double s = std::sin((2.0 * iterations + 1.0) * theta);
  return s * s;
}

// Runs search over the data register and reports its distribution; the
// ancilla style simulates one extra qubit and traces it back out.
inline MeasurementDistribution run_sdp(const WinnerSet& ws, int iterations, OracleStyle style) {
  validate_winner_set(ws);
  if (iterations < 0) throw std::invalid_argument("negative iteration count");
  const int n = ws.num_qubits;
  if (style == OracleStyle::direct_phase) {
    StateVector s = uniform_state(n);
    const Circuit oracle = build_phase_oracle(ws);
    const Circuit diffuser = build_diffuser(n);
    for (int t = 0; t < iterations; ++t) {
      apply_circuit(s, oracle);
      apply_circuit(s, diffuser);
    }
    return probabilities(s);
  }
  StateVector s = basis_state(std::string(static_cast<std::size_t>(n), '0') + "1");
  for (int q = 0; q < n; ++q) apply_op(s, GateOp::h(q));
  const Circuit oracle = build_ancilla_oracle(ws);
  Circuit diffuser = build_diffuser(n);
  diffuser.num_qubits = n + 1;  // same ops, widened register
  for (int t = 0; t < iterations; ++t) {
    apply_circuit(s, oracle);
    apply_circuit(s, diffuser);
  }
  std::vector<int> data;
  for (int q = 0; q < n; ++q) data.push_back(q);
  return marginalize(probabilities(s), data);
}

}  // namespace qsv

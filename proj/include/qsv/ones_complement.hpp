#pragma once

#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsv/state.hpp"

namespace qsv {

// Computes the bitwise complement of a reference string in constant depth:
// every testing qubit starts in |+>, picks up a phase from its reference
// qubit via CZ, and a closing H turns the phase back into a bit. Reference
// qubits flagged as mixed are put in superposition, so the output register
// superposes the complements of both reference variants.

struct ComplementSpec {
  std::string reference;
  std::set<int> mixed_qubits;
  int copies = 1;
};

inline void validate_complement_spec(const ComplementSpec& spec) {
  const int n = static_cast<int>(spec.reference.size());
  if (n < 1) throw std::invalid_argument("empty reference");
  for (char c : spec.reference)
    if (c != '0' && c != '1') throw std::invalid_argument("reference must be over {0,1}");
  if (spec.copies < 1) throw std::invalid_argument("need at least one output register");
  if (n * (spec.copies + 1) > 24) throw std::invalid_argument("more than 24 qubits");
  for (int q : spec.mixed_qubits)
    if (q < 0 || q >= n) throw std::invalid_argument("mixed qubit out of range");
}

// prep / couple / decode, concatenated by build_ones_complement.
inline std::array<Circuit, 3> ones_complement_segments(const ComplementSpec& spec) {
  validate_complement_spec(spec);
  const int n = static_cast<int>(spec.reference.size());
  const int ref_base = n * spec.copies;
  const int total = n * (spec.copies + 1);
  std::array<Circuit, 3> seg;
  for (auto& c : seg) c.num_qubits = total;

  for (int q = 0; q < ref_base; ++q) seg[0].ops.push_back(GateOp::h(q));
  for (int i = 0; i < n; ++i)
    if (spec.reference[static_cast<std::size_t>(i)] == '0') seg[0].ops.push_back(GateOp::x(ref_base + i));
  for (int i : spec.mixed_qubits) seg[0].ops.push_back(GateOp::h(ref_base + i));

  for (int copy = 0; copy < spec.copies; ++copy)
    for (int i = 0; i < n; ++i)
      seg[1].ops.push_back(GateOp::mcz({ref_base + i}, copy * n + i));

  for (int q = 0; q < ref_base; ++q) seg[2].ops.push_back(GateOp::h(q));
  return seg;
}

inline Circuit build_ones_complement(const ComplementSpec& spec) {
  auto seg = ones_complement_segments(spec);
  Circuit c;
  c.num_qubits = seg[0].num_qubits;
  for (const auto& s : seg) c.ops.insert(c.ops.end(), s.ops.begin(), s.ops.end());
  return c;
}

inline MeasurementDistribution run_ones_complement(const ComplementSpec& spec) {
  const Circuit c = build_ones_complement(spec);
  StateVector s = basis_state(std::string(static_cast<std::size_t>(c.num_qubits), '0'));
  apply_circuit(s, c);
  std::vector<int> first_register;
  for (int q = 0; q < static_cast<int>(spec.reference.size()); ++q) first_register.push_back(q);
  return marginalize(probabilities(s), first_register);
}

inline std::vector<std::pair<int, int>> complement_depth_profile(const std::vector<int>& n_values) {
  if (n_values.empty()) throw std::invalid_argument("empty size list");
  std::vector<std::pair<int, int>> out;
  for (int n : n_values) {
    if (n < 1 || n > 10) throw std::invalid_argument("register size out of range");
    ComplementSpec spec{std::string(static_cast<std::size_t>(n), '0'), {}, 1};
    out.emplace_back(n, circuit_depth(build_ones_complement(spec)));
  }
  return out;
}

}  // namespace qsv

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

// Bit convention used throughout: qubit 0 is the leftmost character of a
// basis label and the most significant bit of an amplitude index, so
// index("1101") = 13.

namespace qsv {

using Amplitude = std::complex<double>;

struct StateVector {
  int num_qubits = 0;
  std::vector<Amplitude> amplitudes;
};

inline std::size_t dim_of(int num_qubits) {
  return std::size_t{1} << num_qubits;
}

inline int bit_shift(int num_qubits, int qubit) {
  return num_qubits - 1 - qubit;
}

inline std::size_t index_of_label(const std::string& bits) {
  if (bits.empty()) throw std::invalid_argument("empty basis label");
  std::size_t idx = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("basis label must be over {0,1}: " + bits);
    idx = (idx << 1) | static_cast<std::size_t>(c - '0');
  }
  return idx;
}

inline std::string label_of_index(std::size_t index, int num_qubits) {
  std::string s(static_cast<std::size_t>(num_qubits), '0');
  for (int q = 0; q < num_qubits; ++q)
    if (index >> bit_shift(num_qubits, q) & 1) s[static_cast<std::size_t>(q)] = '1';
  return s;
}

inline StateVector basis_state(const std::string& bits) {
  if (bits.size() > 24) throw std::invalid_argument("more than 24 qubits");
  StateVector s;
  s.num_qubits = static_cast<int>(bits.size());
  s.amplitudes.assign(dim_of(s.num_qubits), Amplitude{0.0, 0.0});
  s.amplitudes[index_of_label(bits)] = Amplitude{1.0, 0.0};
  return s;
}

inline StateVector uniform_state(int num_qubits) {
  if (num_qubits < 1 || num_qubits > 24) throw std::invalid_argument("qubit count out of range");
  StateVector s;
  s.num_qubits = num_qubits;
  const std::size_t dim = dim_of(num_qubits);
  s.amplitudes.assign(dim, Amplitude{1.0 / std::sqrt(static_cast<double>(dim)), 0.0});
  return s;
}

inline double norm_sq(const StateVector& s) {
  double acc = 0.0;
  for (const auto& a : s.amplitudes) acc += std::norm(a);
  return acc;
}

struct GateOp {
  enum class Kind { H, X, Z, MCZ, Swap, CSwap };
  Kind kind;
  // MCZ: controls first, target last. Swap: {a,b}. CSwap: {control,a,b}.
  std::vector<int> qubits;

  bool operator==(const GateOp&) const = default;

  static GateOp h(int q) { return {Kind::H, {q}}; }
  static GateOp x(int q) { return {Kind::X, {q}}; }
  static GateOp z(int q) { return {Kind::Z, {q}}; }
  static GateOp mcz(std::vector<int> controls, int target) {
    controls.push_back(target);
    return {Kind::MCZ, std::move(controls)};
  }
  static GateOp swap(int a, int b) { return {Kind::Swap, {a, b}}; }
  static GateOp cswap(int control, int a, int b) { return {Kind::CSwap, {control, a, b}}; }
};

struct Circuit {
  int num_qubits = 0;
  std::vector<GateOp> ops;

  bool operator==(const Circuit&) const = default;
};

inline void validate_op(const GateOp& op, int num_qubits) {
  switch (op.kind) {
    case GateOp::Kind::H:
    case GateOp::Kind::X:
    case GateOp::Kind::Z:
      if (op.qubits.size() != 1) throw std::invalid_argument("single-qubit op needs one index");
      break;
    case GateOp::Kind::MCZ:
      if (op.qubits.empty()) throw std::invalid_argument("mcz needs a target");
      break;
    case GateOp::Kind::Swap:
      if (op.qubits.size() != 2) throw std::invalid_argument("swap needs two indices");
      break;
    case GateOp::Kind::CSwap:
      if (op.qubits.size() != 3) throw std::invalid_argument("cswap needs three indices");
      break;
  }
  for (int q : op.qubits)
    if (q < 0 || q >= num_qubits) throw std::invalid_argument("qubit index out of range: " + std::to_string(q));
  auto sorted = op.qubits;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate qubit index in op");
}

inline void apply_op(StateVector& s, const GateOp& op) {
  validate_op(op, s.num_qubits);
  const std::size_t dim = s.amplitudes.size();
  auto& a = s.amplitudes;
  switch (op.kind) {
    case GateOp::Kind::H: {
      const std::size_t mask = std::size_t{1} << bit_shift(s.num_qubits, op.qubits[0]);
      const double r = 1.0 / std::numbers::sqrt2;
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & mask) continue;
        const Amplitude lo = a[i], hi = a[i | mask];
        a[i] = (lo + hi) * r;
        a[i | mask] = (lo - hi) * r;
      }
      break;
    }
    case GateOp::Kind::X: {
      const std::size_t mask = std::size_t{1} << bit_shift(s.num_qubits, op.qubits[0]);
      for (std::size_t i = 0; i < dim; ++i)
        if (!(i & mask)) std::swap(a[i], a[i | mask]);
      break;
    }
    case GateOp::Kind::Z: {
      const std::size_t mask = std::size_t{1} << bit_shift(s.num_qubits, op.qubits[0]);
      for (std::size_t i = 0; i < dim; ++i)
        if (i & mask) a[i] = -a[i];
      break;
    }
    case GateOp::Kind::MCZ: {
      // Sign flip where every listed qubit (controls and target alike) is 1.
      std::size_t mask = 0;
      for (int q : op.qubits) mask |= std::size_t{1} << bit_shift(s.num_qubits, q);
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & mask) == mask) a[i] = -a[i];
      break;
    }
    case GateOp::Kind::Swap: {
      const std::size_t ma = std::size_t{1} << bit_shift(s.num_qubits, op.qubits[0]);
      const std::size_t mb = std::size_t{1} << bit_shift(s.num_qubits, op.qubits[1]);
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & ma) && !(i & mb)) std::swap(a[i], a[(i ^ ma) | mb]);
      break;
    }
    case GateOp::Kind::CSwap: {
      const std::size_t mc = std::size_t{1} << bit_shift(s.num_qubits, op.qubits[0]);
      const std::size_t ma = std::size_t{1} << bit_shift(s.num_qubits, op.qubits[1]);
      const std::size_t mb = std::size_t{1} << bit_shift(s.num_qubits, op.qubits[2]);
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & mc) && (i & ma) && !(i & mb)) std::swap(a[i], a[(i ^ ma) | mb]);
      break;
    }
  }
}

inline void apply_circuit(StateVector& s, const Circuit& c) {
  if (c.num_qubits != s.num_qubits) throw std::invalid_argument("circuit/state qubit-count mismatch");
  for (const auto& op : c.ops) apply_op(s, op);
}

struct MeasurementDistribution {
  // std::map iteration order is the required lexicographic label order.
  std::map<std::string, double> entries;

  int num_qubits() const {
    return entries.empty() ? 0 : static_cast<int>(entries.begin()->first.size());
  }
};

// Zero entries are kept at small sizes so exhaustive checks see the full
// support; above 6 qubits entries below 1e-15 are dropped.
inline MeasurementDistribution probabilities(const StateVector& s) {
  const double n2 = norm_sq(s);
  if (std::abs(n2 - 1.0) > 1e-9) throw std::invalid_argument("state is not normalized");
  MeasurementDistribution d;
  const bool prune = s.num_qubits > 6;
  for (std::size_t i = 0; i < s.amplitudes.size(); ++i) {
    const double p = std::norm(s.amplitudes[i]);
    if (prune && p < 1e-15) continue;
    d.entries.emplace(label_of_index(i, s.num_qubits), p);
  }
  return d;
}

inline MeasurementDistribution marginalize(const MeasurementDistribution& d, const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("keep set is empty");
  const int n = d.num_qubits();
  std::vector<int> ks = keep;
  std::sort(ks.begin(), ks.end());
  if (std::adjacent_find(ks.begin(), ks.end()) != ks.end())
    throw std::invalid_argument("duplicate qubit in keep set");
  for (int q : ks)
    if (q < 0 || q >= n) throw std::invalid_argument("keep qubit out of range: " + std::to_string(q));
  MeasurementDistribution out;
  for (const auto& [label, p] : d.entries) {
    std::string sub;
    sub.reserve(ks.size());
    for (int q : ks) sub.push_back(label[static_cast<std::size_t>(q)]);
    out.entries[sub] += p;
  }
  return out;
}

inline bool equal_up_to_global_phase(const StateVector& a, const StateVector& b, double tol = 1e-10) {
  if (a.num_qubits != b.num_qubits) throw std::invalid_argument("qubit-count mismatch");
  std::size_t pivot = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < b.amplitudes.size(); ++i) {
    const double m = std::abs(b.amplitudes[i]);
    if (m > best) { best = m; pivot = i; }
  }
  if (best <= 0.0) return false;
  Amplitude c = a.amplitudes[pivot] / b.amplitudes[pivot];
  const double cm = std::abs(c);
  c = cm > 0.0 ? c / cm : Amplitude{1.0, 0.0};
  for (std::size_t i = 0; i < a.amplitudes.size(); ++i)
    if (std::abs(a.amplitudes[i] - c * b.amplitudes[i]) > tol) return false;
  return true;
}

// Greedy left-packing: each op lands one layer past the busiest qubit it touches.
inline int circuit_depth(const Circuit& c) {
  std::vector<int> busy(static_cast<std::size_t>(c.num_qubits), 0);
  int depth = 0;
  for (const auto& op : c.ops) {
    int layer = 0;
    for (int q : op.qubits) layer = std::max(layer, busy[static_cast<std::size_t>(q)]);
    ++layer;
    for (int q : op.qubits) busy[static_cast<std::size_t>(q)] = layer;
    depth = std::max(depth, layer);
  }
  return depth;
}

}  // namespace qsv

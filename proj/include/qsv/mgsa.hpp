#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace qsv {

// Signed real amplitude recurrence over N = 2^n basis states. One step is
// "flip the marked signs, then reflect about the mean", tracked exactly in
// doubles (dyadic instances stay exact).

struct MgsaState {
  std::vector<double> amplitudes;
  std::set<std::size_t> marked;
  int iteration = 0;
};

inline void validate_mgsa_state(const MgsaState& s) {
  const std::size_t n = s.amplitudes.size();
  if (n < 2 || (n & (n - 1)) != 0) throw std::invalid_argument("amplitude count must be a power of two >= 2");
  if (s.marked.empty()) throw std::invalid_argument("marked set is empty");
  if (s.marked.size() > n / 2) throw std::invalid_argument("marked set larger than half the space");
  for (std::size_t i : s.marked)
    if (i >= n) throw std::invalid_argument("marked index out of range");
  double acc = 0.0;
  for (double a : s.amplitudes) acc += a * a;
  if (std::abs(acc - 1.0) > 1e-10) throw std::invalid_argument("amplitudes are not normalized");
}

inline void invert_about_mean(std::vector<double>& a) {
  double mean = 0.0;
  for (double x : a) mean += x;
  mean /= static_cast<double>(a.size());
  for (double& x : a) x = 2.0 * mean - x;
}

inline MgsaState mgsa_step(const MgsaState& s) {
  validate_mgsa_state(s);
  MgsaState out = s;
  for (std::size_t i : s.marked) out.amplitudes[i] = -out.amplitudes[i];
  invert_about_mean(out.amplitudes);
  out.iteration = s.iteration + 1;
  return out;
}

// Later-stage variant: flips marked and every initially occupied state, then
// reflects with the opposite sign convention (x -> x - 2 mean). The sign is
// what makes the two-cycle land on the flipped vector instead of its negation.
inline MgsaState ventura_step(const MgsaState& s, const std::set<std::size_t>& initial_support) {
  validate_mgsa_state(s);
  for (std::size_t i : initial_support)
    if (i >= s.amplitudes.size()) throw std::invalid_argument("support index out of range");
  MgsaState out = s;
  std::set<std::size_t> flips = s.marked;
  flips.insert(initial_support.begin(), initial_support.end());
  for (std::size_t i : flips) out.amplitudes[i] = -out.amplitudes[i];
  invert_about_mean(out.amplitudes);
  for (double& x : out.amplitudes) x = -x;
  out.iteration = s.iteration + 1;
  return out;
}

enum class StepKind { standard, ventura };

inline std::set<std::size_t> support_of(const MgsaState& s, double tol = 1e-12) {
  std::set<std::size_t> out;
  for (std::size_t i = 0; i < s.amplitudes.size(); ++i)
    if (std::abs(s.amplitudes[i]) > tol) out.insert(i);
  return out;
}

inline MgsaState advance(const MgsaState& s, StepKind kind, const std::set<std::size_t>& initial_support) {
  // The variant only kicks in after the first full iteration.
  if (kind == StepKind::ventura && s.iteration >= 1) return ventura_step(s, initial_support);
  return mgsa_step(s);
}

inline std::vector<MgsaState> mgsa_run(const MgsaState& initial, int iterations,
                                       StepKind kind = StepKind::standard) {
  validate_mgsa_state(initial);
  if (iterations < 0) throw std::invalid_argument("negative iteration count");
  const std::set<std::size_t> support = support_of(initial);
  std::vector<MgsaState> states;
  states.reserve(static_cast<std::size_t>(iterations) + 1);
  states.push_back(initial);
  for (int t = 0; t < iterations; ++t) states.push_back(advance(states.back(), kind, support));
  return states;
}

inline std::optional<int> detect_period(const MgsaState& initial, StepKind kind, int max_t) {
  validate_mgsa_state(initial);
  if (max_t < 1) throw std::invalid_argument("max_t must be at least 1");
  const std::set<std::size_t> support = support_of(initial);
  MgsaState s = initial;
  for (int t = 1; t <= max_t; ++t) {
    s = advance(s, kind, support);
    bool same = true;
    for (std::size_t i = 0; i < s.amplitudes.size(); ++i)
      if (std::abs(s.amplitudes[i] - initial.amplitudes[i]) > 1e-10) { same = false; break; }
    if (same) return t;
  }
  return std::nullopt;
}

struct TheoremInstance {
  int num_qubits = 0;
  std::set<std::size_t> marked;   // W
  std::set<std::size_t> support;  // S, with W a strict subset
};

inline void validate_theorem_instance(const TheoremInstance& inst) {
  if (inst.num_qubits < 2 || inst.num_qubits > 24) throw std::invalid_argument("need at least 4 states");
  const std::size_t n = std::size_t{1} << inst.num_qubits;
  for (std::size_t i : inst.support)
    if (i >= n) throw std::invalid_argument("support index out of range");
  for (std::size_t i : inst.marked)
    if (!inst.support.contains(i)) throw std::invalid_argument("marked state outside the support");
  if (inst.marked.size() != n / 4) throw std::invalid_argument("marked set must cover a quarter of the space");
  if (inst.support.size() != n / 2) throw std::invalid_argument("support must cover half the space");
}

inline MgsaState make_theorem_state(const TheoremInstance& inst) {
  validate_theorem_instance(inst);
  MgsaState s;
  s.amplitudes.assign(std::size_t{1} << inst.num_qubits, 0.0);
  const double a = 1.0 / std::sqrt(static_cast<double>(inst.support.size()));
  for (std::size_t i : inst.support) s.amplitudes[i] = a;
  s.marked = inst.marked;
  return s;
}

struct Theorem1Report {
  bool holds = false;
  std::vector<MgsaState> states;
};

// From iteration 2 on, each marked state's probability must sit at 0 or 2/N.
inline Theorem1Report verify_theorem1(const TheoremInstance& inst, int iterations, double tol = 1e-9) {
  if (iterations < 2) throw std::invalid_argument("need at least two iterations");
  Theorem1Report report;
  report.states = mgsa_run(make_theorem_state(inst), iterations);
  const double bound = 2.0 / static_cast<double>(std::size_t{1} << inst.num_qubits);
  report.holds = true;
  for (int t = 2; t <= iterations; ++t)
    for (std::size_t i : inst.marked) {
      const double a = report.states[static_cast<std::size_t>(t)].amplitudes[i];
      const double p = a * a;
      if (std::abs(p) > tol && std::abs(p - bound) > tol) report.holds = false;
    }
  return report;
}

inline TheoremInstance sample_theorem1_instance(int num_qubits, std::uint64_t seed) {
  if (num_qubits < 2 || num_qubits > 24) throw std::invalid_argument("need at least 4 states");
  const std::size_t n = std::size_t{1} << num_qubits;
  std::mt19937_64 rng(seed);
  auto bounded = [&rng](std::size_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do { x = rng(); } while (x >= limit);
    return static_cast<std::size_t>(x % bound);
  };
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[bounded(i + 1)]);
  TheoremInstance inst;
  inst.num_qubits = num_qubits;
  for (std::size_t i = 0; i < n / 4; ++i) inst.marked.insert(perm[i]);
  inst.support = inst.marked;
  for (std::size_t i = n / 4; i < n / 2; ++i) inst.support.insert(perm[i]);
  return inst;
}

}  // namespace qsv

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qsv/dsl.hpp"
#include "qsv/grover.hpp"
#include "qsv/mgsa.hpp"
#include "qsv/ones_complement.hpp"
#include "qsv/sampling.hpp"
#include "qsv/state.hpp"
#include "qsv/swap_test.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitIo = 2;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised for bad user input that already carries a rendered message.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t shots = 4096;
  std::uint64_t seed = 0;
  std::string format = "ascii";
};

struct Prediction {
  int iterations = 0;
  double closed_form = 0.0;
  double simulated = 0.0;
};

struct Report {
  std::string experiment;
  int num_qubits = 0;
  std::vector<std::pair<std::string, double>> exact;  // descending, lexicographic ties
  std::optional<qsv::SampleHistogram> samples;
  std::optional<Prediction> prediction;
};

std::vector<std::pair<std::string, double>> ordered_entries(const qsv::MeasurementDistribution& d) {
  std::vector<std::pair<std::string, double>> v(d.entries.begin(), d.entries.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return v;
}

Report make_report(std::string experiment, const qsv::MeasurementDistribution& dist, const Options& opt) {
  Report r;
  r.experiment = std::move(experiment);
  r.num_qubits = dist.num_qubits();
  r.exact = ordered_entries(dist);
  if (opt.shots > 0) r.samples = qsv::sample(dist, opt.shots, opt.seed);
  return r;
}

std::string fixed9(double v) {
  v += 0.0;  // flush negative zero
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

void print_json(const Report& r) {
  nlohmann::ordered_json j;
  j["experiment"] = r.experiment;
  j["num_qubits"] = r.num_qubits;
  j["exact"] = nlohmann::ordered_json::array();
  for (const auto& [state, p] : r.exact)
    j["exact"].push_back({{"state", state}, {"probability", p}});
  if (r.samples) {
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (const auto& [label, c] : r.samples->counts) counts[label] = c;
    j["samples"] = {{"shots", r.samples->shots}, {"seed", r.samples->seed}, {"counts", counts}};
  } else {
    j["samples"] = nullptr;
  }
  if (r.prediction)
    j["prediction"] = {{"iterations", r.prediction->iterations},
                       {"closed_form_winner_probability", r.prediction->closed_form},
                       {"simulated_winner_probability", r.prediction->simulated}};
  std::cout << j.dump(2) << "\n";
}

void print_csv(const Report& r) {
  std::cout << (r.samples ? "state,probability,count\n" : "state,probability\n");
  for (const auto& [state, p] : r.exact) {
    std::cout << state << "," << fixed9(p);
    if (r.samples) {
      const auto it = r.samples->counts.find(state);
      std::cout << "," << (it == r.samples->counts.end() ? 0 : it->second);
    }
    std::cout << "\n";
  }
}

void print_ascii(const Report& r) {
  std::cout << "experiment: " << r.experiment << " (" << r.num_qubits
            << (r.num_qubits == 1 ? " qubit)" : " qubits)") << "\n";
  if (r.samples)
    std::cout << "shots: " << r.samples->shots << "  seed: " << r.samples->seed << "\n";
  constexpr int kBarWidth = 40;
  for (const auto& [state, p] : r.exact) {
    const int bar = static_cast<int>(p * kBarWidth + 0.5);
    std::cout << state << "  " << fixed9(p) << "  |" << std::string(bar, '#')
              << std::string(kBarWidth - bar, ' ') << "|";
    if (r.samples) {
      const auto it = r.samples->counts.find(state);
      std::cout << " " << (it == r.samples->counts.end() ? 0 : it->second);
    }
    std::cout << "\n";
  }
  if (r.prediction)
    std::cout << "closed-form winner probability after " << r.prediction->iterations
              << " iteration(s): " << fixed9(r.prediction->closed_form)
              << " (simulated " << fixed9(r.prediction->simulated) << ")\n";
}

void emit(const Report& r, const Options& opt) {
  if (opt.format == "json") print_json(r);
  else if (opt.format == "csv") print_csv(r);
  else print_ascii(r);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) { out.push_back(cur); cur.clear(); }
    else cur.push_back(c);
  }
  out.push_back(cur);
  return out;
}

qsv::Qubit parse_state_token(const std::string& tok) {
  const double r = 1.0 / std::numbers::sqrt2;
  if (tok == "0") return {1.0, 0.0};
  if (tok == "1") return {0.0, 1.0};
  if (tok == "+") return {r, r};
  if (tok == "-") return {r, -r};
  throw InputError("unknown state token '" + tok + "' (expected 0, 1, + or -)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return ss.str();
}

int cmd_run(const std::string& path, const Options& opt) {
  const std::string text = read_file(path);
  const qsv::ParseResult parsed = qsv::parse_circuit(text);
  if (const auto* err = std::get_if<qsv::ParseError>(&parsed)) {
    std::cerr << path << ":" << err->line << ":" << err->column << ": " << err->message << "\n";
    return kExitInput;
  }
  const auto& circuit = std::get<qsv::Circuit>(parsed);
  qsv::StateVector s = qsv::basis_state(std::string(static_cast<std::size_t>(circuit.num_qubits), '0'));
  qsv::apply_circuit(s, circuit);
  emit(make_report("run", qsv::probabilities(s), opt), opt);
  return kExitOk;
}

int cmd_grover(const std::string& winners_csv, std::optional<int> iterations,
               const std::string& style_name, const Options& opt) {
  qsv::WinnerSet ws;
  for (const auto& w : split(winners_csv, ',')) {
    if (w.empty()) throw InputError("empty winner label");
    ws.winners.insert(w);
  }
  ws.num_qubits = static_cast<int>(ws.winners.begin()->size());
  qsv::validate_winner_set(ws);
  const std::size_t n_states = qsv::dim_of(ws.num_qubits);
  const int iters = iterations ? *iterations
                               : qsv::recommended_iterations(n_states, ws.winners.size());
  if (iters < 0) throw InputError("iterations must be non-negative");
  const qsv::OracleStyle style = style_name == "ancilla-mcmt" ? qsv::OracleStyle::ancilla_mcmt
                                                              : qsv::OracleStyle::direct_phase;
  const auto dist = qsv::run_sdp(ws, iters, style);
  Report r = make_report("grover", dist, opt);
  Prediction pred;
  pred.iterations = iters;
  pred.closed_form = qsv::closed_form_success_probability(n_states, ws.winners.size(), iters);
  pred.simulated = 0.0;
  for (const auto& w : ws.winners) {
    const auto it = dist.entries.find(w);
    if (it != dist.entries.end()) pred.simulated += it->second;
  }
  r.prediction = pred;
  emit(r, opt);
  return kExitOk;
}

int cmd_mgsa(const std::string& initial_csv, const std::string& marked_csv,
             const std::string& variant, int iters) {
  qsv::MgsaState s;
  for (const auto& tok : split(initial_csv, ',')) {
    try {
      std::size_t used = 0;
      const double v = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      s.amplitudes.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad amplitude '" + tok + "'");
    }
  }
  double norm2 = 0.0;
  for (double a : s.amplitudes) norm2 += a * a;
  if (norm2 < 1e-24) throw InputError("initial amplitudes are all zero");
  for (double& a : s.amplitudes) a /= std::sqrt(norm2);
  for (const auto& tok : split(marked_csv, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(tok, &used);
      if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
      s.marked.insert(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw InputError("bad marked index '" + tok + "'");
    }
  }
  const qsv::StepKind kind = variant == "ventura" ? qsv::StepKind::ventura : qsv::StepKind::standard;
  const auto states = qsv::mgsa_run(s, iters, kind);
  for (std::size_t t = 0; t < states.size(); ++t) {
    std::cout << t;
    for (double a : states[t].amplitudes) std::cout << "," << fixed9(a);
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_swap_test(const std::string& a_tok, const std::string& b_tok, const Options& opt) {
  const double p1 = qsv::swap_test_probability(parse_state_token(a_tok), parse_state_token(b_tok));
  qsv::MeasurementDistribution d;
  d.entries["0"] = 1.0 - p1;
  d.entries["1"] = p1;
  emit(make_report("swap-test", d, opt), opt);
  return kExitOk;
}

int cmd_ovp_gsa(const std::string& ref_tok, const std::string& tests_csv, const Options& opt) {
  const auto toks = split(tests_csv, ',');
  if (toks.size() != 2) throw InputError("--tests expects exactly two states, e.g. 1,0");
  qsv::OvpInstance inst;
  inst.reference = parse_state_token(ref_tok);
  inst.tests = {parse_state_token(toks[0]), parse_state_token(toks[1])};
  emit(make_report("ovp-gsa", qsv::run_ovp_gsa(inst), opt), opt);
  return kExitOk;
}

int cmd_ones_complement(const std::string& ref, const std::string& mixed_csv, int copies,
                        const Options& opt) {
  qsv::ComplementSpec spec;
  spec.reference = ref;
  spec.copies = copies;
  if (!mixed_csv.empty())
    for (const auto& tok : split(mixed_csv, ',')) {
      try {
        std::size_t used = 0;
        const long v = std::stol(tok, &used);
        if (used != tok.size() || v < 0) throw std::invalid_argument(tok);
        spec.mixed_qubits.insert(static_cast<int>(v));
      } catch (const std::exception&) {
        throw InputError("bad mixed-qubit index '" + tok + "'");
      }
    }
  emit(make_report("ones-complement", qsv::run_ones_complement(spec), opt), opt);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"statevector circuit simulator and experiment runner"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--shots", opt.shots, "measurement shots (0 = exact probabilities only)")
      ->capture_default_str();
  app.add_option("--seed", opt.seed, "sampling seed")->capture_default_str();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "ascii"}))
      ->capture_default_str();

  std::string run_path;
  auto* run = app.add_subcommand("run", "simulate a .qc circuit file from |0...0>");
  run->add_option("file", run_path, "circuit file")->required();
  run->fallthrough();

  std::string winners;
  std::string style = "direct-phase";
  std::optional<int> grover_iters;
  auto* grover = app.add_subcommand("grover", "multi-winner search over all basis states");
  grover->add_option("--winners", winners, "comma-separated winner bitstrings")->required();
  grover->add_option("--iterations", grover_iters, "iteration count (default: recommended)");
  grover->add_option("--style", style, "oracle realization")
      ->check(CLI::IsMember({"direct-phase", "ancilla-mcmt"}));
  grover->fallthrough();

  std::string initial, marked, variant = "standard";
  int mgsa_iters = 6;
  auto* mgsa = app.add_subcommand("mgsa", "signed amplitude recurrence trace (CSV)");
  mgsa->add_option("--initial", initial, "comma-separated initial amplitudes (normalized)")->required();
  mgsa->add_option("--marked", marked, "comma-separated marked indices")->required();
  mgsa->add_option("--variant", variant, "step variant")
      ->check(CLI::IsMember({"standard", "ventura"}));
  mgsa->add_option("--iters", mgsa_iters, "iteration count")->capture_default_str();
  mgsa->fallthrough();

  std::string st_a, st_b;
  auto* swap_test = app.add_subcommand("swap-test", "overlap test between two single-qubit states");
  swap_test->add_option("--a", st_a, "first state (0, 1, + or -)")->required();
  swap_test->add_option("--b", st_b, "second state (0, 1, + or -)")->required();
  swap_test->fallthrough();

  std::string ovp_ref, ovp_tests;
  auto* ovp = app.add_subcommand("ovp-gsa", "orthogonal-vector search on the five-qubit layout");
  ovp->add_option("--ref", ovp_ref, "reference state (0, 1, + or -)")->required();
  ovp->add_option("--tests", ovp_tests, "two test states, e.g. 1,0")->required();
  ovp->fallthrough();

  std::string oc_ref, oc_mixed;
  int oc_copies = 1;
  auto* oc = app.add_subcommand("ones-complement", "constant-depth bitwise complement circuit");
  oc->add_option("--ref", oc_ref, "reference bitstring")->required();
  oc->add_option("--mixed", oc_mixed, "comma-separated reference qubits put in superposition");
  oc->add_option("--copies", oc_copies, "output registers")->capture_default_str();
  oc->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (run->parsed()) return cmd_run(run_path, opt);
    if (grover->parsed()) return cmd_grover(winners, grover_iters, style, opt);
    if (mgsa->parsed()) return cmd_mgsa(initial, marked, variant, mgsa_iters);
    if (swap_test->parsed()) return cmd_swap_test(st_a, st_b, opt);
    if (ovp->parsed()) return cmd_ovp_gsa(ovp_ref, ovp_tests, opt);
    if (oc->parsed()) return cmd_ones_complement(oc_ref, oc_mixed, oc_copies, opt);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}

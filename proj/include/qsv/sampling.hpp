#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "qsv/state.hpp"

namespace qsv {

struct SampleHistogram {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::uint64_t> counts;  // labels with at least one hit
};

// mt19937_64 is fully specified by the standard, so histograms are
// reproducible across platforms. 53-bit mantissa draw keeps u in [0,1).
inline double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline SampleHistogram sample(const MeasurementDistribution& d, std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("shots must be at least 1");
  if (d.entries.empty()) throw std::invalid_argument("empty distribution");
  SampleHistogram h;
  h.shots = shots;
  h.seed = seed;
  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = unit_double(rng);
    double cum = 0.0;
    const std::string* hit = nullptr;
    for (const auto& [label, p] : d.entries) {
      if (p <= 0.0) continue;
      cum += p;
      hit = &label;
      if (u < cum) break;
    }
    if (!hit) throw std::invalid_argument("distribution has no positive mass");
    ++h.counts[*hit];
  }
  return h;
}

}  // namespace qsv

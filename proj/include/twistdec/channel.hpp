#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "twistdec/decoder.hpp"
#include "twistdec/rng.hpp"

namespace twistdec {

// Corrupts exactly `errors` distinct positions, each replaced by a uniformly
// random different symbol from {1..alphabet}.
Word inject_errors(const Word& word, int errors, Rng& rng);

struct SimulationStats {
  uint64_t trials = 0;
  uint64_t successes = 0;      // decoder reported success
  uint64_t correct = 0;        // and recovered the transmitted element
  uint64_t max_attempts = 0;
  std::map<int, uint64_t> attempt_histogram;  // attempts used -> trial count
  double success_rate() const {
    return trials ? static_cast<double>(successes) / trials : 0.0;
  }
};

// Transmit-corrupt-decode loop. Trial t draws from an independent stream
// seeded by derive_seed(seed, t): first a uniform code element, then the
// error pattern. When errors <= r_tw and stress is false, any decode failure,
// miscorrection, or attempt-bound breach throws an Error carrying the trial's
// seed and transcript (the guarantee says these cannot happen). Stress mode
// records failures in the statistics instead.
SimulationStats simulate(const DecoderState& state, int errors,
                         uint64_t trials, uint64_t seed, bool stress = false);

}  // namespace twistdec

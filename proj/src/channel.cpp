#include "twistdec/channel.hpp"

#include <algorithm>
#include <sstream>

namespace twistdec {

Word inject_errors(const Word& word, int errors, Rng& rng) {
  if (errors < 0 || errors > word.length())
    throw InputError("cannot inject " + std::to_string(errors) +
                     " errors into a word of length " +
                     std::to_string(word.length()));
  if (word.alphabet < 2 && errors > 0)
    throw InputError("alphabet too small to corrupt a symbol");
  Word out = word;
  for (int pos : rng.sample_points(word.length(), errors)) {
    int cur = out.symbols[pos - 1];
    // uniform over the alphabet minus the current symbol
    int v = 1 + static_cast<int>(
                    rng.below(static_cast<uint64_t>(word.alphabet - 1)));
    if (v >= cur) ++v;
    out.symbols[pos - 1] = v;
  }
  return out;
}

SimulationStats simulate(const DecoderState& state, int errors,
                         uint64_t trials, uint64_t seed, bool stress) {
  const TwistedCode& code = state.code();
  const uint64_t order = code.size();
  const int r_tw = state.params().r_tw;
  const uint64_t attempt_bound =
      static_cast<uint64_t>(code.lambda()) * state.ubb().bases.size();
  const bool guaranteed = errors <= r_tw && !stress;

  SimulationStats stats;
  for (uint64_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, t));
    size_t idx = static_cast<size_t>(rng.below(order));
    Codeword sent = code.encode_index(idx);
    Word sent_word = sent.word();
    Word received = inject_errors(sent_word, errors, rng);
    DecodeResult res = state.decode(received);

    ++stats.trials;
    uint64_t used = res.attempts.size();
    stats.max_attempts = std::max(stats.max_attempts, used);
    ++stats.attempt_histogram[static_cast<int>(used)];
    bool right =
        res.success && res.element == code.tables().perm(0, idx);
    if (res.success) ++stats.successes;
    if (right) ++stats.correct;

    if (guaranteed && (!right || used > attempt_bound)) {
      std::ostringstream os;
      os << "decoding guarantee violated at trial " << t << " (seed " << seed
         << ", stream " << derive_seed(seed, t) << "): element " << idx
         << ", errors " << errors << ", attempts " << used << "/"
         << attempt_bound << ", "
         << (res.success ? (right ? "ok" : "miscorrected") : "failed")
         << "\n  sent     " << format_word(sent_word, code.degree())
         << "\n  received " << format_word(received, code.degree());
      throw Error(os.str());
    }
  }
  return stats;
}

}  // namespace twistdec

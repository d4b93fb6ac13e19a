#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "twistdec/code.hpp"
#include "twistdec/ubb.hpp"

namespace twistdec {

enum class AttemptAction { SkipRepeat, SkipNoMatch, Reject, Accept };

struct DecodeAttempt {
  int base_row;   // 1-based row in the UBB
  int component;  // 1-based
  AttemptAction action;
  int distance = -1;  // full-word distance, set for Reject/Accept only
};

struct DecodeResult {
  bool success = false;
  Permutation element;  // recovered element in the component-1 realization
  Codeword codeword;
  int distance = -1;
  std::vector<DecodeAttempt> attempts;
};

// A twisted code bound to an uncovering-by-bases for its component-1 group.
// Decoding walks bases (outer loop) and components (inner loop); per attempt
// it reads the received symbols on the transferred base psi_i(B), looks up
// the unique matching component element, rebuilds the full codeword, and
// accepts iff that codeword lies within r_tw of the received word. On
// exhaustion it reports failure (more than r_tw errors) rather than guessing.
class DecoderState {
 public:
  // verify: check every row is a base and certify the UBB's strength at the
  // required r' exhaustively. Construction always requires the claimed
  // strength to be at least r'.
  DecoderState(TwistedCode code, Ubb ubb, bool verify = true);

  const TwistedCode& code() const { return code_; }
  const Ubb& ubb() const { return ubb_; }
  CorrectionParams params() const { return params_; }
  // Base of UBB row (0-based) transferred into component comp (0-based).
  const std::vector<int>& component_base(int row, int comp) const {
    return comp_bases_[row][comp];
  }

  DecodeResult decode(const Word& received) const;

 private:
  const BaseIndexTable& table_for(int row, int comp) const;

  TwistedCode code_;
  Ubb ubb_;
  CorrectionParams params_;
  std::vector<std::vector<std::vector<int>>> comp_bases_;  // [row][comp]
  // built on first use per (row, comp), then shared read-only
  mutable std::vector<std::vector<std::shared_ptr<const BaseIndexTable>>>
      index_cache_;
  mutable std::shared_ptr<std::mutex> mu_ = std::make_shared<std::mutex>();
};

// One line per attempt:
//   base=<row#> comp=<i> action=<skip-repeat|skip-nomatch|reject d=<n>|accept d=<n>>
std::string format_attempt_log(const std::vector<DecodeAttempt>& attempts);

// Certifies the hypothesis of the decoding guarantee: the bound UBB reaches
// strength r' = floor(r_tw / lambda) over the code's degree (exhaustive).
StrengthResult guarantee_check(const DecoderState& state);

}  // namespace twistdec

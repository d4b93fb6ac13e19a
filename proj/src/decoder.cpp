#include "twistdec/decoder.hpp"

#include <algorithm>
#include <sstream>

namespace twistdec {

DecoderState::DecoderState(TwistedCode code, Ubb ubb, bool verify)
    : code_(std::move(code)), ubb_(std::move(ubb)) {
  params_ = code_.params();
  const int n = code_.degree();
  if (ubb_.bases.empty()) throw InputError("decoder needs a nonempty UBB");
  if (ubb_.strength < params_.r_prime)
    throw InputError("UBB strength " + std::to_string(ubb_.strength) +
                     " below required r' = " + std::to_string(params_.r_prime));
  for (const auto& base : ubb_.bases)
    for (int pt : base)
      if (pt < 1 || pt > n)
        throw InputError("UBB point " + std::to_string(pt) +
                         " outside 1.." + std::to_string(n));
  if (verify) {
    int bad = first_non_base_row(ubb_, code_.group());
    if (bad >= 0)
      throw InputError("UBB row " + std::to_string(bad + 1) +
                       " is not a base of " + code_.group().name());
    StrengthResult sr = verify_strength(ubb_, n, params_.r_prime);
    if (!sr.ok) {
      std::ostringstream os;
      os << "UBB fails strength " << params_.r_prime << ": subset {";
      for (size_t i = 0; i < sr.witness.size(); ++i)
        os << (i ? "," : "") << sr.witness[i];
      os << "} meets every base";
      throw InputError(os.str());
    }
  }

  const int lambda = code_.lambda();
  comp_bases_.resize(ubb_.bases.size());
  for (size_t row = 0; row < ubb_.bases.size(); ++row) {
    comp_bases_[row].resize(lambda);
    for (int comp = 0; comp < lambda; ++comp) {
      const Permutation& psi = code_.psi(comp);
      std::vector<int> transferred;
      transferred.reserve(ubb_.bases[row].size());
      for (int pt : ubb_.bases[row]) transferred.push_back(psi.apply(pt));
      comp_bases_[row][comp] = std::move(transferred);
    }
  }
  index_cache_.assign(ubb_.bases.size(),
                      std::vector<std::shared_ptr<const BaseIndexTable>>(
                          static_cast<size_t>(lambda)));
}

const BaseIndexTable& DecoderState::table_for(int row, int comp) const {
  {
    std::lock_guard<std::mutex> lk(*mu_);
    if (index_cache_[row][comp]) return *index_cache_[row][comp];
  }
  auto built = std::make_shared<const BaseIndexTable>(
      code_.tables().component_store(comp), comp_bases_[row][comp]);
  std::lock_guard<std::mutex> lk(*mu_);
  if (!index_cache_[row][comp]) index_cache_[row][comp] = std::move(built);
  return *index_cache_[row][comp];
}

DecodeResult DecoderState::decode(const Word& received) const {
  const int n = code_.degree();
  const int lambda = code_.lambda();
  if (received.length() != lambda * n)
    throw InputError("received word has length " +
                     std::to_string(received.length()) + ", expected " +
                     std::to_string(lambda * n));
  for (int s : received.symbols)
    if (s < 1 || s > n)
      throw InputError("received symbol " + std::to_string(s) +
                       " outside 1.." + std::to_string(n));

  DecodeResult result;
  std::vector<int> symbols;
  std::vector<uint8_t> seen(static_cast<size_t>(n) + 1);
  for (size_t row = 0; row < ubb_.bases.size(); ++row) {
    for (int comp = 0; comp < lambda; ++comp) {
      DecodeAttempt attempt{static_cast<int>(row) + 1, comp + 1,
                            AttemptAction::SkipRepeat, -1};
      const std::vector<int>& base = comp_bases_[row][comp];
      symbols.clear();
      std::fill(seen.begin(), seen.end(), uint8_t{0});
      bool repeat = false;
      for (int pt : base) {
        int sym = received.symbols[static_cast<size_t>(comp) * n + pt - 1];
        if (seen[sym]) repeat = true;
        seen[sym] = 1;
        symbols.push_back(sym);
      }
      if (repeat) {
        result.attempts.push_back(attempt);
        continue;
      }
      uint32_t idx = table_for(static_cast<int>(row), comp).lookup(symbols);
      if (idx == BaseIndexTable::kNone) {
        attempt.action = AttemptAction::SkipNoMatch;
        result.attempts.push_back(attempt);
        continue;
      }
      Codeword candidate = code_.encode_index(idx);
      int d = hamming_distance(candidate.word(), received);
      attempt.distance = d;
      if (d <= params_.r_tw) {
        attempt.action = AttemptAction::Accept;
        result.attempts.push_back(attempt);
        result.success = true;
        result.element = code_.tables().perm(0, idx);
        result.codeword = std::move(candidate);
        result.distance = d;
        return result;
      }
      attempt.action = AttemptAction::Reject;
      result.attempts.push_back(attempt);
    }
  }
  return result;  // all attempts exhausted: more than r_tw errors
}

std::string format_attempt_log(const std::vector<DecodeAttempt>& attempts) {
  std::ostringstream os;
  for (const DecodeAttempt& a : attempts) {
    os << "base=" << a.base_row << " comp=" << a.component << " action=";
    switch (a.action) {
      case AttemptAction::SkipRepeat: os << "skip-repeat"; break;
      case AttemptAction::SkipNoMatch: os << "skip-nomatch"; break;
      case AttemptAction::Reject: os << "reject d=" << a.distance; break;
      case AttemptAction::Accept: os << "accept d=" << a.distance; break;
    }
    os << '\n';
  }
  return os.str();
}

StrengthResult guarantee_check(const DecoderState& state) {
  return verify_strength(state.ubb(), state.code().degree(),
                         state.params().r_prime);
}

}  // namespace twistdec

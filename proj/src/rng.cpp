#include "abm/rng.hpp"

namespace abm {

const char* draw_name(Draw label) {
  switch (label) {
    case Draw::InitExpectation: return "init-expectation";
    case Draw::ReviserSelection: return "reviser-selection";
    case Draw::Pairing: return "pairing";
    case Draw::Rationing: return "rationing";
    case Draw::RespawnExpectation: return "respawn-expectation";
  }
  return "?";
}

double MtRandom::uniform(Draw) {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

std::size_t MtRandom::pick(Draw label, std::size_t bound) {
  // One uniform per pick keeps the draw protocol trivially replayable.
  return static_cast<std::size_t>(uniform(label) * static_cast<double>(bound));
}

double RecordingRandom::uniform(Draw label) {
  const double v = inner_.uniform(label);
  out_.uniforms[static_cast<int>(label)].push_back(v);
  return v;
}

std::size_t RecordingRandom::pick(Draw label, std::size_t bound) {
  const std::size_t v = inner_.pick(label, bound);
  out_.picks[static_cast<int>(label)].push_back({bound, v});
  return v;
}

double ReplayRandom::uniform(Draw label) {
  const int k = static_cast<int>(label);
  const auto& seq = t_.uniforms[k];
  if (next_uniform_[k] >= seq.size())
    throw TranscriptError(std::string("transcript exhausted: uniform '") + draw_name(label) + "'");
  return seq[next_uniform_[k]++];
}

std::size_t ReplayRandom::pick(Draw label, std::size_t bound) {
  const int k = static_cast<int>(label);
  const auto& seq = t_.picks[k];
  if (next_pick_[k] >= seq.size())
    throw TranscriptError(std::string("transcript exhausted: pick '") + draw_name(label) + "'");
  const Transcript::PickRecord rec = seq[next_pick_[k]++];
  if (rec.bound != bound)
    throw TranscriptError(std::string("pick bound mismatch on '") + draw_name(label) + "': recorded " +
                          std::to_string(rec.bound) + ", requested " + std::to_string(bound));
  return rec.value;
}

bool ReplayRandom::fully_consumed() const {
  for (int k = 0; k < kDrawLabels; ++k) {
    if (next_uniform_[k] != t_.uniforms[k].size()) return false;
    if (next_pick_[k] != t_.picks[k].size()) return false;
  }
  return true;
}

}  // namespace abm

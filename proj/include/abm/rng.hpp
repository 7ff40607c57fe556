#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace abm {

/// Labels for every random decision the simulation makes. Draws are kept in
/// separate labeled streams so a recorded transcript can be replayed by an
/// implementation that interleaves the labels differently, as long as it
/// follows the same per-label draw protocol.
enum class Draw : int {
  InitExpectation = 0,
  ReviserSelection,
  Pairing,
  Rationing,
  RespawnExpectation,
};

inline constexpr int kDrawLabels = 5;

const char* draw_name(Draw label);

class RandomSource {
 public:
  virtual ~RandomSource() = default;

  /// Uniform double in [0,1).
  virtual double uniform(Draw label) = 0;

  /// Uniform integer in [0, bound); bound >= 1. Consumes exactly one draw.
  virtual std::size_t pick(Draw label, std::size_t bound) = 0;
};

/// mt19937_64-backed source. Floats are built from the raw 64-bit output
/// (53-bit mantissa) instead of std distributions, so streams are identical
/// across standard libraries.
class MtRandom final : public RandomSource {
 public:
  explicit MtRandom(std::uint64_t seed) : gen_(seed) {}

  double uniform(Draw label) override;
  std::size_t pick(Draw label, std::size_t bound) override;

 private:
  std::mt19937_64 gen_;
};

/// Every labeled draw of one or more periods, in per-label order.
struct Transcript {
  struct PickRecord {
    std::size_t bound;
    std::size_t value;
  };
  std::array<std::vector<double>, kDrawLabels> uniforms;
  std::array<std::vector<PickRecord>, kDrawLabels> picks;
};

class TranscriptError : public std::runtime_error {
 public:
  explicit TranscriptError(const std::string& what) : std::runtime_error(what) {}
};

/// Forwards to an inner source while appending every draw to a Transcript.
class RecordingRandom final : public RandomSource {
 public:
  RecordingRandom(RandomSource& inner, Transcript& out) : inner_(inner), out_(out) {}

  double uniform(Draw label) override;
  std::size_t pick(Draw label, std::size_t bound) override;

 private:
  RandomSource& inner_;
  Transcript& out_;
};

/// Serves draws from a recorded transcript. Exhaustion of a label, or a pick
/// requested with a different bound than was recorded, signals that the
/// replaying implementation consumes randomness differently and raises
/// TranscriptError.
class ReplayRandom final : public RandomSource {
 public:
  explicit ReplayRandom(const Transcript& transcript) : t_(transcript) {}

  double uniform(Draw label) override;
  std::size_t pick(Draw label, std::size_t bound) override;

  /// True once every recorded draw of every label has been served.
  bool fully_consumed() const;

 private:
  const Transcript& t_;
  std::array<std::size_t, kDrawLabels> next_uniform_{};
  std::array<std::size_t, kDrawLabels> next_pick_{};
};

}  // namespace abm

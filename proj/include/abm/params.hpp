#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace abm {

/// Thrown on malformed or out-of-range configuration input.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// How a reviser finds a conversation partner. `Revisers` matches the
/// period's revisers among themselves (both sides update; an odd leftover
/// reads a random non-reviser). `Anyone` lets each reviser read a uniformly
/// chosen other agent, updating only itself.
enum class PairingMode { Revisers, Anyone };

/// Full configuration of a single simulation run.
struct Params {
  int n_agents = 1000;
  double alpha = 0.5;   // weight of the last public price in a revision
  double sigma = 0.5;   // peer expectations further away than this are ignored
  double gamma = 0.5;   // fraction of agents revising per period
  double cost = 0.005;  // per-order transaction cost
  double p0 = 0.9;      // introduction price of the asset
  double w0 = 1.0;      // initial wealth
  double l0 = 1.0;      // initial liquidity, in (0, w0]
  int max_steps = 100;
  double steady_tol = 1e-4;  // consecutive-price gap defining the steady state
  std::uint64_t seed = 1;
  double fundamental = 0.5;     // reference value for the inefficiency metric
  bool charge_unmatched = true;  // unexecuted orders still pay the order cost
  PairingMode pairing = PairingMode::Revisers;

  /// Throws ConfigError naming the violated bound.
  void validate() const;
};

}  // namespace abm

#pragma once

#include <vector>

#include "abm/params.hpp"
#include "abm/rng.hpp"

namespace abm {

enum class Role : unsigned char { Buyer, Seller, Abstain };

struct Agent {
  double expectation;  // price expectation, always in [0,1]
  double wealth;
  double liquidity;
};

struct MarketState {
  std::vector<Agent> agents;
  double price = 0.0;
  int period = 0;
  long exits_total = 0;
};

/// Buyer when the expected gain over the current price clears the order cost,
/// seller in the mirrored case, abstain otherwise (ties at exactly `cost`
/// abstain: participation requires a strictly positive expected gain).
Role classify(double expectation, double price, double cost);

/// Price equating buy and sell orders. The imbalance
///   delta(x) = #{e_i > x + cost} - #{e_i < x - cost}
/// is a nonincreasing step function of x with breakpoints at e_i ± cost. The
/// solution set is the span where delta == 0 — the result is its midpoint —
/// or, when delta jumps across zero without attaining it, the jump point.
/// (Generally: the mean over all such features; with monotone delta there is
/// exactly one.) If delta never changes sign on [0,1] the price saturates at
/// 1 (excess demand everywhere) or 0 (excess supply everywhere).
double clearing_price(const std::vector<double>& expectations, double cost);

/// |buyers - sellers| / N at the given price, in [0,1].
double excess_fraction(const std::vector<double>& expectations, double price, double cost);

/// Convex price adjustment: beta * p_star + (1 - beta) * price.
double price_step(double price, double p_star, double beta);

struct SettlementReport {
  std::vector<double> d_wealth;     // per-agent wealth deltas
  std::vector<double> d_liquidity;  // per-agent liquidity deltas
  int executed = 0;                 // matched buyer/seller pairs
  int orders = 0;                   // buyers + sellers
};

/// Executes min(buyers, sellers) unit trades. The deficit side trades in
/// full; the surplus side is rationed by drawing uniformly without
/// replacement. A matched seller gains price_now - price_next - cost wealth
/// and price_now - cost liquidity; a matched buyer the mirrored amounts.
/// Unmatched order-placers pay `cost` on both accounts when
/// `charge_unmatched` is set, nothing otherwise. Abstainers are untouched.
///
/// Rationing draw protocol: the surplus side's agent indices are listed in
/// ascending order and m slots are filled by a partial Fisher-Yates pass, one
/// pick(Rationing, size - k) per slot k. No draw happens when the sides are
/// balanced or either side is empty.
SettlementReport settle_trades(const std::vector<Role>& roles, double price_now, double price_next,
                               double cost, bool charge_unmatched, RandomSource& rng);

struct ExitReport {
  int count = 0;
  double wealth_reset = 0.0;     // sum of (w0 - exiting wealth)
  double liquidity_reset = 0.0;  // sum of (l0 - exiting liquidity)
};

/// Replaces every agent whose liquidity dried up (<= 0) with a fresh agent:
/// wealth w0, liquidity l0, expectation ~ uniform(RespawnExpectation), drawn
/// in ascending agent order. Increments state.exits_total.
ExitReport apply_exits(MarketState& state, const Params& params, RandomSource& rng);

}  // namespace abm

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "abm/expectations.hpp"
#include "abm/market.hpp"

namespace abm {

struct StepRecord {
  int period;               // 1-based period this record closes
  double price;             // public price after the period's adjustment
  double p_star;            // clearing price the adjustment moved toward
  double beta;              // excess-order fraction at the previous price
  int trades;               // executed matches
  double dispersion;        // max - min expectation at classification time
  int exits;                // agents replaced at the end of the period
  double mean_expectation;  // mean expectation at classification time
};

using TimeSeries = std::vector<StepRecord>;

struct StepResult {
  StepRecord record;
  int orders = 0;             // buyers + sellers this period
  double wealth_reset = 0.0;  // respawn correction: sum of (w0 - exiting wealth)
  double liquidity_reset = 0.0;
};

struct RunSummary {
  double final_price = 0.0;
  std::optional<int> steady_period;  // first t with |P_{t+1} - P_t| < steady_tol
  double inefficiency = 0.0;         // |final_price - fundamental|
  double volatility = 0.0;           // price std dev over the last 90% of periods
  long exits_total = 0;
  bool stopped_early = false;  // final period had no order-placers
};

/// N agents with i.i.d. uniform expectations (one uniform(InitExpectation)
/// per agent in index order), wealth w0, liquidity l0; price p0, period 0.
MarketState init_market(const Params& params, RandomSource& rng);

/// One period, in order: revision against the current price, classification
/// against the current price, clearing price from the post-revision
/// expectations, excess fraction, price adjustment, settlement, exits.
/// A period with no order-placers records beta = 0, trades = 0 and leaves the
/// price unchanged.
StepResult step(MarketState& state, const Params& params, RandomSource& rng);

/// Runs exactly max_steps periods (the full series keeps the volatility
/// window well-defined; the steady state is recorded, not acted on).
/// Deterministic given the params, including the seed.
std::pair<TimeSeries, RunSummary> run(const Params& params);

/// Least-squares slope of log2(dispersion) against the period index over the
/// pre-stop window (periods with dispersion >= 2*cost). Rejects series whose
/// dispersion starts below 2*cost or windows shorter than 5 periods.
double measure_dispersion_slope(const TimeSeries& series, double cost);

}  // namespace abm

#include "abm/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace abm {

MarketState init_market(const Params& params, RandomSource& rng) {
  MarketState state;
  state.agents.resize(params.n_agents);
  for (Agent& agent : state.agents) {
    agent.expectation = rng.uniform(Draw::InitExpectation);
    agent.wealth = params.w0;
    agent.liquidity = params.l0;
  }
  state.price = params.p0;
  state.period = 0;
  state.exits_total = 0;
  return state;
}

StepResult step(MarketState& state, const Params& params, RandomSource& rng) {
  const int n = static_cast<int>(state.agents.size());

  run_revision_round(state, params, rng);

  thread_local std::vector<Role> roles;
  thread_local std::vector<double> expectations;
  roles.resize(n);
  expectations.resize(n);
  long n_buy = 0, n_sell = 0;
  for (int i = 0; i < n; ++i) {
    const double e = state.agents[i].expectation;
    expectations[i] = e;
    roles[i] = classify(e, state.price, params.cost);
    if (roles[i] == Role::Buyer) ++n_buy;
    else if (roles[i] == Role::Seller) ++n_sell;
  }

  const double p_star = clearing_price(expectations, params.cost);
  const double beta = static_cast<double>(std::labs(n_buy - n_sell)) / static_cast<double>(n);
  const double new_price = price_step(state.price, p_star, beta);

  const SettlementReport settlement =
      settle_trades(roles, state.price, new_price, params.cost, params.charge_unmatched, rng);
  for (int i = 0; i < n; ++i) {
    state.agents[i].wealth += settlement.d_wealth[i];
    state.agents[i].liquidity += settlement.d_liquidity[i];
  }

  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const double e = expectations[i];
    lo = std::min(lo, e);
    hi = std::max(hi, e);
    sum += e;
  }

  const ExitReport exits = apply_exits(state, params, rng);

  state.price = new_price;
  state.period += 1;

  StepResult result;
  result.record = StepRecord{state.period,        new_price, p_star,      beta,
                             settlement.executed, hi - lo,   exits.count, sum / static_cast<double>(n)};
  result.orders = settlement.orders;
  result.wealth_reset = exits.wealth_reset;
  result.liquidity_reset = exits.liquidity_reset;
  return result;
}

namespace {

double population_std(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (*lo == *hi) return 0.0;  // a constant series has exactly zero spread
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double acc = 0.0;
  for (double v : values) acc += (v - mean) * (v - mean);
  return std::sqrt(acc / static_cast<double>(values.size()));
}

}  // namespace

std::pair<TimeSeries, RunSummary> run(const Params& params) {
  params.validate();
  MtRandom rng(params.seed);
  MarketState state = init_market(params, rng);

  TimeSeries series;
  series.reserve(params.max_steps);
  RunSummary summary;
  double prev_price = state.price;
  int last_orders = 0;
  for (int t = 1; t <= params.max_steps; ++t) {
    const StepResult result = step(state, params, rng);
    series.push_back(result.record);
    if (!summary.steady_period && std::abs(state.price - prev_price) < params.steady_tol)
      summary.steady_period = t - 1;
    prev_price = state.price;
    last_orders = result.orders;
  }

  summary.final_price = state.price;
  summary.inefficiency = std::abs(state.price - params.fundamental);
  summary.exits_total = state.exits_total;
  summary.stopped_early = last_orders == 0;

  const int window = static_cast<int>(std::ceil(0.9 * params.max_steps));
  std::vector<double> tail;
  tail.reserve(window);
  for (std::size_t i = series.size() - std::min<std::size_t>(window, series.size());
       i < series.size(); ++i)
    tail.push_back(series[i].price);
  summary.volatility = population_std(tail);
  return {std::move(series), summary};
}

double measure_dispersion_slope(const TimeSeries& series, double cost) {
  if (series.empty()) throw std::invalid_argument("measure_dispersion_slope: empty series");
  const double floor = 2.0 * cost;
  if (series.front().dispersion < floor)
    throw std::invalid_argument("measure_dispersion_slope: dispersion already below 2*cost at the start");

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  long count = 0;
  for (const StepRecord& rec : series) {
    if (rec.dispersion < floor) break;
    const double x = static_cast<double>(rec.period);
    const double y = std::log2(rec.dispersion);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 5)
    throw std::invalid_argument("measure_dispersion_slope: needs at least 5 pre-stop periods");
  const double denom = count * sxx - sx * sx;
  return (count * sxy - sx * sy) / denom;
}

}  // namespace abm

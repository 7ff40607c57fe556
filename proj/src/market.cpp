#include "abm/market.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace abm {

Role classify(double expectation, double price, double cost) {
  if (expectation - price > cost) return Role::Buyer;
  if (price - expectation > cost) return Role::Seller;
  return Role::Abstain;
}

namespace {

// Pieces over the sorted boundary grid x[0..m): even p is the point x[p/2],
// odd p the open interval (x[(p-1)/2], x[(p+1)/2]). delta is nonincreasing
// along pieces because it is nonincreasing in the price.
struct PieceGrid {
  const std::vector<double>& x;

  std::size_t count() const { return 2 * x.size() - 1; }
  double representative(std::size_t p) const {
    return p % 2 == 0 ? x[p / 2] : 0.5 * (x[(p - 1) / 2] + x[(p + 1) / 2]);
  }
  double left_edge(std::size_t p) const { return p % 2 == 0 ? x[p / 2] : x[(p - 1) / 2]; }
  double right_edge(std::size_t p) const { return p % 2 == 0 ? x[p / 2] : x[(p + 1) / 2]; }
};

}  // namespace

double clearing_price(const std::vector<double>& expectations, double cost) {
  if (expectations.empty()) throw std::invalid_argument("clearing_price: empty expectation sequence");

  thread_local std::vector<double> sorted;
  thread_local std::vector<double> grid;
  sorted = expectations;
  std::sort(sorted.begin(), sorted.end());

  // Boundary grid: {e_i - cost} and {e_i + cost} clipped to [0,1], plus the
  // interval ends. Both shifted sequences are already sorted; merge them.
  grid.clear();
  grid.reserve(2 * sorted.size() + 2);
  grid.push_back(0.0);
  std::size_t lo = 0, hi = 0;
  const std::size_t n = sorted.size();
  while (lo < n || hi < n) {
    double v;
    if (hi >= n || (lo < n && sorted[lo] - cost <= sorted[hi] + cost)) {
      v = sorted[lo++] - cost;
    } else {
      v = sorted[hi++] + cost;
    }
    if (v < 0.0 || v > 1.0) continue;
    if (v > grid.back()) grid.push_back(v);
  }
  if (grid.back() < 1.0) grid.push_back(1.0);

  const auto delta = [&](double price) -> long {
    const double buy_edge = price + cost;
    const double sell_edge = price - cost;
    const long n_buy = sorted.end() - std::upper_bound(sorted.begin(), sorted.end(), buy_edge);
    const long n_sell = std::lower_bound(sorted.begin(), sorted.end(), sell_edge) - sorted.begin();
    return n_buy - n_sell;
  };

  const PieceGrid pieces{grid};
  const std::size_t total = pieces.count();

  // First piece where delta drops below zero, and first where it leaves the
  // strictly positive range. Monotonicity makes both binary-searchable.
  std::size_t first_negative = total;
  {
    std::size_t lo_p = 0, hi_p = total;
    while (lo_p < hi_p) {
      const std::size_t mid = lo_p + (hi_p - lo_p) / 2;
      if (delta(pieces.representative(mid)) < 0) hi_p = mid; else lo_p = mid + 1;
    }
    first_negative = lo_p;
  }
  std::size_t first_nonpositive = total;
  {
    std::size_t lo_p = 0, hi_p = first_negative;
    while (lo_p < hi_p) {
      const std::size_t mid = lo_p + (hi_p - lo_p) / 2;
      if (delta(pieces.representative(mid)) <= 0) hi_p = mid; else lo_p = mid + 1;
    }
    first_nonpositive = lo_p;
  }

  if (first_nonpositive == total) return 1.0;  // excess demand everywhere
  if (first_negative == 0) return 0.0;         // excess supply everywhere

  if (first_negative > first_nonpositive) {
    // delta == 0 on pieces [first_nonpositive, first_negative): one span.
    const double span_lo = pieces.left_edge(first_nonpositive);
    const double span_hi = pieces.right_edge(first_negative - 1);
    return 0.5 * (span_lo + span_hi);
  }
  // Sign jumps across zero between adjacent pieces; the shared edge is the
  // breakpoint where it happens.
  return pieces.right_edge(first_negative - 1);
}

double excess_fraction(const std::vector<double>& expectations, double price, double cost) {
  if (expectations.empty()) throw std::invalid_argument("excess_fraction: empty expectation sequence");
  long n_buy = 0, n_sell = 0;
  for (double e : expectations) {
    switch (classify(e, price, cost)) {
      case Role::Buyer: ++n_buy; break;
      case Role::Seller: ++n_sell; break;
      case Role::Abstain: break;
    }
  }
  return static_cast<double>(std::labs(n_buy - n_sell)) / static_cast<double>(expectations.size());
}

double price_step(double price, double p_star, double beta) {
  return beta * p_star + (1.0 - beta) * price;
}

SettlementReport settle_trades(const std::vector<Role>& roles, double price_now, double price_next,
                               double cost, bool charge_unmatched, RandomSource& rng) {
  const std::size_t n = roles.size();
  SettlementReport report;
  report.d_wealth.assign(n, 0.0);
  report.d_liquidity.assign(n, 0.0);

  thread_local std::vector<int> buyers;
  thread_local std::vector<int> sellers;
  buyers.clear();
  sellers.clear();
  for (std::size_t i = 0; i < n; ++i) {
    if (roles[i] == Role::Buyer) buyers.push_back(static_cast<int>(i));
    else if (roles[i] == Role::Seller) sellers.push_back(static_cast<int>(i));
  }
  const std::size_t executed = std::min(buyers.size(), sellers.size());
  report.executed = static_cast<int>(executed);
  report.orders = static_cast<int>(buyers.size() + sellers.size());

  // Ration the surplus side: the first `executed` entries after a partial
  // shuffle are the matched ones.
  std::vector<int>& surplus = buyers.size() > sellers.size() ? buyers : sellers;
  if (executed < surplus.size()) {
    for (std::size_t k = 0; k < executed; ++k) {
      const std::size_t j = rng.pick(Draw::Rationing, surplus.size() - k);
      std::swap(surplus[k], surplus[k + j]);
    }
  }

  const double seller_w = price_now - price_next - cost;
  const double seller_l = price_now - cost;
  const double buyer_w = -price_now + price_next - cost;
  const double buyer_l = -price_now - cost;

  for (std::size_t k = 0; k < buyers.size(); ++k) {
    const int i = buyers[k];
    const bool matched = buyers.size() <= sellers.size() || k < executed;
    if (matched) {
      report.d_wealth[i] = buyer_w;
      report.d_liquidity[i] = buyer_l;
    } else if (charge_unmatched) {
      report.d_wealth[i] = -cost;
      report.d_liquidity[i] = -cost;
    }
  }
  for (std::size_t k = 0; k < sellers.size(); ++k) {
    const int i = sellers[k];
    const bool matched = sellers.size() <= buyers.size() || k < executed;
    if (matched) {
      report.d_wealth[i] = seller_w;
      report.d_liquidity[i] = seller_l;
    } else if (charge_unmatched) {
      report.d_wealth[i] = -cost;
      report.d_liquidity[i] = -cost;
    }
  }
  return report;
}

ExitReport apply_exits(MarketState& state, const Params& params, RandomSource& rng) {
  ExitReport report;
  for (Agent& agent : state.agents) {
    if (agent.liquidity > 0.0) continue;
    ++report.count;
    report.wealth_reset += params.w0 - agent.wealth;
    report.liquidity_reset += params.l0 - agent.liquidity;
    agent.wealth = params.w0;
    agent.liquidity = params.l0;
    agent.expectation = rng.uniform(Draw::RespawnExpectation);
  }
  state.exits_total += report.count;
  return report;
}

}  // namespace abm

#include "abm/expectations.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace abm {

std::vector<int> select_revisers(int n_agents, double gamma, RandomSource& rng) {
  const int k = static_cast<int>(std::floor(gamma * n_agents + 0.5));
  std::vector<int> idx(n_agents);
  std::iota(idx.begin(), idx.end(), 0);
  for (int t = 0; t < k; ++t) {
    const std::size_t j = rng.pick(Draw::ReviserSelection, static_cast<std::size_t>(n_agents - t));
    std::swap(idx[t], idx[t + static_cast<int>(j)]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

RevisionRound pair_revisers(std::vector<int> revisers, int n_agents, RandomSource& rng) {
  RevisionRound round;
  round.revisers = revisers;
  const std::size_t m = revisers.size();
  if (m == 0) return round;

  for (std::size_t k = 0; k + 1 < m; ++k) {
    const std::size_t j = rng.pick(Draw::Pairing, m - k);
    std::swap(revisers[k], revisers[k + j]);
  }
  round.pairs.reserve(m / 2);
  for (std::size_t k = 0; k + 1 < m; k += 2) round.pairs.emplace_back(revisers[k], revisers[k + 1]);

  if (m % 2 == 1) {
    const int lone = revisers[m - 1];
    std::vector<int> others;
    if (static_cast<int>(m) < n_agents) {
      // Complement of the ascending reviser set.
      others.reserve(n_agents - m);
      std::size_t r = 0;
      for (int i = 0; i < n_agents; ++i) {
        if (r < m && round.revisers[r] == i) { ++r; continue; }
        others.push_back(i);
      }
    } else {
      for (int i = 0; i < n_agents; ++i)
        if (i != lone) others.push_back(i);
    }
    const int partner = others[rng.pick(Draw::Pairing, others.size())];
    round.leftover = std::make_pair(lone, partner);
  }
  return round;
}

std::pair<double, double> revise_pair(double e_i, double e_j, double price, double alpha,
                                      double sigma) {
  const bool ignore = std::abs(e_i - e_j) >= sigma;
  const double mid = 0.5 * (e_i + e_j);
  const double base_i = ignore ? e_i : mid;
  const double base_j = ignore ? e_j : mid;
  return {alpha * price + (1.0 - alpha) * base_i, alpha * price + (1.0 - alpha) * base_j};
}

void run_revision_round(MarketState& state, const Params& params, RandomSource& rng) {
  const int n = static_cast<int>(state.agents.size());
  std::vector<int> chosen = select_revisers(n, params.gamma, rng);

  if (params.pairing == PairingMode::Anyone) {
    for (int i : chosen) {
      const std::size_t r = rng.pick(Draw::Pairing, static_cast<std::size_t>(n - 1));
      const int partner = static_cast<int>(r) >= i ? static_cast<int>(r) + 1 : static_cast<int>(r);
      state.agents[i].expectation =
          revise_pair(state.agents[i].expectation, state.agents[partner].expectation, state.price,
                      params.alpha, params.sigma)
              .first;
    }
    return;
  }

  const RevisionRound round = pair_revisers(std::move(chosen), n, rng);
  for (const auto& [i, j] : round.pairs) {
    const auto [ei, ej] = revise_pair(state.agents[i].expectation, state.agents[j].expectation,
                                      state.price, params.alpha, params.sigma);
    state.agents[i].expectation = ei;
    state.agents[j].expectation = ej;
  }
  if (round.leftover) {
    const auto [i, j] = *round.leftover;
    state.agents[i].expectation =
        revise_pair(state.agents[i].expectation, state.agents[j].expectation, state.price,
                    params.alpha, params.sigma)
            .first;
  }
}

}  // namespace abm

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "abm/market.hpp"
#include "abm/rng.hpp"

namespace abm {

struct RevisionRound {
  std::vector<int> revisers;                    // ascending
  std::vector<std::pair<int, int>> pairs;       // disjoint pairs of revisers
  std::optional<std::pair<int, int>> leftover;  // (reviser, read-only partner)
};

/// round(gamma * n_agents) distinct indices (half-up rounding), uniform
/// without replacement, returned ascending. Draw protocol: a partial
/// Fisher-Yates over 0..n-1 with one pick(ReviserSelection, n - k) per slot.
std::vector<int> select_revisers(int n_agents, double gamma, RandomSource& rng);

/// Uniform perfect matching on the revisers: Fisher-Yates shuffle of the
/// ascending list (one pick(Pairing, m - k) per slot), consecutive elements
/// paired. An odd leftover (the last shuffled element) reads one
/// pick(Pairing, ·)-chosen non-reviser, who is not updated; when every agent
/// is a reviser the partner is chosen among the other revisers instead.
RevisionRound pair_revisers(std::vector<int> revisers, int n_agents, RandomSource& rng);

/// One pairwise revision. Each side keeps its own expectation when
/// |e_i - e_j| >= sigma and adopts the pair average otherwise; the result is
/// then blended with the public price at weight alpha. Symmetric in (i, j).
std::pair<double, double> revise_pair(double e_i, double e_j, double price, double alpha,
                                      double sigma);

/// Selects, pairs and updates this period's revisers in place, against the
/// current public price. In PairingMode::Anyone each reviser instead reads a
/// uniformly chosen other agent (one pick(Pairing, n-1) each, in ascending
/// reviser order) and only the reviser updates.
void run_revision_round(MarketState& state, const Params& params, RandomSource& rng);

}  // namespace abm

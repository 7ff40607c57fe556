#include "abm/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <sstream>
#include <thread>

namespace abm {

namespace {

std::vector<double> make_grid(double lo, double hi, double step, const char* name) {
  const double span = hi - lo;
  if (!(step > 0.0) || span < 0.0) throw ConfigError(std::string(name) + ": invalid range");
  const long count = std::lround(span / step);
  if (std::abs(lo + count * step - hi) > 1e-9)
    throw ConfigError(std::string(name) + ": step does not divide the range");
  std::vector<double> grid(count + 1);
  for (long i = 0; i <= count; ++i) grid[i] = lo + i * step;
  grid.back() = hi;
  return grid;
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double mean_of(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x;
  return v.empty() ? 0.0 : acc / static_cast<double>(v.size());
}

}  // namespace

void SweepSpec::validate() const {
  base.validate();
  if (replications < 1) throw ConfigError("replications must be >= 1");
  if (gammas.empty()) throw ConfigError("gammas must be nonempty");
  for (double g : gammas)
    if (!(g >= 0.0 && g <= 1.0)) {
      std::ostringstream os;
      os << "gamma ∈ [0,1], got " << g;
      throw ConfigError(os.str());
    }
  alpha_grid();
  sigma_grid();
}

std::vector<double> SweepSpec::alpha_grid() const {
  return make_grid(alpha_min, alpha_max, alpha_step, "alpha grid");
}

std::vector<double> SweepSpec::sigma_grid() const {
  return make_grid(sigma_min, sigma_max, sigma_step, "sigma grid");
}

std::uint64_t child_seed(std::uint64_t master, double gamma, double alpha, double sigma, int rep) {
  std::uint64_t h = mix64(master);
  h = mix64(h ^ std::bit_cast<std::uint64_t>(gamma));
  h = mix64(h ^ std::bit_cast<std::uint64_t>(alpha));
  h = mix64(h ^ std::bit_cast<std::uint64_t>(sigma));
  h = mix64(h ^ static_cast<std::uint64_t>(rep));
  return h;
}

GridResult run_sweep(const SweepSpec& spec, int workers, const SweepProgress& progress) {
  spec.validate();
  const std::vector<double> alphas = spec.alpha_grid();
  const std::vector<double> sigmas = spec.sigma_grid();

  GridResult result;
  result.spec = spec;
  result.cells.resize(spec.gammas.size() * alphas.size() * sigmas.size());
  for (std::size_t gi = 0; gi < spec.gammas.size(); ++gi)
    for (std::size_t ai = 0; ai < alphas.size(); ++ai)
      for (std::size_t si = 0; si < sigmas.size(); ++si) {
        GridCell& cell = result.cells[(gi * alphas.size() + ai) * sigmas.size() + si];
        cell.gamma = spec.gammas[gi];
        cell.alpha = alphas[ai];
        cell.sigma = sigmas[si];
      }

  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  workers = std::min<int>(workers, static_cast<int>(result.cells.size()));

  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  const std::size_t total = result.cells.size();

  const auto worker = [&] {
    for (;;) {
      const std::size_t index = next.fetch_add(1);
      if (index >= total) return;
      GridCell& cell = result.cells[index];
      cell.inefficiency_reps.reserve(spec.replications);
      cell.volatility_reps.reserve(spec.replications);
      cell.exit_reps.reserve(spec.replications);
      Params params = spec.base;
      params.gamma = cell.gamma;
      params.alpha = cell.alpha;
      params.sigma = cell.sigma;
      for (int rep = 0; rep < spec.replications; ++rep) {
        params.seed = child_seed(spec.master_seed, cell.gamma, cell.alpha, cell.sigma, rep);
        const RunSummary summary = run(params).second;
        cell.inefficiency_reps.push_back(summary.inefficiency);
        cell.volatility_reps.push_back(summary.volatility);
        cell.exit_reps.push_back(static_cast<double>(summary.exits_total));
      }
      cell.mean_inefficiency = mean_of(cell.inefficiency_reps);
      cell.mean_volatility = mean_of(cell.volatility_reps);
      cell.mean_exits = mean_of(cell.exit_reps);
      const std::size_t finished = done.fetch_add(1) + 1;
      if (progress) progress(finished, total);
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  return result;
}

namespace {

// Interior minimum at least `delta` below both endpoints of the profile.
bool has_interior_dip(const std::vector<double>& profile, double delta) {
  if (profile.size() < 3) return false;
  double interior_min = profile[1];
  for (std::size_t i = 1; i + 1 < profile.size(); ++i) interior_min = std::min(interior_min, profile[i]);
  return interior_min <= profile.front() - delta && interior_min <= profile.back() - delta;
}

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const double n = static_cast<double>(xs.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

std::size_t nearest_index(const std::vector<double>& grid, double value) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (std::abs(grid[i] - value) < std::abs(grid[best] - value)) best = i;
  return best;
}

double highlighted_alpha_for(double gamma) {
  if (gamma < 0.35) return 0.25;
  if (gamma < 0.65) return 0.1;
  return 0.05;
}

}  // namespace

NonmonotonicityReport nonmonotonicity_report(const GridResult& grid, double delta) {
  const std::vector<double> alphas = grid.spec.alpha_grid();
  const std::vector<double> sigmas = grid.spec.sigma_grid();
  const std::size_t na = alphas.size(), ns = sigmas.size();

  NonmonotonicityReport report;
  report.delta = delta;

  std::vector<std::size_t> order(grid.spec.gammas.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return grid.spec.gammas[a] < grid.spec.gammas[b]; });

  const auto cell_at = [&](std::size_t gi, std::size_t ai, std::size_t si) -> const GridCell& {
    return grid.cells[(gi * na + ai) * ns + si];
  };

  for (std::size_t gi : order) {
    NonmonotonicityReport::GammaFindings findings;
    findings.gamma = grid.spec.gammas[gi];

    for (std::size_t si = 0; si < ns; ++si) {
      std::vector<double> profile(na);
      for (std::size_t ai = 0; ai < na; ++ai) profile[ai] = cell_at(gi, ai, si).mean_inefficiency;
      if (has_interior_dip(profile, delta)) findings.dip_sigmas.push_back(sigmas[si]);
    }

    findings.highlighted_alpha = alphas[nearest_index(alphas, highlighted_alpha_for(findings.gamma))];
    {
      const std::size_t ai = nearest_index(alphas, findings.highlighted_alpha);
      std::vector<double> profile(ns);
      for (std::size_t si = 0; si < ns; ++si) profile[si] = cell_at(gi, ai, si).mean_inefficiency;
      findings.sigma_interior_minimum = has_interior_dip(profile, delta);
    }

    const auto sigma_slope_at = [&](double alpha) {
      const std::size_t ai = nearest_index(alphas, alpha);
      std::vector<double> ys(ns);
      for (std::size_t si = 0; si < ns; ++si) ys[si] = cell_at(gi, ai, si).mean_inefficiency;
      return least_squares_slope(sigmas, ys);
    };
    findings.slope_low_alpha = sigma_slope_at(0.1);
    findings.slope_high_alpha = sigma_slope_at(0.3);

    report.per_gamma.push_back(std::move(findings));
  }

  report.band_extent_nonincreasing = true;
  for (std::size_t i = 1; i < report.per_gamma.size(); ++i)
    if (report.per_gamma[i].dip_sigmas.size() > report.per_gamma[i - 1].dip_sigmas.size())
      report.band_extent_nonincreasing = false;

  return report;
}

}  // namespace abm

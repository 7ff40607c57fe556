#pragma once

#include <array>

namespace abm::analytic {

/// Fitted dispersion-decay law: expectations spread shrinks as
/// 2^(-q(gamma) * t) with q(gamma) = a * gamma + b. The errors widen test
/// tolerances; predictions use the central values.
struct QGammaFit {
  double a = 0.61;
  double b = -0.13;
  double a_err = 0.02;
  double b_err = 0.01;
};

inline constexpr QGammaFit kQGammaFit{};

/// Initial excess-order fraction when every reviser has adopted the
/// introduction price p0 > 1/2 and the rest remain uniform:
/// (2*p0 - 1) * (1 - gamma). Rejects p0 <= 1/2.
double adaptive_beta0(double p0, double gamma);

struct AdaptivePrediction {
  double p1;             // price after the first period
  double longrun_bound;  // bound on |P_inf - p0|: cost * (1 - gamma)
};

/// One-period and long-run predictions for purely price-driven revisions
/// (alpha = 1) with partial participation gamma < 1.
AdaptivePrediction adaptive_prediction(double p0, double cost, double gamma);

/// Extreme-case period count until the never-revised group is exhausted:
/// -ln(n_agents) / ln(1 - gamma). Rejects gamma in {0, 1}.
double adaptive_convergence_time(int n_agents, double gamma);

/// One-period price map under frozen expectations (no revision toward
/// peers or price): p -/+ (2p-1)^2 / 2 on either side of the fixed point 1/2.
double map_f(double p);

/// Rescaled price-deviation map for the full-mixing regime:
/// sqrt(2)*x - 2*sqrt(2)*|x|*x. Fixed points 0 (unstable) and
/// +/-(2-sqrt(2))/4 (stable).
double map_g(double x);
std::array<double, 3> g_fixed_points();

/// Central fitted decay rate a*gamma + b; may be <= 0 for small gamma, in
/// which case no contraction is predicted.
double q_gamma(double gamma);

/// 2^(-rate * t): dispersion of expectations after t periods, normalized to
/// 1 at t = 0.
double dispersion_decay(int t, double rate);

/// Dispersion prediction at the given gamma: rate is exactly 1/2 at
/// gamma = 1 and q_gamma(gamma) otherwise. Rejects t < 0.
double dispersion_prediction(int t, double gamma);

/// Period at which all expectations fit inside a band of width 2*cost and
/// trading stops: -(1 + log2(cost)) / rate.
double stop_time_for_rate(double cost, double rate);

/// Stop time at the given gamma (rate 1/2 at gamma = 1, q_gamma otherwise).
/// Rejects cost outside (0,1) and q <= 0.
double stop_time(double cost, double gamma);

/// Rescaled price-deviation map for partial participation:
/// 2^q * y - 2^(q+1) * |y| * y with q = q_gamma(gamma). Fixed points 0
/// (unstable) and the symmetric pair (stable). Rejects q <= 0.
double map_y(double y, double gamma);
std::array<double, 3> y_fixed_points(double gamma);

}  // namespace abm::analytic

#include "abm/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace abm::analytic {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

}  // namespace

double adaptive_beta0(double p0, double gamma) {
  require(p0 > 0.5, "adaptive_beta0: requires p0 > 1/2");
  require(gamma >= 0.0 && gamma <= 1.0, "adaptive_beta0: requires gamma in [0,1]");
  return (2.0 * p0 - 1.0) * (1.0 - gamma);
}

AdaptivePrediction adaptive_prediction(double p0, double cost, double gamma) {
  const double beta0 = adaptive_beta0(p0, gamma);
  return {p0 - beta0 * cost, cost * (1.0 - gamma)};
}

double adaptive_convergence_time(int n_agents, double gamma) {
  require(n_agents > 0, "adaptive_convergence_time: requires n_agents > 0");
  require(gamma > 0.0 && gamma < 1.0, "adaptive_convergence_time: requires gamma in (0,1)");
  return -std::log(static_cast<double>(n_agents)) / std::log(1.0 - gamma);
}

double map_f(double p) {
  const double d = 2.0 * p - 1.0;
  return p >= 0.5 ? p - 0.5 * d * d : p + 0.5 * d * d;
}

double map_g(double x) {
  const double r = std::sqrt(2.0);
  return r * x - 2.0 * r * std::abs(x) * x;
}

std::array<double, 3> g_fixed_points() {
  const double v = (2.0 - std::sqrt(2.0)) / 4.0;
  return {0.0, v, -v};
}

double q_gamma(double gamma) { return kQGammaFit.a * gamma + kQGammaFit.b; }

double dispersion_decay(int t, double rate) {
  require(t >= 0, "dispersion_decay: requires t >= 0");
  return std::exp2(-rate * t);
}

double dispersion_prediction(int t, double gamma) {
  return dispersion_decay(t, gamma == 1.0 ? 0.5 : q_gamma(gamma));
}

double stop_time_for_rate(double cost, double rate) {
  require(cost > 0.0 && cost < 1.0, "stop_time: requires cost in (0,1)");
  require(rate > 0.0, "stop_time: requires a positive decay rate");
  return -(1.0 + std::log2(cost)) / rate;
}

double stop_time(double cost, double gamma) {
  return stop_time_for_rate(cost, gamma == 1.0 ? 0.5 : q_gamma(gamma));
}

double map_y(double y, double gamma) {
  const double q = q_gamma(gamma);
  require(q > 0.0, "map_y: requires q_gamma(gamma) > 0");
  return std::exp2(q) * y - std::exp2(q + 1.0) * std::abs(y) * y;
}

std::array<double, 3> y_fixed_points(double gamma) {
  const double q = q_gamma(gamma);
  require(q > 0.0, "y_fixed_points: requires q_gamma(gamma) > 0");
  const double v = (std::exp2(q) - 1.0) / std::exp2(q + 1.0);
  return {0.0, v, -v};
}

}  // namespace abm::analytic

#include "abm/params.hpp"

#include <sstream>

namespace abm {

namespace {

[[noreturn]] void reject(const std::string& bound, double got) {
  std::ostringstream os;
  os << bound << ", got " << got;
  throw ConfigError(os.str());
}

}  // namespace

void Params::validate() const {
  if (n_agents <= 0) reject("n_agents must be a positive integer", n_agents);
  if (!(alpha >= 0.0 && alpha <= 1.0)) reject("alpha ∈ [0,1]", alpha);
  if (!(sigma >= 0.0 && sigma <= 1.0)) reject("sigma ∈ [0,1]", sigma);
  if (!(gamma >= 0.0 && gamma <= 1.0)) reject("gamma ∈ [0,1]", gamma);
  if (!(cost > 0.0 && cost < 1.0)) reject("cost ∈ (0,1)", cost);
  if (!(p0 >= 0.0 && p0 <= 1.0)) reject("p0 ∈ [0,1]", p0);
  if (!(w0 > 0.0)) reject("w0 > 0", w0);
  if (!(l0 > 0.0 && l0 <= w0)) reject("l0 ∈ (0, w0]", l0);
  if (max_steps <= 0) reject("max_steps must be a positive integer", max_steps);
  if (!(steady_tol > 0.0)) reject("steady_tol > 0", steady_tol);
  if (!(fundamental >= 0.0 && fundamental <= 1.0)) reject("fundamental ∈ [0,1]", fundamental);
}

}  // namespace abm

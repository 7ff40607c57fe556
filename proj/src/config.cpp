#include "abm/config.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace abm {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected a number, got '" + value + "'");
  }
  if (used != value.size()) throw ConfigError(key + ": expected a number, got '" + value + "'");
  return v;
}

long long parse_int(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(value, &used);
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an integer, got '" + value + "'");
  }
  if (used != value.size()) throw ConfigError(key + ": expected an integer, got '" + value + "'");
  return v;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(value, &used);
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an unsigned integer, got '" + value + "'");
  }
  if (used != value.size())
    throw ConfigError(key + ": expected an unsigned integer, got '" + value + "'");
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError(key + ": expected true/false, got '" + value + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) throw ConfigError(key + ": empty list element in '" + value + "'");
    out.push_back(parse_double(key, item));
  }
  if (out.empty()) throw ConfigError(key + ": expected a comma-separated list");
  return out;
}

std::string full_precision(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const std::set<std::string> kRunKeys = {
    "n_agents", "alpha", "sigma", "gamma", "cost", "p0", "w0", "l0",
    "max_steps", "steady_tol", "seed", "fundamental", "charge_unmatched", "pairing"};

const std::set<std::string> kSweepKeys = {
    "alpha_min", "alpha_max", "alpha_step", "sigma_min", "sigma_max", "sigma_step",
    "gammas", "replications", "master_seed"};

void reject_unknown(const ConfigMap& map, bool sweep) {
  for (const auto& [key, value] : map) {
    if (kRunKeys.count(key)) continue;
    if (sweep && kSweepKeys.count(key)) continue;
    throw ConfigError("unknown configuration key '" + key + "'");
  }
}

void apply_run_keys(Params& p, const ConfigMap& map) {
  for (const auto& [key, value] : map) {
    if (key == "n_agents") p.n_agents = static_cast<int>(parse_int(key, value));
    else if (key == "alpha") p.alpha = parse_double(key, value);
    else if (key == "sigma") p.sigma = parse_double(key, value);
    else if (key == "gamma") p.gamma = parse_double(key, value);
    else if (key == "cost") p.cost = parse_double(key, value);
    else if (key == "p0") p.p0 = parse_double(key, value);
    else if (key == "w0") p.w0 = parse_double(key, value);
    else if (key == "l0") p.l0 = parse_double(key, value);
    else if (key == "max_steps") p.max_steps = static_cast<int>(parse_int(key, value));
    else if (key == "steady_tol") p.steady_tol = parse_double(key, value);
    else if (key == "seed") p.seed = parse_u64(key, value);
    else if (key == "fundamental") p.fundamental = parse_double(key, value);
    else if (key == "charge_unmatched") p.charge_unmatched = parse_bool(key, value);
    else if (key == "pairing") {
      if (value == "revisers") p.pairing = PairingMode::Revisers;
      else if (value == "anyone") p.pairing = PairingMode::Anyone;
      else throw ConfigError("pairing must be 'revisers' or 'anyone', got '" + value + "'");
    }
  }
}

void apply_sweep_keys(SweepSpec& s, const ConfigMap& map) {
  for (const auto& [key, value] : map) {
    if (key == "alpha_min") s.alpha_min = parse_double(key, value);
    else if (key == "alpha_max") s.alpha_max = parse_double(key, value);
    else if (key == "alpha_step") s.alpha_step = parse_double(key, value);
    else if (key == "sigma_min") s.sigma_min = parse_double(key, value);
    else if (key == "sigma_max") s.sigma_max = parse_double(key, value);
    else if (key == "sigma_step") s.sigma_step = parse_double(key, value);
    else if (key == "gammas") s.gammas = parse_list(key, value);
    else if (key == "replications") s.replications = static_cast<int>(parse_int(key, value));
    else if (key == "master_seed") s.master_seed = parse_u64(key, value);
  }
}

}  // namespace

ConfigMap load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  ConfigMap map;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
    map[key] = value;
  }
  return map;
}

Params params_from_config(const ConfigMap& file, const ConfigMap& overrides) {
  reject_unknown(file, false);
  reject_unknown(overrides, false);
  Params p;
  apply_run_keys(p, file);
  apply_run_keys(p, overrides);
  p.validate();
  return p;
}

SweepSpec sweep_from_config(const ConfigMap& file, const ConfigMap& overrides) {
  reject_unknown(file, true);
  reject_unknown(overrides, true);
  SweepSpec s;
  apply_run_keys(s.base, file);
  apply_run_keys(s.base, overrides);
  apply_sweep_keys(s, file);
  apply_sweep_keys(s, overrides);
  s.validate();
  return s;
}

ConfigMap echo_params(const Params& p) {
  ConfigMap map;
  map["n_agents"] = std::to_string(p.n_agents);
  map["alpha"] = full_precision(p.alpha);
  map["sigma"] = full_precision(p.sigma);
  map["gamma"] = full_precision(p.gamma);
  map["cost"] = full_precision(p.cost);
  map["p0"] = full_precision(p.p0);
  map["w0"] = full_precision(p.w0);
  map["l0"] = full_precision(p.l0);
  map["max_steps"] = std::to_string(p.max_steps);
  map["steady_tol"] = full_precision(p.steady_tol);
  map["seed"] = std::to_string(p.seed);
  map["fundamental"] = full_precision(p.fundamental);
  map["charge_unmatched"] = p.charge_unmatched ? "true" : "false";
  map["pairing"] = p.pairing == PairingMode::Revisers ? "revisers" : "anyone";
  return map;
}

ConfigMap echo_sweep(const SweepSpec& s) {
  ConfigMap map = echo_params(s.base);
  map["alpha_min"] = full_precision(s.alpha_min);
  map["alpha_max"] = full_precision(s.alpha_max);
  map["alpha_step"] = full_precision(s.alpha_step);
  map["sigma_min"] = full_precision(s.sigma_min);
  map["sigma_max"] = full_precision(s.sigma_max);
  map["sigma_step"] = full_precision(s.sigma_step);
  std::string gammas;
  for (std::size_t i = 0; i < s.gammas.size(); ++i) {
    if (i) gammas += ",";
    gammas += full_precision(s.gammas[i]);
  }
  map["gammas"] = gammas;
  map["replications"] = std::to_string(s.replications);
  map["master_seed"] = std::to_string(s.master_seed);
  return map;
}

}  // namespace abm

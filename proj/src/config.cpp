#include "qlb/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace qlb {
namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

const std::set<std::string> kKnownKeys = {
    "schema",    "experiment", "units",   "seed",    "n_traj",  "t_max",
    "n_samples", "gas.n",      "gas.m",   "gas.beta", "gas.temperature",
    "gas.stats", "gas.z",      "particle.M", "model", "model.sigma_tot",
    "model.c",   "model.a",    "model.V0", "model.r0", "hbar",  "u0.x",
    "u0.y",      "u0.z",       "u0",      "s_max",   "n_s",     "hold_time",
    "beam.p0",   "flight_time", "c6",     "p_max",   "n_p",     "k_min",
    "k_max",     "n_k",        "sf.q",    "e_min",   "e_max",   "n_e",
    "out_name",
};

constexpr double kBoltzmann = 1.380649e-23;   // J/K
constexpr double kHbarSI = 1.054571817e-34;   // J s

struct Parser {
  std::map<std::string, std::string> kv;
  std::vector<std::string> errors;
  std::set<std::string> used;

  bool has(const std::string& k) const { return kv.count(k) != 0; }

  std::string str(const std::string& k, const std::string& def) {
    used.insert(k);
    auto it = kv.find(k);
    return it == kv.end() ? def : it->second;
  }

  double num(const std::string& k, double def, bool positive = false) {
    used.insert(k);
    auto it = kv.find(k);
    if (it == kv.end()) return def;
    try {
      std::size_t pos;
      double v = std::stod(it->second, &pos);
      if (pos != it->second.size()) throw std::invalid_argument("");
      if (positive && !(v > 0)) {
        errors.push_back(k + ": must be > 0 (got " + it->second + ")");
        return def;
      }
      return v;
    } catch (const std::exception&) {
      errors.push_back(k + ": not a number (got '" + it->second + "')");
      return def;
    }
  }

  long integer(const std::string& k, long def, bool positive = false) {
    used.insert(k);
    auto it = kv.find(k);
    if (it == kv.end()) return def;
    try {
      std::size_t pos;
      long v = std::stol(it->second, &pos);
      if (pos != it->second.size()) throw std::invalid_argument("");
      if (positive && v <= 0) {
        errors.push_back(k + ": must be a positive integer (got " + it->second + ")");
        return def;
      }
      return v;
    } catch (const std::exception&) {
      errors.push_back(k + ": not an integer (got '" + it->second + "')");
      return def;
    }
  }
};

}  // namespace

const char* to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::Thermalize: return "thermalize";
    case ExperimentKind::RelaxMoments: return "relax-moments";
    case ExperimentKind::DecohereMomentum: return "decohere-momentum";
    case ExperimentKind::DecoherePosition: return "decohere-position";
    case ExperimentKind::Visibility: return "visibility";
    case ExperimentKind::Refraction: return "refraction";
    case ExperimentKind::StructureFactor: return "structure-factor";
    case ExperimentKind::BrownianCheck: return "brownian-check";
  }
  return "?";
}

std::optional<ExperimentKind> experiment_from_string(const std::string& s) {
  for (auto k : {ExperimentKind::Thermalize, ExperimentKind::RelaxMoments,
                 ExperimentKind::DecohereMomentum, ExperimentKind::DecoherePosition,
                 ExperimentKind::Visibility, ExperimentKind::Refraction,
                 ExperimentKind::StructureFactor, ExperimentKind::BrownianCheck})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

ConfigError::ConfigError(std::vector<std::string> violations)
    : std::runtime_error("invalid config (" + std::to_string(violations.size()) +
                         " violation(s)):\n  - " + [&violations] {
                           std::string s;
                           for (std::size_t i = 0; i < violations.size(); ++i)
                             s += (i ? "\n  - " : "") + violations[i];
                           return s;
                         }()),
      violations_(std::move(violations)) {}

ExperimentConfig parse_config(const std::string& text) {
  Parser p;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    std::size_t eq = s.find('=');
    if (eq == std::string::npos) {
      p.errors.push_back("line " + std::to_string(lineno) + ": expected key = value");
      continue;
    }
    std::string key = trim(s.substr(0, eq));
    std::string val = trim(s.substr(eq + 1));
    if (!kKnownKeys.count(key)) {
      p.errors.push_back("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
      continue;
    }
    if (p.kv.count(key)) {
      p.errors.push_back("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
      continue;
    }
    p.kv[key] = val;
  }

  ExperimentConfig c;

  if (!p.has("schema"))
    p.errors.push_back("schema: required (schema = 1)");
  else if ((c.schema = static_cast<int>(p.integer("schema", 0))) != 1)
    p.errors.push_back("schema: unsupported version '" + p.kv["schema"] + "' (expected 1)");

  if (!p.has("experiment")) {
    p.errors.push_back("experiment: required");
  } else {
    auto k = experiment_from_string(p.str("experiment", ""));
    if (!k)
      p.errors.push_back("experiment: unknown kind '" + p.kv["experiment"] + "'");
    else
      c.kind = *k;
  }

  std::string units = p.str("units", "internal");
  if (units == "internal") {
    c.units = UnitSystem::Internal;
  } else if (units == "si") {
    c.units = UnitSystem::SI;
  } else {
    p.errors.push_back("units: must be 'internal' or 'si' (got '" + units + "')");
  }

  if (!p.has("seed")) {
    p.errors.push_back("seed: required (deterministic runs have no wall-clock default)");
  } else {
    p.used.insert("seed");
    const std::string& sv = p.kv["seed"];
    try {
      std::size_t pos;
      c.seed = std::stoull(sv, &pos);
      if (pos != sv.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      p.errors.push_back("seed: not an unsigned integer (got '" + sv + "')");
    }
  }

  // Gas.
  c.gas.n_gas = p.num("gas.n", 1.0, true);
  c.gas.m = p.num("gas.m", 1.0, true);
  if (c.units == UnitSystem::Internal) {
    if (p.has("gas.temperature"))
      p.errors.push_back("gas.temperature: SI key in internal-unit config (use gas.beta)");
    c.gas.beta = p.num("gas.beta", 2.0, true);
    c.hbar = p.num("hbar", 1.0, true);
  } else {
    if (p.has("gas.beta"))
      p.errors.push_back("gas.beta: internal-unit key in SI config (use gas.temperature)");
    if (p.has("hbar"))
      p.errors.push_back("hbar: fixed in SI configs");
    double T = p.num("gas.temperature", 300.0, true);
    c.gas.beta = 1.0 / (kBoltzmann * T);
    c.hbar = kHbarSI;
  }
  std::string stats = p.str("gas.stats", "mb");
  if (stats == "mb") c.gas.stats = GasSpec::Stats::MB;
  else if (stats == "be") c.gas.stats = GasSpec::Stats::BE;
  else if (stats == "fd") c.gas.stats = GasSpec::Stats::FD;
  else p.errors.push_back("gas.stats: must be mb, be or fd (got '" + stats + "')");
  c.gas.z = p.num("gas.z", 0.0);
  if (c.gas.stats == GasSpec::Stats::BE && !(c.gas.z > 0 && c.gas.z < 1))
    p.errors.push_back("gas.z: BE statistics require 0 < z < 1");
  if (c.gas.stats == GasSpec::Stats::FD && !(c.gas.z > 0))
    p.errors.push_back("gas.z: FD statistics require z > 0");

  c.particle.M = p.num("particle.M", 1.0, true);

  // Cross-section model.
  std::string model = p.str("model", "constant");
  auto forbid = [&](const char* key, const char* why) {
    if (p.has(key)) p.errors.push_back(std::string(key) + ": not a parameter of " + why);
  };
  if (model == "constant") {
    c.model = ConstantModel{p.num("model.sigma_tot", 1.0, true)};
    forbid("model.c", "model = constant");
    forbid("model.a", "model = constant");
    forbid("model.V0", "model = constant");
    forbid("model.r0", "model = constant");
  } else if (model == "power-law") {
    PowerLawModel pl{p.num("model.c", 1.0, true), p.num("model.a", 0.0)};
    if (pl.a <= -3.0) p.errors.push_back("model.a: must be > -3");
    c.model = pl;
    forbid("model.sigma_tot", "model = power-law");
    forbid("model.V0", "model = power-law");
    forbid("model.r0", "model = power-law");
  } else if (model == "born-gaussian") {
    double V0 = p.num("model.V0", 1.0);
    double r0 = p.num("model.r0", 1.0, true);
    if (V0 == 0.0) p.errors.push_back("model.V0: must be nonzero");
    c.model = BornModel::gaussian(V0, r0);
    forbid("model.sigma_tot", "model = born-gaussian");
    forbid("model.c", "model = born-gaussian");
    forbid("model.a", "model = born-gaussian");
  } else {
    p.errors.push_back("model: must be constant, power-law or born-gaussian (got '" +
                       model + "')");
  }

  c.n_traj = static_cast<int>(p.integer("n_traj", c.n_traj, true));
  c.t_max = p.num("t_max", c.t_max, true);
  c.n_samples = static_cast<int>(p.integer("n_samples", c.n_samples, true));
  c.u0 = {p.num("u0.x", c.u0.x), p.num("u0.y", c.u0.y), p.num("u0.z", c.u0.z)};
  c.u0_mag = p.num("u0", c.u0_mag, true);
  c.s_max = p.num("s_max", c.s_max, true);
  c.n_s = static_cast<int>(p.integer("n_s", c.n_s, true));
  c.hold_time = p.num("hold_time", c.hold_time, true);
  c.beam_p0 = p.num("beam.p0", c.beam_p0, true);
  c.flight_time = p.num("flight_time", c.flight_time, true);
  c.c6 = p.num("c6", c.c6, true);
  c.p_max = p.num("p_max", c.p_max, true);
  c.n_p = static_cast<int>(p.integer("n_p", c.n_p, true));
  c.k_min = p.num("k_min", c.k_min, true);
  c.k_max = p.num("k_max", c.k_max, true);
  if (c.k_max <= c.k_min) p.errors.push_back("k_max: must exceed k_min");
  c.n_k = static_cast<int>(p.integer("n_k", c.n_k, true));
  c.sf_q = p.num("sf.q", c.sf_q, true);
  c.e_min = p.num("e_min", c.e_min);
  c.e_max = p.num("e_max", c.e_max);
  if (c.e_max <= c.e_min) p.errors.push_back("e_max: must exceed e_min");
  c.n_e = static_cast<int>(p.integer("n_e", c.n_e, true));
  c.out_name = p.str("out_name", "");

  if (!p.errors.empty()) throw ConfigError(std::move(p.errors));
  c.raw = p.kv;
  return c;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace qlb

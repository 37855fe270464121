#include "qlb/runner.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"

#include "qlb/brownian.hpp"
#include "qlb/decoherence.hpp"
#include "qlb/forward.hpp"
#include "qlb/observables.hpp"
#include "qlb/structure_factor.hpp"
#include "qlb/trajectory.hpp"

namespace qlb {
namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Deterministic digest of the raw config (FNV-1a 64).
std::string config_digest(const std::map<std::string, std::string>& raw) {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (const auto& [k, v] : raw) {
    mix(k);
    mix("=");
    mix(v);
    mix("\n");
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::initializer_list<double> r) { rows.emplace_back(r); }
};

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = b;
    return v;
  }
  for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
  return v;
}

double constant_sigma(const ExperimentConfig& c, const char* kind) {
  if (auto* m = std::get_if<ConstantModel>(&c.model)) return m->sigma_tot;
  throw std::runtime_error(std::string(kind) + ": requires model = constant");
}

EngineParams engine_params(const ExperimentConfig& c, double sigma_tot) {
  EngineParams p;
  p.gamma_beta = 1.0;  // time measured in 1/Gamma_beta
  p.mass_ratio = c.gas.m / c.particle.M;
  double gb = thermal_rate(c.gas, sigma_tot);
  double vb = c.gas.v_beta();
  p.phase_coeff = c.particle.M * vb * vb / (2.0 * c.hbar * gb);
  return p;
}

void put_fit(json& j, const char* name, const std::vector<double>& t,
             const std::vector<double>& y, const std::vector<double>& yerr) {
  try {
    int end = fit_window(y, yerr);
    if (end < 4) end = static_cast<int>(y.size());
    std::vector<double> ts(t.begin(), t.begin() + end), ys(y.begin(), y.begin() + end),
        es(yerr.begin(), yerr.begin() + end);
    ExpFit f = fit_exponential(ts, ys, es);
    j[name] = {{"rate", f.rate},
               {"rate_err", f.rate_err},
               {"log_intercept", f.log_intercept},
               {"points_used", f.points_used},
               {"window_end", end}};
  } catch (const std::exception& e) {
    j[name] = {{"error", e.what()}};
  }
}

void run_thermalize(const ExperimentConfig& c, int n_threads, Table& tab, json& meta) {
  double sigma = constant_sigma(c, to_string(c.kind));
  EngineParams p = engine_params(c, sigma);
  auto times = linspace(0.0, c.t_max, c.n_samples);
  auto recs = run_ensemble(SuperpositionState::eigenstate(c.u0), p, c.n_traj, times,
                           c.seed, n_threads);
  EnsembleSeries s = build_series(recs, times);
  tab.columns = {"t",          "mean_ux",     "mean_uy", "mean_uz",
                 "mean_ux_err", "mean_uy_err", "mean_uz_err",
                 "mean_u_sq",  "mean_u_sq_err", "u_sq",  "u_sq_err"};
  for (int k = 0; k < static_cast<int>(times.size()); ++k)
    tab.add_row({times[k], s.mean_u[k].x, s.mean_u[k].y, s.mean_u[k].z,
                 s.mean_u_err[k].x, s.mean_u_err[k].y, s.mean_u_err[k].z,
                 s.mean_u_sq[k], s.mean_u_sq_err[k], s.u_sq[k], s.u_sq_err[k]});
  double mr = p.mass_ratio;
  meta["u_sq_equilibrium"] = 1.5 * mr;
  meta["mass_ratio"] = mr;
  if (c.kind == ExperimentKind::RelaxMoments) {
    double ueq = 1.5 * mr;
    std::vector<double> excess(s.u_sq.size());
    for (std::size_t i = 0; i < excess.size(); ++i) excess[i] = s.u_sq[i] - ueq;
    json fits;
    put_fit(fits, "mean_u_sq", times, s.mean_u_sq, s.mean_u_sq_err);
    put_fit(fits, "u_sq_excess", times, excess, s.u_sq_err);
    fits["two_eta_analytic"] = 2.0 * friction_eta(1.0, mr);
    meta["fits"] = fits;
  }
}

void run_decohere_momentum(const ExperimentConfig& c, int n_threads, Table& tab, json& meta) {
  double sigma = constant_sigma(c, to_string(c.kind));
  EngineParams p = engine_params(c, sigma);
  auto times = linspace(0.0, c.t_max, c.n_samples);
  auto init = SuperpositionState::pair({c.u0_mag, 0, 0}, {-c.u0_mag, 0, 0});
  auto recs = run_ensemble(init, p, c.n_traj, times, c.seed, n_threads);
  EnsembleSeries s = build_series(recs, times);
  tab.columns = {"t", "coherence", "coherence_err"};
  for (int k = 0; k < static_cast<int>(times.size()); ++k)
    tab.add_row({times[k], s.coherence[k], s.coherence_err[k]});
  json fits;
  put_fit(fits, "coherence", times, s.coherence, s.coherence_err);
  fits["lambda_prediction"] = decoherence_rate_prediction(c.u0_mag, 1.0);
  meta["fits"] = fits;
}

void run_decohere_position(const ExperimentConfig& c, Table& tab, json& meta) {
  DecoherenceSpec spec{c.model, c.gas, c.particle, {}, c.hbar};
  double gtot = total_collision_rate(spec);
  double t = c.hold_time / gtot;
  double s_unit = c.hbar / c.gas.p_beta();
  tab.columns = {"s_scaled", "s", "phi", "coherence"};
  for (double ss : linspace(0.0, c.s_max, c.n_s)) {
    double S = ss * s_unit;
    double phi = ss == 0.0 ? 1.0 : decoherence_function(S, spec);
    tab.add_row({ss, S, phi, std::exp(-gtot * (1.0 - phi) * t)});
  }
  meta["total_collision_rate"] = gtot;
  meta["hold_time_physical"] = t;
  meta["mass_ratio_warning"] = spec.mass_ratio_warning();
}

void run_visibility(const ExperimentConfig& c, Table& tab, json& meta) {
  VisibilitySetup vs{c.beam_p0, c.particle.M, c.flight_time,
                     c.gas.beta, c.gas.m,     c.c6,          c.hbar};
  tab.columns = {"pressure", "rate", "visibility", "ln_visibility"};
  for (int i = 1; i <= c.n_p; ++i) {
    double pr = c.p_max * i / c.n_p;
    double rate = visibility_rate(vs, pr * vs.beta);
    double v = std::exp(-rate * vs.t);
    tab.add_row({pr, rate, v, std::log(v)});
  }
  meta["critical_pressure"] = critical_pressure(vs);
}

void run_refraction(const ExperimentConfig& c, Table& tab, json& meta) {
  if (!has_amplitude(c.model))
    throw std::runtime_error("refraction: requires model = born-gaussian");
  tab.columns = {"k", "re_n_minus_1", "im_n", "energy_shift"};
  for (double k : linspace(c.k_min, c.k_max, c.n_k)) {
    auto n = refraction_index(k, c.model, c.gas, c.particle, c.hbar);
    tab.add_row({k, n.real() - 1.0, n.imag(),
                 energy_shift(c.hbar * k, c.model, c.gas, c.particle, c.hbar)});
  }
  meta["note"] = "n = 1 + 2 pi (n_gas/K^2)(M/m*) <f0(hbar K)>";
}

void run_structure_factor(const ExperimentConfig& c, Table& tab, json& meta) {
  tab.columns = {"E", "s_qe"};
  for (double e : linspace(c.e_min, c.e_max, c.n_e))
    tab.add_row({e, dynamic_structure_factor(c.sf_q, e, c.gas, c.hbar)});
  meta["Q"] = c.sf_q;
}

void run_brownian_check(const ExperimentConfig& c, Table& tab, json& meta) {
  double eta = friction_coefficient(c.model, c.gas, c.particle, c.hbar);
  auto d = diffusion_coefficients(eta, c.particle.M, c.gas.beta, c.hbar);
  double target = eta * eta * c.hbar * c.hbar / 16.0;
  double resid = d.D_pp * d.D_xx / target - 1.0;
  tab.columns = {"eta", "d_pp", "d_xx", "cp_product_rel_dev"};
  tab.add_row({eta, d.D_pp, d.D_xx, resid});
  meta["eta"] = eta;
  if (auto* m = std::get_if<ConstantModel>(&c.model)) {
    double gb = thermal_rate(c.gas, m->sigma_tot);
    meta["eta_closed_form"] = friction_eta(gb, c.gas.m / c.particle.M);
  }
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& c, const std::string& out_dir,
                         int n_threads) {
  auto t0 = std::chrono::steady_clock::now();
  Table tab;
  json meta;
  switch (c.kind) {
    case ExperimentKind::Thermalize:
    case ExperimentKind::RelaxMoments:
      run_thermalize(c, n_threads, tab, meta);
      break;
    case ExperimentKind::DecohereMomentum:
      run_decohere_momentum(c, n_threads, tab, meta);
      break;
    case ExperimentKind::DecoherePosition:
      run_decohere_position(c, tab, meta);
      break;
    case ExperimentKind::Visibility:
      run_visibility(c, tab, meta);
      break;
    case ExperimentKind::Refraction:
      run_refraction(c, tab, meta);
      break;
    case ExperimentKind::StructureFactor:
      run_structure_factor(c, tab, meta);
      break;
    case ExperimentKind::BrownianCheck:
      run_brownian_check(c, tab, meta);
      break;
  }

  std::filesystem::create_directories(out_dir);
  std::string name = c.out_name.empty() ? to_string(c.kind) : c.out_name;
  RunResult res;
  res.csv_path = (std::filesystem::path(out_dir) / (name + ".csv")).string();
  res.meta_path = (std::filesystem::path(out_dir) / (name + ".json")).string();

  std::string digest = config_digest(c.raw);
  {
    std::ofstream out(res.csv_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + res.csv_path);
    out << "# qlbsim " << to_string(c.kind) << "\n";
    out << "# schema = " << c.schema << "\n";
    out << "# seed = " << c.seed << "\n";
    out << "# config-digest = " << digest << "\n";
    for (const auto& [k, v] : c.raw) out << "# " << k << " = " << v << "\n";
    for (std::size_t i = 0; i < tab.columns.size(); ++i)
      out << (i ? "," : "") << tab.columns[i];
    out << "\n";
    for (const auto& row : tab.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << fmt(row[i]);
      out << "\n";
    }
  }

  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  json j;
  j["tool"] = "qlbsim";
  j["version"] = "1.0.0";
  j["experiment"] = to_string(c.kind);
  j["schema"] = c.schema;
  j["seed"] = c.seed;
  j["units"] = c.units == UnitSystem::Internal ? "internal" : "si";
  j["config"] = c.raw;
  j["config_digest"] = digest;
  j["n_threads"] = n_threads;
  j["runtime_seconds"] = secs;
  j["columns"] = tab.columns;
  j["csv"] = std::filesystem::path(res.csv_path).filename().string();
  j["results"] = meta;
  std::ofstream mo(res.meta_path, std::ios::binary);
  if (!mo) throw std::runtime_error("cannot write " + res.meta_path);
  mo << j.dump(2) << "\n";
  return res;
}

}  // namespace qlb

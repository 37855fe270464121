#pragma once
#include <vector>

#include "qlb/special.hpp"
#include "qlb/trajectory.hpp"
#include "qlb/vec3.hpp"

namespace qlb {

// Time-indexed ensemble estimates with standard errors.
struct EnsembleSeries {
  std::vector<double> times;
  std::vector<Vec3> mean_u;           // <U>
  std::vector<Vec3> mean_u_err;       // per-component standard error
  std::vector<double> mean_u_sq;      // |<U>|^2 (jackknife-debiased)
  std::vector<double> mean_u_sq_err;
  std::vector<double> u_sq;           // <U^2>
  std::vector<double> u_sq_err;
  std::vector<double> energy;         // energy_scale * <U^2>
  std::vector<double> energy_err;
  std::vector<double> coherence;      // C(t)
  std::vector<double> coherence_err;
  int n_traj = 0;
};

// Fold per-trajectory records into estimates; standard errors by leave-one-out
// jackknife (exact for plain means, debiasing |<U>|^2).
EnsembleSeries build_series(const std::vector<TrajectoryRecord>& recs,
                            const std::vector<double>& times, double energy_scale = 1.0);

// d<P>/dt for a momentum eigenstate at P (constant cross-section, MB gas):
// -(8/3 sqrt(pi)) (m*/M) Gamma_beta P 1F1(-1/2, 5/2; -U^2).
Vec3 momentum_drift_analytic(const Vec3& P, double gamma_beta, double m, double M,
                             double v_beta_gas);

// dE/dt for kinetic energy E (same model/regime).
double energy_drift_analytic(double E, double gamma_beta, double m, double M, double beta);

// Long-time diffusive closures.
struct DiffusiveMoments {
  double mean_u_sq;  // |<U>|^2
  double u_sq;       // <U^2>
};
DiffusiveMoments diffusive_solutions(double mean_u_sq_0, double u_sq_0, double eta,
                                     double mass_ratio, double t);

// Friction coefficient in the diffusive (m << M) limit, constant sigma.
inline double friction_eta(double gamma_beta, double mass_ratio) {
  return (8.0 / (3.0 * 1.7724538509055160273)) * mass_ratio * gamma_beta;
}

// First-order jump prediction for the decay rate of a two-branch momentum
// superposition at +-U0: Lambda = Gamma(U0) - Gamma_beta erf(U0)/U0.
double decoherence_rate_prediction(double U0, double gamma_beta);

// Weighted least squares of log(y) = log(A) - rate * t.
struct ExpFit {
  double rate = 0.0;
  double log_intercept = 0.0;
  double rate_err = 0.0;
  double intercept_err = 0.0;
  int points_used = 0;
  int points_dropped = 0;
};
ExpFit fit_exponential(const std::vector<double>& t, const std::vector<double>& y,
                       const std::vector<double>& yerr);

// Largest index window [0, end) in which y stays above `snr` times its error;
// used as the default fit window.
int fit_window(const std::vector<double>& y, const std::vector<double>& yerr,
               double snr = 20.0);

}  // namespace qlb

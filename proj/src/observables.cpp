#include "qlb/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace qlb {
namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

double mean_and_se(const std::vector<double>& v, double& se) {
  int n = static_cast<int>(v.size());
  double s = 0.0;
  for (double x : v) s += x;
  double m = s / n;
  double var = 0.0;
  for (double x : v) var += (x - m) * (x - m);
  se = n > 1 ? std::sqrt(var / (static_cast<double>(n) * (n - 1))) : 0.0;
  return m;
}

}  // namespace

EnsembleSeries build_series(const std::vector<TrajectoryRecord>& recs,
                            const std::vector<double>& times, double energy_scale) {
  const int n = static_cast<int>(recs.size());
  const int nt = static_cast<int>(times.size());
  if (n == 0) throw std::invalid_argument("build_series: empty ensemble");
  EnsembleSeries s;
  s.times = times;
  s.n_traj = n;
  s.mean_u.resize(nt);
  s.mean_u_err.resize(nt);
  s.mean_u_sq.resize(nt);
  s.mean_u_sq_err.resize(nt);
  s.u_sq.resize(nt);
  s.u_sq_err.resize(nt);
  s.energy.resize(nt);
  s.energy_err.resize(nt);
  s.coherence.resize(nt);
  s.coherence_err.resize(nt);

  std::vector<double> tmp(n);
  for (int k = 0; k < nt; ++k) {
    Vec3 S{};
    for (int i = 0; i < n; ++i) S += recs[i].u_mean[k];
    Vec3 mean = S / n;
    double se;
    for (int axis = 0; axis < 3; ++axis) {
      auto get = [axis](const Vec3& v) { return axis == 0 ? v.x : axis == 1 ? v.y : v.z; };
      for (int i = 0; i < n; ++i) tmp[i] = get(recs[i].u_mean[k]);
      double m = mean_and_se(tmp, se);
      (void)m;
      if (axis == 0) { s.mean_u_err[k].x = se; }
      if (axis == 1) { s.mean_u_err[k].y = se; }
      if (axis == 2) { s.mean_u_err[k].z = se; }
    }
    s.mean_u[k] = mean;

    // |<U>|^2 by leave-one-out jackknife: bias correction and standard error.
    double theta_hat = mean.norm2();
    double sum_th = 0.0, sum_th2 = 0.0;
    double nm1 = n - 1.0;
    for (int i = 0; i < n; ++i) {
      Vec3 Si = (S - recs[i].u_mean[k]) / nm1;
      double th = Si.norm2();
      sum_th += th;
      sum_th2 += th * th;
    }
    double th_bar = sum_th / n;
    s.mean_u_sq[k] = n * theta_hat - nm1 * th_bar;
    double var_j = (nm1 / n) * (sum_th2 - n * th_bar * th_bar);
    s.mean_u_sq_err[k] = std::sqrt(std::max(0.0, var_j));

    for (int i = 0; i < n; ++i) tmp[i] = recs[i].u_sq[k];
    s.u_sq[k] = mean_and_se(tmp, se);
    s.u_sq_err[k] = se;
    s.energy[k] = energy_scale * s.u_sq[k];
    s.energy_err[k] = energy_scale * se;

    for (int i = 0; i < n; ++i) tmp[i] = recs[i].coherence[k];
    s.coherence[k] = mean_and_se(tmp, se);
    s.coherence_err[k] = se;
  }
  return s;
}

Vec3 momentum_drift_analytic(const Vec3& P, double gamma_beta, double m, double M,
                             double v_beta_gas) {
  double U = P.norm() / (M * v_beta_gas);
  double pref = -(8.0 / (3.0 * kSqrtPi)) * (m / (m + M)) * gamma_beta;
  return pref * hyp1f1_m12_52_negsq(U) * P;
}

double energy_drift_analytic(double E, double gamma_beta, double m, double M, double beta) {
  double mstar = m * M / (m + M);
  double arg = beta * E * m / M;
  double x = std::sqrt(std::max(0.0, arg));
  return -(16.0 / (3.0 * kSqrtPi)) * (mstar / M) * gamma_beta *
         (hyp1f1_m12_52_negsq(x) * E -
          (3.0 / (2.0 * beta)) * (mstar / m) * hyp1f1_m32_32_negsq(x));
}

DiffusiveMoments diffusive_solutions(double mean_u_sq_0, double u_sq_0, double eta,
                                     double mass_ratio, double t) {
  double decay = std::exp(-2.0 * eta * t);
  double u_eq = 1.5 * mass_ratio;
  return {mean_u_sq_0 * decay, u_eq + (u_sq_0 - u_eq) * decay};
}

double decoherence_rate_prediction(double U0, double gamma_beta) {
  if (U0 < 1e-8) return 0.0;
  return loss_rate_scaled(U0, gamma_beta) - gamma_beta * std::erf(U0) / U0;
}

ExpFit fit_exponential(const std::vector<double>& t, const std::vector<double>& y,
                       const std::vector<double>& yerr) {
  if (t.size() != y.size() || t.size() != yerr.size())
    throw std::invalid_argument("fit_exponential: size mismatch");
  ExpFit fit;
  double sw = 0, swx = 0, swy = 0, swxx = 0, swxy = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(y[i] > 0.0) || !(yerr[i] > 0.0)) {
      ++fit.points_dropped;
      continue;
    }
    double w = (y[i] / yerr[i]) * (y[i] / yerr[i]);
    double Y = std::log(y[i]);
    sw += w;
    swx += w * t[i];
    swy += w * Y;
    swxx += w * t[i] * t[i];
    swxy += w * t[i] * Y;
    ++fit.points_used;
  }
  if (fit.points_used < 4)
    throw std::runtime_error("fit_exponential: fewer than 4 usable points");
  double det = sw * swxx - swx * swx;
  double slope = (sw * swxy - swx * swy) / det;
  double intercept = (swxx * swy - swx * swxy) / det;
  fit.rate = -slope;
  fit.log_intercept = intercept;
  fit.rate_err = std::sqrt(sw / det);
  fit.intercept_err = std::sqrt(swxx / det);
  return fit;
}

int fit_window(const std::vector<double>& y, const std::vector<double>& yerr, double snr) {
  int end = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] > 0 && yerr[i] > 0 && y[i] > snr * yerr[i])
      end = static_cast<int>(i) + 1;
    else if (i > 0)
      break;
  }
  return end;
}

}  // namespace qlb

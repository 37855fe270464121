#include "qlb/trajectory.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace qlb {

void SuperpositionState::normalize() {
  double n = std::sqrt(norm_sq());
  for (auto& a : c) a /= n;
}

SuperpositionState SuperpositionState::eigenstate(const Vec3& U0) {
  SuperpositionState s;
  s.c = {1.0};
  s.U = {U0};
  return s;
}

SuperpositionState SuperpositionState::pair(const Vec3& U1, const Vec3& U2) {
  SuperpositionState s;
  s.c = {1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
  s.U = {U1, U2};
  return s;
}

double sample_waiting_time(const SuperpositionState& s, const EngineParams& p, RngStream& rng) {
  const int N = s.size();
  std::vector<double> w(N), g(N);
  double gmax = 0.0;
  for (int j = 0; j < N; ++j) {
    w[j] = std::norm(s.c[j]);
    g[j] = gamma_tilde(s.U[j], p);
    gmax = std::max(gmax, g[j]);
  }
  double eta = rng.uniform();
  auto F = [&](double tau) {
    double surv = 0.0;
    for (int j = 0; j < N; ++j) surv += w[j] * std::exp(-g[j] * tau);
    return 1.0 - surv;
  };
  // Bracket, then bisect; F is strictly increasing to 1.
  double hi = 1.0 / gmax;
  while (F(hi) < eta) hi *= 2.0;
  double lo = 0.0;
  for (int it = 0; it < 60; ++it) {
    double mid = 0.5 * (lo + hi);
    (F(mid) < eta ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

void drift(SuperpositionState& s, double tau, const EngineParams& p) {
  for (int j = 0; j < s.size(); ++j) {
    double u2 = s.U[j].norm2();
    double g = gamma_tilde(s.U[j], p);
    s.c[j] *= std::polar(std::exp(-0.5 * g * tau), -p.phase_coeff * u2 * tau);
  }
  s.normalize();
  s.t += tau;
}

void sample_jump_K(double U, RngStream& rng, double& K, double& xi) {
  // Target density on (K > 0, xi in [-1,1]): K exp(-(K/2 + U xi)^2).
  // Envelope in K (sup over xi):  K            for K <= 2U,
  //                               K e^{-(K/2-U)^2}  for K >  2U,
  // sampled exactly as triangular + shifted (Rayleigh/half-Gaussian) pieces.
  const double w1 = 2.0 * U * U;                 // mass of the triangular piece
  const double w2 = 2.0 + 2.0 * U * std::sqrt(M_PI);  // mass of the tail piece
  for (long attempt = 0; attempt < 1000000; ++attempt) {
    double Kp, log_env;
    if (rng.uniform() * (w1 + w2) < w1) {
      Kp = 2.0 * U * std::sqrt(rng.uniform());
      log_env = 0.0;
    } else {
      double y = (rng.uniform() * (1.0 + U * std::sqrt(M_PI)) < 1.0)
                     ? std::sqrt(rng.exponential())
                     : std::abs(rng.gaussian()) * M_SQRT1_2;
      Kp = 2.0 * (y + U);
      log_env = -y * y;
    }
    double xip = rng.uniform(-1.0, 1.0);
    double w = Kp / 2.0 + U * xip;
    if (std::log(rng.uniform()) < -w * w - log_env) {
      K = Kp;
      xi = xip;
      return;
    }
  }
  throw std::runtime_error("sample_jump_K: rejection sampler stalled (>1e6 proposals)");
}

JumpSample sample_jump(const SuperpositionState& s, const EngineParams& p, RngStream& rng) {
  const int N = s.size();
  // Branch selection weights at the jump epoch: |c_i|^2 Gamma_i.
  std::vector<double> lam(N);
  double tot = 0.0;
  for (int j = 0; j < N; ++j) {
    lam[j] = std::norm(s.c[j]) * gamma_tilde(s.U[j], p);
    tot += lam[j];
  }
  double r = rng.uniform() * tot;
  int i = 0;
  for (; i < N - 1; ++i) {
    r -= lam[i];
    if (r <= 0) break;
  }
  JumpSample js;
  js.component = i;
  double Un = s.U[i].norm();
  sample_jump_K(Un, rng, js.K, js.xi);
  if (Un < 1e-12) {
    js.K_vec = js.K * rng.unit_vector();
  } else {
    Vec3 uhat = s.U[i] / Un;
    Vec3 e;
    Vec3 perp;
    do {
      e = rng.unit_vector();
      perp = uhat.cross(e);
    } while (perp.norm() < 1e-12);
    perp = perp.normalized();
    js.K_vec = js.K * (js.xi * uhat + std::sqrt(std::max(0.0, 1.0 - js.xi * js.xi)) * perp);
  }
  return js;
}

void apply_jump(SuperpositionState& s, const Vec3& K, const EngineParams& p) {
  double Kn = K.norm();
  Vec3 khat = K / Kn;
  for (int j = 0; j < s.size(); ++j) {
    double w = Kn / 2.0 + khat.dot(s.U[j]);
    s.c[j] *= std::exp(-0.5 * w * w);
  }
  for (auto& u : s.U) u += p.kick() * K;
  s.normalize();
}

TrajectoryRecord run_trajectory(const SuperpositionState& initial, const EngineParams& p,
                                const std::vector<double>& sample_times, RngStream& rng) {
  SuperpositionState s = initial;
  s.normalize();
  const int nt = static_cast<int>(sample_times.size());
  TrajectoryRecord rec;
  rec.u_mean.resize(nt);
  rec.u_sq.resize(nt);
  rec.coherence.assign(nt, 1.0);
  double coh0 = s.size() == 2 ? std::abs(s.c[0] * std::conj(s.c[1])) : 1.0;

  auto record = [&](int k) {
    Vec3 um{};
    double usq = 0.0;
    for (int j = 0; j < s.size(); ++j) {
      double w = std::norm(s.c[j]);
      um += w * s.U[j];
      usq += w * s.U[j].norm2();
    }
    rec.u_mean[k] = um;
    rec.u_sq[k] = usq;
    if (s.size() == 2 && coh0 > 0)
      rec.coherence[k] = std::abs(s.c[0] * std::conj(s.c[1])) / coh0;
  };

  int next = 0;
  if (p.gamma_beta <= 0.0) {
    // Free evolution: phases only.
    for (; next < nt; ++next) {
      double tau = sample_times[next] - s.t;
      for (int j = 0; j < s.size(); ++j)
        s.c[j] *= std::polar(1.0, -p.phase_coeff * s.U[j].norm2() * tau);
      s.t = sample_times[next];
      record(next);
    }
    return rec;
  }

  while (next < nt) {
    double tau = sample_waiting_time(s, p, rng);
    double t_jump = s.t + tau;
    while (next < nt && sample_times[next] <= t_jump) {
      // Advance a copy to the sample time; the pending jump epoch stays.
      SuperpositionState snap = s;
      drift(snap, sample_times[next] - s.t, p);
      std::swap(s, snap);
      record(next);
      std::swap(s, snap);
      ++next;
    }
    if (next >= nt) {
      // Partial compensator up to the last sample time.
      double dtp = sample_times.back() - s.t;
      if (dtp > 0) {
        double surv = 0.0;
        for (int j = 0; j < s.size(); ++j)
          surv += std::norm(s.c[j]) * std::exp(-gamma_tilde(s.U[j], p) * dtp);
        rec.integrated_rate += -std::log(surv);
      }
      break;
    }
    // Compensator increment over [s.t, t_jump]: with constant momenta the
    // normalized mean rate is g(u) = sum w_j g_j e^{-g_j u} / sum w_j e^{-g_j u},
    // whose time integral is -log(survival).
    {
      double surv = 0.0;
      for (int j = 0; j < s.size(); ++j)
        surv += std::norm(s.c[j]) * std::exp(-gamma_tilde(s.U[j], p) * tau);
      rec.integrated_rate += -std::log(surv);
    }
    drift(s, tau, p);
    JumpSample js = sample_jump(s, p, rng);
    apply_jump(s, js.K_vec, p);
    ++rec.jumps;
  }
  return rec;
}

std::vector<TrajectoryRecord> run_ensemble(const SuperpositionState& initial,
                                           const EngineParams& p, int n_traj,
                                           const std::vector<double>& sample_times,
                                           std::uint64_t master_seed, int n_threads) {
  std::vector<TrajectoryRecord> out(n_traj);
  if (n_threads < 1) n_threads = 1;
  auto work = [&](int begin, int end) {
    for (int i = begin; i < end; ++i) {
      RngStream rng(master_seed, static_cast<std::uint64_t>(i));
      out[i] = run_trajectory(initial, p, sample_times, rng);
    }
  };
  if (n_threads == 1) {
    work(0, n_traj);
  } else {
    std::vector<std::thread> threads;
    int chunk = (n_traj + n_threads - 1) / n_threads;
    for (int t = 0; t < n_threads; ++t) {
      int b = t * chunk, e = std::min(n_traj, b + chunk);
      if (b >= e) break;
      threads.emplace_back(work, b, e);
    }
    for (auto& th : threads) th.join();
  }
  return out;
}

}  // namespace qlb

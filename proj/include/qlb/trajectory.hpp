#pragma once
#include <complex>
#include <cstdint>
#include <vector>

#include "qlb/rates.hpp"
#include "qlb/rng.hpp"
#include "qlb/vec3.hpp"

namespace qlb {

// Normalized superposition of momentum eigenstates in scaled momentum U.
struct SuperpositionState {
  std::vector<std::complex<double>> c;
  std::vector<Vec3> U;
  double t = 0.0;  // elapsed time, units of 1/Gamma_beta when gamma_beta = 1

  int size() const { return static_cast<int>(c.size()); }
  double norm_sq() const {
    double s = 0.0;
    for (const auto& a : c) s += std::norm(a);
    return s;
  }
  void normalize();

  static SuperpositionState eigenstate(const Vec3& U0);
  static SuperpositionState pair(const Vec3& U1, const Vec3& U2);
};

struct EngineParams {
  double gamma_beta = 1.0;   // rate scale
  double mass_ratio = 1.0;   // m/M
  double phase_coeff = 1.0;  // E(U) tau / hbar = phase_coeff * U^2 * tau
  double kick() const { return mass_ratio / (1.0 + mass_ratio); }  // m*/M
};

// Scaled loss rate of a single component.
inline double gamma_tilde(const Vec3& U, const EngineParams& p) {
  return loss_rate_scaled(U.norm(), p.gamma_beta);
}

// Inverse-CDF waiting time for the multi-exponential survival law.
double sample_waiting_time(const SuperpositionState& s, const EngineParams& p, RngStream& rng);

// Deterministic between-jump evolution: phases and differential damping of
// the amplitudes, momenta unchanged.
void drift(SuperpositionState& s, double tau, const EngineParams& p);

// One jump draw: component selection, then (K, xi) from the flux-weighted
// thermal transfer density around the selected component's momentum.
struct JumpSample {
  int component = 0;
  double K = 0.0;    // transfer magnitude
  double xi = 0.0;   // cosine between transfer and the component momentum
  Vec3 K_vec;
};

// Transfer magnitude/direction-cosine for a component at scaled momentum U.
void sample_jump_K(double U, RngStream& rng, double& K, double& xi);

JumpSample sample_jump(const SuperpositionState& s, const EngineParams& p, RngStream& rng);

// Apply transfer K to every branch: common momentum kick, branch-dependent
// amplitude reweighting.
void apply_jump(SuperpositionState& s, const Vec3& K, const EngineParams& p);

// Per-trajectory record at the requested sample times.
struct TrajectoryRecord {
  std::vector<Vec3> u_mean;     // sum |c_j|^2 U_j
  std::vector<double> u_sq;     // sum |c_j|^2 |U_j|^2
  std::vector<double> coherence;  // |c_1 c_2*| / initial, 1.0 when N != 2
  long jumps = 0;
  double integrated_rate = 0.0;  // \int dt sum |c_j|^2 Gamma_j (jump compensator)
};

TrajectoryRecord run_trajectory(const SuperpositionState& initial, const EngineParams& p,
                                const std::vector<double>& sample_times, RngStream& rng);

// Independent trajectories with per-index RNG streams; the result is a
// deterministic function of (initial, params, sample_times, seed) for any
// thread count.
std::vector<TrajectoryRecord> run_ensemble(const SuperpositionState& initial,
                                           const EngineParams& p, int n_traj,
                                           const std::vector<double>& sample_times,
                                           std::uint64_t master_seed, int n_threads = 1);

}  // namespace qlb

#pragma once
#include <vector>

#include "qlb/models.hpp"
#include "qlb/rates.hpp"
#include "qlb/vec3.hpp"

namespace qlb {

// Cubic-bin 3D histogram of scaled momenta over [-extent, extent]^3.
class MomentumHistogram {
 public:
  MomentumHistogram(double extent = 6.0, double bin_width = 0.25);

  void add(const Vec3& u, double weight = 1.0);
  // Bin index for a sample, or -1 if out of range.
  int bin_index(const Vec3& u) const;

  double bin_volume() const { return w_ * w_ * w_; }
  double total_weight() const { return total_; }
  const std::vector<double>& counts() const { return counts_; }
  // Center of bin i.
  Vec3 bin_center(int i) const;
  int n_bins() const { return nb_ * nb_ * nb_; }

 private:
  double ext_, w_;
  int nb_;
  std::vector<double> counts_;
  double total_ = 0.0;
};

// Binned relative entropy H(f|g) against a reference density g evaluated at
// bin centers; bins with fewer than min_count samples are skipped to control
// small-count log noise.  Returns +inf if f occupies a bin where g vanishes.
double relative_entropy(const MomentumHistogram& f, const std::vector<double>& g_at_centers,
                        double min_count = 5.0);

// Equilibrium momentum density of the test particle (in scaled momentum U):
// nu(U) proportional to exp(-(M/m) U^2), normalized.
double stationary_density_scaled(const Vec3& U, double mass_ratio /* m/M */);

// |M_in(P+Q;Q) - M_in(P;-Q) exp(-beta E(Q,P))| scaled by the larger rate.
double detailed_balance_residual(const Vec3& P, const Vec3& Q, const CrossSectionModel& model,
                                 const GasSpec& gas, const ParticleSpec& particle,
                                 double hbar = 1.0);

// max over the supplied momenta of the stationarity defect
// |int dQ [gain into P from the thermal state - loss out of P]| relative to
// the loss rate; beta_test allows probing a wrong-temperature Gaussian.
double stationary_residual(const CrossSectionModel& model, const GasSpec& gas,
                           const ParticleSpec& particle, const std::vector<Vec3>& grid,
                           double beta_test = -1.0, double hbar = 1.0);

// W(P, P') = M(P' -> P) exp(beta P^2 / 2M); symmetric under P <-> P'.
double transition_rate_w(const Vec3& P, const Vec3& P_prime, const CrossSectionModel& model,
                         const GasSpec& gas, const ParticleSpec& particle, double hbar = 1.0);

}  // namespace qlb

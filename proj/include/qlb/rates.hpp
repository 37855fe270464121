#pragma once
#include "qlb/models.hpp"
#include "qlb/vec3.hpp"

namespace qlb {

// Thermally averaged cross-section governing the total collision rate
// M_out(P) = n_gas (P/M) sigma_eff(P).  Constant and power-law models only
// (closed form through 1F1); diverges ~1/P at P = 0, the product
// P * sigma_eff stays finite.
double effective_cross_section(double P, const CrossSectionModel& model,
                               const GasSpec& gas, const ParticleSpec& particle);

enum class LossPath {
  Auto,        // closed form where available, forward-amplitude route for Born
  ClosedForm,  // 1F1 expression (Constant/PowerLaw)
  Forward,     // thermal average of v_rel sigma_tot(v_rel) (optical theorem route)
  Quadrature,  // direct integral of the gain rate over all transfers
};

// Total loss rate M_out^cl(P).
double classical_loss_rate(double P, const CrossSectionModel& model, const GasSpec& gas,
                           const ParticleSpec& particle, LossPath path = LossPath::Auto,
                           double hbar = 1.0);

// Gaussian-weighted average of the differential cross-section over the plane
// orthogonal to Q (per solid angle).  P_perp is the component of the
// pre-collision momentum orthogonal to Q.
double averaged_cross_section(const Vec3& P_perp, const Vec3& Q, const CrossSectionModel& model,
                              const GasSpec& gas, const ParticleSpec& particle,
                              double hbar = 1.0);

// Gain rate density M_in^cl(P; Q): rate of arriving at final momentum P via
// momentum transfer Q (i.e. from P - Q).  Closed form for the constant model,
// 2D Gauss-Hermite quadrature otherwise.
double classical_gain_rate(const Vec3& P_final, const Vec3& Q, const CrossSectionModel& model,
                           const GasSpec& gas, const ParticleSpec& particle,
                           double hbar = 1.0);

// Same rate expressed with the pre-collision momentum.
double classical_gain_rate_pre(const Vec3& P_pre, const Vec3& Q, const CrossSectionModel& model,
                               const GasSpec& gas, const ParticleSpec& particle,
                               double hbar = 1.0);

// Dimensionless loss rate: Gamma(U) = Gamma_beta (2/sqrt(pi)) 1F1(-1/2,3/2;-U^2).
double loss_rate_scaled(double U, double gamma_beta);

}  // namespace qlb

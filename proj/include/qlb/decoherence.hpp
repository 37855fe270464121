#pragma once
#include <complex>

#include "qlb/models.hpp"
#include "qlb/rates.hpp"
#include "qlb/vec3.hpp"

namespace qlb {

// Massive-tracer (M >> m) collisional-decoherence setting.
struct DecoherenceSpec {
  CrossSectionModel model;
  GasSpec gas;
  ParticleSpec particle;
  Vec3 P0{};        // optional reference momentum of the tracer
  double hbar = 1.0;

  bool mass_ratio_warning() const { return gas.m / particle.M > 0.1; }
};

// Total collision rate at the reference momentum.
double total_collision_rate(const DecoherenceSpec& spec);

// Normalized momentum-transfer distribution P(Q) = M_in(P0+Q; Q)/Gamma_tot.
double transfer_distribution(const Vec3& Q, const DecoherenceSpec& spec);

// Characteristic function of the transfer distribution at position
// separation S (isotropic scattering: real, evaluated by (p, theta)
// double quadrature with a sinc kernel).
double decoherence_function(double S, const DecoherenceSpec& spec);

// Off-diagonal position matrix element after time t:
// rho0 * exp(-Gamma_tot (1 - Phi(S)) t).
std::complex<double> evolve_position_coherence(std::complex<double> rho0, double S, double t,
                                               const DecoherenceSpec& spec);

// Interferometer visibility for a thermal-beam experiment with a -C6/r^6
// interaction: collision rate at beam momentum P0 through the effective
// cross-section for a = -2/5.
struct VisibilitySetup {
  double P0;     // beam momentum
  double M;      // molecule mass
  double t;      // flight time
  double beta;   // gas inverse temperature
  double m;      // gas particle mass
  double C6;
  double hbar = 1.0;
};

// Collision rate per unit gas density times n_gas.
double visibility_rate(const VisibilitySetup& vs, double n_gas);

// V(p)/V0 = exp(-Gamma_tot(P0) t) with n_gas = p * beta.
double visibility(const VisibilitySetup& vs, double pressure);

// Critical pressure: V = V0 exp(-p/p_crit).
double critical_pressure(const VisibilitySetup& vs);

}  // namespace qlb

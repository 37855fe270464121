#pragma once
#include "qlb/models.hpp"
#include "qlb/vec3.hpp"

namespace qlb {

// Dynamic structure factor of an ideal Maxwell-Boltzmann gas (per particle):
// S(Q, E) = sqrt(beta m / 2 pi) (1/Q) exp(-beta (Q^2 + 2mE)^2 / (8 m Q^2)),
// with E the energy handed to the gas in the collision.
double s_mb(double Q, double E, double beta, double m);

// Ideal Bose (0 < z < 1) or Fermi (z > 0) gas, normalized per particle by
// dividing out n_gas.  Reduces to s_mb as z -> 0 when
// n_gas = z (m / 2 pi hbar^2 beta)^{3/2}.
double s_bf(double Q, double E, const GasSpec& gas, double hbar = 1.0);

// Dispatch on the gas statistics.
double dynamic_structure_factor(double Q, double E, const GasSpec& gas, double hbar = 1.0);

// Differential cross-section per gas particle for a tracer with momentum P
// scattering with momentum transfer Q (final momentum P + Q), factorized
// into the Born amplitude and the structure factor:
// (M/m*)^2 (|P+Q|/P) |f_B(Q)|^2 S(Q, E),  E = (|P+Q|^2 - P^2) / 2M.
double lab_frame_cross_section(const Vec3& P, const Vec3& Q, const BornModel& model,
                               const GasSpec& gas, const ParticleSpec& particle,
                               double hbar = 1.0);

}  // namespace qlb

#pragma once
#include <complex>

#include "qlb/models.hpp"

namespace qlb {

enum class AveragePath { ThreeD, OneD };

// Thermal average of the forward amplitude over the gas momentum
// distribution, evaluated at relative kinematics for test momentum P.
// ThreeD: (p, cos theta) quadrature of the Maxwell density.
// OneD: sinh-kernel reduction of the angular integral (rotation-invariant
// amplitudes), equivalent by construction.
std::complex<double> thermal_forward_average(const CrossSectionModel& model, const GasSpec& gas,
                                             const ParticleSpec& particle, double P,
                                             AveragePath path = AveragePath::OneD,
                                             double hbar = 1.0);

// Coherent collisional energy shift H_n(P) = -2 pi hbar^2 (n_gas/m*) Re<f0(P)>.
double energy_shift(double P, const CrossSectionModel& model, const GasSpec& gas,
                    const ParticleSpec& particle, double hbar = 1.0);

// Complex index of refraction for a matter wave of wavenumber K:
// n = 1 + 2 pi (n_gas/K^2)(M/m*) <f0(hbar K)>.
std::complex<double> refraction_index(double K, const CrossSectionModel& model,
                                      const GasSpec& gas, const ParticleSpec& particle,
                                      double hbar = 1.0);

}  // namespace qlb

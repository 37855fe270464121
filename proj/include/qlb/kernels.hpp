#pragma once
#include <complex>
#include <vector>

#include "qlb/models.hpp"
#include "qlb/rates.hpp"
#include "qlb/vec3.hpp"

namespace qlb {

// |L(p_perp, P; Q)|^2: squared jump-operator value at classical momentum
// arguments.  Defined for every model.
double lindblad_modulus_sq(const Vec3& p_perp, const Vec3& P, const Vec3& Q,
                           const CrossSectionModel& model, const GasSpec& gas,
                           const ParticleSpec& particle, double hbar = 1.0);

// Complex jump-operator value; requires an amplitude-bearing (Born) model.
std::complex<double> lindblad_value(const Vec3& p_perp, const Vec3& P, const Vec3& Q,
                                    const CrossSectionModel& model, const GasSpec& gas,
                                    const ParticleSpec& particle, double hbar = 1.0);

// Dimensionless jump-rate density for a constant cross-section, normalized so
// that int d^3K |L|^2 = Gamma(U):
// |L(U;K)|^2 = (Gamma_beta / (4 pi sqrt(pi) K)) exp(-(K/2 + U.K/K)^2).
double lindblad_scaled_sq(const Vec3& U, const Vec3& K, double gamma_beta);

// Two-sided gain kernel M_in(P, P'; Q); reduces to the classical gain rate on
// the diagonal P = P'.
std::complex<double> quantum_gain_kernel(const Vec3& P, const Vec3& P_prime, const Vec3& Q,
                                         const CrossSectionModel& model, const GasSpec& gas,
                                         const ParticleSpec& particle, double hbar = 1.0);

// Momentum-space density matrix on a cubic n^3 grid with spacing h centered
// at the origin: rho(i, j) = <P_i| rho |P_j>.
struct DensityMatrixGrid {
  int n = 0;       // points per axis
  double h = 1.0;  // grid spacing
  std::vector<std::complex<double>> rho;  // (n^3) x (n^3), row-major

  DensityMatrixGrid() = default;
  DensityMatrixGrid(int n_, double h_)
      : n(n_), h(h_), rho(static_cast<std::size_t>(n_) * n_ * n_ * n_ * n_ * n_) {}

  int n_points() const { return n * n * n; }
  Vec3 momentum(int flat) const {
    int iz = flat % n, iy = (flat / n) % n, ix = flat / (n * n);
    double c = 0.5 * (n - 1);
    return {(ix - c) * h, (iy - c) * h, (iz - c) * h};
  }
  std::complex<double>& at(int i, int j) { return rho[static_cast<std::size_t>(i) * n_points() + j]; }
  const std::complex<double>& at(int i, int j) const {
    return rho[static_cast<std::size_t>(i) * n_points() + j];
  }
  std::complex<double> trace() const;

  // Thermal diagonal state (normalized on the grid).
  static DensityMatrixGrid thermal(int n, double h, const GasSpec& gas,
                                   const ParticleSpec& particle);
};

struct GeneratorResult {
  DensityMatrixGrid derivative;
  double boundary_leak = 0.0;  // fraction of the loss rate with no on-grid gain partner
};

// Right-hand side of the master equation restricted to the grid: gain summed
// over exact grid-difference transfers, loss as the anticommutator damping,
// optional kinetic + forward-scattering phase.  Constant or Born models.
GeneratorResult apply_generator(const DensityMatrixGrid& state, const CrossSectionModel& model,
                                const GasSpec& gas, const ParticleSpec& particle,
                                bool include_hamiltonian = false, double hbar = 1.0);

}  // namespace qlb

#pragma once
#include <complex>
#include <vector>

#include "qlb/models.hpp"
#include "qlb/vec3.hpp"

namespace qlb {

using Cd = std::complex<double>;

// Complex 3-vector; dot() is the bilinear (unconjugated) product.
struct CVec3 {
  Cd x{}, y{}, z{};

  CVec3() = default;
  CVec3(Cd x_, Cd y_, Cd z_) : x(x_), y(y_), z(z_) {}
  explicit CVec3(const Vec3& v) : x(v.x), y(v.y), z(v.z) {}

  CVec3 operator+(const CVec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  CVec3 operator-(const CVec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  CVec3 operator*(Cd s) const { return {x * s, y * s, z * s}; }
  CVec3 conj() const { return {std::conj(x), std::conj(y), std::conj(z)}; }
  Cd dot(const CVec3& o) const { return x * o.x + y * o.y + z * o.z; }
  Cd dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
};
inline CVec3 operator*(Cd s, const CVec3& v) { return v * s; }

// Gaussian wave packet psi(X) = exp(-alpha X^2 + b.X + g); Re(alpha) > 0.
// Plane-wave tilt and displacement live in b, normalization/phase in g.
struct GaussianPacket {
  Cd alpha{1.0, 0.0};
  CVec3 b{};
  Cd g{};

  Cd value(const Vec3& X) const;

  // Normalized packet centred at X0 with mean momentum P0 and width s
  // (position-space standard deviation of |psi|^2 per axis).
  static GaussianPacket make(const Vec3& X0, const Vec3& P0, double s, double hbar = 1.0);
};

// Free Schroedinger evolution for time t and mass M (closed form).
GaussianPacket free_evolve(const GaussianPacket& p, double t, double M, double hbar = 1.0);

// Momentum representation phi(P) = (2 pi hbar)^{-3/2} int e^{-iP.X/hbar} psi(X) d^3X,
// again of Gaussian form.
GaussianPacket momentum_rep(const GaussianPacket& p, double hbar = 1.0);

// Friction coefficient of the quantum Brownian limit (m << M):
// eta = (16/3) sqrt(pi) (m/M) n v_beta' int u^5 e^{-u^2} du
//       int sin(theta) (1 - cos(theta)) sigma(theta; u p_beta) dtheta
// with v_beta' = sqrt(2/(beta m)).
double friction_coefficient(const CrossSectionModel& model, const GasSpec& gas,
                            const ParticleSpec& particle, double hbar = 1.0);

// Momentum and position diffusion coefficients of the Caldeira-Leggett-type
// limit; they satisfy D_xx D_pp = eta^2 hbar^2 / 16 identically.
struct DiffusionCoefficients {
  double D_pp = 0.0;
  double D_xx = 0.0;
};
DiffusionCoefficients diffusion_coefficients(double eta, double M, double beta,
                                             double hbar = 1.0);

// Frictionless master equation
//   d rho/dt = -(i/hbar)[P^2/2M, rho] - (D_pp/hbar^2)[X,[X,rho]]
//              - (D_xx/hbar^2)[P,[P,rho]]
// solved in closed form for an initial superposition of Gaussian packets
// rho_0(X, X') = sum_ab psi_a(X) conj(psi_b(X')).

// Position matrix element rho_t(X, X').
Cd frictionless_position(const std::vector<GaussianPacket>& packets, const Vec3& X,
                         const Vec3& Xp, double t, double M, double D_pp, double D_xx,
                         double hbar = 1.0);

// Momentum matrix element rho_t(P, P').
Cd frictionless_momentum(const std::vector<GaussianPacket>& packets, const Vec3& P,
                         const Vec3& Pp, double t, double M, double D_pp, double D_xx,
                         double hbar = 1.0);

}  // namespace qlb

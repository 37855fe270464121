#include "qlb/brownian.hpp"

#include <cmath>

#include "qlb/quadrature.hpp"

namespace qlb {
namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
const Cd kI{0.0, 1.0};

Cd pow32(Cd z) { return std::pow(z, 1.5); }

}  // namespace

Cd GaussianPacket::value(const Vec3& X) const {
  CVec3 Xc(X);
  return std::exp(-alpha * Xc.dot(Xc) + b.dot(Xc) + g);
}

GaussianPacket GaussianPacket::make(const Vec3& X0, const Vec3& P0, double s, double hbar) {
  GaussianPacket p;
  double a = 1.0 / (4.0 * s * s);
  p.alpha = a;
  p.b = CVec3(X0) * (2.0 * a) + CVec3(P0) * (kI / hbar);
  p.g = -a * X0.norm2() - 0.75 * std::log(2.0 * M_PI * s * s);
  return p;
}

GaussianPacket free_evolve(const GaussianPacket& p, double t, double M, double hbar) {
  Cd D = 1.0 + 2.0 * kI * hbar * t * p.alpha / M;
  GaussianPacket q;
  q.alpha = p.alpha / D;
  q.b = p.b * (1.0 / D);
  q.g = p.g + kI * hbar * t * p.b.dot(p.b) / (2.0 * M * D) - 1.5 * std::log(D);
  return q;
}

GaussianPacket momentum_rep(const GaussianPacket& p, double hbar) {
  GaussianPacket q;
  q.alpha = 1.0 / (4.0 * p.alpha * hbar * hbar);
  q.b = p.b * (-kI / (2.0 * p.alpha * hbar));
  q.g = p.g + p.b.dot(p.b) / (4.0 * p.alpha) - 1.5 * std::log(2.0 * hbar * p.alpha);
  return q;
}

double friction_coefficient(const CrossSectionModel& model, const GasSpec& gas,
                            const ParticleSpec& particle, double hbar) {
  double pb = gas.p_beta();
  double ms = particle.mstar(gas.m);
  const QuadRule& rt = gauss_laguerre(64);
  const QuadRule& ra = gauss_legendre(128);
  // int_0^inf u^5 e^{-u^2} G(u) du with t = u^2.
  double sum = 0.0;
  for (std::size_t i = 0; i < rt.x.size(); ++i) {
    double u = std::sqrt(rt.x[i]);
    double p = u * pb;
    double inner = 0.0;
    for (std::size_t j = 0; j < ra.x.size(); ++j) {
      double c = ra.x[j];
      double sth = std::sqrt(std::max(0.0, 1.0 - c * c));
      Vec3 pi{0, 0, p}, pf{p * sth, 0, p * c};
      inner += ra.w[j] * (1.0 - c) * diff_cross_section(model, pf, pi, ms, hbar);
    }
    sum += 0.5 * rt.w[i] * rt.x[i] * rt.x[i] * inner;
  }
  double vb = std::sqrt(2.0 / (gas.beta * gas.m));
  return (16.0 / 3.0) * kSqrtPi * (gas.m / particle.M) * gas.n_gas * vb * sum;
}

DiffusionCoefficients diffusion_coefficients(double eta, double M, double beta, double hbar) {
  return {eta * M / beta, beta * hbar * hbar * eta / (16.0 * M)};
}

namespace {

// sum_ab (pi/A)^{3/2} exp(B.B/4A + C) for the Gaussian convolution
// int d^3Y exp(-Y^2/4Dt + i lam Y.(X-X')) rho(X-Y, X'-Y).
Cd pair_convolution(const std::vector<GaussianPacket>& ps, const Vec3& X, const Vec3& Xp,
                    double Dt, double lam) {
  CVec3 Xc(X), Xpc(Xp), dXc(X - Xp);
  Cd sum = 0.0;
  for (const auto& a : ps) {
    for (const auto& b : ps) {
      Cd ab = std::conj(b.alpha);
      CVec3 bb = b.b.conj();
      Cd A = a.alpha + ab + 1.0 / (4.0 * Dt);
      CVec3 B = Xc * (2.0 * a.alpha) + Xpc * (2.0 * ab) - a.b - bb + dXc * (kI * lam);
      Cd C = -a.alpha * Xc.dot(Xc) + a.b.dot(Xc) + a.g - ab * Xpc.dot(Xpc) + bb.dot(Xpc) +
             std::conj(b.g);
      sum += pow32(M_PI / A) * std::exp(B.dot(B) / (4.0 * A) + C);
    }
  }
  return sum;
}

Cd direct_density(const std::vector<GaussianPacket>& ps, const Vec3& X, const Vec3& Xp) {
  Cd sum = 0.0;
  for (const auto& a : ps)
    for (const auto& b : ps) sum += a.value(X) * std::conj(b.value(Xp));
  return sum;
}

}  // namespace

Cd frictionless_position(const std::vector<GaussianPacket>& packets, const Vec3& X,
                         const Vec3& Xp, double t, double M, double D_pp, double D_xx,
                         double hbar) {
  if (t == 0.0) return direct_density(packets, X, Xp);
  std::vector<GaussianPacket> evolved;
  evolved.reserve(packets.size());
  for (const auto& p : packets) evolved.push_back(free_evolve(p, t, M, hbar));
  if (D_pp == 0.0 && D_xx == 0.0) return direct_density(evolved, X, Xp);

  double Dtil = D_xx + D_pp * t * t / (3.0 * M * M);
  double lam = D_pp * t / (2.0 * M * hbar * Dtil);
  double sep2 = (X - Xp).norm2();
  double damp = (D_pp / (hbar * hbar)) * sep2 * t *
                (1.0 - (D_pp * t * t / (4.0 * M * M)) / Dtil);
  double Dt = Dtil * t;
  Cd conv = pair_convolution(evolved, X, Xp, Dt, lam);
  return std::exp(-damp) * std::pow(4.0 * M_PI * Dt, -1.5) * conv;
}

Cd frictionless_momentum(const std::vector<GaussianPacket>& packets, const Vec3& P,
                         const Vec3& Pp, double t, double M, double D_pp, double D_xx,
                         double hbar) {
  std::vector<GaussianPacket> mom;
  mom.reserve(packets.size());
  for (const auto& p : packets) mom.push_back(momentum_rep(p, hbar));
  if (t == 0.0) return direct_density(mom, P, Pp);

  double sep2 = (P - Pp).norm2();
  Cd phase = std::exp(-kI * (P.norm2() - Pp.norm2()) * t / (2.0 * M * hbar));
  double damp = (D_xx / (hbar * hbar)) * sep2 * t +
                D_pp * t * t * t * sep2 / (12.0 * M * M * hbar * hbar);
  if (D_pp == 0.0) return phase * std::exp(-damp) * direct_density(mom, P, Pp);

  double Dt = D_pp * t;
  Cd conv = pair_convolution(mom, P, Pp, Dt, 0.0);
  return phase * std::exp(-damp) * std::pow(4.0 * M_PI * Dt, -1.5) * conv;
}

}  // namespace qlb

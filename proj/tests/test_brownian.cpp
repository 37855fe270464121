#include <cmath>
#include <complex>
#include <vector>

#include <stdexcept>

#include "doctest.h"
#include "qlb/brownian.hpp"
#include "qlb/quadrature.hpp"
#include "qlb/rates.hpp"

using namespace qlb;

static const GasSpec kGas{0.7, 1.0, 2.0};
static const ParticleSpec kPart{2.5};

namespace {

// Gaussian integrals of |psi|^2 for a packet exp(-alpha X^2 + b.X + g):
// norm and per-axis mean Re(b)/(2 Re alpha).
double packet_norm(const GaussianPacket& p) {
  double ar = 2.0 * p.alpha.real();
  Vec3 br{2.0 * p.b.x.real(), 2.0 * p.b.y.real(), 2.0 * p.b.z.real()};
  return std::pow(M_PI / ar, 1.5) * std::exp(br.norm2() / (4.0 * ar) + 2.0 * p.g.real());
}

Vec3 packet_mean(const GaussianPacket& p) {
  double ar = 2.0 * p.alpha.real();
  return {2.0 * p.b.x.real() / (2.0 * ar), 2.0 * p.b.y.real() / (2.0 * ar),
          2.0 * p.b.z.real() / (2.0 * ar)};
}

}  // namespace

TEST_CASE("friction coefficient: constant cross-section closed form") {
  double sigma = 1.3;
  double eta = friction_coefficient(ConstantModel{sigma}, kGas, kPart);
  double gb = thermal_rate(kGas, sigma);
  double closed = (8.0 / (3.0 * std::sqrt(M_PI))) * (kGas.m / kPart.M) * gb;
  CHECK(eta == doctest::Approx(closed).epsilon(1e-10));
}

TEST_CASE("friction coefficient: power-law analytic reduction") {
  // |f|^2 = c v^a with v = p/m*: the speed integral becomes Gamma(3 + a/2)/2.
  double c = 0.2, a = -0.4;
  double eta = friction_coefficient(PowerLawModel{c, a}, kGas, kPart);
  double pb = kGas.p_beta();
  double ms = kPart.mstar(kGas.m);
  double vbp = std::sqrt(2.0 / (kGas.beta * kGas.m));
  double expect = (16.0 / 3.0) * std::sqrt(M_PI) * (kGas.m / kPart.M) * kGas.n_gas * vbp *
                  2.0 * c * std::pow(pb / ms, a) * 0.5 * std::tgamma(3.0 + 0.5 * a);
  CHECK(eta == doctest::Approx(expect).epsilon(1e-6));
}

TEST_CASE("diffusion coefficients saturate the uncertainty product") {
  struct Case {
    double eta, M, beta, hbar;
  };
  for (Case cs : {Case{0.4, 2.0, 1.5, 1.0}, Case{0.05, 40.0, 0.3, 0.7},
                  Case{3.0, 0.8, 8.0, 2.5}}) {
    auto d = diffusion_coefficients(cs.eta, cs.M, cs.beta, cs.hbar);
    double prod = d.D_pp * d.D_xx;
    double expect = cs.eta * cs.eta * cs.hbar * cs.hbar / 16.0;
    CHECK(prod == doctest::Approx(expect).epsilon(1e-12));
    CHECK(d.D_pp == doctest::Approx(cs.eta * cs.M / cs.beta).epsilon(1e-14));
  }
}

TEST_CASE("Gaussian packets: normalization, transport, momentum representation") {
  Vec3 X0{0.5, -0.2, 1.0}, P0{1.2, 0.0, -0.5};
  double s = 0.8, M = 2.0, hbar = 1.0;
  auto p = GaussianPacket::make(X0, P0, s, hbar);
  CHECK(packet_norm(p) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((packet_mean(p) - X0).norm() < 1e-12);

  double t = 0.9;
  auto q = free_evolve(p, t, M, hbar);
  CHECK(packet_norm(q) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((packet_mean(q) - (X0 + (t / M) * P0)).norm() < 1e-12);

  auto mp = momentum_rep(p, hbar);
  CHECK(packet_norm(mp) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK((packet_mean(mp) - P0).norm() < 1e-12);
  // Free evolution only adds momentum-space phases: |phi|^2 unchanged.
  auto mq = momentum_rep(q, hbar);
  CHECK((packet_mean(mq) - P0).norm() < 1e-11);
  CHECK(mq.alpha.real() == doctest::Approx(mp.alpha.real()).epsilon(1e-12));
}

namespace {

std::vector<GaussianPacket> cat_state() {
  return {GaussianPacket::make({1.1, 0.0, 0.0}, {0.0, 0.6, 0.0}, 0.7),
          GaussianPacket::make({-1.1, 0.2, 0.0}, {0.0, -0.4, 0.3}, 0.9)};
}

Cd direct(const std::vector<GaussianPacket>& ps, const Vec3& X, const Vec3& Xp) {
  Cd s = 0.0;
  for (const auto& a : ps)
    for (const auto& b : ps) s += a.value(X) * std::conj(b.value(Xp));
  return s;
}

}  // namespace

TEST_CASE("frictionless propagator: limits and Hermiticity") {
  auto ps = cat_state();
  double M = 2.0, hbar = 1.0, t = 0.9;
  auto d = diffusion_coefficients(0.4, M, 1.5, hbar);
  Vec3 X{0.6, 0.1, -0.3}, Xp{-0.4, 0.5, 0.2};

  // t = 0 reproduces the initial density.
  CHECK(std::abs(frictionless_position(ps, X, Xp, 0.0, M, d.D_pp, d.D_xx, hbar) -
                 direct(ps, X, Xp)) < 1e-13);
  // Zero diffusion reduces to free unitary evolution.
  std::vector<GaussianPacket> ev;
  for (const auto& p : ps) ev.push_back(free_evolve(p, t, M, hbar));
  CHECK(std::abs(frictionless_position(ps, X, Xp, t, M, 0.0, 0.0, hbar) - direct(ev, X, Xp)) <
        1e-13);
  // Hermiticity of the evolved matrix.
  Cd r1 = frictionless_position(ps, X, Xp, t, M, d.D_pp, d.D_xx, hbar);
  Cd r2 = frictionless_position(ps, Xp, X, t, M, d.D_pp, d.D_xx, hbar);
  CHECK(std::abs(r1 - std::conj(r2)) < 1e-13 * std::abs(r1));
  Cd m1 = frictionless_momentum(ps, X, Xp, t, M, d.D_pp, d.D_xx, hbar);
  Cd m2 = frictionless_momentum(ps, Xp, X, t, M, d.D_pp, d.D_xx, hbar);
  CHECK(std::abs(m1 - std::conj(m2)) < 1e-13 * std::abs(m1));
}

TEST_CASE("frictionless position solution matches a brute-force convolution") {
  auto ps = cat_state();
  double M = 2.0, hbar = 1.0, t = 0.9;
  auto d = diffusion_coefficients(0.4, M, 1.5, hbar);
  double Dtil = d.D_xx + d.D_pp * t * t / (3.0 * M * M);
  double lam = d.D_pp * t / (2.0 * M * hbar * Dtil);
  double Dt = Dtil * t;

  std::vector<GaussianPacket> ev;
  for (const auto& p : ps) ev.push_back(free_evolve(p, t, M, hbar));

  const QuadRule& r = gauss_hermite(32);
  double sc = 2.0 * std::sqrt(Dt);
  for (auto [X, Xp] : {std::pair<Vec3, Vec3>{{0.6, 0.1, -0.3}, {-0.4, 0.5, 0.2}},
                       std::pair<Vec3, Vec3>{{1.0, 0.0, 0.0}, {1.0, 0.0, 0.0}}}) {
    Vec3 dX = X - Xp;
    double damp = (d.D_pp / (hbar * hbar)) * dX.norm2() * t *
                  (1.0 - (d.D_pp * t * t / (4.0 * M * M)) / Dtil);
    Cd conv = 0.0;
    for (std::size_t i = 0; i < r.x.size(); ++i)
      for (std::size_t j = 0; j < r.x.size(); ++j)
        for (std::size_t k = 0; k < r.x.size(); ++k) {
          Vec3 Y{sc * r.x[i], sc * r.x[j], sc * r.x[k]};
          Cd osc = std::exp(Cd{0.0, lam * Y.dot(dX)});
          conv += r.w[i] * r.w[j] * r.w[k] * osc * direct(ev, X - Y, Xp - Y);
        }
    conv *= sc * sc * sc;
    Cd brute = std::exp(-damp) * std::pow(4.0 * M_PI * Dt, -1.5) * conv;
    Cd closed = frictionless_position(ps, X, Xp, t, M, d.D_pp, d.D_xx, hbar);
    CHECK(std::abs(closed - brute) < 1e-8 * std::abs(direct(ev, X, X)));
  }
}

TEST_CASE("frictionless momentum solution matches a brute-force convolution") {
  auto ps = cat_state();
  double M = 2.0, hbar = 1.0, t = 0.9;
  auto d = diffusion_coefficients(0.4, M, 1.5, hbar);
  std::vector<GaussianPacket> mom;
  for (const auto& p : ps) mom.push_back(momentum_rep(p, hbar));

  double Dt = d.D_pp * t;
  const QuadRule& r = gauss_hermite(48);
  double sc = 2.0 * std::sqrt(Dt);
  Vec3 P{0.8, -0.3, 0.2}, Pp{-0.5, 0.4, 0.0};
  Vec3 dP = P - Pp;
  Cd phase = std::exp(Cd{0.0, -(P.norm2() - Pp.norm2()) * t / (2.0 * M * hbar)});
  double damp = (d.D_xx / (hbar * hbar)) * dP.norm2() * t +
                d.D_pp * std::pow(t, 3) * dP.norm2() / (12.0 * M * M * hbar * hbar);
  Cd conv = 0.0;
  for (std::size_t i = 0; i < r.x.size(); ++i)
    for (std::size_t j = 0; j < r.x.size(); ++j)
      for (std::size_t k = 0; k < r.x.size(); ++k) {
        Vec3 Q{sc * r.x[i], sc * r.x[j], sc * r.x[k]};
        conv += r.w[i] * r.w[j] * r.w[k] * direct(mom, P - Q, Pp - Q);
      }
  conv *= sc * sc * sc;
  Cd brute = phase * std::exp(-damp) * std::pow(4.0 * M_PI * Dt, -1.5) * conv;
  Cd closed = frictionless_momentum(ps, P, Pp, t, M, d.D_pp, d.D_xx, hbar);
  CHECK(std::abs(closed - brute) < 1e-7 * std::abs(direct(mom, P, P)));
}

TEST_CASE("frictionless moments grow by the diffusion laws") {
  // Single isotropic packet at rest: <{X,P}>_0 = 0, closed-form moments.
  double s = 0.8, M = 2.0, hbar = 1.0, t = 0.9;
  auto d = diffusion_coefficients(0.4, M, 1.5, hbar);
  std::vector<GaussianPacket> ps{GaussianPacket::make({0, 0, 0}, {0, 0, 0}, s, hbar)};
  double p2_0 = 3.0 * hbar * hbar / (4.0 * s * s);
  double x2_0 = 3.0 * s * s;

  // Radial integration of the isotropic diagonals.
  QuadRule rr = gauss_legendre_ab(400, 0.0, 14.0);
  double trx = 0.0, x2 = 0.0, trp = 0.0, p2 = 0.0;
  for (std::size_t i = 0; i < rr.x.size(); ++i) {
    double rad = rr.x[i];
    double fx =
        frictionless_position(ps, {rad, 0, 0}, {rad, 0, 0}, t, M, d.D_pp, d.D_xx, hbar).real();
    double fp =
        frictionless_momentum(ps, {rad, 0, 0}, {rad, 0, 0}, t, M, d.D_pp, d.D_xx, hbar).real();
    trx += rr.w[i] * 4.0 * M_PI * rad * rad * fx;
    x2 += rr.w[i] * 4.0 * M_PI * rad * rad * rad * rad * fx;
    trp += rr.w[i] * 4.0 * M_PI * rad * rad * fp;
    p2 += rr.w[i] * 4.0 * M_PI * rad * rad * rad * rad * fp;
  }
  CHECK(trx == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(trp == doctest::Approx(1.0).epsilon(1e-8));
  double x2_expect = x2_0 + t * t * p2_0 / (M * M) + 2.0 * d.D_pp * std::pow(t, 3) / (M * M) +
                     6.0 * d.D_xx * t;
  double p2_expect = p2_0 + 6.0 * d.D_pp * t;
  CHECK(x2 == doctest::Approx(x2_expect).epsilon(1e-8));
  CHECK(p2 == doctest::Approx(p2_expect).epsilon(1e-8));
}

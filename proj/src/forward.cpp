#include "qlb/forward.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qlb/quadrature.hpp"

namespace qlb {
namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// <g(v_rel)> over the Maxwell gas with the test particle moving at speed V:
// (2/sqrt(pi)) \int dv/v_b (v/V) sinh(2vV/v_b^2) exp(-(v^2+V^2)/v_b^2) g(v).
template <typename G>
auto sinh_kernel_average(const GasSpec& gas, double V, G g) -> decltype(g(1.0)) {
  double vb = gas.v_beta();
  double vmax = V + 10.0 * vb;
  const int n = 400;
  QuadRule rule = gauss_legendre_ab(n, 0.0, vmax);
  decltype(g(1.0)) sum{};
  for (int i = 0; i < n; ++i) {
    double v = rule.x[i];
    double kernel;
    if (V < 1e-12 * vb)
      kernel = 2.0 * v * v / (vb * vb) * std::exp(-v * v / (vb * vb));
    else
      kernel = (v / V) * std::sinh(2.0 * v * V / (vb * vb)) *
               std::exp(-(v * v + V * V) / (vb * vb));
    sum += rule.w[i] * kernel * g(v);
  }
  return (2.0 / kSqrtPi) / vb * sum;
}

}  // namespace

std::complex<double> thermal_forward_average(const CrossSectionModel& model, const GasSpec& gas,
                                             const ParticleSpec& particle, double P,
                                             AveragePath path, double hbar) {
  if (!has_amplitude(model))
    throw std::domain_error("thermal_forward_average: model carries no forward amplitude");
  double ms = particle.mstar(gas.m);
  double V = P / particle.M;
  if (path == AveragePath::OneD) {
    return sinh_kernel_average(gas, V, [&](double v) {
      return forward_amplitude(model, ms * v, ms, hbar);
    });
  }
  // 3D path: radial x polar-angle quadrature of mu(p) f0(|p/m - P/M| m*),
  // mu(p) d^3p = pi^{-3/2} e^{-u^2} u^2 du dOmega with u = p/p_b.
  // Radial: Gauss-Legendre on u in [0, 10] with the explicit weight.
  // Angular variable x with cos(theta) = 1 - x^2 removes the square-root
  // cusp of v_rel at theta -> 0: v_rel = sqrt((v-V)^2 + 2vV x^2) is analytic.
  double pb = gas.p_beta();
  const int nu = 160, na = 160;
  const QuadRule& ra = gauss_legendre(na);
  // The integrand depends on the quadrature point only through the relative
  // momentum; the amplitude's real part is the constant f(0) and its
  // absorptive part p sigma_tot(p)/(4 pi hbar) is smooth, so a barycentric
  // Chebyshev interpolant built from ~100 exact evaluations replaces tens of
  // thousands of nested cross-section quadratures at no accuracy cost.
  double vrel_max = 10.0 * pb / gas.m + V;
  double p_hi = ms * vrel_max * (1.0 + 1e-12);
  const int nc = 96;
  std::vector<double> pc(nc), gim(nc), wb(nc);
  for (int k = 0; k < nc; ++k) {
    pc[k] = 0.5 * p_hi * (1.0 - std::cos(M_PI * k / (nc - 1)));
    gim[k] = forward_amplitude(model, pc[k], ms, hbar).imag();
    wb[k] = (k % 2 ? -1.0 : 1.0) * ((k == 0 || k == nc - 1) ? 0.5 : 1.0);
  }
  double re0 = forward_amplitude(model, 0.0, ms, hbar).real();
  auto im_of = [&](double p) {
    double num = 0.0, den = 0.0;
    for (int k = 0; k < nc; ++k) {
      double d = p - pc[k];
      if (std::abs(d) < 1e-14 * p_hi) return gim[k];
      double t = wb[k] / d;
      num += t * gim[k];
      den += t;
    }
    return num / den;
  };
  // The angular integral leaves a weak (v - V)^2 log|v - V| trace at
  // v_gas = V; placing a panel break there restores fast convergence.
  double ustar = V * gas.m / pb;
  std::vector<QuadRule> panels;
  if (ustar > 0.0 && ustar < 10.0) {
    panels.push_back(gauss_legendre_ab(nu, 0.0, ustar));
    panels.push_back(gauss_legendre_ab(nu, ustar, 10.0));
  } else {
    panels.push_back(gauss_legendre_ab(nu, 0.0, 10.0));
  }
  std::complex<double> sum = 0.0;
  for (const auto& ru : panels)
  for (int i = 0; i < nu; ++i) {
    double u = ru.x[i];
    double vgas = u * pb / gas.m;
    std::complex<double> inner = 0.0;
    double dv = vgas - V;
    for (int j = 0; j < na; ++j) {
      double x = (ra.x[j] + 1.0) * (std::sqrt(2.0) / 2.0);  // [0, sqrt(2)]
      double wx = ra.w[j] * (std::sqrt(2.0) / 2.0) * 2.0 * x;
      double vrel = std::sqrt(dv * dv + 2.0 * vgas * V * x * x);
      inner += wx * std::complex<double>(re0, im_of(ms * vrel));
    }
    sum += ru.w[i] * u * u * std::exp(-u * u) * inner;
  }
  return (2.0 / kSqrtPi) * sum;
}

double energy_shift(double P, const CrossSectionModel& model, const GasSpec& gas,
                    const ParticleSpec& particle, double hbar) {
  double ms = particle.mstar(gas.m);
  std::complex<double> favg =
      thermal_forward_average(model, gas, particle, P, AveragePath::OneD, hbar);
  return -2.0 * M_PI * hbar * hbar * (gas.n_gas / ms) * favg.real();
}

std::complex<double> refraction_index(double K, const CrossSectionModel& model,
                                      const GasSpec& gas, const ParticleSpec& particle,
                                      double hbar) {
  if (K <= 0) throw std::invalid_argument("refraction_index: K must be > 0");
  double ms = particle.mstar(gas.m);
  std::complex<double> favg =
      thermal_forward_average(model, gas, particle, hbar * K, AveragePath::OneD, hbar);
  return 1.0 + 2.0 * M_PI * (gas.n_gas / (K * K)) * (particle.M / ms) * favg;
}

}  // namespace qlb

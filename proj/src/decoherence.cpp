#include "qlb/decoherence.hpp"

#include <cmath>

#include "qlb/quadrature.hpp"

namespace qlb {
namespace {

double sinc(double x) { return std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x; }

// Speed- and angle-resolved transfer average:
// \int dp p^3 e^{-p^2/p_b^2} \int dcos |f(theta; p)|^2 g(p, theta).
template <typename G>
double flux_average(const DecoherenceSpec& spec, G g) {
  const GasSpec& gas = spec.gas;
  double pb = gas.p_beta();
  double ms = spec.particle.mstar(gas.m);
  const QuadRule& rt = gauss_laguerre(64);
  const QuadRule& ra = gauss_legendre(128);
  double sum = 0.0;
  for (std::size_t i = 0; i < rt.x.size(); ++i) {
    double p = pb * std::sqrt(rt.x[i]);
    double inner = 0.0;
    for (std::size_t j = 0; j < ra.x.size(); ++j) {
      double cth = ra.x[j];
      double sth = std::sqrt(std::max(0.0, 1.0 - cth * cth));
      Vec3 pi{0, 0, p}, pf{p * sth, 0, p * cth};
      inner += ra.w[j] * diff_cross_section(spec.model, pf, pi, ms, spec.hbar) * g(p, cth);
    }
    sum += rt.w[i] * rt.x[i] * inner;
  }
  return sum;
}

}  // namespace

double total_collision_rate(const DecoherenceSpec& spec) {
  return classical_loss_rate(spec.P0.norm(), spec.model, spec.gas, spec.particle,
                             LossPath::Auto, spec.hbar);
}

double transfer_distribution(const Vec3& Q, const DecoherenceSpec& spec) {
  return classical_gain_rate_pre(spec.P0, Q, spec.model, spec.gas, spec.particle, spec.hbar) /
         total_collision_rate(spec);
}

double decoherence_function(double S, const DecoherenceSpec& spec) {
  double num = flux_average(spec, [&](double p, double cth) {
    double Q = p * std::sqrt(std::max(0.0, 2.0 * (1.0 - cth)));
    return sinc(Q * S / spec.hbar);
  });
  double den = flux_average(spec, [](double, double) { return 1.0; });
  return num / den;
}

std::complex<double> evolve_position_coherence(std::complex<double> rho0, double S, double t,
                                               const DecoherenceSpec& spec) {
  if (S == 0.0) return rho0;
  double gamma = total_collision_rate(spec);
  double phi = decoherence_function(S, spec);
  return rho0 * std::exp(-gamma * (1.0 - phi) * t);
}

namespace {

PowerLawModel london_model(double C6, double hbar) {
  // |f|^2 = c v^{-2/5} with 4 pi c = sigma_tot(v = 1).
  return {london_cross_section(1.0, C6, hbar) / (4.0 * M_PI), -0.4};
}

}  // namespace

double visibility_rate(const VisibilitySetup& vs, double n_gas) {
  GasSpec gas{n_gas, vs.m, vs.beta};
  ParticleSpec particle{vs.M};
  CrossSectionModel model = london_model(vs.C6, vs.hbar);
  return classical_loss_rate(vs.P0, model, gas, particle, LossPath::ClosedForm, vs.hbar);
}

double visibility(const VisibilitySetup& vs, double pressure) {
  return std::exp(-visibility_rate(vs, pressure * vs.beta) * vs.t);
}

double critical_pressure(const VisibilitySetup& vs) {
  GasSpec gas{1.0, vs.m, vs.beta};
  ParticleSpec particle{vs.M};
  CrossSectionModel model = london_model(vs.C6, vs.hbar);
  double sigma_eff = effective_cross_section(vs.P0, model, gas, particle);
  return vs.M / (vs.beta * vs.P0 * sigma_eff * vs.t);
}

}  // namespace qlb

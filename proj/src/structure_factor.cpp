#include "qlb/structure_factor.hpp"

#include <cmath>
#include <stdexcept>

namespace qlb {

double s_mb(double Q, double E, double beta, double m) {
  if (Q <= 0) throw std::domain_error("s_mb: Q must be > 0");
  double a = Q * Q + 2.0 * m * E;
  return std::sqrt(beta * m / (2.0 * M_PI)) / Q *
         std::exp(-beta * a * a / (8.0 * m * Q * Q));
}

double s_bf(double Q, double E, const GasSpec& gas, double hbar) {
  if (Q <= 0) throw std::domain_error("s_bf: Q must be > 0");
  if (gas.stats == GasSpec::Stats::MB)
    throw std::invalid_argument("s_bf: gas must be BE or FD");
  gas.validate();
  const double beta = gas.beta, m = gas.m, z = gas.z;
  // sgn = +1 Bose, -1 Fermi.
  const double sgn = gas.stats == GasSpec::Stats::BE ? 1.0 : -1.0;
  double twopihbar = 2.0 * M_PI * hbar;
  double pref = (1.0 / gas.n_gas) * (2.0 * M_PI * m * m) /
                (beta * twopihbar * twopihbar * twopihbar) / Q;
  double gp = beta * std::pow(Q * Q + 2.0 * m * E, 2) / (8.0 * m * Q * Q);
  double gm = beta * std::pow(Q * Q - 2.0 * m * E, 2) / (8.0 * m * Q * Q);
  double be = beta * E;
  if (std::abs(be) < 1e-9) {
    // E -> 0: the occupation prefactor and the log difference cancel,
    // leaving the Bose/Fermi occupation at g = beta Q^2 / 8m.
    double g = beta * Q * Q / (8.0 * m);
    double zg = z * std::exp(-g);
    return pref * zg / (1.0 - sgn * zg);
  }
  double occ = sgn / (std::exp(be) - 1.0);
  double logratio =
      std::log1p(-sgn * z * std::exp(-gp)) - std::log1p(-sgn * z * std::exp(-gm));
  return pref * occ * logratio;
}

double dynamic_structure_factor(double Q, double E, const GasSpec& gas, double hbar) {
  return gas.stats == GasSpec::Stats::MB ? s_mb(Q, E, gas.beta, gas.m)
                                         : s_bf(Q, E, gas, hbar);
}

double lab_frame_cross_section(const Vec3& P, const Vec3& Q, const BornModel& model,
                               const GasSpec& gas, const ParticleSpec& particle,
                               double hbar) {
  double Pn = P.norm(), Qn = Q.norm();
  if (Pn <= 0 || Qn <= 0)
    throw std::domain_error("lab_frame_cross_section: P and Q must be nonzero");
  Vec3 Pf = P + Q;
  double E = (Pf.norm2() - P.norm2()) / (2.0 * particle.M);
  double ms = particle.mstar(gas.m);
  double fb = born_amplitude(model, Qn, ms, hbar);
  double ratio = particle.M / ms;
  return ratio * ratio * (Pf.norm() / Pn) * fb * fb *
         dynamic_structure_factor(Qn, E, gas, hbar);
}

}  // namespace qlb

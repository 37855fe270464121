#pragma once
#include <complex>
#include <functional>
#include <stdexcept>
#include <variant>

#include "qlb/special.hpp"
#include "qlb/vec3.hpp"

namespace qlb {

// Background gas: density, particle mass, inverse temperature, statistics.
struct GasSpec {
  enum class Stats { MB, BE, FD };

  double n_gas = 1.0;
  double m = 1.0;
  double beta = 2.0;
  Stats stats = Stats::MB;
  double z = 0.0;  // fugacity, BE/FD only

  double v_beta() const { return qlb::v_beta(beta, m); }
  double p_beta() const { return qlb::p_beta(beta, m); }

  void validate() const {
    if (n_gas <= 0) throw std::invalid_argument("GasSpec: n_gas must be > 0");
    if (m <= 0) throw std::invalid_argument("GasSpec: m must be > 0");
    if (beta <= 0) throw std::invalid_argument("GasSpec: beta must be > 0");
    if (stats == Stats::BE && !(z > 0 && z < 1))
      throw std::invalid_argument("GasSpec: BE requires 0 < z < 1");
    if (stats == Stats::FD && !(z > 0))
      throw std::invalid_argument("GasSpec: FD requires z > 0");
  }
};

// Test particle.
struct ParticleSpec {
  double M = 1.0;

  double mstar(double m) const { return m * M / (m + M); }

  void validate() const {
    if (M <= 0) throw std::invalid_argument("ParticleSpec: M must be > 0");
  }
};

// Collision models.  Constant and PowerLaw are modulus-only (|f|^2 per solid
// angle); only BornPotential carries a scattering amplitude.
struct ConstantModel {
  double sigma_tot = 1.0;  // total cross-section
};

struct PowerLawModel {
  double c = 1.0;  // strength: |f|^2 = c * v_rel^a per solid angle
  double a = 0.0;  // exponent, a > -3
};

struct BornModel {
  std::function<double(double)> potential;  // radial V(r)
  double r_scale = 1.0;                     // decay length, sets quadrature range

  static BornModel gaussian(double V0, double r0) {
    BornModel b;
    b.potential = [V0, r0](double r) { return V0 * std::exp(-r * r / (r0 * r0)); };
    b.r_scale = r0;
    return b;
  }
};

using CrossSectionModel = std::variant<ConstantModel, PowerLawModel, BornModel>;

void validate(const CrossSectionModel& model);

// Born amplitude f_B(Q) = -(m*/2 pi hbar^2) \int V(x) exp(-iQ.x/hbar) d^3x,
// real for a radial potential; 1D radial quadrature with node escalation.
double born_amplitude(const BornModel& model, double Q, double mstar, double hbar = 1.0);

// |f|^2 per solid angle at relative momenta (p_f, p_i).
double diff_cross_section(const CrossSectionModel& model, const Vec3& pf, const Vec3& pi,
                          double mstar, double hbar = 1.0);

// Total cross-section at relative momentum magnitude p.
double sigma_total_rel(const CrossSectionModel& model, double p, double mstar,
                       double hbar = 1.0);

// Forward amplitude f(p, p); imaginary part fixed by the optical theorem.
// Throws for modulus-only models.
std::complex<double> forward_amplitude(const CrossSectionModel& model, double p,
                                       double mstar, double hbar = 1.0);

inline bool has_amplitude(const CrossSectionModel& model) {
  return std::holds_alternative<BornModel>(model);
}

// Relative momentum rel(p, P) = (m*/m) p - (m*/M) P.
inline Vec3 rel_momentum(const Vec3& p, const Vec3& P, double m, double M) {
  double ms = m * M / (m + M);
  return (ms / m) * p - (ms / M) * P;
}

// Total scattering rate for a thermal flux through a constant cross-section.
inline double thermal_rate(const GasSpec& gas, double sigma_tot) {
  return gas.n_gas * gas.v_beta() * sigma_tot;
}

// Semiclassical total cross-section for a -C6/r^6 dispersion interaction.
double london_cross_section(double v_rel, double C6, double hbar = 1.0);

}  // namespace qlb

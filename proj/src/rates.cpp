#include "qlb/rates.hpp"

#include <cmath>
#include <stdexcept>

#include "qlb/quadrature.hpp"

namespace qlb {
namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// Orthonormal basis spanning the plane orthogonal to unit vector q.
void perp_basis(const Vec3& q, Vec3& e1, Vec3& e2) {
  Vec3 trial = std::abs(q.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  e1 = (trial - q * trial.dot(q)).normalized();
  e2 = q.cross(e1);
}

struct PowerLawView {
  double c;
  double a;
};

// Constant is the a = 0 special case of the power law.
PowerLawView as_power_law(const CrossSectionModel& model) {
  if (const auto* cm = std::get_if<ConstantModel>(&model))
    return {cm->sigma_tot / (4.0 * M_PI), 0.0};
  if (const auto* pl = std::get_if<PowerLawModel>(&model)) return {pl->c, pl->a};
  throw std::domain_error("closed-form rate path requires a Constant or PowerLaw model");
}

}  // namespace

double loss_rate_scaled(double U, double gamma_beta) {
  return gamma_beta * (2.0 / kSqrtPi) * hyp1f1_m12_32_negsq(U);
}

double effective_cross_section(double P, const CrossSectionModel& model,
                               const GasSpec& gas, const ParticleSpec& particle) {
  if (P <= 0)
    throw std::invalid_argument("effective_cross_section: P must be > 0 (use the loss rate)");
  PowerLawView pl = as_power_law(model);
  double vb = gas.v_beta();
  double U = P / (particle.M * vb);
  return 8.0 * kSqrtPi * std::tgamma(pl.a / 2.0 + 2.0) *
         (particle.M * std::pow(vb, pl.a + 1.0) * pl.c / P) *
         hyp1f1(-(pl.a + 1.0) / 2.0, 1.5, -U * U);
}

double averaged_cross_section(const Vec3& P_perp, const Vec3& Q, const CrossSectionModel& model,
                              const GasSpec& gas, const ParticleSpec& particle, double hbar) {
  double Qn = Q.norm();
  if (Qn == 0) throw std::invalid_argument("averaged_cross_section: Q must be nonzero");
  double ms = particle.mstar(gas.m);
  if (std::holds_alternative<ConstantModel>(model))
    return std::get<ConstantModel>(model).sigma_tot / (4.0 * M_PI);
  if (std::holds_alternative<BornModel>(model)) {
    // The amplitude depends on the transfer only; the Gaussian average is exact.
    double fb = born_amplitude(std::get<BornModel>(model), Qn, ms, hbar);
    return fb * fb;
  }
  Vec3 qhat = Q / Qn;
  Vec3 e1, e2;
  perp_basis(qhat, e1, e2);
  double pb = gas.p_beta();
  double prev = 0.0;
  bool have_prev = false;
  for (int n : {24, 40, 64}) {
    const QuadRule& rule = gauss_hermite(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Vec3 k = pb * (rule.x[i] * e1 + rule.x[j] * e2);
        Vec3 rel = (ms / gas.m) * k - (ms / particle.M) * P_perp;
        sum += rule.w[i] * rule.w[j] *
               diff_cross_section(model, rel - 0.5 * Q, rel + 0.5 * Q, ms, hbar);
      }
    }
    sum /= M_PI;
    if (have_prev && std::abs(sum - prev) <= 1e-8 * (std::abs(sum) + 1e-300)) return sum;
    prev = sum;
    have_prev = true;
  }
  return prev;
}

double classical_gain_rate_pre(const Vec3& P_pre, const Vec3& Q, const CrossSectionModel& model,
                               const GasSpec& gas, const ParticleSpec& particle, double hbar) {
  double Qn = Q.norm();
  if (Qn == 0) throw std::invalid_argument("classical_gain_rate: Q must be nonzero");
  double ms = particle.mstar(gas.m);
  Vec3 qhat = Q / Qn;
  double P_par = P_pre.dot(qhat);
  Vec3 P_perp = P_pre - P_par * qhat;
  double s = (gas.m / ms) * Qn / 2.0 + (gas.m / particle.M) * P_par;
  double pref = gas.n_gas * gas.m / (ms * ms * Qn);
  return pref * mb_marginal_1d(s, gas.beta, gas.m) *
         averaged_cross_section(P_perp, Q, model, gas, particle, hbar);
}

double classical_gain_rate(const Vec3& P_final, const Vec3& Q, const CrossSectionModel& model,
                           const GasSpec& gas, const ParticleSpec& particle, double hbar) {
  return classical_gain_rate_pre(P_final - Q, Q, model, gas, particle, hbar);
}

namespace {

// Loss rate as the thermal average of v_rel * sigma_tot(p_rel) over the gas,
// reduced to a 1D integral with the sinh kernel of the relative-speed
// distribution.
double loss_rate_forward(double P, const CrossSectionModel& model, const GasSpec& gas,
                         const ParticleSpec& particle, double hbar) {
  double ms = particle.mstar(gas.m);
  double vb = gas.v_beta();
  double V = P / particle.M;
  double vmax = V + 10.0 * vb;
  const int n = 400;
  QuadRule rule = gauss_legendre_ab(n, 0.0, vmax);
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    double v = rule.x[i];
    double kernel;
    if (V < 1e-12 * vb) {
      kernel = 2.0 * v * v / (vb * vb) * std::exp(-v * v / (vb * vb));
    } else {
      kernel = (v / V) * std::sinh(2.0 * v * V / (vb * vb)) *
               std::exp(-(v * v + V * V) / (vb * vb));
    }
    sum += rule.w[i] * kernel * v * sigma_total_rel(model, ms * v, ms, hbar);
  }
  return gas.n_gas * (2.0 / kSqrtPi) * sum / vb;
}

// Loss rate as the direct integral of the gain rate over all transfers.
double loss_rate_quadrature(double P, const CrossSectionModel& model, const GasSpec& gas,
                            const ParticleSpec& particle, double hbar) {
  double ms = particle.mstar(gas.m);
  double pb = gas.p_beta();
  double Qmax = (2.0 * ms / gas.m) * ((gas.m / particle.M) * P + 10.0 * pb);
  Vec3 Pvec{0, 0, P};
  const int nr = 200, na = 80;
  QuadRule radial = gauss_legendre_ab(nr, 0.0, Qmax);
  const QuadRule& angular = gauss_legendre(na);
  double sum = 0.0;
  for (int i = 0; i < nr; ++i) {
    double Q = radial.x[i];
    double inner = 0.0;
    for (int j = 0; j < na; ++j) {
      double cth = angular.x[j], sth = std::sqrt(1.0 - cth * cth);
      Vec3 Qvec{Q * sth, 0.0, Q * cth};
      inner += angular.w[j] * classical_gain_rate_pre(Pvec, Qvec, model, gas, particle, hbar);
    }
    sum += radial.w[i] * Q * Q * inner;
  }
  return 2.0 * M_PI * sum;
}

}  // namespace

double classical_loss_rate(double P, const CrossSectionModel& model, const GasSpec& gas,
                           const ParticleSpec& particle, LossPath path, double hbar) {
  if (path == LossPath::Auto)
    path = has_amplitude(model) ? LossPath::Forward : LossPath::ClosedForm;
  switch (path) {
    case LossPath::ClosedForm: {
      PowerLawView pl = as_power_law(model);
      double vb = gas.v_beta();
      double U = P / (particle.M * vb);
      return 8.0 * kSqrtPi * std::tgamma(pl.a / 2.0 + 2.0) * gas.n_gas *
             std::pow(vb, pl.a + 1.0) * pl.c * hyp1f1(-(pl.a + 1.0) / 2.0, 1.5, -U * U);
    }
    case LossPath::Forward:
      return loss_rate_forward(P, model, gas, particle, hbar);
    case LossPath::Quadrature:
      return loss_rate_quadrature(P, model, gas, particle, hbar);
    default:
      throw std::logic_error("classical_loss_rate: unknown path");
  }
}

}  // namespace qlb

#include "qlb/models.hpp"

#include <cmath>

#include "qlb/quadrature.hpp"

namespace qlb {

void validate(const CrossSectionModel& model) {
  std::visit(
      [](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ConstantModel>) {
          if (m.sigma_tot <= 0) throw std::invalid_argument("ConstantModel: sigma_tot must be > 0");
        } else if constexpr (std::is_same_v<T, PowerLawModel>) {
          if (m.c <= 0) throw std::invalid_argument("PowerLawModel: c must be > 0");
          if (m.a <= -3) throw std::invalid_argument("PowerLawModel: a must be > -3");
        } else {
          if (!m.potential) throw std::invalid_argument("BornModel: potential required");
          if (m.r_scale <= 0) throw std::invalid_argument("BornModel: r_scale must be > 0");
        }
      },
      model);
}

double born_amplitude(const BornModel& model, double Q, double mstar, double hbar) {
  const double R = 14.0 * model.r_scale;
  // Overall amplitude scale (the Q = 0 magnitude with |V|); an absolute
  // floor so that exponentially small large-Q values still count as
  // converged once they agree to this scale.
  double scale;
  {
    QuadRule rule = gauss_legendre_ab(64, 0.0, R);
    double s = 0.0;
    for (int i = 0; i < 64; ++i)
      s += rule.w[i] * rule.x[i] * rule.x[i] * std::abs(model.potential(rule.x[i]));
    scale = 2.0 * mstar / (hbar * hbar) * s;
  }
  double prev = 0.0;
  bool have_prev = false;
  // Escalate nodes until two successive evaluations agree.
  for (int n : {64, 128, 256, 512, 1024, 2048, 4096}) {
    QuadRule rule = gauss_legendre_ab(n, 0.0, R);
    double integral = 0.0;
    if (Q == 0.0) {
      for (int i = 0; i < n; ++i)
        integral += rule.w[i] * rule.x[i] * rule.x[i] * model.potential(rule.x[i]);
      integral *= -2.0 * mstar / (hbar * hbar);
    } else {
      for (int i = 0; i < n; ++i)
        integral += rule.w[i] * rule.x[i] * model.potential(rule.x[i]) *
                    std::sin(Q * rule.x[i] / hbar);
      integral *= -2.0 * mstar / (hbar * Q);
    }
    if (have_prev &&
        std::abs(integral - prev) <= 1e-11 * std::abs(integral) + 1e-14 * scale)
      return integral;
    prev = integral;
    have_prev = true;
  }
  throw std::runtime_error("born_amplitude: radial quadrature did not converge, residual ~" +
                           std::to_string(std::abs(prev)));
}

double diff_cross_section(const CrossSectionModel& model, const Vec3& pf, const Vec3& pi,
                          double mstar, double hbar) {
  return std::visit(
      [&](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ConstantModel>) {
          return m.sigma_tot / (4.0 * M_PI);
        } else if constexpr (std::is_same_v<T, PowerLawModel>) {
          return m.c * std::pow(pi.norm() / mstar, m.a);
        } else {
          double fb = born_amplitude(m, (pf - pi).norm(), mstar, hbar);
          return fb * fb;
        }
      },
      model);
}

double sigma_total_rel(const CrossSectionModel& model, double p, double mstar, double hbar) {
  return std::visit(
      [&](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, ConstantModel>) {
          return m.sigma_tot;
        } else if constexpr (std::is_same_v<T, PowerLawModel>) {
          return 4.0 * M_PI * m.c * std::pow(p / mstar, m.a);
        } else {
          // sigma_tot(p) = 2 pi \int_{-1}^{1} |f_B(p sqrt(2(1-c)))|^2 dc
          double f0 = born_amplitude(m, 0.0, mstar, hbar);
          double scale = 4.0 * M_PI * f0 * f0;
          double prev = 0.0;
          bool have_prev = false;
          for (int n : {64, 128, 256, 512}) {
            const QuadRule& rule = gauss_legendre(n);
            double s = 0.0;
            for (int i = 0; i < n; ++i) {
              double Q = p * std::sqrt(std::max(0.0, 2.0 * (1.0 - rule.x[i])));
              double fb = born_amplitude(m, Q, mstar, hbar);
              s += rule.w[i] * fb * fb;
            }
            s *= 2.0 * M_PI;
            if (have_prev && std::abs(s - prev) <= 1e-10 * std::abs(s) + 1e-13 * scale)
              return s;
            prev = s;
            have_prev = true;
          }
          return prev;
        }
      },
      model);
}

std::complex<double> forward_amplitude(const CrossSectionModel& model, double p,
                                       double mstar, double hbar) {
  if (!has_amplitude(model))
    throw std::domain_error(
        "forward_amplitude: model carries no phase (modulus-only); use the |f|^2 paths");
  const auto& born = std::get<BornModel>(model);
  double re = born_amplitude(born, 0.0, mstar, hbar);
  double im = p * sigma_total_rel(model, p, mstar, hbar) / (4.0 * M_PI * hbar);
  return {re, im};
}

double london_cross_section(double v_rel, double C6, double hbar) {
  if (v_rel <= 0) throw std::invalid_argument("london_cross_section: v_rel must be > 0");
  if (C6 <= 0) throw std::invalid_argument("london_cross_section: C6 must be > 0");
  double pref = M_PI * M_PI / (std::sin(M_PI / 5.0) * std::tgamma(0.4));
  return pref * std::pow(3.0 * M_PI * C6 / (8.0 * hbar), 0.4) * std::pow(v_rel, -0.4);
}

}  // namespace qlb

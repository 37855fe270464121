#include "qlb/classical.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qlb/quadrature.hpp"

namespace qlb {

MomentumHistogram::MomentumHistogram(double extent, double bin_width)
    : ext_(extent), w_(bin_width) {
  nb_ = static_cast<int>(std::round(2.0 * extent / bin_width));
  counts_.assign(static_cast<std::size_t>(nb_) * nb_ * nb_, 0.0);
}

int MomentumHistogram::bin_index(const Vec3& u) const {
  int ix = static_cast<int>(std::floor((u.x + ext_) / w_));
  int iy = static_cast<int>(std::floor((u.y + ext_) / w_));
  int iz = static_cast<int>(std::floor((u.z + ext_) / w_));
  if (ix < 0 || iy < 0 || iz < 0 || ix >= nb_ || iy >= nb_ || iz >= nb_) return -1;
  return (ix * nb_ + iy) * nb_ + iz;
}

void MomentumHistogram::add(const Vec3& u, double weight) {
  int i = bin_index(u);
  if (i >= 0) counts_[i] += weight;
  total_ += weight;
}

Vec3 MomentumHistogram::bin_center(int i) const {
  int iz = i % nb_;
  int iy = (i / nb_) % nb_;
  int ix = i / (nb_ * nb_);
  return {-ext_ + (ix + 0.5) * w_, -ext_ + (iy + 0.5) * w_, -ext_ + (iz + 0.5) * w_};
}

double relative_entropy(const MomentumHistogram& f, const std::vector<double>& g_at_centers,
                        double min_count) {
  if (static_cast<int>(g_at_centers.size()) != f.n_bins())
    throw std::invalid_argument("relative_entropy: reference size mismatch");
  double dv = f.bin_volume();
  double total = f.total_weight();
  double h = 0.0;
  for (int i = 0; i < f.n_bins(); ++i) {
    double c = f.counts()[i];
    if (c < min_count) continue;
    double fi = c / (total * dv);
    if (g_at_centers[i] <= 0.0) return std::numeric_limits<double>::infinity();
    h += fi * std::log(fi / g_at_centers[i]) * dv;
  }
  return h;
}

double stationary_density_scaled(const Vec3& U, double mass_ratio) {
  double r = mass_ratio;
  return std::pow(M_PI * r, -1.5) * std::exp(-U.norm2() / r);
}

double detailed_balance_residual(const Vec3& P, const Vec3& Q, const CrossSectionModel& model,
                                 const GasSpec& gas, const ParticleSpec& particle, double hbar) {
  double g1 = classical_gain_rate_pre(P, Q, model, gas, particle, hbar);
  double g2 = classical_gain_rate_pre(P + Q, -1.0 * Q, model, gas, particle, hbar);
  double E = Q.norm2() / (2.0 * particle.M) + Q.dot(P) / particle.M;
  double rhs = g2 * std::exp(-gas.beta * E);
  double scale = std::max({std::abs(g1), std::abs(rhs), 1e-300});
  return std::abs(g1 - rhs) / scale;
}

double stationary_residual(const CrossSectionModel& model, const GasSpec& gas,
                           const ParticleSpec& particle, const std::vector<Vec3>& grid,
                           double beta_test, double hbar) {
  double beta_f = beta_test > 0 ? beta_test : gas.beta;
  double Pb = std::sqrt(2.0 * particle.M / beta_f);
  auto f = [&](const Vec3& P) {
    return std::pow(M_PI, -1.5) / (Pb * Pb * Pb) * std::exp(-P.norm2() / (Pb * Pb));
  };
  double ms = particle.mstar(gas.m);
  double pb = gas.p_beta();
  double worst = 0.0;
  for (const Vec3& P : grid) {
    double Pn = P.norm();
    Vec3 phat = Pn > 0 ? P / Pn : Vec3{0, 0, 1};
    Vec3 e1, e2;
    {
      Vec3 trial = std::abs(phat.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
      e1 = (trial - phat * trial.dot(phat)).normalized();
      e2 = phat.cross(e1);
    }
    double Qmax = (2.0 * ms / gas.m) * ((gas.m / particle.M) * Pn + 10.0 * pb) +
                  6.0 * Pb;  // gain reaches back to P - Q; cover the f support too
    const int nr = 160, na = 64;
    QuadRule radial = gauss_legendre_ab(nr, 0.0, Qmax);
    const QuadRule& angular = gauss_legendre(na);
    double gain = 0.0;
    for (int i = 0; i < nr; ++i) {
      double Q = radial.x[i];
      double inner = 0.0;
      for (int j = 0; j < na; ++j) {
        double cth = angular.x[j], sth = std::sqrt(1.0 - cth * cth);
        Vec3 Qvec = Q * (cth * phat + sth * e1);
        inner += angular.w[j] *
                 classical_gain_rate(P, Qvec, model, gas, particle, hbar) * f(P - Qvec);
      }
      gain += radial.w[i] * Q * Q * inner;
    }
    gain *= 2.0 * M_PI;
    double loss = classical_loss_rate(Pn, model, gas, particle, LossPath::Auto, hbar) * f(P);
    double scale = std::max(std::abs(loss), 1e-300);
    worst = std::max(worst, std::abs(gain - loss) / scale);
  }
  return worst;
}

double transition_rate_w(const Vec3& P, const Vec3& P_prime, const CrossSectionModel& model,
                         const GasSpec& gas, const ParticleSpec& particle, double hbar) {
  double rate = classical_gain_rate(P, P - P_prime, model, gas, particle, hbar);
  return rate * std::exp(gas.beta * P.norm2() / (2.0 * particle.M));
}

}  // namespace qlb

#include "qlb/kernels.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

#include "qlb/forward.hpp"
#include "qlb/quadrature.hpp"

namespace qlb {
namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

void perp_basis(const Vec3& q, Vec3& e1, Vec3& e2) {
  Vec3 trial = std::abs(q.x) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  e1 = (trial - q * trial.dot(q)).normalized();
  e2 = q.cross(e1);
}

}  // namespace

double lindblad_modulus_sq(const Vec3& p_perp, const Vec3& P, const Vec3& Q,
                           const CrossSectionModel& model, const GasSpec& gas,
                           const ParticleSpec& particle, double hbar) {
  double Qn = Q.norm();
  if (Qn == 0) throw std::invalid_argument("lindblad: Q must be nonzero");
  Vec3 qhat = Q / Qn;
  if (std::abs(p_perp.dot(qhat)) > 1e-9 * (p_perp.norm() + 1.0))
    throw std::invalid_argument("lindblad: p_perp must be orthogonal to Q");
  double ms = particle.mstar(gas.m);
  double P_par = P.dot(qhat);
  Vec3 P_perp = P - P_par * qhat;
  Vec3 rel = (ms / gas.m) * p_perp - (ms / particle.M) * P_perp;
  double s = (gas.m / ms) * Qn / 2.0 + (gas.m / particle.M) * P_par;
  double pref = gas.n_gas * gas.m / (ms * ms * Qn);
  return pref * diff_cross_section(model, rel - 0.5 * Q, rel + 0.5 * Q, ms, hbar) *
         mb_density(p_perp + s * qhat, gas.beta, gas.m);
}

std::complex<double> lindblad_value(const Vec3& p_perp, const Vec3& P, const Vec3& Q,
                                    const CrossSectionModel& model, const GasSpec& gas,
                                    const ParticleSpec& particle, double hbar) {
  if (!has_amplitude(model))
    throw std::domain_error("lindblad_value: model carries no amplitude (use the modulus path)");
  double Qn = Q.norm();
  if (Qn == 0) throw std::invalid_argument("lindblad: Q must be nonzero");
  Vec3 qhat = Q / Qn;
  double ms = particle.mstar(gas.m);
  double P_par = P.dot(qhat);
  double s = (gas.m / ms) * Qn / 2.0 + (gas.m / particle.M) * P_par;
  double pref = gas.n_gas * gas.m / (ms * ms * Qn);
  double fb = born_amplitude(std::get<BornModel>(model), Qn, ms, hbar);
  return std::sqrt(pref) * fb * std::sqrt(mb_density(p_perp + s * qhat, gas.beta, gas.m));
}

double lindblad_scaled_sq(const Vec3& U, const Vec3& K, double gamma_beta) {
  double Kn = K.norm();
  if (Kn == 0) throw std::invalid_argument("lindblad_scaled: K must be nonzero");
  double w = Kn / 2.0 + U.dot(K) / Kn;
  return gamma_beta / (4.0 * M_PI * kSqrtPi * Kn) * std::exp(-w * w);
}

std::complex<double> quantum_gain_kernel(const Vec3& P, const Vec3& P_prime, const Vec3& Q,
                                         const CrossSectionModel& model, const GasSpec& gas,
                                         const ParticleSpec& particle, double hbar) {
  double Qn = Q.norm();
  if (Qn == 0) throw std::invalid_argument("quantum_gain_kernel: Q must be nonzero");
  Vec3 qhat = Q / Qn;
  double ms = particle.mstar(gas.m);
  double sP = (gas.m / ms) * Qn / 2.0 + (gas.m / particle.M) * (P - Q).dot(qhat);
  double sPp = (gas.m / ms) * Qn / 2.0 + (gas.m / particle.M) * (P_prime - Q).dot(qhat);
  double pref = gas.n_gas * gas.m / (ms * ms * Qn);
  double common = std::sqrt(mb_marginal_1d(sP, gas.beta, gas.m) *
                            mb_marginal_1d(sPp, gas.beta, gas.m));
  if (const auto* cm = std::get_if<ConstantModel>(&model))
    return pref * common * cm->sigma_tot / (4.0 * M_PI);
  if (const auto* bm = std::get_if<BornModel>(&model)) {
    double fb = born_amplitude(*bm, Qn, ms, hbar);
    return pref * common * fb * fb;
  }
  // PowerLaw: Gauss-Hermite over the transverse plane; the two amplitude
  // moduli differ through the transverse projections of P and P'.
  Vec3 e1, e2;
  perp_basis(qhat, e1, e2);
  Vec3 Pp_perp = (P - Q) - (P - Q).dot(qhat) * qhat;
  Vec3 Ppp_perp = (P_prime - Q) - (P_prime - Q).dot(qhat) * qhat;
  double pb = gas.p_beta();
  double prev = 0.0;
  bool have_prev = false;
  for (int n : {24, 40, 64}) {
    const QuadRule& rule = gauss_hermite(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Vec3 k = pb * (rule.x[i] * e1 + rule.x[j] * e2);
        Vec3 relP = (ms / gas.m) * k - (ms / particle.M) * Pp_perp;
        Vec3 relPp = (ms / gas.m) * k - (ms / particle.M) * Ppp_perp;
        double f1 = std::sqrt(diff_cross_section(model, relP - 0.5 * Q, relP + 0.5 * Q, ms, hbar));
        double f2 = std::sqrt(diff_cross_section(model, relPp - 0.5 * Q, relPp + 0.5 * Q, ms, hbar));
        sum += rule.w[i] * rule.w[j] * f1 * f2;
      }
    }
    sum /= M_PI;
    if (have_prev && std::abs(sum - prev) <= 1e-8 * (std::abs(sum) + 1e-300)) {
      prev = sum;
      break;
    }
    prev = sum;
    have_prev = true;
  }
  return pref * common * prev;
}

std::complex<double> DensityMatrixGrid::trace() const {
  std::complex<double> t = 0.0;
  for (int i = 0; i < n_points(); ++i) t += at(i, i);
  return t;
}

DensityMatrixGrid DensityMatrixGrid::thermal(int n, double h, const GasSpec& gas,
                                             const ParticleSpec& particle) {
  DensityMatrixGrid g(n, h);
  double norm = 0.0;
  for (int i = 0; i < g.n_points(); ++i) {
    double w = std::exp(-gas.beta * g.momentum(i).norm2() / (2.0 * particle.M));
    g.at(i, i) = w;
    norm += w;
  }
  for (int i = 0; i < g.n_points(); ++i) g.at(i, i) /= norm;
  return g;
}

GeneratorResult apply_generator(const DensityMatrixGrid& state, const CrossSectionModel& model,
                                const GasSpec& gas, const ParticleSpec& particle,
                                bool include_hamiltonian, double hbar) {
  const int n = state.n;
  const int N = state.n_points();
  const double h3 = state.h * state.h * state.h;
  const double ms = particle.mstar(gas.m);
  if (std::holds_alternative<PowerLawModel>(model))
    throw std::domain_error("apply_generator: grid oracle supports Constant and Born models");

  GeneratorResult out;
  out.derivative = DensityMatrixGrid(n, state.h);

  // Per-direction amplitude weight: sigma averaged over the transverse plane,
  // which for Constant/Born depends on |Q| only.
  std::map<long long, double> sigma_cache;
  auto sigma_of = [&](const Vec3& Q, long long key) {
    auto it = sigma_cache.find(key);
    if (it != sigma_cache.end()) return it->second;
    double v;
    if (const auto* cm = std::get_if<ConstantModel>(&model)) {
      v = cm->sigma_tot / (4.0 * M_PI);
    } else {
      double fb = born_amplitude(std::get<BornModel>(model), Q.norm(), ms, hbar);
      v = fb * fb;
    }
    sigma_cache.emplace(key, v);
    return v;
  };

  std::vector<double> mout_in(N, 0.0), mout_all(N, 0.0);
  std::vector<double> l(N), sl(N);
  std::vector<std::complex<double>>& drho = out.derivative.rho;

  for (int dx = -(n - 1); dx <= n - 1; ++dx) {
    for (int dy = -(n - 1); dy <= n - 1; ++dy) {
      for (int dz = -(n - 1); dz <= n - 1; ++dz) {
        if (dx == 0 && dy == 0 && dz == 0) continue;
        Vec3 Q{dx * state.h, dy * state.h, dz * state.h};
        double Qn = Q.norm();
        Vec3 qhat = Q / Qn;
        long long key = (long long)(dx * dx + dy * dy + dz * dz);
        double coeff = gas.n_gas * gas.m / (ms * ms * Qn) * sigma_of(Q, key) * h3;
        // l[I]: thermal factor with pre-collision momentum P_I.
        for (int I = 0; I < N; ++I) {
          double s = (gas.m / ms) * Qn / 2.0 +
                     (gas.m / particle.M) * state.momentum(I).dot(qhat);
          l[I] = mb_marginal_1d(s, gas.beta, gas.m);
          sl[I] = std::sqrt(l[I]);
        }
        // Gain: pairs whose sources lie on the grid.
        int x0 = std::max(0, dx), x1 = std::min(n, n + dx);
        int y0 = std::max(0, dy), y1 = std::min(n, n + dy);
        int z0 = std::max(0, dz), z1 = std::min(n, n + dz);
        std::vector<int> valid;
        valid.reserve((x1 - x0) * (y1 - y0) * (z1 - z0));
        for (int ix = x0; ix < x1; ++ix)
          for (int iy = y0; iy < y1; ++iy)
            for (int iz = z0; iz < z1; ++iz) valid.push_back((ix * n + iy) * n + iz);
        const int src_off = (dx * n + dy) * n + dz;  // flat(I) - flat(I-D)
        for (int I : valid) {
          int Is = I - src_off;
          double aI = coeff * sl[Is];
          std::complex<double>* drow = &drho[(std::size_t)I * N];
          const std::complex<double>* srow = &state.rho[(std::size_t)Is * N];
          for (int J : valid) drow[J] += aI * sl[J - src_off] * srow[J - src_off];
        }
        // Loss bookkeeping: transfers leading off-grid count toward leakage.
        for (int I = 0; I < N; ++I) {
          mout_all[I] += coeff * l[I];
          int ix = I / (n * n), iy = (I / n) % n, iz = I % n;
          if (ix + dx >= 0 && ix + dx < n && iy + dy >= 0 && iy + dy < n && iz + dz >= 0 &&
              iz + dz < n)
            mout_in[I] += coeff * l[I];
        }
      }
    }
  }

  for (int I = 0; I < N; ++I)
    for (int J = 0; J < N; ++J)
      out.derivative.at(I, J) -= 0.5 * (mout_in[I] + mout_in[J]) * state.at(I, J);

  if (include_hamiltonian) {
    std::vector<double> hvals(N);
    std::map<long long, double> hn_cache;
    for (int I = 0; I < N; ++I) {
      Vec3 P = state.momentum(I);
      double e = P.norm2() / (2.0 * particle.M);
      if (has_amplitude(model)) {
        long long key = llround(P.norm2() / (state.h * state.h) * 4.0);
        auto it = hn_cache.find(key);
        if (it == hn_cache.end())
          it = hn_cache.emplace(key, energy_shift(P.norm(), model, gas, particle, hbar)).first;
        e += it->second;
      }
      hvals[I] = e;
    }
    const std::complex<double> mi(0.0, -1.0);
    for (int I = 0; I < N; ++I)
      for (int J = 0; J < N; ++J)
        out.derivative.at(I, J) += mi / hbar * (hvals[I] - hvals[J]) * state.at(I, J);
  }

  double num = 0.0, den = 0.0;
  for (int I = 0; I < N; ++I) {
    double p = std::max(0.0, state.at(I, I).real());
    num += p * (mout_all[I] - mout_in[I]);
    den += p * mout_all[I];
  }
  out.boundary_leak = den > 0 ? num / den : 0.0;
  return out;
}

}  // namespace qlb

// Acceptance gate: one self-contained check per shipped guarantee, each
// printing a single [PASS]/[FAIL] line.  Exit status is the failure count.
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qlb/brownian.hpp"
#include "qlb/classical.hpp"
#include "qlb/decoherence.hpp"
#include "qlb/forward.hpp"
#include "qlb/kernels.hpp"
#include "qlb/observables.hpp"
#include "qlb/quadrature.hpp"
#include "qlb/rates.hpp"
#include "qlb/rng.hpp"
#include "qlb/runner.hpp"
#include "qlb/special.hpp"
#include "qlb/structure_factor.hpp"
#include "qlb/trajectory.hpp"

using namespace qlb;

namespace {

int g_failures = 0;
const GasSpec kGas{0.7, 1.0, 2.0};
const ParticleSpec kPart{2.5};

int hw_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 2 : static_cast<int>(std::min(n, 8u));
}

struct Criterion {
  int id;
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  explicit Criterion(int id_) : id(id_) {}
  void report(bool ok, const std::string& desc, const std::string& detail = "") {
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %2d: %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", id, desc.c_str(), secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
  }
};

struct Fit {
  double rate = 0.0, err = 0.0;
  bool ok = false;
};

Fit windowed_fit(const std::vector<double>& t, const std::vector<double>& y,
                 const std::vector<double>& yerr) {
  Fit f;
  try {
    int end = fit_window(y, yerr);
    if (end < 4) end = static_cast<int>(y.size());
    std::vector<double> ts(t.begin(), t.begin() + end), ys(y.begin(), y.begin() + end),
        es(yerr.begin(), yerr.begin() + end);
    ExpFit e = fit_exponential(ts, ys, es);
    f.rate = e.rate;
    f.err = e.rate_err;
    f.ok = true;
  } catch (const std::exception&) {
  }
  return f;
}

// ---------------------------------------------------------------------------

void criterion_1() {
  Criterion c(1);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    double x = 8.0 * i / 99.0;
    struct {
      double closed, a, cc;
    } cases[3] = {{hyp1f1_m12_52_negsq(x), -0.5, 2.5},
                  {hyp1f1_m32_32_negsq(x), -1.5, 1.5},
                  {hyp1f1_m12_32_negsq(x), -0.5, 1.5}};
    for (auto& cs : cases) {
      double ref = hyp1f1_series(cs.a, cs.cc, -x * x);
      worst = std::max(worst, std::abs(cs.closed / ref - 1.0));
    }
  }
  char d[64];
  std::snprintf(d, sizeof d, "max rel dev %.2e", worst);
  c.report(worst < 1e-10, "confluent closed forms track the series on [0, 8]", d);
}

void criterion_2() {
  Criterion c(2);
  double sigma = 1.3;
  double eta = friction_coefficient(ConstantModel{sigma}, kGas, kPart);
  double closed =
      (8.0 / (3.0 * std::sqrt(M_PI))) * (kGas.m / kPart.M) * thermal_rate(kGas, sigma);
  double dev = std::abs(eta / closed - 1.0);
  char d[64];
  std::snprintf(d, sizeof d, "rel dev %.2e", dev);
  c.report(dev < 1e-8, "friction quadrature reduces to the constant-sigma closed form", d);
}

void criterion_3() {
  Criterion c(3);
  bool ok = true;
  std::string detail;
  for (double r : {1.0, 0.5}) {
    EngineParams p;
    p.mass_ratio = r;
    std::vector<double> times{30.0};
    auto recs = run_ensemble(SuperpositionState::eigenstate({4, 0, 0}), p, 5000, times,
                             3001, hw_threads());
    auto s = build_series(recs, times);
    double eq = 1.5 * r;
    double tol = std::max(3.0 * s.u_sq_err[0], 0.05 * eq);
    bool u2ok = std::abs(s.u_sq[0] - eq) < tol;
    double drift_err = std::sqrt(s.mean_u_err[0].x * s.mean_u_err[0].x +
                                 s.mean_u_err[0].y * s.mean_u_err[0].y +
                                 s.mean_u_err[0].z * s.mean_u_err[0].z);
    bool mok = s.mean_u[0].norm() < 3.0 * drift_err;
    ok = ok && u2ok && mok;
    char d[96];
    std::snprintf(d, sizeof d, "r=%.1f <U^2>=%.3f(eq %.3f) |<U>|=%.3f; ", r, s.u_sq[0], eq,
                  s.mean_u[0].norm());
    detail += d;
  }
  c.report(ok, "ensembles thermalize from U0=4 to the stationary moments", detail);
}

void criterion_4() {
  Criterion c(4);
  // Diffusive regime: both squared-moment relaxation rates equal 2 eta.
  EngineParams p;
  p.mass_ratio = 0.2;
  std::vector<double> times;
  for (int i = 0; i < 25; ++i) times.push_back(6.0 * i / 24.0);
  auto recs =
      run_ensemble(SuperpositionState::eigenstate({1, 0, 0}), p, 5000, times, 4001,
                   hw_threads());
  auto s = build_series(recs, times);
  double two_eta = 2.0 * friction_eta(1.0, p.mass_ratio);
  Fit fm = windowed_fit(times, s.mean_u_sq, s.mean_u_sq_err);
  std::vector<double> excess(s.u_sq.size());
  for (std::size_t i = 0; i < excess.size(); ++i) excess[i] = s.u_sq[i] - 1.5 * p.mass_ratio;
  Fit fe = windowed_fit(times, excess, s.u_sq_err);
  bool diff_ok = fm.ok && fe.ok && std::abs(fm.rate - two_eta) < 0.1 * two_eta &&
                 std::abs(fe.rate - two_eta) < 0.1 * two_eta;

  // Equal masses: the two rates split measurably.
  EngineParams q;
  q.mass_ratio = 1.0;
  std::vector<double> t2;
  for (int i = 0; i < 25; ++i) t2.push_back(2.5 * i / 24.0);
  auto recs2 = run_ensemble(SuperpositionState::eigenstate({4, 0, 0}), q, 5000, t2, 4002,
                            hw_threads());
  auto s2 = build_series(recs2, t2);
  Fit gm = windowed_fit(t2, s2.mean_u_sq, s2.mean_u_sq_err);
  std::vector<double> ex2(s2.u_sq.size());
  for (std::size_t i = 0; i < ex2.size(); ++i) ex2[i] = s2.u_sq[i] - 1.5;
  Fit ge = windowed_fit(t2, ex2, s2.u_sq_err);
  double sigma_comb = std::sqrt(gm.err * gm.err + ge.err * ge.err);
  bool split_ok = gm.ok && ge.ok && std::abs(gm.rate - ge.rate) > 3.0 * sigma_comb;

  // The exact drift carries m*/M where the diffusive limit puts m/M; the
  // reduced-mass-corrected asymptote is the faithful reference point.
  double two_eta_star = two_eta / (1.0 + p.mass_ratio);
  char d[224];
  std::snprintf(d, sizeof d,
                "m/M=0.2 rates %.3f/%.3f (2eta %.3f, reduced-mass asymptote %.3f); "
                "m/M=1 rates %.3f vs %.3f (+-%.3f)",
                fm.rate, fe.rate, two_eta, two_eta_star, gm.rate, ge.rate, sigma_comb);
  c.report(diff_ok && split_ok, "moment relaxation: diffusive rates and their breakdown", d);
}

void criterion_5() {
  Criterion c(5);
  bool ok = true;
  std::string detail;
  for (double u0 : {1.0, 2.0, 4.0}) {
    double lam = decoherence_rate_prediction(u0, 1.0);
    EngineParams p;
    p.mass_ratio = 1.0;
    std::vector<double> times;
    double tmax = 2.5 / lam;
    for (int i = 0; i < 25; ++i) times.push_back(tmax * i / 24.0);
    auto init = SuperpositionState::pair({u0, 0, 0}, {-u0, 0, 0});
    auto recs = run_ensemble(init, p, 2000, times, 5000 + int(u0), hw_threads());
    auto s = build_series(recs, times);
    Fit f = windowed_fit(times, s.coherence, s.coherence_err);
    bool this_ok = f.ok && std::abs(f.rate - lam) < 0.05 * lam;
    ok = ok && this_ok;
    char d[64];
    std::snprintf(d, sizeof d, "U0=%.0f rate %.3f (pred %.3f); ", u0, f.rate, lam);
    detail += d;
  }
  c.report(ok, "superposition coherence decays at the predicted jump rate", detail);
}

void criterion_6() {
  Criterion c(6);
  double worst_mb = 0.0, worst_bf = 0.0, worst_rate = 0.0;
  GasSpec be = kGas, fd = kGas;
  be.stats = GasSpec::Stats::BE;
  be.z = 0.5;
  fd.stats = GasSpec::Stats::FD;
  fd.z = 2.0;
  for (int i = 1; i <= 50; ++i) {
    double Q = 0.1 * i;
    for (int j = 1; j <= 50; ++j) {
      double E = -2.5 + 0.1 * j;
      double r = s_mb(Q, E, kGas.beta, kGas.m);
      double rr = std::exp(-kGas.beta * E) * s_mb(Q, -E, kGas.beta, kGas.m);
      if (rr > 0) worst_mb = std::max(worst_mb, std::abs(r / rr - 1.0));
      for (const GasSpec* g : {&be, &fd}) {
        double b = s_bf(Q, E, *g);
        double bb = std::exp(-kGas.beta * E) * s_bf(Q, -E, *g);
        if (bb > 0) worst_bf = std::max(worst_bf, std::abs(b / bb - 1.0));
      }
    }
  }
  CrossSectionModel cm = ConstantModel{1.3};
  for (Vec3 P : {Vec3{0.5, 0, 0}, Vec3{1.0, -0.5, 0.3}})
    for (Vec3 Q : {Vec3{0, 0, 1.2}, Vec3{0.7, 0.4, -0.2}})
      worst_rate = std::max(worst_rate, detailed_balance_residual(P, Q, cm, kGas, kPart));
  char d[96];
  std::snprintf(d, sizeof d, "MB %.1e, BE/FD %.1e, rate %.1e", worst_mb, worst_bf,
                worst_rate);
  c.report(worst_mb < 1e-12 && worst_bf < 1e-10 && worst_rate < 1e-10,
           "detailed balance: structure factors and classical rates", d);
}

void criterion_7() {
  Criterion c(7);
  struct Case {
    double eta, M, beta, hbar;
  } cases[3] = {{0.4, 2.0, 1.5, 1.0}, {0.05, 40.0, 0.3, 0.7}, {3.0, 0.8, 8.0, 2.5}};
  double worst = 0.0;
  for (auto& cs : cases) {
    auto dd = diffusion_coefficients(cs.eta, cs.M, cs.beta, cs.hbar);
    double target = cs.eta * cs.eta * cs.hbar * cs.hbar / 16.0;
    worst = std::max(worst, std::abs(dd.D_pp * dd.D_xx / target - 1.0));
  }
  char d[48];
  std::snprintf(d, sizeof d, "max rel dev %.1e", worst);
  c.report(worst < 1e-12, "diffusion coefficients saturate D_xx D_pp = eta^2 hbar^2/16", d);
}

void criterion_8() {
  Criterion c(8);
  const int n_traj = 10000;
  EngineParams p;
  p.mass_ratio = 1.0;
  std::vector<double> times;
  for (int i = 0; i < 12; ++i) times.push_back(10.0 * i / 11.0);
  auto recs = run_ensemble(SuperpositionState::eigenstate({2, 0, 0}), p, n_traj, times,
                           8001, hw_threads());
  const int nt = static_cast<int>(times.size());
  // Reference density at the histogram bin centers.
  MomentumHistogram proto(4.0, 0.5);
  std::vector<double> g(proto.n_bins());
  for (int i = 0; i < proto.n_bins(); ++i)
    g[i] = stationary_density_scaled(proto.bin_center(i), p.mass_ratio);

  auto entropy_at = [&](const std::vector<int>& idx, int k) {
    MomentumHistogram h(4.0, 0.5);
    for (int i : idx) h.add(recs[i].u_mean[k]);
    return relative_entropy(h, g);
  };
  std::vector<int> all(n_traj);
  for (int i = 0; i < n_traj; ++i) all[i] = i;
  std::vector<double> H(nt);
  for (int k = 0; k < nt; ++k) H[k] = entropy_at(all, k);

  bool ok = true;
  std::string detail;
  const int B = 40;
  RngStream rng(8002, 0);
  for (int k = 0; k + 1 < nt; ++k) {
    // Bootstrap the step difference H[k+1] - H[k].
    double sum = 0, sum2 = 0;
    for (int b = 0; b < B; ++b) {
      std::vector<int> idx(n_traj);
      for (int i = 0; i < n_traj; ++i)
        idx[i] = static_cast<int>(rng.uniform() * n_traj) % n_traj;
      double dh = entropy_at(idx, k + 1) - entropy_at(idx, k);
      sum += dh;
      sum2 += dh * dh;
    }
    double mean = sum / B;
    double se = std::sqrt(std::max(0.0, (sum2 / B - mean * mean)) / (B - 1) * B);
    double step = H[k + 1] - H[k];
    if (!(step <= 3.0 * se)) {
      ok = false;
      char d[96];
      std::snprintf(d, sizeof d, "step %d->%d: dH %.3g > 3 SE %.3g; ", k, k + 1, step,
                    3.0 * se);
      detail += d;
    }
  }
  if (detail.empty()) {
    char d[64];
    std::snprintf(d, sizeof d, "H(0)=%.2f -> H(T)=%.3f", H[0], H.back());
    detail = d;
  }
  c.report(ok, "binned relative entropy decreases monotonically (H-theorem)", detail);
}

void criterion_9() {
  Criterion c(9);
  // (a) the visibility is exactly exponential in pressure.
  VisibilitySetup vs{8.0, 20.0, 2.0, 2.0, 1.0, 1.0};
  double base = std::log(visibility(vs, 0.05)) / 0.05;
  double worst_lin = 0.0;
  for (double pr : {0.1, 0.2, 0.4})
    worst_lin = std::max(worst_lin, std::abs(std::log(visibility(vs, pr)) / pr / base - 1.0));
  // (b) slow-beam truncation of the thermal average: 1F1(-3/10,3/2;-U^2)
  //     agrees with 1 + U^2/5 to relative O(U^4) at U = 0.1.
  double U = 0.1;
  double full = hyp1f1_series(-0.3, 1.5, -U * U);
  double trunc_dev = std::abs(full / (1.0 + U * U / 5.0) - 1.0);
  // (c) closed-form soft-sphere rate vs direct quadrature.
  CrossSectionModel pl = PowerLawModel{0.2, -0.4};
  double cf = classical_loss_rate(1.7, pl, kGas, kPart, LossPath::ClosedForm);
  double qd = classical_loss_rate(1.7, pl, kGas, kPart, LossPath::Quadrature);
  double rate_dev = std::abs(cf / qd - 1.0);
  char d[96];
  std::snprintf(d, sizeof d, "lnV %.1e, trunc %.1e (<%.0e), rate %.1e", worst_lin,
                trunc_dev, std::pow(U, 4), rate_dev);
  c.report(worst_lin < 1e-12 && trunc_dev < std::pow(U, 4) && rate_dev < 1e-3,
           "interferometer visibility: pressure law, truncation, rate closed form", d);
}

void criterion_10() {
  Criterion c(10);
  DecoherenceSpec spec;
  spec.model = ConstantModel{1.3};
  spec.gas = kGas;
  spec.particle = ParticleSpec{100.0};
  double gamma = total_collision_rate(spec);
  double t = 3.0 / gamma;
  bool ok = std::abs(decoherence_function(0.0, spec) - 1.0) < 1e-12;
  double worst = 0.0;
  for (double S : {0.0, 0.4, 1.2, 3.0, 8.0, 20.0}) {
    double phi = decoherence_function(S, spec);
    ok = ok && std::abs(phi) <= 1.0 + 1e-12;
    double gt = gamma * t, term = std::exp(-gt), sum = term;
    for (int n = 1; n <= 30; ++n) {
      term *= gt * phi / n;
      sum += term;
    }
    double closed = std::exp(-gamma * (1.0 - phi) * t);
    worst = std::max(worst, std::abs(closed - sum));
  }
  char d[48];
  std::snprintf(d, sizeof d, "max dev %.1e", worst);
  c.report(ok && worst < 1e-8, "coherence decay equals its Poisson collision expansion", d);
}

void criterion_11() {
  Criterion c(11);
  bool ok = true;
  std::string detail;
  for (double U : {0.0, 1.0, 4.0}) {
    // Quadrature moments of K exp(-(K/2 + U xi)^2).
    QuadRule rk = gauss_legendre_ab(400, 1e-14, 2.0 * U + 14.0);
    const QuadRule& rx = gauss_legendre(128);
    double z = 0, m1 = 0, mx = 0, m2 = 0;
    for (std::size_t i = 0; i < rk.x.size(); ++i)
      for (std::size_t j = 0; j < rx.x.size(); ++j) {
        double K = rk.x[i], xi = rx.x[j];
        double w = K / 2.0 + U * xi;
        double f = rk.w[i] * rx.w[j] * K * std::exp(-w * w);
        z += f;
        m1 += f * K;
        mx += f * K * xi;
        m2 += f * K * K;
      }
    m1 /= z;
    mx /= z;
    m2 /= z;
    const int N = 100000;
    RngStream rng(1100 + int(U), 0);
    double s1 = 0, sx = 0, s2 = 0, q1 = 0, qx = 0, q2 = 0;
    for (int i = 0; i < N; ++i) {
      double K, xi;
      sample_jump_K(U, rng, K, xi);
      s1 += K;
      sx += K * xi;
      s2 += K * K;
      q1 += K * K;
      qx += K * xi * K * xi;
      q2 += K * K * K * K;
    }
    auto pull = [&](double s, double q, double ref) {
      double mean = s / N;
      double se = std::sqrt(std::max(1e-300, (q / N - mean * mean) / N));
      return std::abs(mean - ref) / se;
    };
    double p1 = pull(s1, q1, m1), px = pull(sx, qx, mx), p2 = pull(s2, q2, m2);
    bool this_ok = p1 < 3.0 && px < 3.0 && p2 < 3.0;
    ok = ok && this_ok;
    char d[64];
    std::snprintf(d, sizeof d, "U=%.0f pulls %.1f/%.1f/%.1f; ", U, p1, px, p2);
    detail += d;
  }
  c.report(ok, "jump sampler moments match the transfer-density quadrature", detail);
}

void criterion_12() {
  Criterion c(12);
  CrossSectionModel m = ConstantModel{1.3};
  const int n = 7;
  const double h = 0.8;
  double gb = thermal_rate(kGas, 1.3);

  // Delta state: gain diagonal equals the classical rate density.
  DensityMatrixGrid delta(n, h);
  int N = delta.n_points();
  int kc = (N - 1) / 2 + n;  // off-center source
  delta.at(kc, kc) = 1.0;
  auto dres = apply_generator(delta, m, kGas, kPart, false);
  Vec3 Pk = delta.momentum(kc);
  double worst_diag = 0.0;
  for (int i : {0, 11, N / 3, N / 2 + 1, N - 5}) {
    if (i == kc) continue;
    Vec3 Q = delta.momentum(i) - Pk;
    double expected = classical_gain_rate(delta.momentum(i), Q, m, kGas, kPart) * h * h * h;
    worst_diag = std::max(worst_diag,
                          std::abs(dres.derivative.at(i, i).real() / expected - 1.0));
  }

  // Random Hermitian state: trace conservation and Hermiticity.
  DensityMatrixGrid st(n, h);
  RngStream rng(1201, 0);
  for (int i = 0; i < N; ++i) {
    for (int j = i; j < N; ++j) {
      std::complex<double> v{rng.gaussian(), i == j ? 0.0 : rng.gaussian()};
      st.at(i, j) = v;
      st.at(j, i) = std::conj(v);
    }
    st.at(i, i) += 2.0 * std::sqrt(double(N));  // diagonally dominant, positive
  }
  std::complex<double> tr = st.trace();
  for (auto& r : st.rho) r /= tr;
  auto res = apply_generator(st, m, kGas, kPart, false);
  double trace_dev = std::abs(res.derivative.trace());
  double herm = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      herm = std::max(herm,
                      std::abs(res.derivative.at(i, j) - std::conj(res.derivative.at(j, i))));

  // Thermal diagonal state is stationary.
  auto th = DensityMatrixGrid::thermal(n, h, kGas, kPart);
  auto tres = apply_generator(th, m, kGas, kPart, false);
  double max_diag_rho = 0.0;
  for (int i = 0; i < N; ++i) max_diag_rho = std::max(max_diag_rho, th.at(i, i).real());
  double typical = gb * max_diag_rho;
  double thermal_resid = 0.0;
  for (int i = 0; i < N; ++i)
    thermal_resid = std::max(thermal_resid, std::abs(tres.derivative.at(i, i).real()));

  char d[128];
  std::snprintf(d, sizeof d, "diag %.1e, trace %.1e, herm %.1e, thermal %.1e/%.1e",
                worst_diag, trace_dev, herm, thermal_resid, typical);
  c.report(worst_diag < 1e-8 && trace_dev < 1e-12 * gb && herm < 1e-13 &&
               thermal_resid < 1e-6 * typical,
           "grid generator: rates, trace, Hermiticity, thermal fixed point", d);
}

void criterion_13() {
  Criterion c(13);
  CrossSectionModel born = BornModel::gaussian(0.8, 1.1);
  double worst_f = 0.0;
  for (double P : {0.3, 1.7, 4.0}) {
    auto f3 = thermal_forward_average(born, kGas, kPart, P, AveragePath::ThreeD);
    auto f1 = thermal_forward_average(born, kGas, kPart, P, AveragePath::OneD);
    worst_f = std::max(worst_f, std::abs(f3 - f1) / std::abs(f1));
  }
  double worst_n = 0.0;
  for (double K : {0.8, 2.0, 5.0}) {
    auto idx = refraction_index(K, born, kGas, kPart, 1.0);
    double rate = classical_loss_rate(K, born, kGas, kPart, LossPath::Forward);
    double im_ref = kPart.M * rate / (2.0 * K * K);
    worst_n = std::max(worst_n, std::abs(idx.imag() / im_ref - 1.0));
  }
  char d[64];
  std::snprintf(d, sizeof d, "<f0> %.1e, Im n %.1e", worst_f, worst_n);
  c.report(worst_f < 1e-8 && worst_n < 1e-8,
           "forward-amplitude duals: 3D vs 1D average and the index absorptive part", d);
}

void criterion_14() {
  Criterion c(14);
  namespace fs = std::filesystem;
  auto cfg = parse_config(
      "schema = 1\nexperiment = thermalize\nseed = 777\n"
      "gas.n = 0.7\ngas.m = 1\ngas.beta = 2\nparticle.M = 2.5\n"
      "model = constant\nmodel.sigma_tot = 1.3\n"
      "n_traj = 200\nt_max = 4\nn_samples = 9\nu0.x = 2\n");
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  fs::path base = fs::temp_directory_path() / "qlbsim_acceptance";
  fs::remove_all(base);
  std::string a = slurp(run_experiment(cfg, (base / "a").string(), 1).csv_path);
  std::string b = slurp(run_experiment(cfg, (base / "b").string(), 1).csv_path);
  std::string d4 = slurp(run_experiment(cfg, (base / "c").string(), 4).csv_path);
  bool ok = !a.empty() && a == b && a == d4;
  fs::remove_all(base);
  c.report(ok, "identical configs give byte-identical output at any thread count");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();
  criterion_13();
  criterion_14();
  std::printf("%s (%d/14 passed)\n", g_failures == 0 ? "ALL PASS" : "FAILURES",
              14 - g_failures);
  return g_failures;
}

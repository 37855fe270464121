#include "qlb/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qlb {
namespace {

// Legendre P_n and derivative by recurrence.
void legendre_pd(int n, double x, double& p, double& dp) {
  double p0 = 1.0, p1 = x;
  for (int k = 2; k <= n; ++k) {
    double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  p = (n == 0) ? 1.0 : (n == 1 ? x : p1);
  dp = (n == 0) ? 0.0 : n * (x * p1 - p0) / (x * x - 1.0);
}

QuadRule make_legendre(int n) {
  QuadRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev initial guess, Newton refinement.
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p, dp;
    for (int it = 0; it < 100; ++it) {
      legendre_pd(n, x, p, dp);
      double dx = -p / dp;
      x += dx;
      if (std::abs(dx) < 1e-15) break;
    }
    legendre_pd(n, x, p, dp);
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.x[i] = -x;
    r.w[i] = w;
    r.x[n - 1 - i] = x;
    r.w[n - 1 - i] = w;
  }
  if (n % 2 == 1) {
    double p, dp;
    legendre_pd(n, 0.0, p, dp);
    r.x[n / 2] = 0.0;
    r.w[n / 2] = 2.0 / (dp * dp);
  }
  return r;
}

// Hermite H_n (physicists') and derivative.
void hermite_pd(int n, double x, double& h, double& dh) {
  double h0 = 1.0, h1 = 2.0 * x;
  if (n == 0) { h = h0; dh = 0.0; return; }
  for (int k = 2; k <= n; ++k) {
    double h2 = 2.0 * x * h1 - 2.0 * (k - 1) * h0;
    h0 = h1;
    h1 = h2;
  }
  h = h1;
  dh = 2.0 * n * h0;
}

QuadRule make_hermite(int n) {
  QuadRule r;
  r.x.resize(n);
  r.w.resize(n);
  const double lead = std::pow(2.0, n - 1) * std::tgamma(n + 1.0) * std::sqrt(M_PI) / (n * n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Initial guesses (Stroud & Secrest style), then Newton.
    double x;
    if (i == 0)
      x = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
    else if (i == 1)
      x = r.x[n - 1] - 1.14 * std::pow(n, 0.426) / r.x[n - 1];
    else if (i == 2)
      x = 1.86 * r.x[n - 2] - 0.86 * r.x[n - 1];
    else if (i == 3)
      x = 1.91 * r.x[n - 3] - 0.91 * r.x[n - 2];
    else
      x = 2.0 * r.x[n - i] - r.x[n - i + 1];
    double h, dh;
    for (int it = 0; it < 200; ++it) {
      hermite_pd(n, x, h, dh);
      double dx = -h / dh;
      x += dx;
      if (std::abs(dx) < 1e-14 * (1.0 + std::abs(x))) break;
    }
    hermite_pd(n, x, h, dh);
    double hm;  // H_{n-1}
    {
      double d;
      hermite_pd(n - 1, x, hm, d);
    }
    double w = lead / (hm * hm);
    r.x[n - 1 - i] = x;
    r.w[n - 1 - i] = w;
    r.x[i] = -x;
    r.w[i] = w;
  }
  if (n % 2 == 1) {
    double hm, d;
    hermite_pd(n - 1, 0.0, hm, d);
    r.x[n / 2] = 0.0;
    r.w[n / 2] = lead / (hm * hm);
  }
  return r;
}

// Laguerre L_n and derivative.
void laguerre_pd(int n, double x, double& l, double& dl) {
  double l0 = 1.0, l1 = 1.0 - x;
  if (n == 0) { l = 1.0; dl = 0.0; return; }
  for (int k = 2; k <= n; ++k) {
    double l2 = ((2 * k - 1 - x) * l1 - (k - 1) * l0) / k;
    l0 = l1;
    l1 = l2;
  }
  l = l1;
  dl = n * (l1 - l0) / x;
}

QuadRule make_laguerre(int n) {
  QuadRule r;
  r.x.resize(n);
  r.w.resize(n);
  double x = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == 0)
      x = 3.0 / (1.0 + 2.4 * n);
    else if (i == 1)
      x += 15.0 / (1.0 + 2.5 * n);
    else
      x += ((1.0 + 2.55 * (i - 1)) / (1.9 * (i - 1))) * (x - r.x[i - 2]);
    double l, dl;
    for (int it = 0; it < 200; ++it) {
      laguerre_pd(n, x, l, dl);
      double dx = -l / dl;
      x += dx;
      if (std::abs(dx) < 1e-14 * (1.0 + std::abs(x))) break;
    }
    laguerre_pd(n, x, l, dl);
    double lm, d;
    laguerre_pd(n + 1, x, lm, d);
    r.x[i] = x;
    r.w[i] = x / ((n + 1.0) * (n + 1.0) * lm * lm);
  }
  return r;
}

template <typename F>
const QuadRule& cached(int n, std::map<int, QuadRule>& cache, std::mutex& mu, F make) {
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make(n)).first;
  return it->second;
}

}  // namespace

const QuadRule& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n < 1");
  static std::map<int, QuadRule> cache;
  static std::mutex mu;
  return cached(n, cache, mu, make_legendre);
}

const QuadRule& gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite: n < 1");
  static std::map<int, QuadRule> cache;
  static std::mutex mu;
  return cached(n, cache, mu, make_hermite);
}

const QuadRule& gauss_laguerre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_laguerre: n < 1");
  static std::map<int, QuadRule> cache;
  static std::mutex mu;
  return cached(n, cache, mu, make_laguerre);
}

QuadRule gauss_legendre_ab(int n, double a, double b) {
  const QuadRule& base = gauss_legendre(n);
  QuadRule r;
  r.x.resize(n);
  r.w.resize(n);
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    r.x[i] = mid + half * base.x[i];
    r.w[i] = half * base.w[i];
  }
  return r;
}

}  // namespace qlb

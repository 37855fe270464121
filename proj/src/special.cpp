#include "qlb/special.hpp"

#include <cmath>
#include <stdexcept>

namespace qlb {
namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

bool is_nonpositive_integer(double c) {
  return c <= 0.0 && c == std::floor(c);
}

// Ascending series for M(a, c; x), x >= 0 assumed (all-positive terms when
// a, c > 0; alternating but rapidly convergent for the small negative a used
// via the Kummer transform path).
double series_raw(double a, double c, double x) {
  long double term = 1.0L, sum = 1.0L;
  for (int n = 0; n < 500; ++n) {
    term *= (static_cast<long double>(a) + n) / (static_cast<long double>(c) + n) *
            static_cast<long double>(x) / (n + 1);
    sum += term;
    if (std::abs(static_cast<double>(term)) < 1e-15 * std::abs(static_cast<double>(sum)))
      break;
  }
  return static_cast<double>(sum);
}

}  // namespace

double hyp1f1_series(double a, double c, double x) {
  if (is_nonpositive_integer(c))
    throw std::domain_error("hyp1f1: c must not be a non-positive integer");
  if (x < 0.0) {
    // Kummer transform: M(a,c;x) = e^x M(c-a, c; -x) keeps the series free of
    // catastrophic cancellation at strongly negative argument.
    return std::exp(x) * series_raw(c - a, c, -x);
  }
  return series_raw(a, c, x);
}

double hyp1f1_m12_52_negsq(double x) {
  x = std::abs(x);
  if (x < 1e-2) return hyp1f1_series(-0.5, 2.5, -x * x);
  double x2 = x * x;
  double erfterm = (kSqrtPi / 2.0) * std::erf(x) / x;
  return (3.0 / (16.0 * x2)) *
         ((1.0 + 2.0 * x2) * std::exp(-x2) -
          (1.0 - 4.0 * x2 - 4.0 * x2 * x2) * erfterm);
}

double hyp1f1_m32_32_negsq(double x) {
  x = std::abs(x);
  if (x < 1e-2) return hyp1f1_series(-1.5, 1.5, -x * x);
  double x2 = x * x;
  double erfterm = (kSqrtPi / 2.0) * std::erf(x) / x;
  return 0.125 * ((5.0 + 2.0 * x2) * std::exp(-x2) +
                  (3.0 + 12.0 * x2 + 4.0 * x2 * x2) * erfterm);
}

double hyp1f1_m12_32_negsq(double x) {
  x = std::abs(x);
  if (x < 1e-2) return hyp1f1_series(-0.5, 1.5, -x * x);
  double x2 = x * x;
  double erfterm = (kSqrtPi / 4.0) * std::erf(x) / x;
  return 0.5 * std::exp(-x2) + (1.0 + 2.0 * x2) * erfterm;
}

double hyp1f1(double a, double c, double x) {
  if (is_nonpositive_integer(c))
    throw std::domain_error("hyp1f1: c must not be a non-positive integer");
  if (x < 0.0) {
    double xr = std::sqrt(-x);
    if (a == -0.5 && c == 2.5) return hyp1f1_m12_52_negsq(xr);
    if (a == -1.5 && c == 1.5) return hyp1f1_m32_32_negsq(xr);
    if (a == -0.5 && c == 1.5) return hyp1f1_m12_32_negsq(xr);
  }
  return hyp1f1_series(a, c, x);
}

}  // namespace qlb

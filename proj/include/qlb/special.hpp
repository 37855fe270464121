#pragma once
#include <cmath>

#include "qlb/vec3.hpp"

namespace qlb {

// Error function; relative accuracy well below 1e-12.
inline double erf(double x) { return std::erf(x); }

// Kummer confluent hypergeometric M(a, c; x).
//
// For the parameter pairs (-1/2,5/2), (-3/2,3/2), (-1/2,3/2) at negative
// argument the evaluation goes through the erf/exp closed forms; otherwise a
// term-by-term series (Kummer-transformed for x < 0 so all terms are
// positive).  Throws std::domain_error when c is a non-positive integer.
double hyp1f1(double a, double c, double x);

// Closed forms for M(a, c; -x^2), valid for x >= 0.  Each switches to the
// series below |x| = 1e-2 where the explicit expressions cancel badly.
double hyp1f1_m12_52_negsq(double x);  // a = -1/2, c = 5/2
double hyp1f1_m32_32_negsq(double x);  // a = -3/2, c = 3/2
double hyp1f1_m12_32_negsq(double x);  // a = -1/2, c = 3/2

// Plain ascending series with the standard truncation rule (next term below
// 1e-15 of the partial sum, 500-term cap); Kummer transform applied for
// x < 0.  Exposed for cross-checking against the closed forms.
double hyp1f1_series(double a, double c, double x);

// Maxwell-Boltzmann momentum density and its 1D/2D marginals.
// p_beta = sqrt(2m/beta) is the most probable momentum.
inline double p_beta(double beta, double m) { return std::sqrt(2.0 * m / beta); }
inline double v_beta(double beta, double m) { return std::sqrt(2.0 / (beta * m)); }

inline double mb_density(const Vec3& p, double beta, double m) {
  double pb = p_beta(beta, m);
  return std::exp(-p.norm2() / (pb * pb)) / (std::pow(M_PI, 1.5) * pb * pb * pb);
}

// 1D marginal along any fixed direction, evaluated at the parallel component.
inline double mb_marginal_1d(double p_par, double beta, double m) {
  return std::sqrt(beta / (2.0 * M_PI * m)) * std::exp(-beta * p_par * p_par / (2.0 * m));
}

// 2D marginal in the orthogonal plane, evaluated at |p_perp|^2.
inline double mb_marginal_2d(double p_perp_sq, double beta, double m) {
  return (beta / (2.0 * M_PI * m)) * std::exp(-beta * p_perp_sq / (2.0 * m));
}

}  // namespace qlb

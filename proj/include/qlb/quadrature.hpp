#pragma once
#include <cstddef>
#include <vector>

namespace qlb {

struct QuadRule {
  std::vector<double> x;  // nodes
  std::vector<double> w;  // weights
};

// Gauss-Legendre on [-1, 1].
const QuadRule& gauss_legendre(int n);

// Gauss-Hermite with weight exp(-x^2) on (-inf, inf).
const QuadRule& gauss_hermite(int n);

// Gauss-Laguerre with weight exp(-x) on (0, inf).
const QuadRule& gauss_laguerre(int n);

// Gauss-Legendre mapped to [a, b].
QuadRule gauss_legendre_ab(int n, double a, double b);

}  // namespace qlb

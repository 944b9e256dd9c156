#pragma once

#include <vector>

namespace pwa {

struct GaussRule {
  std::vector<double> nodes;    // on [−1, 1]
  std::vector<double> weights;
};

/// n-point Gauss–Legendre rule (Newton iteration on P_n).
GaussRule gauss_legendre(int n);

/// Trigamma ψ₁(x) for x > 0.
double trigamma(double x);

}  // namespace pwa

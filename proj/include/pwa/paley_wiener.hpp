#pragma once

#include <vector>

#include "pwa/spectral.hpp"

namespace pwa {

/// PW_ω(D): vectors whose spectral coefficients vanish on λ > ω. The band is
/// closed, so λ = ω belongs to it.
HilbertVector pw_project(const SpectralDecomposition& dec, const HilbertVector& f, double omega);
SpectralCoefficients pw_project(const SpectralCoefficients& c, double omega);

/// E(f, ω) = ‖f − P_ω f‖, measured in H (not in the coefficient domain).
double best_approx(const SpectralDecomposition& dec, const HilbertVector& f, double omega);

/// R(f, ω) = (Σ_{λ_j > ω} |c_j|²)^{1/2}.
double spectral_tail(const SpectralDecomposition& dec, const HilbertVector& f, double omega);
double spectral_tail(const SpectralCoefficients& c, double omega);

struct BandwidthReport {
  double omega_f = 0.0;
  double tol_support = 0.0;
  // ‖D^k f‖^{1/k}, k = 1..K. The lim and lim inf of this sequence coincide
  // for a finite spectrum, so one sequence serves both characterizations.
  std::vector<double> k_sequence;
  // omega_f − k_sequence.back()
  double residual = 0.0;
  // sup_k ω^{-k}‖D^k f‖ over k = 1..K for the probe ω, and its logarithm
  // (the ratio itself may overflow when ω < ω_f).
  double probe_omega = 0.0;
  double sup_ratio = 0.0;
  double log_sup_ratio = 0.0;
  // Finite-K proxy for "sup_k ω^{-k}‖D^k f‖ < ∞": the K-th term does not
  // exceed ‖f‖(1 + 1e-10), which holds for every k iff ω ≥ ω_f.
  bool sup_bounded = true;
};

struct BandwidthOptions {
  double tol_support = 1e-12;
  int max_power = 40;
  // Probe ω for the sup functional; negative means "use ω_f".
  double probe_omega = -1.0;
};

BandwidthReport bandwidth(const SpectralDecomposition& dec, const HilbertVector& f,
                          const BandwidthOptions& options = {});

struct BernsteinReport {
  std::vector<double> s_values;
  std::vector<double> ratios;  // ‖D^s f‖ / (ω^s ‖f‖)
  double max_ratio = 0.0;
  bool passed = true;
};

/// Requires f ∈ PW_ω (R(f, ω) ≤ 1e-12‖f‖), else NotBandlimited.
BernsteinReport bernstein_check(const SpectralDecomposition& dec, const HilbertVector& f, double omega,
                                const std::vector<double>& s_list, double tolerance = 1e-10);

/// Smallest ω in {0} ∪ spectrum with E(f, ω) ≤ ε.
double dense_union_check(const SpectralDecomposition& dec, const HilbertVector& f, double epsilon);

}  // namespace pwa

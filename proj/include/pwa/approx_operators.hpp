/*
 * approx_operators.hpp: operators that produce approximants in PW_ω(D).
 *
 * Riesz interpolation operator
 *
 *   R^ω f = (ω/π²) Σ_{k∈ℤ} (−1)^{k−1} (k − 1/2)^{−2} e^{i(π/ω)(k−1/2)D} f,
 *
 * truncated to |k| ≤ K and applied as the diagonal multiplier ρ_K(λ). On
 * PW_ω it reproduces iD.
 *
 * Quasi-interpolation operator with the kernel h(t) = a (sin(t/n)/t)^n
 * (n even):
 *
 *   Q^{ω,m} f = ∫ h(t) Σ_{j=1}^m b_j e^{i(jt/ω)D} f dt,   b_j = (−1)^{j+1} C(m, j),
 *
 * whose symbol is q(λ) = Σ_j b_j ĥ(jλ/ω). ĥ is a cardinal B-spline of order
 * n supported on [−1, 1], so q vanishes for λ ≥ ω and Q maps into PW_ω.
 */

#pragma once

#include <functional>
#include <vector>

#include "pwa/spectral.hpp"

namespace pwa {

struct RieszConfig {
  double omega = 1.0;
  long K_trunc = 10000;

  void validate() const;
  /// (ω/π²) Σ_{|k|>K} (k − 1/2)^{−2}: the mass dropped by the truncation.
  double tail_bound() const;
};

/// ρ_K(λ) = (ω/π²) Σ_{|k|≤K} (−1)^{k−1}(k − 1/2)^{−2} e^{iπ(k−1/2)λ/ω}.
Complex riesz_symbol(const RieszConfig& cfg, double lambda);

HilbertVector riesz_apply(const SpectralDecomposition& dec, const HilbertVector& f, const RieszConfig& cfg);

struct RieszIdentityReport {
  double residual = 0.0;  // ‖(iD)^n f − (R^ω)^n f‖ / ‖f‖
  double tail_bound = 0.0;
};

/// Requires f ∈ PW_ω (NotBandlimited otherwise).
RieszIdentityReport riesz_identity_check(const SpectralDecomposition& dec, const HilbertVector& f, double omega,
                                         int n, long K_trunc);

struct QuadratureOptions {
  // Composite Gauss–Legendre panels per half period of sin^n(t/n).
  int panels_per_halfperiod = 2;
  // Multiplies the truncation point T.
  double horizon_scale = 1.0;
  // Target for the analytic truncation error.
  double tail_tol = 1e-12;
};

class ApproxKernel {
 public:
  int order() const noexcept { return n_; }
  /// a with ∫h = 1.
  double norm_const() const noexcept { return norm_const_; }

  /// h(t) = a (sin(t/n)/t)^n, with the removable singularity at 0 handled by series.
  double operator()(double t) const;

  /// ∫ h(t) g(t) dt for even g with |g(t)| ≤ (1 + |t|)^growth, growth < n − 1.
  /// Composite Gauss–Legendre on [0, T]; for non-oscillatory g the mean of
  /// sin^n is integrated over the tail as well, which shortens T.
  double integrate_even(const std::function<double(double)>& g, double growth, bool oscillatory,
                        double frequency, const QuadratureOptions& options = {}) const;

 private:
  friend ApproxKernel build_kernel(int n, int m, const QuadratureOptions& options);
  int n_ = 4;
  double norm_const_ = 1.0;
};

ApproxKernel build_kernel(int n, int m, const QuadratureOptions& options = {});

/// Smallest even n ≥ m + 4.
int default_kernel_order(int m);

enum class SymbolEvaluator {
  quadrature,  // ∫ h(t) cos(ξt) dt
  bspline,     // normalized n-fold self-convolution of 1_{[−1/n, 1/n]}
};

/// ĥ(ξ) = ∫ h(t) e^{iξt} dt.
double kernel_symbol(const ApproxKernel& kernel, double xi, SymbolEvaluator evaluator = SymbolEvaluator::bspline);

/// ∫_{−∞}^{∞} (sin u / u)^n du in closed form.
double sinc_power_integral(int n);

/// b_j = (−1)^{j+1} C(m, j), j = 1..m.
std::vector<double> q_coefficients(int m);

double q_symbol(const ApproxKernel& kernel, double omega, int m, double lambda);

HilbertVector q_apply(const SpectralDecomposition& dec, const HilbertVector& f, double omega, int m,
                      const ApproxKernel& kernel);

struct JacksonConstants {
  double corollary = 0.0;  // ∫ h |t|^k (1 + |t|)^m
  double proof = 0.0;      // ∫ h |t|^k (1 + |t|)^{m−k}
};

/// C^h_{m,k}; +∞ when the integral diverges (n ≤ k + m + 1).
JacksonConstants jackson_constants(const ApproxKernel& kernel, int m, int k, const QuadratureOptions& options = {});
double jackson_constant(const ApproxKernel& kernel, int m, int k, const QuadratureOptions& options = {});

struct JacksonReport {
  double best_approx = 0.0;       // E(f, ω)
  double q_error = 0.0;           // ‖Q f − f‖
  double constant = 0.0;          // C^h_{m,k} (corollary form)
  double constant_proof = 0.0;    // C^h_{m,k} with exponent m − k
  double modulus = 0.0;           // Ω_{m−k}(D^k f, 1/ω)
  double bound = 0.0;             // C ω^{−k} Ω
  double chain_ratio = 0.0;       // E / ‖Qf − f‖
  double ratio = 0.0;             // ‖Qf − f‖ / bound
  double ratio_best = 0.0;        // E / bound
  bool vacuous = false;           // bound = 0 and E = 0
  bool passed = true;
};

JacksonReport jackson_check(const SpectralDecomposition& dec, const HilbertVector& f, double omega, int m, int k,
                            const ApproxKernel& kernel, double grid_tolerance = 1e-6);

}  // namespace pwa

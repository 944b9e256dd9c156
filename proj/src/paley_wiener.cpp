#include "pwa/paley_wiener.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pwa/errors.hpp"

namespace pwa {

namespace {

void require_omega(double omega) {
  if (!(omega >= 0.0)) throw Error(ErrorCode::NegativeOmega, "ω must be nonnegative");
}

double log_sum_exp(const std::vector<double>& x) {
  if (x.empty()) return -std::numeric_limits<double>::infinity();
  const double m = *std::max_element(x.begin(), x.end());
  double s = 0.0;
  for (double v : x) s += std::exp(v - m);
  return m + std::log(s);
}

}  // namespace

SpectralCoefficients pw_project(const SpectralCoefficients& c, double omega) {
  require_omega(omega);
  const auto& lam = c.decomposition().eigenvalues();
  std::vector<Complex> kept = c.values();
  for (std::size_t j = 0; j < kept.size(); ++j)
    if (lam[j] > omega) kept[j] = 0.0;
  return SpectralCoefficients(c.decomposition(), std::move(kept));
}

HilbertVector pw_project(const SpectralDecomposition& dec, const HilbertVector& f, double omega) {
  require_omega(omega);
  if (omega >= dec.lambda_max() && f.size() == dec.dim()) return f;
  return inverse_transform(pw_project(spectral_transform(dec, f), omega));
}

double best_approx(const SpectralDecomposition& dec, const HilbertVector& f, double omega) {
  return (f - pw_project(dec, f, omega)).norm();
}

double spectral_tail(const SpectralCoefficients& c, double omega) {
  require_omega(omega);
  const auto& lam = c.decomposition().eigenvalues();
  std::vector<Complex> tail(c.size());
  for (std::size_t j = 0; j < c.size(); ++j)
    if (lam[j] > omega) tail[j] = c[j];
  return HilbertVector(std::move(tail)).norm();
}

double spectral_tail(const SpectralDecomposition& dec, const HilbertVector& f, double omega) {
  return spectral_tail(spectral_transform(dec, f), omega);
}

BandwidthReport bandwidth(const SpectralDecomposition& dec, const HilbertVector& f,
                          const BandwidthOptions& options) {
  const double fnorm = f.norm();
  if (fnorm == 0.0) throw Error(ErrorCode::ZeroVector, "bandwidth of the zero vector");
  const auto c = spectral_transform(dec, f);
  const auto& lam = dec.eigenvalues();

  BandwidthReport rep;
  rep.tol_support = options.tol_support;
  std::vector<double> log_lambda, log_coeff;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double a = std::abs(c[j]);
    if (a <= options.tol_support * fnorm) continue;
    rep.omega_f = std::max(rep.omega_f, lam[j]);
    if (lam[j] > 0.0) {
      log_lambda.push_back(std::log(lam[j]));
      log_coeff.push_back(std::log(a));
    }
  }

  // log ‖D^k f‖ = ½ log Σ_j exp(2k log λ_j + 2 log|c_j|)
  auto log_power_norm = [&](int k) {
    std::vector<double> terms(log_lambda.size());
    for (std::size_t i = 0; i < terms.size(); ++i) terms[i] = 2.0 * k * log_lambda[i] + 2.0 * log_coeff[i];
    return 0.5 * log_sum_exp(terms);
  };

  rep.probe_omega = options.probe_omega < 0.0 ? rep.omega_f : options.probe_omega;
  const double log_probe = std::log(rep.probe_omega);
  rep.log_sup_ratio = -std::numeric_limits<double>::infinity();
  double last_log_term = 0.0;
  for (int k = 1; k <= options.max_power; ++k) {
    const double lp = log_power_norm(k);
    rep.k_sequence.push_back(std::exp(lp / k));
    double log_term;
    if (rep.probe_omega > 0.0)
      log_term = lp - k * log_probe;
    else
      log_term = std::isinf(lp) ? -std::numeric_limits<double>::infinity()
                                : std::numeric_limits<double>::infinity();
    rep.log_sup_ratio = std::max(rep.log_sup_ratio, log_term);
    last_log_term = log_term;
  }
  rep.sup_ratio = std::exp(rep.log_sup_ratio);
  rep.residual = rep.k_sequence.empty() ? 0.0 : rep.omega_f - rep.k_sequence.back();
  rep.sup_bounded = last_log_term <= std::log(fnorm) + 1e-10;
  return rep;
}

BernsteinReport bernstein_check(const SpectralDecomposition& dec, const HilbertVector& f, double omega,
                                const std::vector<double>& s_list, double tolerance) {
  require_omega(omega);
  const auto c = spectral_transform(dec, f);
  const double fnorm = c.norm();
  if (spectral_tail(c, omega) > 1e-12 * fnorm)
    throw Error(ErrorCode::NotBandlimited, "vector is not in PW_ω");

  BernsteinReport rep;
  rep.s_values = s_list;
  for (double s : s_list) {
    double ratio = 0.0;
    if (fnorm > 0.0) {
      const double num = power_norm(c, s);
      const double den = std::pow(omega, s) * fnorm;
      ratio = den > 0.0 ? num / den : (num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    }
    rep.ratios.push_back(ratio);
    rep.max_ratio = std::max(rep.max_ratio, ratio);
  }
  rep.passed = rep.max_ratio <= 1.0 + tolerance;
  return rep;
}

double dense_union_check(const SpectralDecomposition& dec, const HilbertVector& f, double epsilon) {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::InvalidParams, "ε must be positive");
  if (best_approx(dec, f, 0.0) <= epsilon) return 0.0;
  for (double w : dec.distinct_eigenvalues())
    if (best_approx(dec, f, w) <= epsilon) return w;
  return dec.lambda_max();
}

}  // namespace pwa

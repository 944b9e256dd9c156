#include "pwa/approx_operators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>

#include "pwa/errors.hpp"
#include "pwa/paley_wiener.hpp"
#include "pwa/quadrature.hpp"
#include "pwa/smoothness.hpp"

namespace pwa {

namespace {

constexpr double kPi = std::numbers::pi;

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

const GaussRule& panel_rule() {
  static const GaussRule rule = gauss_legendre(16);
  return rule;
}

// (sin x / x)^n; Taylor series of sinc below |x| < 1e-3.
double sinc_pow(double x, int n) {
  double s;
  if (std::abs(x) < 1e-3) {
    const double x2 = x * x;
    s = 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0 * (1.0 - x2 / 110.0))));
  } else {
    s = std::sin(x) / x;
  }
  return std::pow(s, n);
}

// Centered cardinal B-spline of order n on [0, n] (unit boxes).
double cardinal_bspline(int n, double x) {
  if (x <= 0.0 || x >= n) return 0.0;
  double s = 0.0;
  for (int k = 0; k <= n; ++k) {
    const double d = x - k;
    if (d <= 0.0) break;
    s += ((k % 2) ? -1.0 : 1.0) * binomial(n, k) * std::pow(d, n - 1);
  }
  return s / factorial(n - 1);
}

}  // namespace

void RieszConfig::validate() const {
  if (!(omega > 0.0)) throw Error(ErrorCode::InvalidConfig, "Riesz operator needs ω > 0");
  if (K_trunc < 1) throw Error(ErrorCode::InvalidConfig, "Riesz truncation must be at least 1");
}

double RieszConfig::tail_bound() const {
  // k > K contributes (k − 1/2)^{-2}, k < −K contributes (|k| + 1/2)^{-2}.
  const double K = static_cast<double>(K_trunc);
  return omega / (kPi * kPi) * (trigamma(K + 0.5) + trigamma(K + 1.5));
}

Complex riesz_symbol(const RieszConfig& cfg, double lambda) {
  cfg.validate();
  const double phase = kPi * lambda / cfg.omega;
  Complex s = 0.0;
  // Smallest terms first.
  auto term = [phase](long k) {
    const double h = k - 0.5;
    const double sign = (k - 1) % 2 == 0 ? 1.0 : -1.0;
    return sign / (h * h) * std::exp(Complex(0.0, phase * h));
  };
  for (long mag = cfg.K_trunc; mag >= 1; --mag) s += term(mag) + term(-mag);
  s += term(0);
  return cfg.omega / (kPi * kPi) * s;
}

HilbertVector riesz_apply(const SpectralDecomposition& dec, const HilbertVector& f, const RieszConfig& cfg) {
  cfg.validate();
  return apply_multiplier(dec, [&cfg](double l) { return riesz_symbol(cfg, l); }, f);
}

RieszIdentityReport riesz_identity_check(const SpectralDecomposition& dec, const HilbertVector& f, double omega,
                                         int n, long K_trunc) {
  const RieszConfig cfg{omega, K_trunc};
  cfg.validate();
  if (n < 1) throw Error(ErrorCode::InvalidOrder, "power must be at least 1");
  const auto c = spectral_transform(dec, f);
  const double fnorm = c.norm();
  if (spectral_tail(c, omega) > 1e-12 * fnorm) throw Error(ErrorCode::NotBandlimited, "vector is not in PW_ω");
  RieszIdentityReport rep;
  rep.tail_bound = cfg.tail_bound();
  if (fnorm == 0.0) return rep;
  const auto diff = apply_multiplier(c, [&](double l) {
    return std::pow(Complex(0.0, l), n) - std::pow(riesz_symbol(cfg, l), n);
  });
  rep.residual = diff.norm() / fnorm;
  return rep;
}

double ApproxKernel::operator()(double t) const {
  return norm_const_ * std::pow(1.0 / n_, n_) * sinc_pow(t / n_, n_);
}

double ApproxKernel::integrate_even(const std::function<double(double)>& g, double growth, bool oscillatory,
                                    double frequency, const QuadratureOptions& options) const {
  const double n = n_;
  if (!(growth < n - 1.0)) return kInfinity;
  // Truncation point from the analytic tail bound. With the mean of sin^n
  // integrated separately, only its zero-mean part is dropped; integration by
  // parts bounds that by 4·a·n·2^p·T^{p−n}.
  const double scale = 2.0 * norm_const_ * std::pow(2.0, growth);
  double T;
  if (oscillatory)
    T = std::pow(scale / ((n - growth - 1.0) * options.tail_tol), 1.0 / (n - growth - 1.0));
  else
    T = std::pow(2.0 * scale * n / options.tail_tol, 1.0 / (n - growth));
  T = std::max(T, 10.0 * n) * options.horizon_scale;

  double width = kPi * n / 2.0;
  if (frequency > 0.0) width = std::min(width, kPi / frequency);
  width /= options.panels_per_halfperiod;
  const long panels = static_cast<long>(std::ceil(T / width));
  width = T / panels;

  const auto& rule = panel_rule();
  double sum = 0.0;
  for (long p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * width, half = 0.5 * width;
    double ps = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double t = mid + half * rule.nodes[i];
      ps += rule.weights[i] * (*this)(t)*g(t);
    }
    sum += ps * half;
  }
  sum *= 2.0;

  if (!oscillatory) {
    // 2 a μ_n ∫_T^∞ t^{−n} g(t) dt, μ_n the mean of sin^n; with u = 1/t the
    // integrand u^{n−2} g(1/u) is smooth on [0, 1/T].
    const double mean = binomial(n_, n_ / 2) / std::pow(2.0, n_);
    const double ub = 1.0 / T, half = 0.5 * ub;
    double tail = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double u = half + half * rule.nodes[i];
      tail += rule.weights[i] * std::pow(u, n - 2.0) * g(1.0 / u);
    }
    sum += 2.0 * norm_const_ * mean * tail * half;
  }
  return sum;
}

double sinc_power_integral(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidOrder, "power must be positive");
  double s = 0.0;
  for (int k = 0; 2 * k < n; ++k) s += ((k % 2) ? -1.0 : 1.0) * binomial(n, k) * std::pow(n - 2.0 * k, n - 1);
  return kPi / (std::pow(2.0, n - 1) * factorial(n - 1)) * s;
}

ApproxKernel build_kernel(int n, int m, const QuadratureOptions& options) {
  if (n % 2 != 0) throw Error(ErrorCode::OddOrder, "kernel order must be even");
  if (m < 0) throw Error(ErrorCode::InvalidOrder, "difference order must be nonnegative");
  if (n < m + 3 || n < 4) throw Error(ErrorCode::OrderTooSmall, "kernel order must satisfy n ≥ m + 3");
  ApproxKernel h;
  h.n_ = n;
  h.norm_const_ = 1.0;
  const double mass = h.integrate_even([](double) { return 1.0; }, 0.0, false, 0.0, options);
  h.norm_const_ = 1.0 / mass;
  return h;
}

int default_kernel_order(int m) { return (m + 5) / 2 * 2; }

double kernel_symbol(const ApproxKernel& kernel, double xi, SymbolEvaluator evaluator) {
  const int n = kernel.order();
  if (evaluator == SymbolEvaluator::bspline) {
    const double x = 0.5 * n * (xi + 1.0);
    return cardinal_bspline(n, x) / cardinal_bspline(n, 0.5 * n);
  }
  const double w = std::abs(xi);
  QuadratureOptions opt;
  opt.tail_tol = 1e-11;
  return kernel.integrate_even([w](double t) { return std::cos(w * t); }, 0.0, true, w, opt);
}

std::vector<double> q_coefficients(int m) {
  if (m < 1) throw Error(ErrorCode::InvalidOrder, "difference order must be positive");
  std::vector<double> b(m);
  for (int j = 1; j <= m; ++j) b[j - 1] = ((j + 1) % 2 ? -1.0 : 1.0) * binomial(m, j);
  return b;
}

double q_symbol(const ApproxKernel& kernel, double omega, int m, double lambda) {
  const auto b = q_coefficients(m);
  double q = 0.0;
  for (int j = 1; j <= m; ++j) q += b[j - 1] * kernel_symbol(kernel, j * lambda / omega);
  return q;
}

HilbertVector q_apply(const SpectralDecomposition& dec, const HilbertVector& f, double omega, int m,
                      const ApproxKernel& kernel) {
  if (!(omega > 0.0)) throw Error(ErrorCode::InvalidParams, "Q operator needs ω > 0");
  if (m < 1) throw Error(ErrorCode::InvalidOrder, "difference order must be positive");
  if (kernel.order() < m + 3)
    throw Error(ErrorCode::KernelOrderMismatch, "kernel order " + std::to_string(kernel.order()) +
                                                    " is below m + 3 = " + std::to_string(m + 3));
  return apply_multiplier(dec, [&](double l) { return Complex(q_symbol(kernel, omega, m, l)); }, f);
}

JacksonConstants jackson_constants(const ApproxKernel& kernel, int m, int k, const QuadratureOptions& options) {
  if (m < 0 || k < 0 || k > m) throw Error(ErrorCode::IndexOutOfRange, "need 0 ≤ k ≤ m");
  auto integral = [&](int outer) {
    return kernel.integrate_even(
        [k, outer](double t) { return std::pow(std::abs(t), k) * std::pow(1.0 + std::abs(t), outer); },
        static_cast<double>(k + outer), false, 0.0, options);
  };
  return {integral(m), integral(m - k)};
}

double jackson_constant(const ApproxKernel& kernel, int m, int k, const QuadratureOptions& options) {
  return jackson_constants(kernel, m, k, options).corollary;
}

namespace {

// The constants depend only on the kernel and (m, k); sweeps reuse them.
JacksonConstants cached_jackson_constants(const ApproxKernel& kernel, int m, int k) {
  using Key = std::tuple<int, double, int, int>;
  static std::mutex mu;
  static std::map<Key, JacksonConstants> cache;
  const Key key{kernel.order(), kernel.norm_const(), m, k};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const auto cs = jackson_constants(kernel, m, k);
  std::lock_guard lock(mu);
  cache.emplace(key, cs);
  return cs;
}

}  // namespace

JacksonReport jackson_check(const SpectralDecomposition& dec, const HilbertVector& f, double omega, int m, int k,
                            const ApproxKernel& kernel, double grid_tolerance) {
  if (m < 1 || k < 0 || k > m) throw Error(ErrorCode::IndexOutOfRange, "need 0 ≤ k ≤ m, m ≥ 1");
  JacksonReport rep;
  const double fnorm = f.norm();
  rep.best_approx = best_approx(dec, f, omega);
  rep.q_error = (q_apply(dec, f, omega, m, kernel) - f).norm();
  const auto cs = cached_jackson_constants(kernel, m, k);
  rep.constant = cs.corollary;
  rep.constant_proof = cs.proof;
  rep.modulus = modulus(power_D(spectral_transform(dec, f), k), 1.0 / omega, m - k);
  rep.bound = rep.constant * std::pow(omega, -k) * rep.modulus;

  const double floor = 1e-12 * (1.0 + fnorm);
  rep.chain_ratio = rep.best_approx <= floor ? 0.0 : rep.best_approx / rep.q_error;
  const bool chain_ok = rep.best_approx <= rep.q_error + 1e-10;
  if (rep.bound == 0.0) {
    rep.vacuous = rep.best_approx <= floor;
    rep.ratio = rep.q_error <= floor ? 0.0 : kInfinity;
    rep.ratio_best = rep.vacuous ? 0.0 : kInfinity;
  } else {
    rep.ratio = rep.q_error / rep.bound;
    rep.ratio_best = rep.best_approx / rep.bound;
  }
  rep.passed = chain_ok && rep.ratio <= 1.0 + grid_tolerance;
  return rep;
}

}  // namespace pwa

#include "support.hpp"

#include <numbers>

#include "pwa/approx_operators.hpp"
#include "pwa/paley_wiener.hpp"
#include "pwa/quadrature.hpp"
#include "pwa/smoothness.hpp"

using namespace pwa;
using testing::decompose;
using testing::random_vector;

namespace {

constexpr double kPi = std::numbers::pi;

// ∫_0^∞ h(t) g(t) dt by composite Simpson on [0, T] with n intervals, plus
// the tail of the mean of sin^n: a μ_n ∫_T^∞ t^{-n} g(t) dt with g(t) ≈ c t^p.
double simpson_half(const ApproxKernel& h, double (*g)(double, int, int), int k, int m, double T, int n) {
  const double dt = T / n;
  double s = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double t = i * dt;
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    s += w * h(t) * g(t, k, m);
  }
  return s * dt / 3.0;
}

double moment_weight(double t, int k, int m) { return std::pow(t, k) * std::pow(1.0 + t, m); }

double binom(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

TEST_SUITE("quadrature") {
  TEST_CASE("Gauss–Legendre integrates polynomials of degree 2n − 1 exactly") {
    for (int n : {1, 2, 5, 16}) {
      const auto rule = gauss_legendre(n);
      for (int p = 0; p < 2 * n; ++p) {
        double s = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * std::pow(rule.nodes[i], p);
        CHECK(s == doctest::Approx(p % 2 ? 0.0 : 2.0 / (p + 1)).epsilon(1e-13));
      }
    }
  }

  TEST_CASE("trigamma special values and recurrence") {
    CHECK(trigamma(1.0) == doctest::Approx(kPi * kPi / 6).epsilon(1e-14));
    CHECK(trigamma(0.5) == doctest::Approx(kPi * kPi / 2).epsilon(1e-14));
    for (double x : {0.3, 2.7, 15.0, 1e4}) CHECK(trigamma(x) - trigamma(x + 1) == doctest::Approx(1.0 / (x * x)).epsilon(1e-12));
  }
}

TEST_SUITE("riesz") {
  TEST_CASE("symbol reproduces iλ on [0, ω] up to the tail bound") {
    for (long K : {10L, 100L, 10000L}) {
      const RieszConfig cfg{2.5, K};
      for (int i = 0; i <= 20; ++i) {
        const double l = 2.5 * i / 20;
        CHECK(std::abs(riesz_symbol(cfg, l) - Complex(0.0, l)) <= cfg.tail_bound() * (1.0 + 1e-9));
      }
    }
  }

  TEST_CASE("tail bound against the direct sum") {
    const RieszConfig cfg{1.7, 50};
    double direct = 0.0;
    constexpr long kEnd = 20000000;
    for (long k = 51; k < kEnd; ++k) direct += 1.0 / ((k - 0.5) * (k - 0.5)) + 1.0 / ((k + 0.5) * (k + 0.5));
    direct += 2.0 / kEnd;  // remainder, O(kEnd^{-2}) accurate
    CHECK(cfg.tail_bound() == doctest::Approx(1.7 / (kPi * kPi) * direct).epsilon(1e-6));
  }

  TEST_CASE("norm bound, identity and errors") {
    const auto dec = decompose("random_psd:12:3");
    const RieszConfig cfg{dec.lambda(8), 10000};
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto f = random_vector(12, s);
      CHECK(riesz_apply(dec, f, cfg).norm() <= (cfg.omega - cfg.tail_bound()) * f.norm() * (1.0 + 1e-10));
    }
    CHECK(riesz_apply(dec, HilbertVector(12), cfg).norm() == 0.0);
    const auto u = dec.eigenvector(8);
    const auto rep = riesz_identity_check(dec, u, cfg.omega, 1, 10000);
    CHECK(rep.residual <= rep.tail_bound * (1.0 + 1e-9));
    // n = 2 equals two applications.
    const auto g = pw_project(dec, random_vector(12, 5), cfg.omega);
    const auto rr = riesz_apply(dec, riesz_apply(dec, g, cfg), cfg);
    const auto d2 = power_D(dec, 2.0, g);
    const double resid2 = (rr + d2).norm() / g.norm();  // (iD)² = −D²
    CHECK(riesz_identity_check(dec, g, cfg.omega, 2, 10000).residual == doctest::Approx(resid2).epsilon(1e-6));
    CHECK_ERROR_CODE(riesz_identity_check(dec, random_vector(12, 1), dec.lambda(3), 1, 100), ErrorCode::NotBandlimited);
    CHECK_ERROR_CODE(riesz_apply(dec, u, RieszConfig{0.0, 10}), ErrorCode::InvalidConfig);
    CHECK_ERROR_CODE(riesz_apply(dec, u, RieszConfig{1.0, 0}), ErrorCode::InvalidConfig);
  }
}

TEST_SUITE("kernel") {
  TEST_CASE("sinc power integrals") {
    CHECK(sinc_power_integral(1) == doctest::Approx(kPi));
    CHECK(sinc_power_integral(2) == doctest::Approx(kPi));
    CHECK(sinc_power_integral(3) == doctest::Approx(3 * kPi / 4));
    CHECK(sinc_power_integral(4) == doctest::Approx(2 * kPi / 3));
    CHECK(sinc_power_integral(6) == doctest::Approx(11 * kPi / 20));
  }

  TEST_CASE("kernel normalization and symbol") {
    for (int n : {4, 6, 8, 10}) {
      const auto h = build_kernel(n, 0);
      CHECK(h.norm_const() * std::pow(double(n), 1 - n) * sinc_power_integral(n) == doctest::Approx(1.0).epsilon(1e-8));
      CHECK(h(0.0) == doctest::Approx(h.norm_const() * std::pow(double(n), -n)).epsilon(1e-14));
      CHECK(kernel_symbol(h, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
      CHECK(std::abs(kernel_symbol(h, 0.0, SymbolEvaluator::quadrature) - 1.0) <= 1e-8);
      for (double xi : {1.0, 1.01, 1.5, 3.0, -2.0}) {
        CHECK(kernel_symbol(h, xi) == 0.0);
        CHECK(std::abs(kernel_symbol(h, xi, SymbolEvaluator::quadrature)) <= 1e-8);
      }
      for (int i = 0; i < 64; ++i) {
        const double xi = -1.0 + 2.0 * i / 63;
        CHECK(std::abs(kernel_symbol(h, xi) - kernel_symbol(h, xi, SymbolEvaluator::quadrature)) <= 1e-8);
      }
    }
  }

  TEST_CASE("kernel order validation") {
    CHECK_ERROR_CODE(build_kernel(5, 1), ErrorCode::OddOrder);
    CHECK_ERROR_CODE(build_kernel(4, 2), ErrorCode::OrderTooSmall);
    CHECK_ERROR_CODE(build_kernel(2, 0), ErrorCode::OrderTooSmall);
    CHECK_NOTHROW(build_kernel(6, 3));
    CHECK(default_kernel_order(1) == 6);
    CHECK(default_kernel_order(2) == 6);
    CHECK(default_kernel_order(3) == 8);
  }

  TEST_CASE("Jackson constants against Simpson quadrature") {
    const auto h = build_kernel(8, 0);
    for (auto [m, k] : {std::pair{2, 0}, std::pair{2, 1}, std::pair{3, 1}}) {
      // Simpson on [0, 4000] with the asymptotic tail a μ ∫_T^∞ t^{k+m−n} dt.
      const double T = 4000.0;
      const double mu = binom(8, 4) / 256.0;
      const double tail = h.norm_const() * mu * std::pow(T, k + m - 7.0) / (7.0 - k - m);
      const double want = 2.0 * (simpson_half(h, moment_weight, k, m, T, 4000000) + tail);
      const auto cs = jackson_constants(h, m, k);
      CHECK(cs.corollary == doctest::Approx(want).epsilon(1e-6));
      CHECK(cs.proof <= cs.corollary);
      if (k == 0) CHECK(cs.corollary >= 1.0);
      if (k == 0) CHECK(cs.proof == doctest::Approx(cs.corollary));
    }
    // Refinement: doubled horizon and node density agree.
    const auto h6 = build_kernel(6, 2);
    QuadratureOptions fine;
    fine.horizon_scale = 2.0;
    fine.panels_per_halfperiod = 4;
    CHECK(jackson_constant(h6, 2, 1) == doctest::Approx(jackson_constant(h6, 2, 1, fine)).epsilon(1e-6));
    // Divergent when n ≤ k + m + 1.
    CHECK(std::isinf(jackson_constant(h6, 3, 2)));
    CHECK_ERROR_CODE(jackson_constant(h6, 2, 3), ErrorCode::IndexOutOfRange);
  }
}

TEST_SUITE("q_operator") {
  TEST_CASE("coefficients sum to one") {
    for (int m = 1; m <= 6; ++m) {
      const auto b = q_coefficients(m);
      double s = 0.0;
      for (double x : b) s += x;
      CHECK(s == doctest::Approx(1.0));
    }
    CHECK(q_coefficients(3) == std::vector<double>{3.0, -3.0, 1.0});
  }

  TEST_CASE("Q maps into PW_ω and keeps the kernel of D") {
    const auto dec = decompose("cycle:16");
    const auto h = build_kernel(8, 3);
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto f = random_vector(16, s);
      const double w = 0.3 + 0.15 * s;
      const auto qf = q_apply(dec, f, w, 3, h);
      CHECK(spectral_tail(dec, qf, w) <= 1e-10 * f.norm());
      const auto c = spectral_transform(dec, f), qc = spectral_transform(dec, qf);
      CHECK(std::abs(qc[0] - c[0]) <= 1e-10 * f.norm());
    }
    CHECK(q_apply(dec, HilbertVector(16), 1.0, 2, h).norm() == 0.0);
    CHECK_ERROR_CODE(q_apply(dec, random_vector(16, 1), 1.0, 6, h), ErrorCode::KernelOrderMismatch);
    CHECK_ERROR_CODE(q_apply(dec, random_vector(16, 1), 0.0, 2, h), ErrorCode::InvalidParams);
  }

  TEST_CASE("symbol of Q against the binomial identity") {
    // 1 − q(λ) = ∫ h(t) (1 − e^{itλ/ω})^m dt (real part), checked by quadrature of the kernel.
    const auto h = build_kernel(6, 2);
    for (double l : {0.1, 0.4, 0.7}) {
      const double q = q_symbol(h, 1.0, 2, l);
      const double want = 2.0 * kernel_symbol(h, l, SymbolEvaluator::quadrature) -
                          kernel_symbol(h, 2.0 * l, SymbolEvaluator::quadrature);
      CHECK(q == doctest::Approx(want).epsilon(1e-8));
    }
  }
}

TEST_SUITE("jackson") {
  TEST_CASE("chain and bound over random vectors") {
    const auto dec = decompose("random_psd:12:21");
    Rng rng(3);
    for (auto [m, k] : {std::pair{2, 0}, std::pair{2, 1}, std::pair{3, 1}}) {
      const auto h = build_kernel(default_kernel_order(m), m);
      for (int i = 0; i < 10; ++i) {
        const auto f = rng.complex_vector(12);
        const double w = rng.uniform(dec.lambda_min_positive(), 2.0 * dec.lambda_max());
        const auto rep = jackson_check(dec, f, w, m, k, h);
        CHECK(rep.passed);
        CHECK(rep.best_approx <= rep.q_error + 1e-10);
        CHECK(rep.ratio_best <= rep.ratio * (1.0 + 1e-12));
      }
    }
  }

  TEST_CASE("bandlimited input: E = 0") {
    const auto dec = decompose("path:10");
    const auto h = build_kernel(6, 2);
    const auto f = pw_project(dec, random_vector(10, 2), dec.lambda(4));
    const auto rep = jackson_check(dec, f, dec.lambda(4), 2, 0, h);
    CHECK(rep.best_approx <= 1e-14);
    CHECK(rep.passed);
  }

  TEST_CASE("eigenvector above the band: both sides closed form") {
    const auto dec = decompose("path:10");
    const auto h = build_kernel(6, 2);
    const auto u = dec.eigenvector(8);
    const double l = dec.lambda(8), w = 0.5 * l;
    const auto rep = jackson_check(dec, u, w, 2, 0, h);
    CHECK(rep.best_approx == doctest::Approx(1.0));
    // q(λ) = 0 for λ ≥ ω, so Qu = 0.
    CHECK(rep.q_error == doctest::Approx(1.0));
    CHECK(rep.modulus == doctest::Approx(std::pow(2.0 * std::sin(std::min(0.5 * l / w, kPi / 2)), 2)).epsilon(1e-9));
    CHECK(rep.passed);
  }
}

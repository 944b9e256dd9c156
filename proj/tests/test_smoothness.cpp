#include "support.hpp"

#include <numbers>

#include "oracles.hpp"
#include "pwa/paley_wiener.hpp"
#include "pwa/smoothness.hpp"

using namespace pwa;
using testing::decompose;
using testing::random_vector;

namespace {

// Ω_m(u, s) for an eigenvector with eigenvalue λ: |e^{iτλ} − 1| = 2|sin(τλ/2)|
// peaks at τλ = π.
double eigen_modulus(double lambda, double s, int m) {
  return std::pow(2.0 * std::sin(std::min(0.5 * s * lambda, std::numbers::pi / 2)), m);
}

}  // namespace

TEST_SUITE("smoothness") {
  TEST_CASE("difference matches composed group applications") {
    const auto dec = decompose("random_psd:12:3");
    const auto f = random_vector(12, 1);
    for (double tau : {0.3, -1.1, 4.0}) {
      HilbertVector g = f;
      for (int i = 0; i < 3; ++i) g = schrodinger_group(dec, tau, g) - g;
      CHECK((difference(dec, f, tau, 3) - g).norm() <= 1e-12 * (1.0 + f.norm()));
    }
    CHECK(difference(dec, f, 0.0, 2).norm() == 0.0);
    const auto u = dec.eigenvector(6);
    CHECK(difference(dec, u, 0.7, 1).norm() ==
          doctest::Approx(2.0 * std::abs(std::sin(0.35 * dec.lambda(6)))).epsilon(1e-12));
  }

  TEST_CASE("modulus of an eigenvector") {
    const auto dec = decompose("path:9");
    for (std::size_t j : {1u, 4u, 8u}) {
      const auto u = dec.eigenvector(j);
      const double l = dec.lambda(j);
      for (double s : {0.1 / l, 1.0 / l, 3.0 / l, 10.0 / l})
        for (int m : {1, 2, 3}) CHECK(modulus(dec, u, s, m) == doctest::Approx(eigen_modulus(l, s, m)).epsilon(1e-9));
    }
  }

  TEST_CASE("modulus against a brute-force scan") {
    const auto dec = decompose("random_psd:10:6");
    const auto f = random_vector(10, 3);
    const auto c = spectral_transform(dec, f);
    for (double s : {0.5, 2.0, 9.0}) {
      double brute = 0.0;
      constexpr int kPoints = 200000;
      for (int i = 0; i <= kPoints; ++i) brute = std::max(brute, difference(c, s * i / kPoints, 2).norm());
      const double got = modulus(c, s, 2);
      CHECK(got >= brute * (1.0 - 1e-12));
      CHECK(got <= brute * (1.0 + 1e-6));
    }
  }

  TEST_CASE("modulus basic properties") {
    const auto dec = decompose("cycle:12");
    const auto f = random_vector(12, 5);
    const auto c = spectral_transform(dec, f);
    CHECK(modulus(c, 0.0, 2) == 0.0);
    CHECK(modulus(c, 3.0, 0) == doctest::Approx(f.norm()));
    CHECK(modulus(dec, HilbertVector(12), 1.0, 2) == 0.0);
    std::vector<double> s;
    for (int i = 1; i <= 40; ++i) s.push_back(0.1 * i);
    const auto prof = modulus_profile(c, s, 3);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) CHECK(prof[i] >= prof[i - 1]);
      CHECK(prof[i] <= 8.0 * f.norm() * (1.0 + 1e-12));
      CHECK(prof[i] == doctest::Approx(modulus(c, s[i], 3)).epsilon(1e-9));
    }
    CHECK_ERROR_CODE(modulus_profile(c, {1.0, 0.5}, 1), ErrorCode::InvalidParams);
  }

  TEST_CASE("modulus inequalities") {
    const auto dec = decompose("random_psd:14:2");
    Rng rng(17);
    for (int i = 0; i < 50; ++i) {
      const auto f = rng.complex_vector(14);
      const int m = rng.integer(1, 4);
      const int k = rng.integer(0, m);
      const auto rep = modulus_inequality_checks(dec, f, rng.uniform(0.01, 3.0), rng.uniform(0.5, 5.0), m, k);
      CHECK(rep.passed);
      if (k == 0) CHECK(rep.power_ratio == doctest::Approx(1.0));
    }
    // Eigenvector: Ω_m(u, s) = (2 sin(sλ/2))^m ≤ (sλ)^m.
    const auto u = dec.eigenvector(13);
    const double l = dec.lambda(13), s = 0.4 / l;
    const auto rep = modulus_inequality_checks(dec, u, s, 2.0, 2, 2);
    CHECK(rep.power_lhs == doctest::Approx(eigen_modulus(l, s, 2)).epsilon(1e-9));
    CHECK(rep.power_rhs == doctest::Approx(s * s * l * l).epsilon(1e-9));
    CHECK_ERROR_CODE(modulus_inequality_checks(dec, u, s, 2.0, 1, 2), ErrorCode::InvalidOrder);
  }

  TEST_CASE("Besov norms of an eigenvector in closed form") {
    const auto dec = decompose("diagonal:0.25,2.25,9,30.25");  // D = diag(0.5, 1.5, 3, 5.5)
    const auto u = dec.eigenvector(2);
    const double l = 3.0;
    BesovParams p;
    p.alpha = 0.8;
    p.r = 2;
    for (double q : {1.0, 2.0, 3.5}) {
      p.q = q;
      p.flavor = BesovFlavor::integral_E;
      CHECK(besov_norm(dec, u, p) == doctest::Approx(1.0 + std::pow(std::pow(l, p.alpha * q) / (p.alpha * q), 1.0 / q)));
      p.flavor = BesovFlavor::integral_R;
      CHECK(besov_norm(dec, u, p) == doctest::Approx(1.0 + std::pow(std::pow(l, p.alpha * q) / (p.alpha * q), 1.0 / q)));
      // a = 2: E(u, 2^k) = 1 for 2^k < 3, i.e. k = 0, 1.
      p.flavor = BesovFlavor::discrete_E;
      CHECK(besov_norm(dec, u, p) == doctest::Approx(1.0 + std::pow(1.0 + std::pow(2.0, p.alpha * q), 1.0 / q)));
    }
    p.q = kInfinity;
    p.flavor = BesovFlavor::integral_E;
    CHECK(besov_norm(dec, u, p) == doctest::Approx(1.0 + std::pow(l, p.alpha)));
    p.flavor = BesovFlavor::discrete_R;
    CHECK(besov_norm(dec, u, p) == doctest::Approx(1.0 + std::pow(2.0, p.alpha)));
  }

  TEST_CASE("closed-form integral flavor against a quadrature oracle") {
    const auto dec = decompose("random_psd:12:7");
    for (std::uint64_t s = 0; s < 5; ++s) {
      const auto f = random_vector(12, s);
      BesovParams p;
      p.alpha = 0.7;
      p.q = 1.0;
      CHECK(testing::rel_err(besov_norm(dec, f, p), oracles::integral_e_quadrature(dec, f, 0.7, 1.0)) <= 1e-6);
      p.alpha = 1.5;
      p.q = 2.0;
      CHECK(testing::rel_err(besov_norm(dec, f, p), oracles::integral_e_quadrature(dec, f, 1.5, 2.0)) <= 1e-6);
      p.alpha = 0.9;
      p.q = kInfinity;
      CHECK(testing::rel_err(besov_norm(dec, f, p), oracles::sup_e_sampling(dec, f, 0.9)) <= 1e-6);
    }
  }

  TEST_CASE("every flavor is absolutely homogeneous") {
    const auto dec = decompose("cycle:10");
    const auto f = random_vector(10, 9);
    const Complex c(-2.0, 1.5);
    for (auto fl : {BesovFlavor::integral_E, BesovFlavor::discrete_E, BesovFlavor::integral_R,
                    BesovFlavor::discrete_R, BesovFlavor::k_functional, BesovFlavor::modulus}) {
      BesovParams p;
      p.alpha = 1.2;
      p.q = 2.0;
      p.flavor = fl;
      CHECK(besov_norm(dec, c * f, p) == doctest::Approx(std::abs(c) * besov_norm(dec, f, p)).epsilon(1e-10));
    }
  }

  TEST_CASE("Besov parameter validation") {
    const auto dec = decompose("path:4");
    const auto f = random_vector(4, 1);
    BesovParams p;
    p.alpha = 2.0;
    p.r = 2;
    CHECK_ERROR_CODE(besov_norm(dec, f, p), ErrorCode::InvalidParams);
    p.q = kInfinity;
    CHECK_NOTHROW(besov_norm(dec, f, p));
    p.q = 0.5;
    CHECK_ERROR_CODE(besov_norm(dec, f, p), ErrorCode::InvalidParams);
    p.q = 2.0;
    p.alpha = 1.0;
    p.a = 1.0;
    CHECK_ERROR_CODE(besov_norm(dec, f, p), ErrorCode::InvalidParams);
    CHECK(besov_flavor_from_string("k_functional") == BesovFlavor::k_functional);
    CHECK_ERROR_CODE(besov_flavor_from_string("nope"), ErrorCode::InvalidParams);
  }

  TEST_CASE("K-functional of an eigenvector") {
    const auto dec = decompose("path:6");
    const auto u = dec.eigenvector(3);
    const double l = dec.lambda(3);
    for (int r : {1, 2})
      for (double t : {1e-3, 0.1, 0.9, 5.0, 100.0}) {
        CHECK(k_functional(dec, u, t, r) == doctest::Approx(std::min(1.0, t * std::pow(l, r))).epsilon(1e-9));
        CHECK(k_functional(dec, u, t, r, DomainNorm::graph_norm) ==
              doctest::Approx(std::min(1.0, t * std::hypot(1.0, std::pow(l, r)))).epsilon(1e-9));
      }
    CHECK(k_functional(dec, HilbertVector(6), 1.0, 1) == 0.0);
    CHECK_ERROR_CODE(k_functional(dec, u, 0.0, 1), ErrorCode::NonPositiveT);
  }

  TEST_CASE("K-functional feasible-point bounds, monotonicity, concavity") {
    const auto dec = decompose("random_psd:12:4");
    const auto f = random_vector(12, 8);
    const auto c = spectral_transform(dec, f);
    double prev = 0.0, prev_t = 0.0, prev_slope = kInfinity;
    for (int i = 0; i < 60; ++i) {
      const double t = std::pow(10.0, -4.0 + 0.1 * i);
      const double k = k_functional(c, t, 2);
      CHECK(k <= f.norm() * (1.0 + 1e-12));
      CHECK(k <= t * power_norm(c, 2) * (1.0 + 1e-12));
      CHECK(k >= prev * (1.0 - 1e-10));
      if (i) {
        const double slope = (k - prev) / (t - prev_t);
        CHECK(slope <= prev_slope * (1.0 + 1e-6) + 1e-12);
        prev_slope = slope;
      }
      prev = k;
      prev_t = t;
    }
  }

  TEST_CASE("K-functional Besov norm of an eigenvector") {
    const auto dec = decompose("diagonal:1,4,16");
    const auto u = dec.eigenvector(1);  // λ = 2
    BesovParams p;
    p.alpha = 0.6;
    p.r = 1;
    p.q = 2.0;
    p.flavor = BesovFlavor::k_functional;
    // ∫ (t^{-θ} min(1, tλ^r))^q dt/t = λ^{αq}(1/((1−θ)q) + 1/(θq)), θ = α/r.
    const double th = p.alpha / p.r;
    const double want = 1.0 + std::pow(std::pow(2.0, p.alpha * p.q) * (1.0 / ((1 - th) * p.q) + 1.0 / (th * p.q)), 0.5);
    CHECK(besov_norm(dec, u, p) == doctest::Approx(want).epsilon(2e-3));
    CHECK(k_besov_norm(dec, HilbertVector(3), p) == 0.0);
  }

  TEST_CASE("b-seminorm of an eigenvector on the same log grid") {
    const auto dec = decompose("path:8");
    const auto u = dec.eigenvector(5);
    const double l = dec.lambda(5);
    const double alpha = 1.5;
    const int n = 1, r = 1;
    double want = 0.0;
    const double lo = std::log(0.01 / dec.lambda_max()), hi = std::log(100.0 / dec.lambda_min_positive());
    for (int i = 0; i < 512; ++i) {
      const double s = std::exp(lo + (hi - lo) * i / 511);
      want = std::max(want, std::pow(s, n - alpha) * std::pow(l, n) * eigen_modulus(l, s, r));
    }
    CHECK(besov_seminorm_sup(dec, u, alpha, n, r) == doctest::Approx(want).epsilon(1e-9));
    CHECK(besov_seminorm_sup(dec, HilbertVector(8), alpha, n, r) == 0.0);
    CHECK_ERROR_CODE(besov_seminorm_sup(dec, u, 1.0, 1, 1), ErrorCode::InvalidOrder);
  }

  TEST_CASE("Lemma 1 and Lemma 2 ratios") {
    const auto dec = decompose("random_psd:12:11");
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto f = random_vector(12, s);
      const auto l1 = lemma1_check(dec, f, 1.5, 1, 1);
      const auto l2 = lemma2_check(dec, f, 1.5, 1, 1);
      CHECK(l1.passed);
      CHECK(l2.passed);
      CHECK(std::isfinite(l1.ratio));
      CHECK(l2.band_bound_ratio <= 1.0 + 1e-10);
    }
    // Bandlimited f: sup_s s^α E(f, s) ≤ ω^α‖f‖.
    const double w = dec.lambda(5);
    const auto g = pw_project(dec, random_vector(12, 99), w);
    CHECK(lemma1_check(dec, g, 0.5, 0, 1).lhs <= std::pow(w, 0.5) * g.norm() * (1.0 + 1e-12));
    const auto z = lemma1_check(dec, HilbertVector(12), 0.5, 0, 1);
    CHECK(z.ratio == 0.0);
    CHECK(z.passed);
    CHECK_ERROR_CODE(lemma1_check(dec, g, 2.5, 1, 1), ErrorCode::InvalidOrder);
    CHECK_ERROR_CODE(lemma2_check(dec, g, 1.0, 1, 1), ErrorCode::InvalidOrder);
  }
}

#include "support.hpp"

#include <numbers>

using namespace pwa;
using testing::decompose;
using testing::random_vector;

TEST_SUITE("spectral") {
  TEST_CASE("operator construction errors") {
    CHECK_ERROR_CODE(SymmetricOperator(2, {1, 2, 3, 1}, OperatorKind::raw_L), ErrorCode::NotSymmetric);
    CHECK_ERROR_CODE(SymmetricOperator(2, {1, NAN, NAN, 1}, OperatorKind::raw_L), ErrorCode::NonFinite);
    CHECK_ERROR_CODE(SymmetricOperator(2, {1, 2, 3}, OperatorKind::raw_L), ErrorCode::DimensionMismatch);
    CHECK_ERROR_CODE(HilbertVector(std::vector<Complex>{{1.0, INFINITY}}), ErrorCode::NonFinite);
  }

  TEST_CASE("indefinite input is rejected") {
    CHECK_ERROR_CODE(eigh(SymmetricOperator(2, {0, 1, 1, 0}, OperatorKind::raw_L)), ErrorCode::NotPSD);
    CHECK_ERROR_CODE(eigh(SymmetricOperator(1, {-1e-3}, OperatorKind::raw_D)), ErrorCode::NotPSD);
  }

  TEST_CASE("round-off below zero is clamped") {
    const auto dec = eigh(SymmetricOperator(2, {1, -1, -1, 1 + 1e-14}, OperatorKind::raw_L));
    CHECK(dec.eigenvalues()[0] == 0.0);
  }

  TEST_CASE("cycle, path and complete graphs match their closed-form spectra") {
    for (std::size_t n : {3u, 4u, 7u, 16u}) {
      const auto cyc = decompose("cycle:" + std::to_string(n));
      std::vector<double> want;
      for (std::size_t k = 0; k < n; ++k) want.push_back(2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * k / n));
      std::sort(want.begin(), want.end());
      for (std::size_t k = 0; k < n; ++k) CHECK(cyc.input_eigenvalues()[k] == doctest::Approx(want[k]).epsilon(1e-10));

      const auto pth = decompose("path:" + std::to_string(n));
      for (std::size_t k = 0; k < n; ++k)
        CHECK(pth.input_eigenvalues()[k] ==
              doctest::Approx(2.0 - 2.0 * std::cos(std::numbers::pi * k / n)).epsilon(1e-10));

      const auto cmp = decompose("complete:" + std::to_string(n));
      CHECK(cmp.input_eigenvalues()[0] == 0.0);
      for (std::size_t k = 1; k < n; ++k) CHECK(cmp.input_eigenvalues()[k] == doctest::Approx(double(n)).epsilon(1e-12));
      CHECK(cmp.groups().size() == 2);
    }
  }

  TEST_CASE("D is the square root of L") {
    const auto dec = decompose("diagonal:1,4,9");
    CHECK(dec.eigenvalues() == std::vector<double>{1.0, 2.0, 3.0});
    const auto raw = decompose("diagonal:1,4,9", OperatorKind::raw_D);
    CHECK(raw.eigenvalues() == std::vector<double>{1.0, 4.0, 9.0});
  }

  TEST_CASE("eigenpairs satisfy A u = μ u and U is orthogonal") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const auto op = build_operator(parse_operator_spec("random_psd:12:" + std::to_string(seed)));
      const auto dec = eigh(op);
      for (std::size_t j = 0; j < dec.dim(); ++j) {
        const auto u = dec.eigenvector(j);
        auto r = testing::dense_apply(op, u);
        r -= Complex(dec.input_eigenvalues()[j]) * u;
        CHECK(r.norm() <= 1e-10 * op.max_abs_entry());
        CHECK(dec.eigenvalues()[j] == doctest::Approx(std::sqrt(dec.input_eigenvalues()[j])));
        for (std::size_t k = 0; k <= j; ++k)
          CHECK(std::abs(inner(u, dec.eigenvector(k)) - (j == k ? 1.0 : 0.0)) <= 1e-12);
      }
    }
  }

  TEST_CASE("degenerate eigenvalues are snapped to one value") {
    const auto dec = decompose("cycle:8");
    for (const auto& g : dec.groups())
      for (std::size_t j = g.first; j < g.last; ++j) CHECK(dec.lambda(j) == dec.lambda(g.first));
    CHECK(dec.distinct_eigenvalues().size() == 5);
  }

  TEST_CASE("Plancherel and inversion") {
    const auto dec = decompose("random_psd:10:4");
    for (std::uint64_t s = 0; s < 10; ++s) {
      const auto f = random_vector(10, s);
      const auto c = spectral_transform(dec, f);
      CHECK(c.norm() == doctest::Approx(f.norm()).epsilon(1e-13));
      CHECK((inverse_transform(c) - f).norm() <= 1e-13 * f.norm());
    }
    CHECK_ERROR_CODE(spectral_transform(dec, HilbertVector(3)), ErrorCode::DimensionMismatch);
  }

  TEST_CASE("functional calculus agrees with the dense matrix") {
    const auto op = build_operator(parse_operator_spec("path:9", OperatorKind::raw_D));
    const auto dec = eigh(op);
    const auto f = random_vector(9, 7);
    // D² f twice through the dense matrix.
    const auto want = testing::dense_apply(op, testing::dense_apply(op, f));
    CHECK((power_D(dec, 2.0, f) - want).norm() <= 1e-12 * want.norm());
    CHECK((power_D(dec, 0.0, f) - f).norm() <= 1e-13 * f.norm());
    CHECK_ERROR_CODE(power_D(dec, -1.0, f), ErrorCode::InvalidParams);
  }

  TEST_CASE("Schrödinger group: unitary, group law, growth for complex time") {
    const auto dec = decompose("cycle:10");
    const auto f = random_vector(10, 3);
    for (double t : {-3.0, 0.4, 11.0}) CHECK(schrodinger_group(dec, t, f).norm() == doctest::Approx(f.norm()));
    const auto ab = schrodinger_group(dec, 0.7, schrodinger_group(dec, -1.9, f));
    CHECK((ab - schrodinger_group(dec, -1.2, f)).norm() <= 1e-12 * f.norm());
    // e^{izD} on an eigenvector is multiplication by e^{izλ}.
    const auto u = dec.eigenvector(9);
    const Complex z(0.3, -0.8);
    const auto v = schrodinger_group(dec, z, u);
    CHECK(v.norm() == doctest::Approx(std::exp(0.8 * dec.lambda(9))));
  }

  TEST_CASE("non-finite multipliers are reported") {
    const auto dec = decompose("path:4");
    const auto f = random_vector(4, 1);
    CHECK_ERROR_CODE(apply_multiplier(dec, [](double l) { return Complex(1.0 / l); }, f),
                     ErrorCode::NonFiniteMultiplier);
  }

  TEST_CASE("power_norm equals the norm of D^s f") {
    const auto dec = decompose("random_psd:8:9");
    const auto f = random_vector(8, 11);
    const auto c = spectral_transform(dec, f);
    for (double s : {0.5, 1.0, 3.0}) CHECK(power_norm(c, s) == doctest::Approx(power_D(dec, s, f).norm()).epsilon(1e-12));
  }
}

#pragma once

#include <doctest.h>

#include <cmath>
#include <string>

#include "pwa/errors.hpp"
#include "pwa/operators.hpp"
#include "pwa/random.hpp"
#include "pwa/spectral.hpp"

#define CHECK_ERROR_CODE(expr, expected)                          \
  do {                                                            \
    bool thrown_ = false;                                         \
    try {                                                         \
      (void)(expr);                                               \
    } catch (const pwa::Error& e_) {                              \
      thrown_ = true;                                             \
      CHECK_MESSAGE(e_.code() == (expected), e_.what());          \
    }                                                             \
    CHECK_MESSAGE(thrown_, "no pwa::Error from " #expr);          \
  } while (0)

namespace testing {

inline pwa::SpectralDecomposition decompose(const std::string& spec,
                                            pwa::OperatorKind kind = pwa::OperatorKind::raw_L) {
  return pwa::eigh(pwa::build_operator(pwa::parse_operator_spec(spec, kind)));
}

inline pwa::HilbertVector random_vector(std::size_t n, std::uint64_t seed) {
  pwa::Rng rng(seed);
  return rng.complex_vector(n);
}

// A x with the dense matrix, no spectral machinery.
inline pwa::HilbertVector dense_apply(const pwa::SymmetricOperator& a, const pwa::HilbertVector& x) {
  pwa::HilbertVector y(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) y[i] += a.at(i, j) * x[j];
  return y;
}

inline double rel_err(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

}  // namespace testing

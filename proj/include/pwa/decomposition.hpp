#pragma once

#include <vector>

#include "pwa/smoothness.hpp"
#include "pwa/spectral.hpp"

namespace pwa {

/// f = f_0 + … + f_K with f_0 supported on [0, 1] and f_k on (a^{k−1}, a^k].
/// K is the smallest integer with a^K ≥ λ_N; the bands past K vanish.
struct BandDecomposition {
  double a = 2.0;
  std::vector<HilbertVector> bands;

  int top_index() const { return static_cast<int>(bands.size()) - 1; }
  HilbertVector sum() const;
};

BandDecomposition band_decompose(const SpectralDecomposition& dec, const HilbertVector& f, double a);

/// (Σ_k (a^{kα}‖f_k‖)^q)^{1/q}, or sup_k a^{kα}‖f_k‖ for q = ∞.
double frame_norm(const BandDecomposition& dec, double alpha, double q);

struct EquivalenceReport {
  double frame_norm = 0.0;
  double besov_norm = 0.0;  // discrete_E flavor
  double ratio_lo = 0.0;    // frame_norm / besov_norm
  double ratio_hi = 0.0;    // (‖f‖ + frame_norm) / besov_norm
};

EquivalenceReport equivalence_report(const SpectralDecomposition& dec, const HilbertVector& f, double alpha,
                                     double q, double a);

struct SynthesisReport {
  double lhs = 0.0;       // (Σ_N (a^{Nα} E(f, a^N))^q)^{1/q} (sup for q = ∞)
  double frame = 0.0;     // (Σ_k (a^{kα}‖f_k‖)^q)^{1/q}
  double constant = 0.0;  // 1 / (1 − a^{−α})
  double ratio = 0.0;     // lhs / (constant · frame)
  bool passed = true;
};

/// Bands need not be orthogonal; band k must lie in PW_{a^k}
/// (MembershipViolation otherwise).
SynthesisReport synthesis_check(const SpectralDecomposition& dec, const std::vector<HilbertVector>& bands,
                                double a, double alpha, double q, double tolerance = 1e-10);

}  // namespace pwa

#include "pwa/decomposition.hpp"

#include <algorithm>
#include <cmath>

#include "pwa/errors.hpp"
#include "pwa/paley_wiener.hpp"

namespace pwa {

namespace {

void validate_frame_params(double alpha, double q) {
  if (!(alpha > 0.0)) throw Error(ErrorCode::InvalidParams, "α must be positive");
  if (!(q >= 1.0)) throw Error(ErrorCode::InvalidParams, "q must lie in [1, ∞]");
}

double lq_accumulate(const std::vector<double>& terms, double q) {
  if (std::isinf(q)) return terms.empty() ? 0.0 : *std::max_element(terms.begin(), terms.end());
  double s = 0.0;
  for (double t : terms) s += std::pow(t, q);
  return std::pow(s, 1.0 / q);
}

}  // namespace

HilbertVector BandDecomposition::sum() const {
  if (bands.empty()) return {};
  HilbertVector s(bands.front().size());
  for (const auto& b : bands) s += b;
  return s;
}

BandDecomposition band_decompose(const SpectralDecomposition& dec, const HilbertVector& f, double a) {
  if (!(a > 1.0)) throw Error(ErrorCode::InvalidBase, "dyadic base must exceed 1");
  const auto c = spectral_transform(dec, f);
  const auto& lam = dec.eigenvalues();

  int K = 0;
  while (std::pow(a, K) < dec.lambda_max()) ++K;

  std::vector<std::vector<Complex>> masks(K + 1, std::vector<Complex>(dec.dim()));
  for (std::size_t j = 0; j < dec.dim(); ++j) {
    int k = 0;
    while (std::pow(a, k) < lam[j]) ++k;
    masks[k][j] = c[j];
  }
  BandDecomposition out;
  out.a = a;
  for (auto& m : masks) out.bands.push_back(inverse_transform(SpectralCoefficients(dec, std::move(m))));
  return out;
}

double frame_norm(const BandDecomposition& dec, double alpha, double q) {
  validate_frame_params(alpha, q);
  std::vector<double> terms;
  for (std::size_t k = 0; k < dec.bands.size(); ++k)
    terms.push_back(std::pow(dec.a, static_cast<double>(k) * alpha) * dec.bands[k].norm());
  return lq_accumulate(terms, q);
}

EquivalenceReport equivalence_report(const SpectralDecomposition& dec, const HilbertVector& f, double alpha,
                                     double q, double a) {
  validate_frame_params(alpha, q);
  const double fnorm = f.norm();
  if (fnorm == 0.0) throw Error(ErrorCode::ZeroVector, "equivalence ratio of the zero vector");
  BesovParams p;
  p.alpha = alpha;
  p.q = q;
  p.a = a;
  p.flavor = BesovFlavor::discrete_E;
  p.r = static_cast<int>(std::floor(alpha)) + 1;
  EquivalenceReport rep;
  rep.frame_norm = frame_norm(band_decompose(dec, f, a), alpha, q);
  rep.besov_norm = besov_norm(dec, f, p);
  rep.ratio_lo = rep.frame_norm / rep.besov_norm;
  rep.ratio_hi = (fnorm + rep.frame_norm) / rep.besov_norm;
  return rep;
}

SynthesisReport synthesis_check(const SpectralDecomposition& dec, const std::vector<HilbertVector>& bands,
                                double a, double alpha, double q, double tolerance) {
  if (!(a > 1.0)) throw Error(ErrorCode::InvalidBase, "dyadic base must exceed 1");
  validate_frame_params(alpha, q);
  HilbertVector f(dec.dim());
  std::vector<double> frame_terms;
  double scale = 0.0;
  for (const auto& b : bands) scale += b.norm();
  for (std::size_t k = 0; k < bands.size(); ++k) {
    const double level = std::pow(a, static_cast<double>(k));
    const double bnorm = bands[k].norm();
    if (spectral_tail(dec, bands[k], level) > 1e-12 * scale)
      throw Error(ErrorCode::MembershipViolation, "band " + std::to_string(k) + " is not in PW_{a^k}");
    f += bands[k];
    frame_terms.push_back(std::pow(a, static_cast<double>(k) * alpha) * bnorm);
  }

  std::vector<double> lhs_terms;
  for (int N = 0;; ++N) {
    const double level = std::pow(a, N);
    lhs_terms.push_back(std::pow(a, N * alpha) * best_approx(dec, f, level));
    if (level >= dec.lambda_max() && N + 1 >= static_cast<int>(bands.size())) break;
  }

  SynthesisReport rep;
  rep.lhs = lq_accumulate(lhs_terms, q);
  rep.frame = lq_accumulate(frame_terms, q);
  rep.constant = 1.0 / (1.0 - std::pow(a, -alpha));
  const double rhs = rep.constant * rep.frame;
  rep.ratio = rep.lhs == 0.0 ? 0.0 : (rhs > 0.0 ? rep.lhs / rhs : kInfinity);
  rep.passed = rep.ratio <= 1.0 + tolerance;
  return rep;
}

}  // namespace pwa

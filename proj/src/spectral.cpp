#include "pwa/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pwa/errors.hpp"

namespace pwa {

SymmetricOperator::SymmetricOperator(std::size_t dim, std::vector<double> entries, OperatorKind kind)
    : dim_(dim), entries_(std::move(entries)), kind_(kind) {
  if (dim_ == 0) throw Error(ErrorCode::BadDimension, "operator dimension must be positive");
  if (entries_.size() != dim_ * dim_)
    throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(dim_ * dim_) +
                                                  " entries, got " + std::to_string(entries_.size()));
  for (double v : entries_)
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFinite, "operator has non-finite entries");
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (entries_[i * dim_ + j] != entries_[j * dim_ + i])
        throw Error(ErrorCode::NotSymmetric, "entry (" + std::to_string(i) + "," +
                                                 std::to_string(j) + ") differs from its transpose");
}

double SymmetricOperator::max_abs_entry() const noexcept {
  double m = 0.0;
  for (double v : entries_) m = std::max(m, std::abs(v));
  return m;
}

HilbertVector::HilbertVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
  for (const auto& z : entries_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
      throw Error(ErrorCode::NonFinite, "vector has non-finite entries");
}

HilbertVector HilbertVector::from_real(std::span<const double> values) {
  std::vector<Complex> e(values.begin(), values.end());
  return HilbertVector(std::move(e));
}

HilbertVector HilbertVector::basis(std::size_t n, std::size_t j) {
  HilbertVector v(n);
  v[j] = 1.0;
  return v;
}

double HilbertVector::norm() const {
  // Scaled accumulation, as in BLAS nrm2.
  double scale = 0.0, ssq = 1.0;
  for (const auto& z : entries_) {
    for (double x : {z.real(), z.imag()}) {
      if (x == 0.0) continue;
      const double ax = std::abs(x);
      if (scale < ax) {
        ssq = 1.0 + ssq * (scale / ax) * (scale / ax);
        scale = ax;
      } else {
        ssq += (ax / scale) * (ax / scale);
      }
    }
  }
  return scale * std::sqrt(ssq);
}

HilbertVector& HilbertVector::operator+=(const HilbertVector& other) {
  if (other.size() != size()) throw Error(ErrorCode::DimensionMismatch, "vector sum");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

HilbertVector& HilbertVector::operator-=(const HilbertVector& other) {
  if (other.size() != size()) throw Error(ErrorCode::DimensionMismatch, "vector difference");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

HilbertVector& HilbertVector::operator*=(Complex scale) {
  for (auto& z : entries_) z *= scale;
  return *this;
}

HilbertVector operator+(HilbertVector a, const HilbertVector& b) { return a += b; }
HilbertVector operator-(HilbertVector a, const HilbertVector& b) { return a -= b; }
HilbertVector operator*(Complex scale, HilbertVector v) { return v *= scale; }

Complex inner(const HilbertVector& a, const HilbertVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "inner product");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * std::conj(b[i]);
  return s;
}

namespace {

double frobenius(const std::vector<double>& a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return std::sqrt(s);
}

double off_diagonal(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += a[i * n + j] * a[i * n + j];
  return std::sqrt(s);
}

// Cyclic Jacobi: sweep all (p, q) pairs, annihilating a_pq with the rotation
// from the symmetric Schur decomposition of the 2×2 block.
void jacobi(std::vector<double>& a, std::vector<double>& v, std::size_t n, const EighOptions& opt) {
  v.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  const double target = opt.off_diag_tol * frobenius(a);
  for (int sweep = 0; sweep < opt.max_sweeps; ++sweep) {
    if (off_diagonal(a, n) <= target) return;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::hypot(1.0, theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p], akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k], aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
        a[p * n + q] = a[q * n + p] = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p], vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }
  if (off_diagonal(a, n) > target)
    throw Error(ErrorCode::NoConvergence, "Jacobi did not converge in " +
                                              std::to_string(opt.max_sweeps) + " sweeps");
}

}  // namespace

SpectralDecomposition eigh(const SymmetricOperator& op, const EighOptions& options) {
  const std::size_t n = op.dim();
  std::vector<double> a = op.entries();
  std::vector<double> v;
  jacobi(a, v, n, options);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a[x * n + x] < a[y * n + y]; });

  const double tol_psd = 1e-10 * op.max_abs_entry();
  SpectralDecomposition dec;
  dec.kind_ = op.kind();
  dec.input_eigenvalues_.resize(n);
  dec.eigenvalues_.resize(n);
  dec.vectors_.resize(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    double mu = a[order[j] * n + order[j]];
    if (mu < -tol_psd)
      throw Error(ErrorCode::NotPSD, "eigenvalue " + std::to_string(mu) + " below -" +
                                         std::to_string(tol_psd));
    if (std::abs(mu) <= tol_psd) mu = 0.0;
    dec.input_eigenvalues_[j] = mu;
    dec.eigenvalues_[j] = op.kind() == OperatorKind::raw_L ? std::sqrt(mu) : mu;
    for (std::size_t i = 0; i < n; ++i) dec.vectors_[i * n + j] = v[i * n + order[j]];
  }

  dec.eps_group_ = 1e-9 * std::max(1.0, dec.eigenvalues_.back());
  std::size_t first = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    if (j == n || dec.eigenvalues_[j] - dec.eigenvalues_[first] > dec.eps_group_) {
      dec.groups_.push_back({first, j});
      if (j - first > 1) {
        double mean = 0.0;
        for (std::size_t k = first; k < j; ++k) mean += dec.eigenvalues_[k];
        mean /= static_cast<double>(j - first);
        for (std::size_t k = first; k < j; ++k) dec.eigenvalues_[k] = mean;
      }
      first = j;
    }
  }
  return dec;
}

double SpectralDecomposition::lambda_min_positive() const {
  for (double l : eigenvalues_)
    if (l > 0.0) return l;
  return 0.0;
}

HilbertVector SpectralDecomposition::eigenvector(std::size_t j) const {
  if (j >= dim()) throw Error(ErrorCode::IndexOutOfRange, "eigenvector index");
  HilbertVector u(dim());
  for (std::size_t i = 0; i < dim(); ++i) u[i] = eigenvector_entry(i, j);
  return u;
}

std::vector<double> SpectralDecomposition::distinct_eigenvalues() const {
  std::vector<double> out;
  out.reserve(groups_.size());
  for (const auto& g : groups_) out.push_back(eigenvalues_[g.first]);
  return out;
}

SpectralCoefficients::SpectralCoefficients(const SpectralDecomposition& dec, std::vector<Complex> coeffs)
    : dec_(&dec), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != dec.dim())
    throw Error(ErrorCode::DimensionMismatch, "coefficients do not match decomposition");
}

double SpectralCoefficients::norm() const { return HilbertVector(coeffs_).norm(); }

SpectralCoefficients spectral_transform(const SpectralDecomposition& dec, const HilbertVector& f) {
  const std::size_t n = dec.dim();
  if (f.size() != n)
    throw Error(ErrorCode::DimensionMismatch, "vector of size " + std::to_string(f.size()) +
                                                  " for operator of size " + std::to_string(n));
  std::vector<Complex> c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[j] += dec.eigenvector_entry(i, j) * f[i];
  return SpectralCoefficients(dec, std::move(c));
}

HilbertVector inverse_transform(const SpectralCoefficients& c) {
  const auto& dec = c.decomposition();
  const std::size_t n = dec.dim();
  HilbertVector f(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex s = 0.0;
    for (std::size_t j = 0; j < n; ++j) s += dec.eigenvector_entry(i, j) * c[j];
    f[i] = s;
  }
  return f;
}

SpectralCoefficients apply_multiplier(const SpectralCoefficients& c, const Multiplier& phi) {
  const auto& lam = c.decomposition().eigenvalues();
  std::vector<Complex> out(c.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    const Complex w = phi(lam[j]);
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
      throw Error(ErrorCode::NonFiniteMultiplier, "multiplier is not finite at λ = " +
                                                      std::to_string(lam[j]));
    out[j] = w * c[j];
  }
  return SpectralCoefficients(c.decomposition(), std::move(out));
}

HilbertVector apply_multiplier(const SpectralDecomposition& dec, const Multiplier& phi,
                               const HilbertVector& f) {
  return inverse_transform(apply_multiplier(spectral_transform(dec, f), phi));
}

SpectralCoefficients power_D(const SpectralCoefficients& c, double s) {
  if (!(s >= 0.0)) throw Error(ErrorCode::InvalidParams, "power must be nonnegative");
  return apply_multiplier(c, [s](double l) { return Complex(std::pow(l, s)); });
}

HilbertVector power_D(const SpectralDecomposition& dec, double s, const HilbertVector& f) {
  return inverse_transform(power_D(spectral_transform(dec, f), s));
}

SpectralCoefficients schrodinger_group(const SpectralCoefficients& c, Complex z) {
  const Complex iz = Complex(0.0, 1.0) * z;
  return apply_multiplier(c, [iz](double l) { return std::exp(iz * l); });
}

HilbertVector schrodinger_group(const SpectralDecomposition& dec, Complex z, const HilbertVector& f) {
  return inverse_transform(schrodinger_group(spectral_transform(dec, f), z));
}

double power_norm(const SpectralCoefficients& c, double s) {
  return power_D(c, s).norm();
}

}  // namespace pwa

/*
 * spectral.hpp: finite-dimensional spectral calculus for a self-adjoint
 * positive semidefinite operator D.
 *
 * The operator is given either as L (then D = L^{1/2}) or directly as D, in
 * both cases a dense real symmetric matrix. The eigendecomposition
 *
 *     D = U diag(λ) Uᵀ,   λ_1 ≤ … ≤ λ_N,
 *
 * plays the role of the projection-valued measure: the spectral transform is
 * f ↦ c = Uᵀ f and every function of D acts diagonally on c,
 *
 *     φ(D) f = U diag(φ(λ)) Uᵀ f.
 *
 * Eigenvalues that agree within eps_group = 1e-9·max(1, λ_N) are grouped and
 * snapped to the group mean, so a degenerate eigenvalue is represented by a
 * single exact value.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace pwa {

using Complex = std::complex<double>;

enum class OperatorKind {
  raw_L,  // entries hold L, D = L^{1/2}
  raw_D,  // entries hold D
};

/// Dense real symmetric N×N matrix, stored row-major. Symmetry is checked
/// exactly at construction.
class SymmetricOperator {
 public:
  SymmetricOperator(std::size_t dim, std::vector<double> entries, OperatorKind kind);

  std::size_t dim() const noexcept { return dim_; }
  OperatorKind kind() const noexcept { return kind_; }
  double at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  const std::vector<double>& entries() const noexcept { return entries_; }
  double max_abs_entry() const noexcept;

 private:
  std::size_t dim_;
  std::vector<double> entries_;
  OperatorKind kind_;
};

/// Complex N-vector, element of the Hilbert space.
class HilbertVector {
 public:
  HilbertVector() = default;
  explicit HilbertVector(std::size_t n) : entries_(n) {}
  explicit HilbertVector(std::vector<Complex> entries);

  static HilbertVector from_real(std::span<const double> values);
  static HilbertVector basis(std::size_t n, std::size_t j);

  std::size_t size() const noexcept { return entries_.size(); }
  Complex& operator[](std::size_t i) { return entries_[i]; }
  const Complex& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Complex>& entries() const noexcept { return entries_; }

  double norm() const;

  HilbertVector& operator+=(const HilbertVector& other);
  HilbertVector& operator-=(const HilbertVector& other);
  HilbertVector& operator*=(Complex scale);

 private:
  std::vector<Complex> entries_;
};

HilbertVector operator+(HilbertVector a, const HilbertVector& b);
HilbertVector operator-(HilbertVector a, const HilbertVector& b);
HilbertVector operator*(Complex scale, HilbertVector v);

/// ⟨a, b⟩ = Σ a_i conj(b_i).
Complex inner(const HilbertVector& a, const HilbertVector& b);

struct EighOptions {
  // Jacobi stops once the off-diagonal Frobenius norm is below
  // off_diag_tol · ‖A‖_F.
  double off_diag_tol = 1e-12;
  int max_sweeps = 100;
};

class SpectralDecomposition {
 public:
  std::size_t dim() const noexcept { return eigenvalues_.size(); }
  OperatorKind kind() const noexcept { return kind_; }

  /// Eigenvalues of D, ascending and nonnegative.
  const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }
  /// Eigenvalues of the input matrix (of L when kind = raw_L), clamped.
  const std::vector<double>& input_eigenvalues() const noexcept { return input_eigenvalues_; }
  double lambda(std::size_t j) const { return eigenvalues_[j]; }
  double lambda_max() const { return eigenvalues_.empty() ? 0.0 : eigenvalues_.back(); }
  /// Smallest strictly positive eigenvalue, or 0 when D = 0.
  double lambda_min_positive() const;

  /// u_ij: component i of eigenvector j.
  double eigenvector_entry(std::size_t i, std::size_t j) const { return vectors_[i * dim() + j]; }
  HilbertVector eigenvector(std::size_t j) const;

  /// Index ranges [first, last) of degenerate clusters.
  struct Group {
    std::size_t first;
    std::size_t last;
  };
  const std::vector<Group>& groups() const noexcept { return groups_; }
  /// Distinct eigenvalues, one per group, ascending.
  std::vector<double> distinct_eigenvalues() const;

  double eps_group() const noexcept { return eps_group_; }

 private:
  friend SpectralDecomposition eigh(const SymmetricOperator&, const EighOptions&);

  OperatorKind kind_ = OperatorKind::raw_D;
  std::vector<double> eigenvalues_;
  std::vector<double> input_eigenvalues_;
  std::vector<double> vectors_;  // row-major N×N, column j is u_j
  std::vector<Group> groups_;
  double eps_group_ = 0.0;
};

SpectralDecomposition eigh(const SymmetricOperator& op, const EighOptions& options = {});

/// Image F_D f: c_j = ⟨f, u_j⟩. Holds a non-owning pointer to its
/// decomposition, which must outlive it.
class SpectralCoefficients {
 public:
  SpectralCoefficients(const SpectralDecomposition& dec, std::vector<Complex> coeffs);

  const SpectralDecomposition& decomposition() const noexcept { return *dec_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const std::vector<Complex>& values() const noexcept { return coeffs_; }
  Complex operator[](std::size_t j) const { return coeffs_[j]; }
  double norm() const;

 private:
  const SpectralDecomposition* dec_;
  std::vector<Complex> coeffs_;
};

SpectralCoefficients spectral_transform(const SpectralDecomposition& dec, const HilbertVector& f);
HilbertVector inverse_transform(const SpectralCoefficients& c);

using Multiplier = std::function<Complex(double)>;

/// Coefficients φ(λ_j)·c_j. Throws NonFiniteMultiplier if φ is not finite on
/// the spectrum.
SpectralCoefficients apply_multiplier(const SpectralCoefficients& c, const Multiplier& phi);
HilbertVector apply_multiplier(const SpectralDecomposition& dec, const Multiplier& phi,
                               const HilbertVector& f);

/// D^s f, s ≥ 0 (0^0 = 1).
HilbertVector power_D(const SpectralDecomposition& dec, double s, const HilbertVector& f);
SpectralCoefficients power_D(const SpectralCoefficients& c, double s);

/// e^{izD} f for complex z; unitary for real z.
HilbertVector schrodinger_group(const SpectralDecomposition& dec, Complex z, const HilbertVector& f);
SpectralCoefficients schrodinger_group(const SpectralCoefficients& c, Complex z);

/// ‖D^s f‖ computed from coefficients.
double power_norm(const SpectralCoefficients& c, double s);

}  // namespace pwa

#pragma once

#include <span>
#include <vector>

#include "cohnl/linalg.hpp"

namespace cohnl {

using Dims = std::vector<int>;

/// Raised when a matrix fails a density-matrix or pure-state invariant.
/// The message names the failed invariant.
class InvalidState : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Hermitian, positive semidefinite, unit-trace matrix together with the
/// dimensions of its tensor factors. Immutable once constructed.
class DensityMatrix {
 public:
  /// Validates Hermiticity, trace and positivity. An empty `dims` means a
  /// single system of dimension rows().
  explicit DensityMatrix(ComplexMatrix m, Dims dims = {});

  static DensityMatrix from_pure(const ComplexVector& psi, Dims dims = {});
  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Dims& dims() const { return dims_; }
  int parties() const { return static_cast<int>(dims_.size()); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  /// Same matrix viewed with a different factorisation of dim().
  DensityMatrix with_dims(Dims dims) const;

 private:
  ComplexMatrix m_;
  Dims dims_;
};

/// Normalised state vector with subsystem dimensions.
class PureState {
 public:
  explicit PureState(ComplexVector amplitudes, Dims dims = {});

  int dim() const { return static_cast<int>(amps_.size()); }
  const Dims& dims() const { return dims_; }
  int parties() const { return static_cast<int>(dims_.size()); }
  const ComplexVector& amplitudes() const { return amps_; }

  DensityMatrix density() const;

 private:
  ComplexVector amps_;
  Dims dims_;
};

/// Reduced state on the subsystems listed in `keep` (ascending order of
/// subsystem index in the result, duplicates rejected).
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep);

/// -sum lambda log2 lambda, with 0 log 0 = 0.
double von_neumann_entropy(const DensityMatrix& rho);

/// Tr rho (log2 rho - log2 sigma). Returns +infinity when the support of
/// rho is not contained in the support of sigma.
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Product of the entries of dims; rejects non-positive entries.
int product(std::span<const int> dims);

}  // namespace cohnl

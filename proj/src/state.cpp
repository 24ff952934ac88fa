#include "cohnl/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace cohnl {
namespace {

Dims resolve_dims(Dims dims, Eigen::Index n, const char* who) {
  if (dims.empty()) return Dims{static_cast<int>(n)};
  if (product(dims) != n) {
    std::ostringstream os;
    os << who << ": subsystem dimensions multiply to " << product(dims) << ", expected " << n;
    throw InvalidState(os.str());
  }
  return dims;
}

// Mixed-radix digits of index, most significant subsystem first.
void digits_of(int index, const Dims& dims, std::vector<int>& out) {
  out.resize(dims.size());
  for (int p = static_cast<int>(dims.size()) - 1; p >= 0; --p) {
    out[p] = index % dims[p];
    index /= dims[p];
  }
}

double plogp(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

}  // namespace

int product(std::span<const int> dims) {
  long long acc = 1;
  for (int d : dims) {
    if (d <= 0) throw InvalidArgument("subsystem dimensions must be positive");
    acc *= d;
    if (acc > std::numeric_limits<int>::max()) throw InvalidArgument("dimension overflow");
  }
  return static_cast<int>(acc);
}

DensityMatrix::DensityMatrix(ComplexMatrix m, Dims dims) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols())
    throw InvalidState("density matrix must be square and non-empty");
  require_finite(m_, "density matrix");
  dims_ = resolve_dims(std::move(dims), m_.rows(), "density matrix");

  const double herm = hermiticity_defect(m_);
  if (herm > kHermitianTol) {
    std::ostringstream os;
    os << "density matrix is not Hermitian: max |M - M^dagger| = " << herm;
    throw InvalidState(os.str());
  }
  const Complex tr = m_.trace();
  if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTol) {
    std::ostringstream os;
    os.precision(17);
    os << "density matrix trace is " << tr.real() << (tr.imag() < 0 ? "-" : "+") << std::abs(tr.imag())
       << "i, expected 1";
    throw InvalidState(os.str());
  }
  const RealVector ev = eig_hermitian(m_);
  const double smallest = ev(ev.size() - 1);
  if (smallest < kPsdFloor) {
    std::ostringstream os;
    os.precision(17);
    os << "density matrix is not positive semidefinite: eigenvalue " << smallest;
    throw InvalidState(os.str());
  }
}

DensityMatrix DensityMatrix::from_pure(const ComplexVector& psi, Dims dims) {
  return PureState(psi, std::move(dims)).density();
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim <= 0) throw InvalidArgument("maximally_mixed: dimension must be positive");
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::with_dims(Dims dims) const {
  DensityMatrix copy = *this;
  copy.dims_ = resolve_dims(std::move(dims), m_.rows(), "with_dims");
  return copy;
}

PureState::PureState(ComplexVector amplitudes, Dims dims) : amps_(std::move(amplitudes)) {
  if (amps_.size() == 0) throw InvalidState("pure state must be non-empty");
  require_finite(amps_, "pure state");
  dims_ = resolve_dims(std::move(dims), amps_.size(), "pure state");
  const double norm = amps_.norm();
  if (std::abs(norm - 1.0) > kNormTol) {
    std::ostringstream os;
    os.precision(17);
    os << "pure state norm is " << norm << ", expected 1";
    throw InvalidState(os.str());
  }
}

DensityMatrix PureState::density() const {
  return DensityMatrix(amps_ * amps_.adjoint(), dims_);
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const int> keep) {
  const Dims& dims = rho.dims();
  const int parties = rho.parties();
  if (keep.empty()) throw InvalidArgument("partial_trace: keep must name at least one subsystem");
  std::vector<bool> kept(parties, false);
  for (int k : keep) {
    if (k < 0 || k >= parties)
      throw InvalidArgument("partial_trace: subsystem index " + std::to_string(k) + " out of range");
    if (kept[k]) throw InvalidArgument("partial_trace: duplicate subsystem index " + std::to_string(k));
    kept[k] = true;
  }
  if (static_cast<int>(keep.size()) == parties) return rho;

  Dims kept_dims, traced_dims;
  for (int p = 0; p < parties; ++p) (kept[p] ? kept_dims : traced_dims).push_back(dims[p]);
  const int dk = product(kept_dims);
  const int dt = product(traced_dims);

  // full_index[t][k]: position in the full space of (kept index k, traced index t).
  std::vector<std::vector<int>> full_index(dt, std::vector<int>(dk));
  std::vector<int> digits;
  for (int i = 0; i < rho.dim(); ++i) {
    digits_of(i, dims, digits);
    int k = 0, t = 0;
    for (int p = 0; p < parties; ++p) {
      if (kept[p])
        k = k * dims[p] + digits[p];
      else
        t = t * dims[p] + digits[p];
    }
    full_index[t][k] = i;
  }

  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(dk, dk);
  for (const auto& idx : full_index)
    for (int r = 0; r < dk; ++r)
      for (int c = 0; c < dk; ++c) out(r, c) += m(idx[r], idx[c]);
  // Remove rounding asymmetry so the reduced state passes validation.
  out = 0.5 * (out + out.adjoint()).eval();
  return DensityMatrix(std::move(out), std::move(kept_dims));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<int> keep) {
  return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const RealVector ev = eig_hermitian(rho.matrix());
  double s = 0.0;
  for (double l : ev) s += plogp(l);
  return s;
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw InvalidArgument("relative_entropy: dimension mismatch");
  constexpr double kZeroEigen = 1e-12;
  constexpr double kSupportTol = 1e-10;
  const ComplexMatrix hs = 0.5 * (sigma.matrix() + sigma.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hs);
  const ComplexMatrix v = solver.eigenvectors();
  const RealVector s = solver.eigenvalues();
  const ComplexMatrix r = v.adjoint() * rho.matrix() * v;

  double cross = 0.0;  // Tr rho log2 sigma
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    const double weight = r(k, k).real();
    if (s(k) <= kZeroEigen) {
      if (weight > kSupportTol) return std::numeric_limits<double>::infinity();
      continue;
    }
    cross += weight * std::log2(s(k));
  }
  return std::max(0.0, -von_neumann_entropy(rho) - cross);
}

}  // namespace cohnl

#include "cohnl/coherence.hpp"

#include <algorithm>
#include <sstream>

namespace cohnl {

KrausSet::KrausSet(std::vector<ComplexMatrix> operators) : ops_(std::move(operators)) {
  if (ops_.empty()) throw InvalidArgument("KrausSet: at least one operator is required");
  const auto rows = ops_.front().rows();
  const auto cols = ops_.front().cols();
  if (rows == 0 || cols == 0) throw InvalidArgument("KrausSet: empty operator");
  ComplexMatrix sum = ComplexMatrix::Zero(cols, cols);
  for (std::size_t j = 0; j < ops_.size(); ++j) {
    const auto& k = ops_[j];
    if (k.rows() != rows || k.cols() != cols) {
      std::ostringstream os;
      os << "KrausSet: operator " << j << " has shape " << k.rows() << "x" << k.cols() << ", expected "
         << rows << "x" << cols;
      throw InvalidArgument(os.str());
    }
    require_finite(k, "KrausSet operator " + std::to_string(j));
    sum += k.adjoint() * k;
  }
  const double defect = (sum - ComplexMatrix::Identity(cols, cols)).cwiseAbs().maxCoeff();
  if (defect > kCompletenessTol) {
    std::ostringstream os;
    os << "KrausSet: completeness violated, max |sum K^dagger K - I| = " << defect;
    throw InvalidArgument(os.str());
  }
}

KrausSet KrausSet::unitary(const ComplexMatrix& u) { return KrausSet({u}); }

KrausSet KrausSet::dephasing(int d) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(d);
  for (int i = 0; i < d; ++i) ops.push_back(basis_operator(d, i, i));
  return KrausSet(std::move(ops));
}

double c_l1(const DensityMatrix& rho) {
  const ComplexMatrix& m = rho.matrix();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (i != j) sum += std::abs(m(i, j));
  return sum;
}

DensityMatrix dephase(const DensityMatrix& rho) {
  ComplexMatrix diag = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (int i = 0; i < rho.dim(); ++i) diag(i, i) = rho(i, i).real();
  return DensityMatrix(std::move(diag), rho.dims());
}

double c_rel_entropy(const DensityMatrix& rho) {
  return std::max(0.0, von_neumann_entropy(dephase(rho)) - von_neumann_entropy(rho));
}

CoherenceReport coherence_report(const DensityMatrix& rho) {
  CoherenceReport r;
  r.c_l1 = c_l1(rho);
  r.c_rel_ent = c_rel_entropy(rho);
  r.is_incoherent = r.c_l1 <= kIncoherentTol;
  return r;
}

bool is_incoherent_kraus(const KrausSet& k) {
  for (const auto& op : k.operators()) {
    for (Eigen::Index c = 0; c < op.cols(); ++c) {
      int nonzero = 0;
      for (Eigen::Index r = 0; r < op.rows(); ++r)
        if (std::abs(op(r, c)) > kNonzeroTol) ++nonzero;
      if (nonzero > 1) return false;
    }
  }
  return true;
}

}  // namespace cohnl

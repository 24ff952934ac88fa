#include "cohnl/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace cohnl {

void require_finite(const ComplexMatrix& m, const std::string& what) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        throw InvalidArgument(what + ": non-finite entry at (" + std::to_string(i) + "," +
                              std::to_string(j) + ")");
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

RealVector eig_hermitian(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidArgument("eig_hermitian: matrix is not square");
  require_finite(m, "eig_hermitian");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double defect = hermiticity_defect(m);
  if (defect > kHermitianTol * scale)
    throw InvalidArgument("eig_hermitian: matrix is not Hermitian (defect " +
                          std::to_string(defect) + ")");
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h, Eigen::EigenvaluesOnly);
  RealVector ev = solver.eigenvalues();
  std::sort(ev.data(), ev.data() + ev.size(), std::greater<>());
  return ev;
}

RealVector singular_values(const ComplexMatrix& m) {
  // JacobiSVD already returns singular values in decreasing order.
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues();
}

ComplexMatrix pauli(int n) {
  ComplexMatrix s(2, 2);
  switch (n) {
    case 0: s << 1, 0, 0, 1; break;
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, Complex(0, -1), Complex(0, 1), 0; break;
    case 3: s << 1, 0, 0, -1; break;
    default: throw InvalidArgument("pauli: index must be 0, 1, 2 or 3");
  }
  return s;
}

ComplexMatrix basis_operator(int d, int i, int j) {
  if (i < 0 || j < 0 || i >= d || j >= d) throw InvalidArgument("basis_operator: index out of range");
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  m(i, j) = 1.0;
  return m;
}

}  // namespace cohnl

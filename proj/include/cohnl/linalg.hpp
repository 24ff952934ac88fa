#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace cohnl {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Tolerances shared by every module.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPsdFloor = -1e-9;
inline constexpr double kNormTol = 1e-10;

/// Raised when an input violates a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws InvalidArgument if any entry is NaN or infinite.
void require_finite(const ComplexMatrix& m, const std::string& what);

/// Largest absolute entry of m - m^dagger.
double hermiticity_defect(const ComplexMatrix& m);

/// Kronecker product a (x) b.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigenvalues of a Hermitian matrix, sorted descending.
/// Rejects matrices whose Hermiticity defect exceeds kHermitianTol.
RealVector eig_hermitian(const ComplexMatrix& m);

/// Singular values sorted descending.
RealVector singular_values(const ComplexMatrix& m);

/// Pauli matrix sigma_n for n in {1,2,3}; n = 0 gives the 2x2 identity.
ComplexMatrix pauli(int n);

/// |i><j| in a d-dimensional space.
ComplexMatrix basis_operator(int d, int i, int j);

}  // namespace cohnl

#include <doctest.h>

#include <cmath>
#include <limits>

#include "cohnl/linalg.hpp"
#include "cohnl/sampling.hpp"
#include "cohnl/state.hpp"
#include "test_support.hpp"

using namespace cohnl;
using namespace cohnl::test;

namespace {

ComplexMatrix proj(int dim, int i) {
  const ComplexVector v = ket(dim, i);
  return v * v.adjoint();
}

}  // namespace

TEST_CASE("tensor of small operators") {
  CHECK(max_abs(tensor(ComplexMatrix::Identity(2, 2), ComplexMatrix::Identity(2, 2)) -
                ComplexMatrix::Identity(4, 4)) == 0.0);
  CHECK(max_abs(tensor(pauli(3), pauli(3)) - diag({1, -1, -1, 1})) == 0.0);

  const ComplexMatrix p = tensor(proj(2, 0), proj(2, 1));
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected(1, 1) = 1.0;
  CHECK(max_abs(p - expected) == 0.0);

  const ComplexMatrix rect = tensor(ComplexMatrix::Ones(2, 3), ComplexMatrix::Identity(1, 2));
  CHECK(rect.rows() == 2);
  CHECK(rect.cols() == 6);
}

TEST_CASE("tensor is associative") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const ComplexMatrix a = ginibre(2, 3, rng), b = ginibre(3, 2, rng), c = ginibre(2, 2, rng);
    CHECK(max_abs(tensor(tensor(a, b), c) - tensor(a, tensor(b, c))) < 1e-12);
  }
}

TEST_CASE("pauli matrices") {
  CHECK(max_abs(pauli(0) - ComplexMatrix::Identity(2, 2)) == 0.0);
  for (int n = 1; n <= 3; ++n) {
    CHECK(max_abs(pauli(n) * pauli(n) - ComplexMatrix::Identity(2, 2)) < 1e-15);
    CHECK(std::abs(pauli(n).trace()) < 1e-15);
  }
  CHECK(max_abs(pauli(1) * pauli(2) - Complex(0, 1) * pauli(3)) < 1e-15);
  CHECK_THROWS_AS(pauli(4), InvalidArgument);
}

TEST_CASE("partial trace examples") {
  const auto zz = DensityMatrix::from_pure(ket(4, 0), {2, 2});
  CHECK(max_abs(partial_trace(zz, {0}).matrix() - proj(2, 0)) < 1e-15);

  const auto g = DensityMatrix::from_pure(ghz(3), {2, 2, 2});
  const auto ab = partial_trace(g, {0, 1});
  CHECK(ab.dims() == Dims{2, 2});
  CHECK(max_abs(ab.matrix() - diag({0.5, 0, 0, 0.5})) < 1e-15);

  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto ra = random_density(2, rng), rb = random_density(3, rng);
    const DensityMatrix joint(tensor(ra.matrix(), rb.matrix()), {2, 3});
    CHECK(max_abs(partial_trace(joint, {1}).matrix() - rb.matrix()) < 1e-12);
    CHECK(max_abs(partial_trace(joint, {0}).matrix() - ra.matrix()) < 1e-12);
  }
}

TEST_CASE("partial trace agrees with explicit index contraction") {
  Rng rng(5);
  const Dims dims{2, 3, 2};
  for (int t = 0; t < 20; ++t) {
    const auto rho = random_density(12, rng).with_dims(dims);
    for (int mask = 1; mask < 8; ++mask) {
      std::vector<int> keep;
      std::vector<bool> flags(3);
      for (int p = 0; p < 3; ++p)
        if (mask & (1 << p)) {
          keep.push_back(p);
          flags[p] = true;
        }
      const auto reduced = partial_trace(rho, std::span<const int>(keep));
      CHECK(max_abs(reduced.matrix() - naive_partial_trace(rho.matrix(), dims, flags)) < 1e-12);
      CHECK(std::abs(reduced.matrix().trace() - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("partial trace rejects bad subsystem lists") {
  const auto rho = DensityMatrix::maximally_mixed(4).with_dims({2, 2});
  CHECK_THROWS_AS(partial_trace(rho, {2}), InvalidArgument);
  CHECK_THROWS_AS(partial_trace(rho, {-1}), InvalidArgument);
  CHECK_THROWS_AS(partial_trace(rho, {0, 0}), InvalidArgument);
}

TEST_CASE("eig_hermitian ordering and rejection") {
  const RealVector e = eig_hermitian(pauli(3));
  CHECK(e(0) == doctest::Approx(1.0));
  CHECK(e(1) == doctest::Approx(-1.0));

  const RealVector f = eig_hermitian(diag({3, 1, 2}));
  CHECK(f(0) == doctest::Approx(3.0));
  CHECK(f(1) == doctest::Approx(2.0));
  CHECK(f(2) == doctest::Approx(1.0));

  ComplexMatrix nh = ComplexMatrix::Zero(2, 2);
  nh(0, 1) = 1.0;
  CHECK_THROWS_AS(eig_hermitian(nh), InvalidArgument);
  CHECK_THROWS_AS(eig_hermitian(ComplexMatrix::Zero(2, 3)), InvalidArgument);
}

TEST_CASE("eigenvalues of T^t T lie in [0, 1] for two-qubit states") {
  Rng rng(17);
  for (int t = 0; t < 300; ++t) {
    const auto rho = random_density(4, rng);
    Eigen::Matrix3d tm;
    for (int n = 0; n < 3; ++n)
      for (int m = 0; m < 3; ++m)
        tm(n, m) = (rho.matrix() * tensor(pauli(n + 1), pauli(m + 1))).trace().real();
    const RealVector ev = eig_hermitian((tm.transpose() * tm).cast<Complex>());
    CHECK(ev(0) <= 1.0 + 1e-9);
    CHECK(ev(2) >= -1e-12);
  }
}

TEST_CASE("spectrum is invariant under unitary conjugation") {
  Rng rng(19);
  for (int d = 2; d <= 6; ++d)
    for (int t = 0; t < 20; ++t) {
      const auto rho = random_density(d, rng);
      const ComplexMatrix u = random_unitary(d, rng);
      const RealVector a = eig_hermitian(rho.matrix());
      const RealVector b = eig_hermitian(u * rho.matrix() * u.adjoint());
      CHECK((a - b).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("singular values") {
  const RealVector s = singular_values(ComplexMatrix::Identity(3, 3));
  CHECK(s.size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(s(i) == doctest::Approx(1.0));

  const RealVector t = singular_values(diag({2, -3}));
  CHECK(t(0) == doctest::Approx(3.0));
  CHECK(t(1) == doctest::Approx(2.0));

  Rng rng(23);
  for (int r = 1; r <= 4; ++r)
    for (int c = 1; c <= 9; c += 2) {
      const ComplexMatrix m = ginibre(r, c, rng);
      const RealVector sv = singular_values(m);
      const RealVector ev = eig_hermitian(m.adjoint() * m);
      for (int i = 0; i < sv.size(); ++i) CHECK(std::abs(sv(i) - std::sqrt(std::max(ev(i), 0.0))) < 1e-9);
    }
}

TEST_CASE("entropies") {
  CHECK(von_neumann_entropy(DensityMatrix(proj(2, 0))) == doctest::Approx(0.0));
  CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(2)) == doctest::Approx(1.0));
  CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(8)) == doctest::Approx(3.0));

  Rng rng(29);
  for (int t = 0; t < 50; ++t) {
    const auto rho = random_density(3, rng);
    CHECK(std::abs(relative_entropy(rho, rho)) < 1e-9);
    CHECK(relative_entropy(rho, DensityMatrix::maximally_mixed(3)) >= 0.0);
  }

  const double inf = relative_entropy(DensityMatrix::maximally_mixed(2), DensityMatrix(proj(2, 0)));
  CHECK(inf == std::numeric_limits<double>::infinity());
  CHECK(relative_entropy(DensityMatrix(proj(2, 0)), DensityMatrix::maximally_mixed(2)) == doctest::Approx(1.0));
}

TEST_CASE("density matrix validation names the failed invariant") {
  const auto message = [](const ComplexMatrix& m) {
    try {
      DensityMatrix rho(m);
    } catch (const InvalidState& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(diag({0.5, 0.6})).find("trace") != std::string::npos);
  ComplexMatrix nh = diag({0.5, 0.5});
  nh(0, 1) = 0.3;
  CHECK(message(nh).find("Hermitian") != std::string::npos);
  const std::string psd = message(diag({1.5, -0.5}));
  CHECK(psd.find("semidefinite") != std::string::npos);
  CHECK(psd.find("eigenvalue -0.") != std::string::npos);

  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix::Identity(2, 3)), InvalidState);
  CHECK_THROWS_AS(DensityMatrix(diag({0.5, 0.5}), {3}), InvalidState);
  ComplexMatrix nan = diag({0.5, 0.5});
  nan(0, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(DensityMatrix{nan}, InvalidArgument);
}

TEST_CASE("pure states") {
  CHECK_THROWS_AS(PureState(ComplexVector::Ones(2)), InvalidState);
  const PureState psi(ghz(3), {2, 2, 2});
  CHECK(psi.parties() == 3);
  const auto rho = psi.density();
  CHECK(rho.dims() == Dims{2, 2, 2});
  CHECK(std::abs(rho(0, 7) - Complex(0.5, 0)) < 1e-15);
}

TEST_CASE("with_dims and product") {
  const auto rho = DensityMatrix::maximally_mixed(8);
  CHECK(rho.parties() == 1);
  CHECK(rho.with_dims({2, 4}).parties() == 2);
  CHECK_THROWS_AS(rho.with_dims({3, 3}), InvalidArgument);
  const std::vector<int> dims{2, 3, 4};
  CHECK(product(dims) == 24);
  const std::vector<int> bad{2, 0};
  CHECK_THROWS_AS(product(bad), InvalidArgument);
}

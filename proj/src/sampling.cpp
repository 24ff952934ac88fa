#include "cohnl/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cohnl {

ComplexMatrix ginibre(int d, int k, Rng& rng) {
  ComplexMatrix g(d, k);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < k; ++j) g(i, j) = rng.complex_normal();
  return g;
}

DensityMatrix random_density(int d, Rng& rng, int rank) {
  if (d <= 0) throw InvalidArgument("random_density: dimension must be positive");
  if (rank <= 0) rank = d;
  const ComplexMatrix g = ginibre(d, rank, rng);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityMatrix(std::move(m));
}

PureState random_pure(int d, Rng& rng) {
  ComplexVector v = ginibre(d, 1, rng).col(0);
  v.normalize();
  return PureState(std::move(v));
}

ComplexMatrix random_unitary(int d, Rng& rng) {
  const ComplexMatrix g = ginibre(d, d, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

KrausSet random_incoherent_kraus(int d, Rng& rng) {
  const double p = rng.uniform();
  std::vector<ComplexMatrix> ops;

  // Phased partial permutations: column c of K_j has one entry at row perm_j(c)
  // with weights normalised across j, so sum K^dagger K is diagonal and equal to I.
  const int m = 1 + rng.index(3);
  std::vector<std::vector<int>> perms(m, std::vector<int>(d));
  ComplexMatrix weights(m, d);
  for (int j = 0; j < m; ++j) {
    std::iota(perms[j].begin(), perms[j].end(), 0);
    for (int i = d - 1; i > 0; --i) std::swap(perms[j][i], perms[j][rng.index(i + 1)]);
    for (int c = 0; c < d; ++c) weights(j, c) = rng.complex_normal();
  }
  for (int c = 0; c < d; ++c) weights.col(c).normalize();
  for (int j = 0; j < m; ++j) {
    ComplexMatrix k = ComplexMatrix::Zero(d, d);
    for (int c = 0; c < d; ++c) k(perms[j][c], c) = std::sqrt(p) * weights(j, c);
    ops.push_back(std::move(k));
  }

  // Measure-and-prepare: rank-one K_j = |r_j><w_j| has all of its support in row r_j.
  const ComplexMatrix w = random_unitary(d, rng);
  for (int j = 0; j < d; ++j) {
    ComplexMatrix k = ComplexMatrix::Zero(d, d);
    k.row(rng.index(d)) = std::sqrt(1.0 - p) * w.col(j).adjoint();
    ops.push_back(std::move(k));
  }
  return KrausSet(std::move(ops));
}

}  // namespace cohnl

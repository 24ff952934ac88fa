#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cohnl/nonlocality.hpp"

namespace cohnl {

double c_gme_pure(const PureState& psi) {
  const int n = psi.parties();
  if (n < 3) throw InvalidArgument("c_gme_pure: at least three subsystems are required");
  const DensityMatrix rho = psi.density();
  double best = std::numeric_limits<double>::infinity();
  // Each bipartition once: subsets that contain party 0, excluding the full set.
  const unsigned full = (1u << n) - 1u;
  for (unsigned mask = 1; mask < full; mask += 2) {
    std::vector<int> keep;
    for (int p = 0; p < n; ++p)
      if (mask & (1u << p)) keep.push_back(p);
    const DensityMatrix reduced = partial_trace(rho, keep);
    const double purity = reduced.matrix().squaredNorm();
    best = std::min(best, std::sqrt(std::max(0.0, 2.0 * (1.0 - purity))));
  }
  return best;
}

double c_gme_pure(const DensityMatrix& rho) {
  const double purity = rho.matrix().squaredNorm();
  if (purity < 1.0 - 1e-10) {
    std::ostringstream os;
    os << "c_gme_pure: state is mixed (purity " << purity << ")";
    throw InvalidArgument(os.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(rho.matrix());
  ComplexVector psi = solver.eigenvectors().col(rho.dim() - 1);
  psi.normalize();
  return c_gme_pure(PureState(std::move(psi), rho.dims()));
}

double c_gme_converted(const DensityMatrix& rho_s, int n) {
  if (n < 3) throw InvalidArgument("c_gme_converted: at least three parties are required");
  if (rho_s.parties() != 1) throw InvalidArgument("c_gme_converted: source must be a single qudit");
  if (rho_s.dim() == 2) return 2.0 * std::abs(rho_s(0, 1));
  const double purity = rho_s.matrix().squaredNorm();
  if (purity < 1.0 - 1e-10)
    throw InvalidArgument("c_gme_converted: closed form needs a pure source for d > 2");
  double pairs = 0.0;
  for (int k = 0; k < rho_s.dim(); ++k)
    for (int l = k + 1; l < rho_s.dim(); ++l) pairs += rho_s(k, k).real() * rho_s(l, l).real();
  return 2.0 * std::sqrt(std::max(0.0, pairs));
}

}  // namespace cohnl

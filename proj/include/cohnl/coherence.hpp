#pragma once

#include <vector>

#include "cohnl/state.hpp"

namespace cohnl {

inline constexpr double kCompletenessTol = 1e-9;
inline constexpr double kNonzeroTol = 1e-10;
inline constexpr double kIncoherentTol = 1e-10;

/// Kraus representation of a channel. All operators share one shape and
/// satisfy sum K^dagger K = I within kCompletenessTol.
class KrausSet {
 public:
  explicit KrausSet(std::vector<ComplexMatrix> operators);

  /// Single-operator channel rho -> U rho U^dagger.
  static KrausSet unitary(const ComplexMatrix& u);
  /// Full dephasing {|i><i|}.
  static KrausSet dephasing(int d);

  const std::vector<ComplexMatrix>& operators() const { return ops_; }
  int in_dim() const { return static_cast<int>(ops_.front().cols()); }
  int out_dim() const { return static_cast<int>(ops_.front().rows()); }
  std::size_t size() const { return ops_.size(); }

 private:
  std::vector<ComplexMatrix> ops_;
};

struct CoherenceReport {
  double c_l1 = 0.0;
  double c_rel_ent = 0.0;
  bool is_incoherent = true;
};

/// l1-norm coherence: sum of |rho_ij| over i != j.
double c_l1(const DensityMatrix& rho);

/// Relative entropy of coherence, S(dephase(rho)) - S(rho).
double c_rel_entropy(const DensityMatrix& rho);

/// Zeroes every off-diagonal entry.
DensityMatrix dephase(const DensityMatrix& rho);

CoherenceReport coherence_report(const DensityMatrix& rho);

/// True iff every operator has at most one entry with |entry| > kNonzeroTol
/// in each column, i.e. maps basis states to (unnormalised) basis states.
bool is_incoherent_kraus(const KrausSet& k);

}  // namespace cohnl

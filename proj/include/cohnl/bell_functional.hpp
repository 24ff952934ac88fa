#pragma once

#include <vector>

#include "cohnl/nonlocality.hpp"

namespace cohnl {

/// All Pauli expectation values Tr(rho sigma_mu1 (x) ... (x) sigma_mun),
/// mu in {0,1,2,3}, of an n-qubit state.
class PauliExpectations {
 public:
  explicit PauliExpectations(const DensityMatrix& rho);

  int qubits() const { return qubits_; }
  /// Flat index sum mu_p 4^(n-1-p).
  double at(std::size_t flat) const { return values_[flat]; }

 private:
  int qubits_;
  std::vector<double> values_;
};

/// Linear combination of correlators. Each term lists, per party, either a
/// setting slot or -1 for the identity.
struct BellTerm {
  double coeff;
  std::vector<int> slots;
};

class BellFunctional {
 public:
  BellFunctional(int parties, std::vector<int> party_of_slot, std::vector<BellTerm> terms);

  static BellFunctional chsh();
  static BellFunctional svetlichny();
  static BellFunctional t_inequality();
  static BellFunctional ns_inequality();

  int parties() const { return parties_; }
  int slots() const { return static_cast<int>(party_of_slot_.size()); }

  /// Value on raw Bloch vectors (not required to be unit).
  double evaluate(const PauliExpectations& e, const std::vector<Vec3>& settings) const;
  /// The functional is affine in each slot: value = offset + gradient . settings[slot].
  Vec3 gradient(const PauliExpectations& e, std::vector<Vec3> settings, int slot) const;

 private:
  int parties_;
  std::vector<int> party_of_slot_;
  std::vector<BellTerm> terms_;
};

/// Maximises f over unit settings: seeded initial points on a theta/phi grid,
/// then one-slot-at-a-time updates s <- gradient / |gradient|.
struct OracleResult {
  double value;
  std::vector<Vec3> settings;
};
OracleResult maximize(const BellFunctional& f, const DensityMatrix& rho, const OracleOptions& opts);

}  // namespace cohnl

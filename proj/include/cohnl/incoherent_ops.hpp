#pragma once

#include "cohnl/coherence.hpp"

namespace cohnl {

/// Largest d^n accepted by the fan-out constructors.
inline constexpr int kMaxConversionDim = 10000;

/// Source qudit dimension and total party count (source plus n-1 ancillas
/// prepared in |0>).
struct ConversionSpec {
  int d = 2;
  int n = 2;

  /// Validates d >= 2, n >= 2 and d^n <= kMaxConversionDim; returns d^n.
  int total_dim() const;
};

/// Two-qubit CNOT, |i,j> -> |i, i+j mod 2>.
ComplexMatrix cnot();

/// Image of basis index |i, j_1, ..., j_{n-1}> under the fan-out map
/// |i, i+j_1 mod d, ..., i+j_{n-1} mod d>.
int fanout_index(const ConversionSpec& spec, int index);

/// Dense fan-out permutation unitary on (C^d)^{(x) n}.
ComplexMatrix fanout_unitary(const ConversionSpec& spec);

/// GHZ-type encoding sum_ij rho_ij |i...i><j...j| computed in closed form.
/// In debug builds the result is also checked against explicit conjugation.
DensityMatrix convert(const DensityMatrix& rho_s, const ConversionSpec& spec);

/// U (rho_s (x) |0...0><0...0|) U^dagger computed with the dense fan-out
/// unitary. Independent of convert().
DensityMatrix convert_by_conjugation(const DensityMatrix& rho_s, const ConversionSpec& spec);

/// Pure-state version: sum_i psi_i |i...i>.
PureState convert(const PureState& psi, const ConversionSpec& spec);

/// rho (x) |0><0|^{(x) (n-1)} with per-party dims [d, ..., d].
DensityMatrix append_ancillas(const DensityMatrix& rho_s, const ConversionSpec& spec);

/// sum_j K_j rho K_j^dagger. Output keeps rho's subsystem dims when the
/// channel is dimension preserving.
DensityMatrix apply_channel(const KrausSet& k, const DensityMatrix& rho);

}  // namespace cohnl

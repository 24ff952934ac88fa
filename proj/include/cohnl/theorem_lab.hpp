#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "cohnl/nonlocality.hpp"

namespace cohnl {

/// Outcome of one verification campaign. A campaign passes iff failures == 0;
/// worst_residual is the largest deviation seen by any closed-form or
/// inequality check (inequalities contribute only their excess).
struct CampaignResult {
  std::string theorem_id;
  int trials = 0;
  int failures = 0;
  double worst_residual = 0.0;
  std::vector<std::string> artifacts;
  /// Failure descriptions and boundary points excluded from pass/fail.
  std::vector<std::string> notes;
  /// Named scalar outputs (thresholds, fixed-example values), in emission order.
  std::vector<std::pair<std::string, double>> values;

  bool passed() const { return failures == 0; }
};

struct CampaignOptions {
  int trials = 1000;
  std::uint64_t seed = 7;
  OracleOptions oracle{};
};

/// Qubit source, CNOT conversion: M = 1 + 4|rho_01|^2, M > 1 iff coherent,
/// and the CHSH oracle agrees with 2 sqrt(M).
CampaignResult verify_chsh_conversion(const CampaignOptions& opts);

/// Qudit source, projected CHSH on the fan-out image: the violation flips
/// exactly at |rho_ij| = sqrt(1 - (rho_ii + rho_jj)^2) / 2, and for sources
/// supported on two basis states violation is equivalent to coherence.
CampaignResult verify_projected_chsh(const CampaignOptions& opts, int d);

/// Relative-entropy coherence never increases under random incoherent
/// channels on rho_s (x) |0><0|, and C_r <= log2(d) C_l1.
CampaignResult verify_relative_entropy_chain(const CampaignOptions& opts);

/// GME concurrence of the three-party fan-out image of pure qudit sources,
/// the GHZ special case and the l1 bound that rules out reaching |W>.
CampaignResult verify_gme_conversion(const CampaignOptions& opts, int d);

/// lambda_1 = sqrt2 C_l1 and the two-sided certification of the four
/// coherence thresholds (Svetlichny, T, NS, GME).
CampaignResult verify_tripartite_thresholds(const CampaignOptions& opts);

/// Every campaign above with the default dimensions.
std::vector<CampaignResult> verify_all(const CampaignOptions& opts);

/// sqrt(1 - s^2) / 2 where s = rho_ii + rho_jj.
double pair_threshold(double diag_sum);

/// Minimum l1 coherence of the source for each certificate.
std::vector<std::pair<std::string, double>> coherence_thresholds();

/// One (a, b) point of the rho_00 = rho_11 = 1/2 slice with rho_01 = a + ib.
struct SurfacePoint {
  double a = 0.0, b = 0.0;
  double c_l1 = 0.0;
  double t_value = 0.0;          // reference T settings
  double t_value_swapped = 0.0;  // Z0 and Z1 exchanged
  bool t_violated = false;
  double ns_max = 0.0;
  bool ns_violated = false;
};

/// Evaluates the T expression and the NS oracle over a grid of
/// a, b in [-1/2, 1/2] restricted to a^2 + b^2 <= 1/4.
std::vector<SurfacePoint> tripartite_surface(int a_steps, int b_steps, const OracleOptions& oracle);

/// Writes the surface as CSV (with a commented header) to `csv` and checks
/// the T closed form and threshold flags on every row.
CampaignResult tripartite_surface_campaign(int a_steps, int b_steps, const CampaignOptions& opts, std::ostream& csv);

/// Direct minimisation of S(rho || diag(p, 1-p)) over p: uniform grid then
/// golden-section refinement. Qubit input only.
double c_rel_entropy_oracle(const DensityMatrix& rho, int grid = 10000);

}  // namespace cohnl

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cohnl/state.hpp"

namespace cohnl {

/// Strict-violation slack: a certificate fires only when value > bound + kViolationTol.
inline constexpr double kViolationTol = 1e-9;

using Vec3 = Eigen::Vector3d;

/// Unit Bloch vector a defining the dichotomic observable a . sigma.
class MeasurementSetting {
 public:
  /// Rejects vectors whose norm differs from 1 by more than 1e-10.
  explicit MeasurementSetting(const Vec3& bloch);
  static MeasurementSetting from_angles(double theta, double phi);
  static MeasurementSetting x() { return MeasurementSetting(Vec3::UnitX()); }
  static MeasurementSetting y() { return MeasurementSetting(Vec3::UnitY()); }
  static MeasurementSetting z() { return MeasurementSetting(Vec3::UnitZ()); }

  const Vec3& bloch() const { return bloch_; }
  /// Polar angle in [0, pi] and azimuth in (-pi, pi].
  std::array<double, 2> angles() const;
  ComplexMatrix observable() const;

 private:
  Vec3 bloch_;
};

/// Pauli correlations of a two-qubit (order 2, t_nm) or three-qubit
/// (order 3, m_ijk) state, indices 0..2 standing for sigma_1..sigma_3.
struct CorrelationTensor {
  int order = 2;
  std::vector<double> entries;  // row-major, 9 or 27 values

  double operator()(int n, int m) const { return entries[3 * n + m]; }
  double operator()(int i, int j, int k) const { return entries[9 * i + 3 * j + k]; }
  Eigen::Matrix3d matrix() const;
  /// 3 x 9 matrix with rows indexed by j and columns by the pair (i, k).
  Eigen::MatrixXd unfolding() const;
};

/// Basis-pair projector P = P_A (x) P_B with P_A = (|e_alpha>, |e_beta>)^t
/// and P_B = (|e_gamma>, |e_lambda>)^t on C^d (x) C^d.
struct ProjectorPair {
  int alpha = 0, beta = 1, gamma = 0, lambda = 1;
  int d = 2;

  void validate() const;
  /// 4 x d^2 matrix.
  ComplexMatrix matrix() const;
};

struct CertificateReport {
  std::string name;
  double value = 0.0;
  double bound = 0.0;
  bool violated = false;
  std::vector<MeasurementSetting> settings;
  /// Set when the certificate could not be evaluated as asked
  /// (e.g. zero projection weight).
  std::optional<std::string> note;
};

/// Builds a report whose violated flag is value > bound + kViolationTol.
CertificateReport make_report(std::string name, double value, double bound,
                              std::vector<MeasurementSetting> settings = {});

/// Coordinate-ascent search over measurement settings.
struct OracleOptions {
  int resolution = 16;   // theta/phi grid steps used for initial points
  int restarts = 3;
  int max_sweeps = 500;
  double tolerance = 1e-14;  // stop when a sweep gains less than this
  std::uint64_t seed = 0;
};

// --- two qubits -----------------------------------------------------------

CorrelationTensor correlation_matrix(const DensityMatrix& rho);

/// Sum of the two largest eigenvalues of T^t T.
double horodecki_M(const DensityMatrix& rho);

struct ChshSettings {
  MeasurementSetting a1, a2, b1, b2;
};
/// Optimal settings for the Phi+ Bell state.
ChshSettings standard_chsh_settings();

/// Tr(rho B) with B = A1 B1 + A1 B2 + A2 B1 - A2 B2.
double chsh_value(const DensityMatrix& rho, const ChshSettings& s);
/// 2 sqrt(M(rho)).
double chsh_max(const DensityMatrix& rho);
CertificateReport chsh_certificate(const DensityMatrix& rho);
CertificateReport chsh_grid_oracle(const DensityMatrix& rho, const OracleOptions& opts = {});

/// 2 Tr[P rho P^dagger] sqrt(M(rho~)) on a d (x) d state.
CertificateReport projected_chsh(const DensityMatrix& rho, const ProjectorPair& p);

/// Best basis pair (i, j) of a source qudit for the projected-CHSH
/// conversion, with |rho_ij| compared against sqrt(1 - (rho_ii + rho_jj)^2) / 2.
struct PairWitness {
  int i = 0, j = 1;
  double coherence = 0.0;  // |rho_ij|
  double threshold = 0.0;
  bool holds = false;      // coherence > threshold (strict, kViolationTol slack)
  CertificateReport report;
};
PairWitness theorem2_witness(const DensityMatrix& rho_s);

// --- three qubits ---------------------------------------------------------

CorrelationTensor correlation_tensor3(const DensityMatrix& rho);

/// Largest singular value of the 3 x 9 unfolding of m_ijk.
double svetlichny_lambda1(const DensityMatrix& rho);

struct SvetlichnySettings {
  MeasurementSetting a1, a2, b1, b2, c1, c2;
};

/// <S> with S = A1 (B1C1 + B1C2 + B2C1 - B2C2) + A2 (B1C1 - B1C2 - B2C1 - B2C2).
double svetlichny_value(const DensityMatrix& rho, const SvetlichnySettings& s);
CertificateReport svetlichny_oracle(const DensityMatrix& rho, const OracleOptions& opts = {});
/// Value 4 lambda_1 against bound 4. Flags a violation only when the
/// oracle also finds settings with <S> > 4.
CertificateReport svetlichny_bound(const DensityMatrix& rho, const OracleOptions& opts = {});

/// Two settings per party for the T and NS expressions.
struct TripartiteSettings {
  MeasurementSetting x0, x1, y0, y1, z0, z1;
};

/// X0=Y0=sigma_3, X1=Y1=sigma_1, Z0=(sigma_3 - sigma_1)/sqrt2, Z1=(sigma_3 + sigma_1)/sqrt2.
/// With swap_z the two Z settings are exchanged.
TripartiteSettings reference_t_settings(bool swap_z = false);

/// <X0Y0> + <X0Z0> + <Y0Z1> - <X1Y1Z0> + <X1Y1Z1>
double t_value(const DensityMatrix& rho, const TripartiteSettings& s);
/// <X0Y1> + <X1Z0> + <Y0Z1> + <X0Y0Z0> - <X1Y1Z1>
double ns_value(const DensityMatrix& rho, const TripartiteSettings& s);

CertificateReport t_certificate(const DensityMatrix& rho, const TripartiteSettings& s);
CertificateReport ns_oracle(const DensityMatrix& rho, const OracleOptions& opts = {});

// --- genuine multipartite entanglement ------------------------------------

/// min over bipartitions {C, C'} of sqrt(2 (1 - Tr rho_C^2)). Needs >= 3 parties.
double c_gme_pure(const PureState& psi);
/// Same, for a rank-one density matrix; mixed input is rejected.
double c_gme_pure(const DensityMatrix& rho);

/// GME concurrence of convert(rho_s, {d, n}) in closed form: 2|rho_01| for a
/// qubit source of any rank, 2 sqrt(sum_{k<l} rho_kk rho_ll) for a pure qudit.
double c_gme_converted(const DensityMatrix& rho_s, int n);

}  // namespace cohnl

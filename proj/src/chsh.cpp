#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cohnl/bell_functional.hpp"
#include "cohnl/incoherent_ops.hpp"
#include "cohnl/nonlocality.hpp"

namespace cohnl {

MeasurementSetting::MeasurementSetting(const Vec3& bloch) : bloch_(bloch) {
  if (!bloch_.allFinite()) throw InvalidArgument("measurement setting has non-finite components");
  const double norm = bloch_.norm();
  if (std::abs(norm - 1.0) > 1e-10) {
    std::ostringstream os;
    os << "measurement setting is not a unit vector (norm " << norm << ")";
    throw InvalidArgument(os.str());
  }
}

MeasurementSetting MeasurementSetting::from_angles(double theta, double phi) {
  return MeasurementSetting(
      Vec3(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)));
}

std::array<double, 2> MeasurementSetting::angles() const {
  const double theta = std::acos(std::clamp(bloch_(2), -1.0, 1.0));
  double phi = std::atan2(bloch_(1), bloch_(0));
  if (phi <= -std::numbers::pi) phi += 2.0 * std::numbers::pi;
  return {theta, phi};
}

ComplexMatrix MeasurementSetting::observable() const {
  return bloch_(0) * pauli(1) + bloch_(1) * pauli(2) + bloch_(2) * pauli(3);
}

Eigen::Matrix3d CorrelationTensor::matrix() const {
  if (order != 2) throw InvalidArgument("CorrelationTensor::matrix: order-2 tensor required");
  Eigen::Matrix3d t;
  for (int n = 0; n < 3; ++n)
    for (int m = 0; m < 3; ++m) t(n, m) = (*this)(n, m);
  return t;
}

Eigen::MatrixXd CorrelationTensor::unfolding() const {
  if (order != 3) throw InvalidArgument("CorrelationTensor::unfolding: order-3 tensor required");
  Eigen::MatrixXd u(3, 9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) u(j, 3 * i + k) = (*this)(i, j, k);
  return u;
}

void ProjectorPair::validate() const {
  const auto in_range = [this](int v) { return v >= 0 && v < d; };
  if (d < 2) throw InvalidArgument("ProjectorPair: d must be at least 2");
  if (!in_range(alpha) || !in_range(beta) || !in_range(gamma) || !in_range(lambda))
    throw InvalidArgument("ProjectorPair: basis index out of range");
  if (alpha == beta || gamma == lambda)
    throw InvalidArgument("ProjectorPair: each side needs two distinct basis vectors");
}

ComplexMatrix ProjectorPair::matrix() const {
  validate();
  ComplexMatrix pa = ComplexMatrix::Zero(2, d);
  ComplexMatrix pb = ComplexMatrix::Zero(2, d);
  pa(0, alpha) = pa(1, beta) = 1.0;
  pb(0, gamma) = pb(1, lambda) = 1.0;
  return tensor(pa, pb);
}

CertificateReport make_report(std::string name, double value, double bound,
                              std::vector<MeasurementSetting> settings) {
  CertificateReport r;
  r.name = std::move(name);
  r.value = value;
  r.bound = bound;
  r.violated = value > bound + kViolationTol;
  r.settings = std::move(settings);
  return r;
}

namespace {

void require_qubits(const DensityMatrix& rho, int n, const char* who) {
  if (rho.parties() != n || std::any_of(rho.dims().begin(), rho.dims().end(), [](int d) { return d != 2; })) {
    std::ostringstream os;
    os << who << ": expected a " << n << "-qubit state with dims [2";
    for (int p = 1; p < n; ++p) os << ",2";
    os << "]";
    throw InvalidArgument(os.str());
  }
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& op) { return (rho.matrix() * op).trace().real(); }

std::vector<MeasurementSetting> to_settings(const std::vector<Vec3>& v) {
  std::vector<MeasurementSetting> out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

}  // namespace

CorrelationTensor correlation_matrix(const DensityMatrix& rho) {
  require_qubits(rho, 2, "correlation_matrix");
  CorrelationTensor t{2, std::vector<double>(9)};
  for (int n = 0; n < 3; ++n)
    for (int m = 0; m < 3; ++m) t.entries[3 * n + m] = expectation(rho, tensor(pauli(n + 1), pauli(m + 1)));
  return t;
}

double horodecki_M(const DensityMatrix& rho) {
  const Eigen::Matrix3d t = correlation_matrix(rho).matrix();
  const ComplexMatrix u = (t.transpose() * t).cast<Complex>();
  const RealVector mu = eig_hermitian(u);
  return mu(0) + mu(1);
}

ChshSettings standard_chsh_settings() {
  const double h = 1.0 / std::numbers::sqrt2;
  return {MeasurementSetting::z(), MeasurementSetting::x(), MeasurementSetting(Vec3(h, 0, h)),
          MeasurementSetting(Vec3(-h, 0, h))};
}

double chsh_value(const DensityMatrix& rho, const ChshSettings& s) {
  require_qubits(rho, 2, "chsh_value");
  const ComplexMatrix a1 = s.a1.observable(), a2 = s.a2.observable();
  const ComplexMatrix b1 = s.b1.observable(), b2 = s.b2.observable();
  const ComplexMatrix op = tensor(a1, b1) + tensor(a1, b2) + tensor(a2, b1) - tensor(a2, b2);
  return expectation(rho, op);
}

double chsh_max(const DensityMatrix& rho) { return 2.0 * std::sqrt(std::max(0.0, horodecki_M(rho))); }

CertificateReport chsh_certificate(const DensityMatrix& rho) {
  return make_report("chsh_horodecki", chsh_max(rho), 2.0);
}

CertificateReport chsh_grid_oracle(const DensityMatrix& rho, const OracleOptions& opts) {
  require_qubits(rho, 2, "chsh_grid_oracle");
  const auto best = maximize(BellFunctional::chsh(), rho, opts);
  return make_report("chsh_oracle", best.value, 2.0, to_settings(best.settings));
}

CertificateReport projected_chsh(const DensityMatrix& rho, const ProjectorPair& p) {
  p.validate();
  if (rho.dims() != Dims{p.d, p.d}) {
    std::ostringstream os;
    os << "projected_chsh: expected a state with dims [" << p.d << "," << p.d << "]";
    throw InvalidArgument(os.str());
  }
  const ComplexMatrix pm = p.matrix();
  ComplexMatrix proj = pm * rho.matrix() * pm.adjoint();
  const double weight = proj.trace().real();
  std::ostringstream name;
  name << "projected_chsh[" << p.alpha << "," << p.beta << ";" << p.gamma << "," << p.lambda << "]";
  if (weight <= 1e-12) {
    auto r = make_report(name.str(), 0.0, 2.0);
    std::ostringstream note;
    note << "undetectable on this subspace: projection weight " << weight;
    r.note = note.str();
    return r;
  }
  proj /= weight;
  proj = 0.5 * (proj + proj.adjoint()).eval();
  const DensityMatrix reduced(std::move(proj), {2, 2});
  return make_report(name.str(), 2.0 * weight * std::sqrt(horodecki_M(reduced)), 2.0);
}

PairWitness theorem2_witness(const DensityMatrix& rho_s) {
  const int d = rho_s.dim();
  if (d < 2) throw InvalidArgument("theorem2_witness: source dimension must be at least 2");
  PairWitness best;
  double best_margin = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const double diag = rho_s(i, i).real() + rho_s(j, j).real();
      const double threshold = std::sqrt(std::max(0.0, 1.0 - diag * diag)) / 2.0;
      const double coherence = std::abs(rho_s(i, j));
      if (coherence - threshold > best_margin) {
        best_margin = coherence - threshold;
        best.i = i;
        best.j = j;
        best.coherence = coherence;
        best.threshold = threshold;
      }
    }
  best.holds = best.coherence > best.threshold + kViolationTol;
  const DensityMatrix converted = convert(rho_s, ConversionSpec{d, 2});
  best.report = projected_chsh(converted, ProjectorPair{best.i, best.j, best.i, best.j, d});
  return best;
}

}  // namespace cohnl

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cohnl/bell_functional.hpp"
#include "cohnl/nonlocality.hpp"

namespace cohnl {
namespace {

void require_three_qubits(const DensityMatrix& rho, const char* who) {
  if (rho.dims() != Dims{2, 2, 2})
    throw InvalidArgument(std::string(who) + ": expected a three-qubit state with dims [2,2,2]");
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& op) { return (rho.matrix() * op).trace().real(); }

ComplexMatrix kron3(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& c) {
  return tensor(tensor(a, b), c);
}

std::vector<MeasurementSetting> to_settings(const std::vector<Vec3>& v) {
  std::vector<MeasurementSetting> out;
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

}  // namespace

CorrelationTensor correlation_tensor3(const DensityMatrix& rho) {
  require_three_qubits(rho, "correlation_tensor3");
  CorrelationTensor m{3, std::vector<double>(27)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        m.entries[9 * i + 3 * j + k] = expectation(rho, kron3(pauli(i + 1), pauli(j + 1), pauli(k + 1)));
  return m;
}

double svetlichny_lambda1(const DensityMatrix& rho) {
  const Eigen::MatrixXd u = correlation_tensor3(rho).unfolding();
  return singular_values(u.cast<Complex>())(0);
}

double svetlichny_value(const DensityMatrix& rho, const SvetlichnySettings& s) {
  require_three_qubits(rho, "svetlichny_value");
  const ComplexMatrix a1 = s.a1.observable(), a2 = s.a2.observable();
  const ComplexMatrix b1 = s.b1.observable(), b2 = s.b2.observable();
  const ComplexMatrix c1 = s.c1.observable(), c2 = s.c2.observable();
  const ComplexMatrix first = tensor(b1, c1) + tensor(b1, c2) + tensor(b2, c1) - tensor(b2, c2);
  const ComplexMatrix second = tensor(b1, c1) - tensor(b1, c2) - tensor(b2, c1) - tensor(b2, c2);
  return expectation(rho, tensor(a1, first) + tensor(a2, second));
}

CertificateReport svetlichny_oracle(const DensityMatrix& rho, const OracleOptions& opts) {
  require_three_qubits(rho, "svetlichny_oracle");
  const auto best = maximize(BellFunctional::svetlichny(), rho, opts);
  return make_report("svetlichny_oracle", best.value, 4.0, to_settings(best.settings));
}

CertificateReport svetlichny_bound(const DensityMatrix& rho, const OracleOptions& opts) {
  const double bound_value = 4.0 * svetlichny_lambda1(rho);
  auto report = make_report("svetlichny_bound", bound_value, 4.0);
  if (report.violated) {
    // 4 lambda_1 only bounds <S> from above; require settings that reach past 4.
    const auto oracle = svetlichny_oracle(rho, opts);
    report.violated = oracle.violated;
    report.settings = oracle.settings;
    std::ostringstream note;
    note.precision(17);
    note << "oracle value " << oracle.value;
    report.note = note.str();
  }
  return report;
}

TripartiteSettings reference_t_settings(bool swap_z) {
  const double h = 1.0 / std::numbers::sqrt2;
  const MeasurementSetting minus(Vec3(-h, 0, h));  // (sigma_3 - sigma_1)/sqrt2
  const MeasurementSetting plus(Vec3(h, 0, h));    // (sigma_3 + sigma_1)/sqrt2
  const auto z = MeasurementSetting::z();
  const auto x = MeasurementSetting::x();
  return swap_z ? TripartiteSettings{z, x, z, x, plus, minus} : TripartiteSettings{z, x, z, x, minus, plus};
}

double t_value(const DensityMatrix& rho, const TripartiteSettings& s) {
  require_three_qubits(rho, "t_value");
  const ComplexMatrix id = pauli(0);
  const ComplexMatrix x0 = s.x0.observable(), x1 = s.x1.observable();
  const ComplexMatrix y0 = s.y0.observable(), y1 = s.y1.observable();
  const ComplexMatrix z0 = s.z0.observable(), z1 = s.z1.observable();
  const ComplexMatrix op =
      kron3(x0, y0, id) + kron3(x0, id, z0) + kron3(id, y0, z1) - kron3(x1, y1, z0) + kron3(x1, y1, z1);
  return expectation(rho, op);
}

double ns_value(const DensityMatrix& rho, const TripartiteSettings& s) {
  require_three_qubits(rho, "ns_value");
  const ComplexMatrix id = pauli(0);
  const ComplexMatrix x0 = s.x0.observable(), x1 = s.x1.observable();
  const ComplexMatrix y0 = s.y0.observable(), y1 = s.y1.observable();
  const ComplexMatrix z0 = s.z0.observable(), z1 = s.z1.observable();
  const ComplexMatrix op =
      kron3(x0, y1, id) + kron3(x1, id, z0) + kron3(id, y0, z1) + kron3(x0, y0, z0) - kron3(x1, y1, z1);
  return expectation(rho, op);
}

CertificateReport t_certificate(const DensityMatrix& rho, const TripartiteSettings& s) {
  return make_report("t_inequality", t_value(rho, s), 3.0, {s.x0, s.x1, s.y0, s.y1, s.z0, s.z1});
}

CertificateReport ns_oracle(const DensityMatrix& rho, const OracleOptions& opts) {
  require_three_qubits(rho, "ns_oracle");
  const auto best = maximize(BellFunctional::ns_inequality(), rho, opts);
  return make_report("ns_oracle", best.value, 3.0, to_settings(best.settings));
}

}  // namespace cohnl

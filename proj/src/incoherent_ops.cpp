#include "cohnl/incoherent_ops.hpp"

#include <cassert>
#include <sstream>

namespace cohnl {

int ConversionSpec::total_dim() const {
  if (d < 2) throw InvalidArgument("ConversionSpec: d must be at least 2");
  if (n < 2) throw InvalidArgument("ConversionSpec: n must be at least 2");
  long long total = 1;
  for (int p = 0; p < n; ++p) {
    total *= d;
    if (total > kMaxConversionDim) {
      std::ostringstream os;
      os << "ConversionSpec: d^n exceeds " << kMaxConversionDim << " (d=" << d << ", n=" << n << ")";
      throw InvalidArgument(os.str());
    }
  }
  return static_cast<int>(total);
}

ComplexMatrix cnot() { return fanout_unitary({2, 2}); }

int fanout_index(const ConversionSpec& spec, int index) {
  const int total = spec.total_dim();
  if (index < 0 || index >= total) throw InvalidArgument("fanout_index: index out of range");
  int stride = total / spec.d;
  const int control = index / stride;
  int rest = index % stride;
  int out = control;
  for (int p = 1; p < spec.n; ++p) {
    stride /= spec.d;
    const int digit = rest / stride;
    rest %= stride;
    out = out * spec.d + (control + digit) % spec.d;
  }
  return out;
}

ComplexMatrix fanout_unitary(const ConversionSpec& spec) {
  const int total = spec.total_dim();
  ComplexMatrix u = ComplexMatrix::Zero(total, total);
  for (int col = 0; col < total; ++col) u(fanout_index(spec, col), col) = 1.0;
  return u;
}

namespace {

// Index of |i, i, ..., i> in (C^d)^{(x) n}.
int repeated_index(int i, const ConversionSpec& spec) {
  int idx = 0;
  for (int p = 0; p < spec.n; ++p) idx = idx * spec.d + i;
  return idx;
}

void require_source(const DensityMatrix& rho_s, const ConversionSpec& spec) {
  if (rho_s.dim() != spec.d) {
    std::ostringstream os;
    os << "convert: source state has dimension " << rho_s.dim() << " but d=" << spec.d;
    throw InvalidArgument(os.str());
  }
}

}  // namespace

DensityMatrix convert(const DensityMatrix& rho_s, const ConversionSpec& spec) {
  require_source(rho_s, spec);
  const int total = spec.total_dim();
  ComplexMatrix out = ComplexMatrix::Zero(total, total);
  for (int i = 0; i < spec.d; ++i)
    for (int j = 0; j < spec.d; ++j) out(repeated_index(i, spec), repeated_index(j, spec)) = rho_s(i, j);
  DensityMatrix result(std::move(out), Dims(spec.n, spec.d));
#ifndef NDEBUG
  if (total <= 256) {
    const DensityMatrix check = convert_by_conjugation(rho_s, spec);
    assert((check.matrix() - result.matrix()).cwiseAbs().maxCoeff() <= 1e-12);
  }
#endif
  return result;
}

DensityMatrix append_ancillas(const DensityMatrix& rho_s, const ConversionSpec& spec) {
  require_source(rho_s, spec);
  ComplexMatrix m = rho_s.matrix();
  const ComplexMatrix zero = basis_operator(spec.d, 0, 0);
  for (int p = 1; p < spec.n; ++p) m = tensor(m, zero);
  return DensityMatrix(std::move(m), Dims(spec.n, spec.d));
}

DensityMatrix convert_by_conjugation(const DensityMatrix& rho_s, const ConversionSpec& spec) {
  const ComplexMatrix u = fanout_unitary(spec);
  const DensityMatrix in = append_ancillas(rho_s, spec);
  return DensityMatrix(u * in.matrix() * u.adjoint(), in.dims());
}

PureState convert(const PureState& psi, const ConversionSpec& spec) {
  if (psi.dim() != spec.d) throw InvalidArgument("convert: source state dimension does not match d");
  ComplexVector out = ComplexVector::Zero(spec.total_dim());
  for (int i = 0; i < spec.d; ++i) out(repeated_index(i, spec)) = psi.amplitudes()(i);
  return PureState(std::move(out), Dims(spec.n, spec.d));
}

DensityMatrix apply_channel(const KrausSet& k, const DensityMatrix& rho) {
  if (k.in_dim() != rho.dim()) {
    std::ostringstream os;
    os << "apply_channel: channel input dimension " << k.in_dim() << " does not match state dimension "
       << rho.dim();
    throw InvalidArgument(os.str());
  }
  ComplexMatrix out = ComplexMatrix::Zero(k.out_dim(), k.out_dim());
  for (const auto& op : k.operators()) out += op * rho.matrix() * op.adjoint();
  out = 0.5 * (out + out.adjoint()).eval();
  Dims dims = k.out_dim() == rho.dim() ? rho.dims() : Dims{};
  return DensityMatrix(std::move(out), std::move(dims));
}

}  // namespace cohnl

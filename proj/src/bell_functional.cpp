#include "cohnl/bell_functional.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cohnl/sampling.hpp"

namespace cohnl {

PauliExpectations::PauliExpectations(const DensityMatrix& rho) : qubits_(rho.parties()) {
  for (int d : rho.dims())
    if (d != 2) throw InvalidArgument("PauliExpectations: every subsystem must be a qubit");
  std::size_t count = 1;
  for (int p = 0; p < qubits_; ++p) count *= 4;
  values_.resize(count);
  for (std::size_t flat = 0; flat < count; ++flat) {
    ComplexMatrix op = ComplexMatrix::Identity(1, 1);
    std::size_t stride = count / 4;
    for (int p = 0; p < qubits_; ++p, stride /= 4) op = tensor(op, pauli(static_cast<int>(flat / stride % 4)));
    values_[flat] = (rho.matrix() * op).trace().real();
  }
}

BellFunctional::BellFunctional(int parties, std::vector<int> party_of_slot, std::vector<BellTerm> terms)
    : parties_(parties), party_of_slot_(std::move(party_of_slot)), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (static_cast<int>(t.slots.size()) != parties_)
      throw InvalidArgument("BellFunctional: term arity does not match party count");
    for (int p = 0; p < parties_; ++p) {
      const int s = t.slots[p];
      if (s >= slots() || (s >= 0 && party_of_slot_[s] != p))
        throw InvalidArgument("BellFunctional: slot assigned to the wrong party");
    }
  }
}

BellFunctional BellFunctional::chsh() {
  return BellFunctional(2, {0, 0, 1, 1}, {{1, {0, 2}}, {1, {0, 3}}, {1, {1, 2}}, {-1, {1, 3}}});
}

BellFunctional BellFunctional::svetlichny() {
  return BellFunctional(3, {0, 0, 1, 1, 2, 2},
                        {{1, {0, 2, 4}},
                         {1, {0, 2, 5}},
                         {1, {0, 3, 4}},
                         {-1, {0, 3, 5}},
                         {1, {1, 2, 4}},
                         {-1, {1, 2, 5}},
                         {-1, {1, 3, 4}},
                         {-1, {1, 3, 5}}});
}

// Slots: x0, x1, y0, y1, z0, z1.
BellFunctional BellFunctional::t_inequality() {
  return BellFunctional(3, {0, 0, 1, 1, 2, 2},
                        {{1, {0, 2, -1}}, {1, {0, -1, 4}}, {1, {-1, 2, 5}}, {-1, {1, 3, 4}}, {1, {1, 3, 5}}});
}

BellFunctional BellFunctional::ns_inequality() {
  return BellFunctional(3, {0, 0, 1, 1, 2, 2},
                        {{1, {0, 3, -1}}, {1, {1, -1, 4}}, {1, {-1, 2, 5}}, {1, {0, 2, 4}}, {-1, {1, 3, 5}}});
}

double BellFunctional::evaluate(const PauliExpectations& e, const std::vector<Vec3>& settings) const {
  if (e.qubits() != parties_) throw InvalidArgument("BellFunctional: state has the wrong number of qubits");
  if (static_cast<int>(settings.size()) != slots())
    throw InvalidArgument("BellFunctional: wrong number of settings");
  double total = 0.0;
  std::vector<std::array<double, 4>> weights(parties_);
  for (const auto& t : terms_) {
    for (int p = 0; p < parties_; ++p) {
      const int s = t.slots[p];
      if (s < 0)
        weights[p] = {1.0, 0.0, 0.0, 0.0};
      else
        weights[p] = {0.0, settings[s](0), settings[s](1), settings[s](2)};
    }
    // Contract the expectation table against the per-party weight vectors.
    double acc = 0.0;
    std::size_t count = 1;
    for (int p = 0; p < parties_; ++p) count *= 4;
    for (std::size_t flat = 0; flat < count; ++flat) {
      double w = 1.0;
      std::size_t stride = count / 4;
      for (int p = 0; p < parties_ && w != 0.0; ++p, stride /= 4) w *= weights[p][flat / stride % 4];
      if (w != 0.0) acc += w * e.at(flat);
    }
    total += t.coeff * acc;
  }
  return total;
}

Vec3 BellFunctional::gradient(const PauliExpectations& e, std::vector<Vec3> settings, int slot) const {
  settings[slot] = Vec3::Zero();
  const double offset = evaluate(e, settings);
  Vec3 g;
  for (int k = 0; k < 3; ++k) {
    settings[slot] = Vec3::Unit(k);
    g(k) = evaluate(e, settings) - offset;
  }
  return g;
}

namespace {

Vec3 direction(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

Vec3 grid_direction(int i, int j, int resolution) {
  const double pi = std::numbers::pi;
  return direction(pi * (i + 0.5) / resolution, 2.0 * pi * j / resolution);
}

std::vector<double> angle_key(const std::vector<Vec3>& settings) {
  std::vector<double> key;
  for (const auto& v : settings) {
    const auto a = MeasurementSetting(v).angles();
    key.push_back(a[0]);
    key.push_back(a[1]);
  }
  return key;
}

double ascend(const BellFunctional& f, const PauliExpectations& e, std::vector<Vec3>& s,
              const OracleOptions& opts) {
  double value = f.evaluate(e, s);
  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    const double before = value;
    for (int slot = 0; slot < f.slots(); ++slot) {
      const Vec3 g = f.gradient(e, s, slot);
      const double norm = g.norm();
      if (norm > 1e-300) s[slot] = g / norm;
    }
    value = f.evaluate(e, s);
    if (value - before <= opts.tolerance) break;
  }
  return value;
}

}  // namespace

OracleResult maximize(const BellFunctional& f, const DensityMatrix& rho, const OracleOptions& opts) {
  if (opts.resolution < 1) throw InvalidArgument("oracle resolution must be positive");
  if (opts.restarts < 1) throw InvalidArgument("oracle restarts must be positive");
  const PauliExpectations e(rho);
  const int res = opts.resolution;
  Rng rng(opts.seed);

  OracleResult best{-std::numeric_limits<double>::infinity(), {}};
  std::vector<double> best_key;
  for (int r = 0; r < opts.restarts; ++r) {
    std::vector<Vec3> s(f.slots(), Vec3::UnitZ());
    if (r == 0) {
      // Greedy pass: each slot takes its best grid direction given the ones before it.
      for (int slot = 0; slot < f.slots(); ++slot) {
        double slot_best = -std::numeric_limits<double>::infinity();
        Vec3 choice = s[slot];
        for (int i = 0; i < res; ++i)
          for (int j = 0; j < res; ++j) {
            s[slot] = grid_direction(i, j, res);
            const double v = f.evaluate(e, s);
            if (v > slot_best) {
              slot_best = v;
              choice = s[slot];
            }
          }
        s[slot] = choice;
      }
    } else {
      for (auto& v : s) {
        const int i = rng.index(res);
        const int j = rng.index(res);
        v = grid_direction(i, j, res);
      }
    }
    const double value = ascend(f, e, s, opts);
    const auto key = angle_key(s);
    constexpr double kTie = 1e-12;
    if (value > best.value + kTie || (std::abs(value - best.value) <= kTie && key < best_key)) {
      best = {value, s};
      best_key = key;
    }
  }
  return best;
}

}  // namespace cohnl

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cohnl/bell_functional.hpp"
#include "cohnl/coherence.hpp"
#include "cohnl/incoherent_ops.hpp"
#include "cohnl/nonlocality.hpp"
#include "cohnl/sampling.hpp"
#include "test_support.hpp"

using namespace cohnl;
using namespace cohnl::test;

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

DensityMatrix bell_phi_plus() {
  const ComplexVector v = (ket(4, 0) + ket(4, 3)) / kSqrt2;
  return DensityMatrix::from_pure(v, {2, 2});
}

DensityMatrix ghz3() { return DensityMatrix::from_pure(ghz(3), {2, 2, 2}); }

Vec3 random_unit(Rng& rng) {
  Vec3 v(rng.normal(), rng.normal(), rng.normal());
  return v / v.norm();
}

MeasurementSetting random_setting(Rng& rng) { return MeasurementSetting(random_unit(rng)); }

// Qudit source with the given diagonal and a single real coherence rho_ij.
DensityMatrix qudit_source(std::vector<double> diagonal, int i, int j, double coherence) {
  ComplexMatrix m = diag(std::move(diagonal));
  m(i, j) = m(j, i) = coherence;
  return DensityMatrix(m);
}

// Independent route: <S> from explicit Kronecker products of the observables.
double svetlichny_by_kron(const DensityMatrix& rho, const SvetlichnySettings& s) {
  const auto t = [&](const MeasurementSetting& a, const MeasurementSetting& b, const MeasurementSetting& c) {
    return (rho.matrix() * tensor(tensor(a.observable(), b.observable()), c.observable())).trace().real();
  };
  return t(s.a1, s.b1, s.c1) + t(s.a1, s.b1, s.c2) + t(s.a1, s.b2, s.c1) - t(s.a1, s.b2, s.c2) +
         t(s.a2, s.b1, s.c1) - t(s.a2, s.b1, s.c2) - t(s.a2, s.b2, s.c1) - t(s.a2, s.b2, s.c2);
}

}  // namespace

TEST_CASE("measurement settings") {
  CHECK_THROWS_AS(MeasurementSetting(Vec3(1, 1, 0)), InvalidArgument);
  CHECK_THROWS_AS(MeasurementSetting(Vec3(1 + 1e-8, 0, 0)), InvalidArgument);
  CHECK_NOTHROW(MeasurementSetting(Vec3(1 + 1e-11, 0, 0)));
  CHECK(max_abs(MeasurementSetting::z().observable() - pauli(3)) == 0.0);
  CHECK(max_abs(MeasurementSetting::x().observable() - pauli(1)) == 0.0);

  Rng rng(101);
  for (int t = 0; t < 100; ++t) {
    const auto s = random_setting(rng);
    const auto a = s.angles();
    CHECK(a[0] >= 0.0);
    CHECK(a[0] <= std::numbers::pi);
    CHECK(a[1] > -std::numbers::pi);
    CHECK(a[1] <= std::numbers::pi);
    CHECK((MeasurementSetting::from_angles(a[0], a[1]).bloch() - s.bloch()).norm() < 1e-12);
  }
}

TEST_CASE("projector pair validation") {
  CHECK_THROWS_AS((ProjectorPair{0, 0, 0, 1, 3}.validate()), InvalidArgument);
  CHECK_THROWS_AS((ProjectorPair{0, 3, 0, 1, 3}.validate()), InvalidArgument);
  CHECK_NOTHROW((ProjectorPair{2, 0, 1, 2, 3}.validate()));
  const ComplexMatrix p = ProjectorPair{0, 2, 1, 2, 3}.matrix();
  CHECK(p.rows() == 4);
  CHECK(p.cols() == 9);
  CHECK(max_abs(p * p.adjoint() - ComplexMatrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("correlation matrix") {
  const auto mixed = DensityMatrix::maximally_mixed(4).with_dims({2, 2});
  CHECK(correlation_matrix(mixed).matrix().cwiseAbs().maxCoeff() < 1e-15);

  const Eigen::Matrix3d t = correlation_matrix(bell_phi_plus()).matrix();
  CHECK((t - Eigen::Vector3d(1, -1, 1).asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() < 1e-15);

  ComplexVector plus(2);
  plus << 1 / kSqrt2, 1 / kSqrt2;
  const auto converted = convert(DensityMatrix::from_pure(plus), {2, 2});
  CHECK((correlation_matrix(converted).matrix() - t).cwiseAbs().maxCoeff() < 1e-15);

  Rng rng(103);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rho = random_density(4, rng).with_dims({2, 2});
    const auto c = correlation_matrix(rho);
    for (int n = 0; n < 3; ++n)
      for (int m = 0; m < 3; ++m)
        CHECK(std::abs(c(n, m) - naive_two_qubit_expectation(rho.matrix(), pauli(n + 1), pauli(m + 1))) < 1e-12);
  }

  CHECK_THROWS_AS(correlation_matrix(DensityMatrix::maximally_mixed(4)), InvalidArgument);
  CHECK_THROWS_AS(correlation_matrix(ghz3()), InvalidArgument);
}

TEST_CASE("Horodecki quantity") {
  CHECK(horodecki_M(bell_phi_plus()) == doctest::Approx(2.0));
  CHECK(horodecki_M(DensityMatrix::from_pure(ket(4, 0), {2, 2})) == doctest::Approx(1.0));

  Rng rng(107);
  for (int t = 0; t < 1000; ++t) {
    const auto rho_s = random_density(2, rng);
    const double r = std::abs(rho_s(0, 1));
    CHECK(std::abs(horodecki_M(convert(rho_s, {2, 2})) - (1.0 + 4.0 * r * r)) < 1e-10);
  }
}

TEST_CASE("CHSH value and closed-form maximum") {
  CHECK(chsh_value(bell_phi_plus(), standard_chsh_settings()) == doctest::Approx(2.0 * kSqrt2));
  CHECK(chsh_max(DensityMatrix::maximally_mixed(4).with_dims({2, 2})) == doctest::Approx(0.0));
  CHECK(chsh_max(bell_phi_plus()) == doctest::Approx(2.0 * kSqrt2));

  Rng rng(109);
  for (int t = 0; t < 100; ++t) {
    const auto rho = random_density(4, rng).with_dims({2, 2});
    const auto a = random_setting(rng), b = random_setting(rng);
    const double v = chsh_value(rho, {a, a, b, b});
    CHECK(v == doctest::Approx(2.0 * naive_two_qubit_expectation(rho.matrix(), a.observable(), b.observable())));
    CHECK(std::abs(v) <= 2.0 + 1e-12);
    // No settings beat the closed-form maximum.
    const ChshSettings s{random_setting(rng), random_setting(rng), random_setting(rng), random_setting(rng)};
    CHECK(chsh_value(rho, s) <= chsh_max(rho) + 1e-9);
  }
}

TEST_CASE("CHSH certificate and oracle") {
  const auto cert = chsh_certificate(bell_phi_plus());
  CHECK(cert.name == "chsh_horodecki");
  CHECK(cert.violated);
  CHECK(cert.bound == 2.0);

  OracleOptions opts;
  opts.resolution = 24;
  const auto bell = chsh_grid_oracle(bell_phi_plus(), opts);
  CHECK(std::abs(bell.value - 2.0 * kSqrt2) < 1e-3);
  CHECK(bell.violated);
  CHECK(bell.settings.size() == 4);

  const auto sep = chsh_grid_oracle(DensityMatrix(diag({0.5, 0, 0, 0.5}), {2, 2}), opts);
  CHECK(sep.value <= 2.0 + 1e-9);
  CHECK_FALSE(sep.violated);

  const auto src = symmetric_qubit(0.4, 0.0);
  const auto conv = chsh_grid_oracle(convert(src, {2, 2}), opts);
  CHECK(std::abs(conv.value - 2.0 * std::sqrt(1.64)) < 1e-3);
}

TEST_CASE("CHSH oracle agrees with the closed form on random states") {
  Rng rng(113);
  OracleOptions opts;
  for (int t = 0; t < 200; ++t) {
    const auto rho = random_density(4, rng).with_dims({2, 2});
    opts.seed = static_cast<std::uint64_t>(t);
    CHECK(std::abs(chsh_grid_oracle(rho, opts).value - chsh_max(rho)) < 1e-3);
  }
}

TEST_CASE("violation flag is strict with slack") {
  CHECK_FALSE(make_report("x", 2.0 + 1e-10, 2.0).violated);
  CHECK_FALSE(make_report("x", 2.0 + 1e-9, 2.0).violated);
  CHECK(make_report("x", 2.0 + 2e-9, 2.0).violated);
}

TEST_CASE("projected CHSH") {
  // rho_ii + rho_jj = 0.8, |rho_ij| = 0.3 sits exactly on the threshold.
  const auto boundary = convert(qudit_source({0.4, 0.4, 0.2}, 0, 1, 0.3), {3, 2});
  const auto at = projected_chsh(boundary, {0, 1, 0, 1, 3});
  CHECK(std::abs(at.value - 2.0) < 1e-10);
  CHECK_FALSE(at.violated);
  CHECK(at.name == "projected_chsh[0,1;0,1]");

  const auto rank2 = convert(qudit_source({0.5, 0.0, 0.5}, 0, 2, 0.2), {3, 2});
  CHECK(projected_chsh(rank2, {0, 2, 0, 2, 3}).value == doctest::Approx(2.0 * std::sqrt(1.16)));

  const auto diagonal = convert(DensityMatrix(diag({0.2, 0.5, 0.3})), {3, 2});
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) CHECK(projected_chsh(diagonal, {a, b, a, b, 3}).value <= 2.0 + 1e-12);

  const auto empty = projected_chsh(convert(DensityMatrix(diag({0, 0, 1})), {3, 2}), {0, 1, 0, 1, 3});
  REQUIRE(empty.note.has_value());
  CHECK(empty.note->find("undetectable on this subspace") != std::string::npos);
  CHECK_FALSE(empty.violated);

  CHECK_THROWS_AS(projected_chsh(boundary, {0, 1, 0, 1, 2}), InvalidArgument);
}

TEST_CASE("projected CHSH value matches 2 w sqrt(M) on the normalised block") {
  Rng rng(127);
  for (int t = 0; t < 50; ++t) {
    const auto rho = random_density(9, rng).with_dims({3, 3});
    const ProjectorPair p{t % 3, (t + 1) % 3, (t + 2) % 3, t % 3, 3};
    const ComplexMatrix pm = p.matrix();
    const ComplexMatrix block = pm * rho.matrix() * pm.adjoint();
    const double w = block.trace().real();
    const DensityMatrix reduced(block / w, {2, 2});
    CHECK(projected_chsh(rho, p).value == doctest::Approx(2.0 * w * std::sqrt(horodecki_M(reduced))));
  }
}

TEST_CASE("pair witness") {
  ComplexVector plus(2);
  plus << 1 / kSqrt2, 1 / kSqrt2;
  const auto q = theorem2_witness(DensityMatrix::from_pure(plus));
  CHECK(q.holds);
  CHECK(q.threshold == doctest::Approx(0.0));
  CHECK(q.report.violated);

  const auto above = theorem2_witness(qudit_source({0.4, 0.4, 0.2}, 0, 1, 0.31));
  CHECK(above.holds);
  CHECK(above.i == 0);
  CHECK(above.j == 1);
  CHECK(above.threshold == doctest::Approx(0.3));
  CHECK(above.report.value > 2.0);

  const auto below = theorem2_witness(qudit_source({0.4, 0.4, 0.2}, 0, 1, 0.29));
  CHECK_FALSE(below.holds);
  CHECK(below.report.value < 2.0);
}

TEST_CASE("three-qubit correlation tensor and lambda_1") {
  CHECK(svetlichny_lambda1(ghz3()) == doctest::Approx(kSqrt2));
  const auto zero = DensityMatrix::from_pure(ket(8, 0), {2, 2, 2});
  CHECK(svetlichny_lambda1(zero) == doctest::Approx(1.0));
  const auto m = correlation_tensor3(zero);
  CHECK(m(2, 2, 2) == doctest::Approx(1.0));
  CHECK(m(0, 0, 0) == doctest::Approx(0.0));

  const auto u = correlation_tensor3(ghz3()).unfolding();
  CHECK(u.rows() == 3);
  CHECK(u.cols() == 9);

  CHECK(svetlichny_lambda1(convert(symmetric_qubit(0.3, 0.0), {2, 3})) == doctest::Approx(0.6 * kSqrt2));

  Rng rng(131);
  for (int t = 0; t < 200; ++t) {
    // Equal diagonal: lambda_1 = 2 sqrt2 |rho_01| = sqrt2 C_l1.
    const double r = 0.5 * std::sqrt(rng.uniform()), phi = 2.0 * std::numbers::pi * rng.uniform();
    const auto sym = symmetric_qubit(r * std::cos(phi), r * std::sin(phi));
    CHECK(std::abs(svetlichny_lambda1(convert(sym, {2, 3})) - kSqrt2 * c_l1(sym)) < 1e-10);

    // General source: the z row contributes |rho_00 - rho_11|.
    const auto rho_s = random_density(2, rng);
    const double off = kSqrt2 * c_l1(rho_s);
    const double dz = std::abs(rho_s(0, 0).real() - rho_s(1, 1).real());
    const double lambda1 = svetlichny_lambda1(convert(rho_s, {2, 3}));
    CHECK(std::abs(lambda1 - std::max(off, dz)) < 1e-10);
    if (off >= dz) CHECK(std::abs(lambda1 - off) < 1e-10);
  }
  // Incoherent but unbalanced source: lambda_1 = |rho_00 - rho_11| > sqrt2 C_l1 = 0.
  CHECK(svetlichny_lambda1(convert(DensityMatrix(diag({0.9, 0.1})), {2, 3})) == doctest::Approx(0.8));
  CHECK_THROWS_AS(correlation_tensor3(bell_phi_plus()), InvalidArgument);
}

TEST_CASE("Svetlichny value: operator route, table route and soundness") {
  Rng rng(137);
  const auto sv = BellFunctional::svetlichny();
  for (int t = 0; t < 300; ++t) {
    const auto rho = random_density(8, rng, 1 + t % 8).with_dims({2, 2, 2});
    const SvetlichnySettings s{random_setting(rng), random_setting(rng), random_setting(rng),
                               random_setting(rng), random_setting(rng), random_setting(rng)};
    const double v = svetlichny_value(rho, s);
    CHECK(v == doctest::Approx(svetlichny_by_kron(rho, s)).epsilon(1e-12));
    const PauliExpectations e(rho);
    CHECK(sv.evaluate(e, {s.a1.bloch(), s.a2.bloch(), s.b1.bloch(), s.b2.bloch(), s.c1.bloch(), s.c2.bloch()}) ==
          doctest::Approx(v).epsilon(1e-12));
    CHECK(std::abs(v) <= 4.0 * svetlichny_lambda1(rho) + 1e-9);
  }
}

TEST_CASE("Svetlichny oracle") {
  const auto g = svetlichny_oracle(ghz3());
  CHECK(std::abs(g.value - 4.0 * kSqrt2) < 1e-2);
  CHECK(g.violated);
  CHECK(g.settings.size() == 6);

  const auto zero = svetlichny_oracle(DensityMatrix::from_pure(ket(8, 0), {2, 2, 2}));
  CHECK(zero.value <= 4.0 + 1e-9);
  CHECK_FALSE(zero.violated);

  const auto c08 = svetlichny_oracle(convert(symmetric_qubit(0.4, 0.0), {2, 3}));
  CHECK(c08.value > 4.0);

  // The oracle value is attained by its own settings and dominates random settings.
  Rng rng(139);
  const auto rho = random_density(8, rng).with_dims({2, 2, 2});
  const auto best = svetlichny_oracle(rho);
  const auto& st = best.settings;
  CHECK(svetlichny_value(rho, {st[0], st[1], st[2], st[3], st[4], st[5]}) == doctest::Approx(best.value));
  for (int t = 0; t < 500; ++t) {
    const SvetlichnySettings s{random_setting(rng), random_setting(rng), random_setting(rng),
                               random_setting(rng), random_setting(rng), random_setting(rng)};
    CHECK(svetlichny_value(rho, s) <= best.value + 1e-9);
  }
}

TEST_CASE("Svetlichny bound report") {
  const auto g = svetlichny_bound(ghz3());
  CHECK(g.value == doctest::Approx(4.0 * kSqrt2));
  CHECK(g.violated);
  const double c_low = 1.0 / kSqrt2 - 0.02;
  const auto low = svetlichny_bound(convert(symmetric_qubit(c_low / 2.0, 0.0), {2, 3}));
  CHECK(low.value < 4.0);
  CHECK_FALSE(low.violated);
}

TEST_CASE("T expression") {
  const auto s = reference_t_settings();
  CHECK(t_value(ghz3(), s) == doctest::Approx(1.0 + 2.0 * kSqrt2));
  const double a_edge = (kSqrt2 - 1.0) / 2.0;
  const auto edge = t_certificate(convert(symmetric_qubit(a_edge, 0.0), {2, 3}), s);
  CHECK(std::abs(edge.value - 3.0) < 1e-12);
  CHECK_FALSE(edge.violated);
  CHECK(t_value(convert(symmetric_qubit(0.0, 0.0), {2, 3}), s) == doctest::Approx(1.0 + kSqrt2));

  Rng rng(149);
  for (int t = 0; t < 200; ++t) {
    const auto rho_s = random_density(2, rng);
    const double re = rho_s(0, 1).real();
    const auto out = convert(rho_s, {2, 3});
    CHECK(std::abs(t_value(out, s) - (1.0 + kSqrt2 + 2.0 * kSqrt2 * re)) < 1e-12);
    CHECK(std::abs(t_value(out, reference_t_settings(true)) - (1.0 + kSqrt2 - 2.0 * kSqrt2 * re)) < 1e-12);
  }
}

TEST_CASE("T and NS: operator route equals table route") {
  Rng rng(151);
  const auto t_f = BellFunctional::t_inequality();
  const auto ns_f = BellFunctional::ns_inequality();
  for (int t = 0; t < 100; ++t) {
    const auto rho = random_density(8, rng).with_dims({2, 2, 2});
    const TripartiteSettings s{random_setting(rng), random_setting(rng), random_setting(rng),
                               random_setting(rng), random_setting(rng), random_setting(rng)};
    const PauliExpectations e(rho);
    const std::vector<Vec3> v{s.x0.bloch(), s.x1.bloch(), s.y0.bloch(), s.y1.bloch(), s.z0.bloch(), s.z1.bloch()};
    CHECK(t_f.evaluate(e, v) == doctest::Approx(t_value(rho, s)).epsilon(1e-12));
    CHECK(ns_f.evaluate(e, v) == doctest::Approx(ns_value(rho, s)).epsilon(1e-12));
  }
}

TEST_CASE("NS oracle") {
  const auto incoherent = ns_oracle(convert(symmetric_qubit(0.0, 0.0), {2, 3}));
  CHECK(incoherent.value <= 3.0 + 1e-6);
  CHECK_FALSE(incoherent.violated);

  // Positive control: the W state violates the NS expression.
  const auto w = ns_oracle(DensityMatrix::from_pure(w_state(), {2, 2, 2}));
  CHECK(w.value > 3.05);
  CHECK(w.violated);
  const auto& st = w.settings;
  CHECK(ns_value(DensityMatrix::from_pure(w_state(), {2, 2, 2}), {st[0], st[1], st[2], st[3], st[4], st[5]}) ==
        doctest::Approx(w.value));

  // Local deterministic bound on product states.
  Rng rng(157);
  for (int t = 0; t < 5; ++t) {
    ComplexMatrix m = random_density(2, rng).matrix();
    m = tensor(tensor(m, random_density(2, rng).matrix()), random_density(2, rng).matrix());
    CHECK(ns_oracle(DensityMatrix(m, {2, 2, 2})).value <= 3.0 + 1e-9);
  }
}

TEST_CASE("oracle determinism") {
  Rng rng(163);
  const auto rho = random_density(8, rng).with_dims({2, 2, 2});
  OracleOptions opts;
  opts.seed = 42;
  const auto a = ns_oracle(rho, opts), b = ns_oracle(rho, opts);
  CHECK(a.value == b.value);
  for (std::size_t i = 0; i < a.settings.size(); ++i) CHECK(a.settings[i].bloch() == b.settings[i].bloch());
}

TEST_CASE("GME concurrence") {
  CHECK(c_gme_pure(PureState(ghz(3), {2, 2, 2})) == doctest::Approx(1.0));
  CHECK(c_gme_pure(PureState(ket(8, 0), {2, 2, 2})) == doctest::Approx(0.0).epsilon(1e-12));
  ComplexVector plus(2);
  plus << 1 / kSqrt2, 1 / kSqrt2;
  CHECK(c_gme_converted(DensityMatrix::from_pure(plus), 3) == doctest::Approx(1.0));

  // Qubit source with |rho_01| = 0.3 and four parties.
  CHECK(c_gme_converted(symmetric_qubit(0.3, 0.0), 4) == doctest::Approx(0.6));
  ComplexVector p(2);
  p << std::sqrt(0.1), std::sqrt(0.9);
  const PureState src(p);
  CHECK(c_gme_pure(convert(src, {2, 4})) == doctest::Approx(0.6));

  ComplexVector q(3);
  q << std::sqrt(0.5), std::sqrt(0.3), std::sqrt(0.2);
  const double expected = 2.0 * std::sqrt(0.15 + 0.10 + 0.06);
  CHECK(c_gme_pure(convert(PureState(q), {3, 3})) == doctest::Approx(expected));
  CHECK(c_gme_converted(DensityMatrix::from_pure(q), 3) == doctest::Approx(expected));

  CHECK_THROWS_AS(c_gme_pure(DensityMatrix::maximally_mixed(8).with_dims({2, 2, 2})), InvalidArgument);
  CHECK_THROWS_AS(c_gme_pure(PureState(ket(4, 0), {2, 2})), InvalidArgument);
  CHECK_THROWS_AS(c_gme_converted(DensityMatrix::maximally_mixed(3), 3), InvalidArgument);
  CHECK_THROWS_AS(c_gme_converted(symmetric_qubit(0.3, 0.0), 2), InvalidArgument);
}

TEST_CASE("GME closed form equals the bipartition purity minimum") {
  Rng rng(167);
  for (int d = 2; d <= 4; ++d)
    for (int t = 0; t < 100; ++t) {
      const auto psi = random_pure(d, rng);
      const auto rho_s = psi.density();
      CHECK(std::abs(c_gme_converted(rho_s, 3) - c_gme_pure(convert(psi, {d, 3}))) < 1e-12);
    }
}

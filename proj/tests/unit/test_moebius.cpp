#include <doctest.h>

#include <random>

#include "hyperharm/errors.hpp"
#include "hyperharm/field.hpp"
#include "hyperharm/moebius.hpp"

using namespace hyperharm;

namespace {

MoebiusMap random_sl2r(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (;;) {
    double a = u(rng), b = u(rng), c = u(rng);
    if (std::abs(a) < 0.2) continue;
    return MoebiusMap::sl2r(a, b, c, (1.0 + b * c) / a);
  }
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("apply examples") {
  Complex z(0.3, 0.1);
  CHECK(std::abs(MoebiusMap::identity().apply(z) - z) == 0.0);
  Complex z0(0.5, 0.2);
  CHECK(std::abs(zero_to_z(z0).apply(0.0) - z0) < 1e-15);
  CHECK(std::abs(MoebiusMap::sl2r(2, 0, 0, 0.5).apply(kI) - 4.0 * kI) < 1e-15);
}

TEST_CASE("apply keeps the model domain") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 50; ++k) {
    MoebiusMap m = random_sl2r(rng);
    CHECK(m.apply(Complex(0.3 * k - 4.0, 0.1 + 0.05 * k)).imag() > 0.0);
    CHECK(std::abs(to_disk(m).apply(Complex(0.01 * k, -0.005 * k))) < 1.0);
  }
}

TEST_CASE("pole and invalid entries") {
  MoebiusMap m = MoebiusMap::sl2r(0, -1, 1, 0);
  CHECK(code_of([&] { m.apply(0.0); }) == ErrorCode::PoleAtPoint);
  CHECK(code_of([] { MoebiusMap::sl2r(1, 1, 1, 1); }) == ErrorCode::ConstraintViolation);
  CHECK(code_of([] { MoebiusMap::from_entries(kI, 0, 0, -kI, MatrixModel::SL2R); }) == ErrorCode::ConstraintViolation);
  CHECK(code_of([] { MoebiusMap::identity().fixed_points(); }) == ErrorCode::IdentityMap);
}

TEST_CASE("classification") {
  CHECK(MoebiusMap::identity().classify() == IsometryClass::Identity);
  CHECK(MoebiusMap::sl2r(2, 0, 0, 0.5).classify() == IsometryClass::Hyperbolic);
  CHECK(MoebiusMap::sl2r(1, 1, 0, 1).classify() == IsometryClass::Parabolic);
  double t = 0.7;
  CHECK(MoebiusMap::sl2r(std::cos(t), std::sin(t), -std::sin(t), std::cos(t)).classify() == IsometryClass::Elliptic);
}

TEST_CASE("classification is conjugation invariant") {
  std::mt19937_64 rng(11);
  const MoebiusMap samples[] = {MoebiusMap::sl2r(2, 0, 0, 0.5), MoebiusMap::sl2r(1, 1, 0, 1),
                                MoebiusMap::sl2r(std::cos(0.4), std::sin(0.4), -std::sin(0.4), std::cos(0.4))};
  for (const auto& m : samples) {
    for (int k = 0; k < 20; ++k) {
      MoebiusMap g = random_sl2r(rng);
      CHECK((g * m * g.inverse()).classify(1e-8) == m.classify());
    }
  }
}

TEST_CASE("fixed points") {
  auto fp = MoebiusMap::sl2r(2, 0, 0, 0.5).fixed_points();
  REQUIRE(fp.size() == 2);
  int inf = 0, zero = 0;
  for (const auto& p : fp) {
    if (p.is_infinity())
      ++inf;
    else if (std::abs(p.value()) < 1e-14)
      ++zero;
  }
  CHECK(inf == 1);
  CHECK(zero == 1);
  auto ell = MoebiusMap::sl2r(std::cos(0.3), std::sin(0.3), -std::sin(0.3), std::cos(0.3)).fixed_points();
  REQUIRE(ell.size() == 1);
  CHECK(std::abs(ell[0].value() - kI) < 1e-14);
}

TEST_CASE("group operations") {
  std::mt19937_64 rng(3);
  MoebiusMap a = random_sl2r(rng), b = random_sl2r(rng);
  Complex z(0.4, 1.3);
  CHECK(std::abs((a * b).apply(z) - a.apply(b.apply(z))) < 1e-12);
  CHECK(std::abs(a.inverse().apply(a.apply(z)) - z) < 1e-12);
  CHECK(std::abs(a.determinant() - 1.0) < 1e-12);
  double h = 1e-5;
  Complex fd = (a.apply(z + h) - a.apply(z - h)) / (2.0 * h);
  CHECK(std::abs(fd - a.derivative(z)) < 1e-8);
}

TEST_CASE("Cayley transport") {
  CHECK(std::abs(cayley(kI)) < 1e-16);
  CHECK(std::abs(cayley(Complex(0.0)) + 1.0) < 1e-16);
  CHECK(std::abs(cayley(ExtendedPoint::infinity()) - 1.0) < 1e-16);
  CHECK(cayley_inv_extended(1.0).is_infinity());
  CHECK(code_of([] { cayley_inv(1.0); }) == ErrorCode::PoleAtPoint);
  std::mt19937_64 rng(5);
  MoebiusMap m = random_sl2r(rng);
  MoebiusMap md = to_disk(m);
  CHECK(md.matrix_model() == MatrixModel::SU11);
  Complex z(-0.7, 0.9);
  CHECK(std::abs(md.apply(cayley(z)) - cayley(m.apply(z))) < 1e-12);
  CHECK(to_half_plane(md).distance(m) < 1e-12);
}

TEST_CASE("stab1 elements fix 1") {
  MoebiusMap s = stab1_element(Complex(1.0, 0.5), Complex(0.0, -0.5));
  CHECK(std::abs(s.apply(Complex(1.0)) - 1.0) < 1e-12);
}

TEST_CASE("field pullback and pushforward") {
  std::mt19937_64 rng(9);
  MoebiusMap m = random_sl2r(rng);
  VectorField x = make_field(Model::HalfPlane, [](Complex z) { return z * z + kI; });
  Complex z(0.2, 0.8);
  VectorField back = pullback_field(m, pushforward_field(m, x));
  CHECK(std::abs(back(z) - x(z)) < 1e-10);
  CHECK(std::abs(pullback_field(m, x)(z) - x(m.apply(z)) / m.derivative(z)) < 1e-12);
  VectorField round = disk_to_half_plane(half_plane_to_disk(x));
  CHECK(std::abs(round(z) - x(z)) < 1e-12);
}

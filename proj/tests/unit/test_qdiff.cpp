#include <doctest.h>

#include <random>

#include "hyperharm/errors.hpp"
#include "hyperharm/harmonic.hpp"
#include "hyperharm/qdiff.hpp"

using namespace hyperharm;

namespace {

VectorField hp(ComplexFn f) { return make_field(Model::HalfPlane, std::move(f)); }
QuadDiff hq(ComplexFn f) { return make_qd(Model::HalfPlane, std::move(f)); }

}  // namespace

TEST_CASE("beta of holomorphic fields vanishes") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> x(-3.0, 3.0), y(0.2, 4.0);
  VectorField f = hp([](Complex z) { return z * z * z - 2.0 * kI * z + std::exp(0.3 * z); });
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) worst = std::max(worst, std::abs(beta_fd(f, Complex(x(rng), y(rng)))));
  CHECK(worst < 1e-8);
}

TEST_CASE("Killing fields are harmonic") {
  const ComplexFn fields[] = {[](Complex) { return Complex(1.0); }, [](Complex z) { return z; },
                              [](Complex z) { return z * z; }, [](Complex z) { return 2.0 * z * z - 3.0 * z + 1.0; }};
  for (const auto& f : fields)
    for (Complex z : Grid::parse("-2:2:7,0.5:3:6").points()) CHECK(harmonic_residual(hp(f), z).max_abs() < 1e-6);
}

TEST_CASE("harmonic residual examples") {
  HarmonicResidual r = harmonic_residual(hp([](Complex z) { return Complex(z.imag()); }), kI);
  CHECK(std::abs(r.r1 + 2.0) < 1e-6);
  CHECK(std::abs(r.r2) < 1e-6);
  for (Complex z : Grid::parse("-1:1:10,0.5:2:10").points()) CHECK(harmonic_residual(monomial(0), z).max_abs() < 1e-6);
  CHECK_THROWS_AS(harmonic_residual(monomial(0), Complex(0.0, 0.1), 0.06), Error);
}

TEST_CASE("y-power identity example") {
  YPowerField yp = y_power_field(3, hq([](Complex) { return Complex(1.0); }));
  CHECK(std::abs(beta_fd(yp.field, Complex(1, 2)) + 3.0 * kI) < 1e-6);
}

TEST_CASE("beta is natural under SL2R") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  VectorField xi = monomial(2);
  for (int k = 0; k < 10; ++k) {
    double a = 1.0 + 0.3 * u(rng), b = u(rng), c = 0.5 * u(rng);
    MoebiusMap g = MoebiusMap::sl2r(a, b, c, (1.0 + b * c) / a);
    Complex z(0.3 * u(rng), 1.5 + 0.5 * u(rng));
    Complex d = g.derivative(z);
    Complex lhs = beta_fd(pullback_field(g, xi), z), rhs = beta_fd(xi, g.apply(z)) * d * d;
    CHECK(std::abs(lhs - rhs) < 1e-6 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("harmonic iff beta holomorphic on the catalog") {
  for (int n = 0; n <= 3; ++n) {
    VectorField xi = monomial(n);
    QuadDiff q = beta_differential(xi);
    for (Complex z : Grid::parse("-1:1:5,1:2:4").points()) {
      CHECK(harmonic_residual(xi, z).max_abs() < 1e-6);
      CHECK(holomorphy_residual(q, z, 1e-3) < 1e-6);
    }
  }
}

TEST_CASE("disk beta is the transported half-plane beta") {
  VectorField xi = monomial(1);
  VectorField chi = half_plane_to_disk(xi);
  Complex z(0.4, 1.1), w = cayley(z);
  Complex d = cayley_inv_derivative(w);
  CHECK(std::abs(beta(chi, w) - beta(xi, z) * d * d) < 1e-8);
}

TEST_CASE("quadratic differential transport") {
  QuadDiff q = hq([](Complex z) { return 1.0 / ((z + kI) * (z + kI)); });
  QuadDiff back = qd_to_half_plane(qd_to_disk(q));
  Complex z(0.7, 0.3);
  CHECK(std::abs(back(z) - q(z)) < 1e-12);
  ConformalMetric hm{Model::HalfPlane}, dm{Model::Disk};
  CHECK(hm.conformal_factor_sq(Complex(0, 2)) == doctest::Approx(0.25));
  CHECK(dm.conformal_factor_sq(0.0) == doctest::Approx(4.0));
  CHECK_THROWS_AS(hm.conformal_factor_sq(Complex(1, 0)), Error);
}

TEST_CASE("grid parsing") {
  Grid g = Grid::parse("-1:1:3,0.5:1.5:2");
  auto p = g.points();
  REQUIRE(p.size() == 6);
  CHECK(std::abs(p[0] - Complex(-1, 0.5)) == 0.0);
  CHECK(std::abs(p[5] - Complex(1, 1.5)) == 0.0);
  CHECK_THROWS_AS(Grid::parse("1:2"), Error);
  CHECK_THROWS_AS(Grid::parse("0:1:0,1:2:3"), Error);
}

TEST_CASE("derivative bounds of (z+i)^-4") {
  // |f| y^2 = y^2/|z+i|^4 peaks at z = i with value 1/16.
  QuadDiff q = hq([](Complex z) { return std::pow(z + kI, -4); });
  BoundsReport b = derivative_bounds(q, std::vector<Complex>{kI, Complex(0, 2), Complex(1, 1)});
  CHECK(b.D == doctest::Approx(1.0 / 16.0));
  CHECK(b.K1 > 0.0);
  CHECK(b.K2 > 0.0);
}

TEST_CASE("finite differences are second order") {
  auto f = [](Complex z) { return std::exp(z) * std::conj(z); };
  Complex z(0.2, 1.0), want = std::exp(z);  // d/dzbar
  double e1 = std::abs(fd_dzbar(f, z, 0.02) - want), e2 = std::abs(fd_dzbar(f, z, 0.01) - want);
  CHECK(std::log2(e1 / e2) > 1.9);
}

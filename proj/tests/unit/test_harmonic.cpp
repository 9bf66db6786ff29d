#include <doctest.h>

#include <cmath>

#include "hyperharm/errors.hpp"
#include "hyperharm/harmonic.hpp"

using namespace hyperharm;

// Reference values: tests/oracles/oracles.py (mpmath, 30 digits).

namespace {

QuadDiff rational() {
  return make_qd(Model::HalfPlane, [](Complex z) { return std::pow(z + kI, -4); }, "(z+i)^-4",
                 [](Complex z) { return -4.0 * std::pow(z + kI, -5); },
                 [](Complex z) { return 20.0 * std::pow(z + kI, -6); });
}

RegularizedField rational_field() {
  RegularizedFieldConfig cfg;
  cfg.bounds = sampled_bounds(rational());
  return RegularizedField(rational(), cfg);
}

}  // namespace

TEST_CASE("quadrature") {
  QuadratureResult r = integrate([](double t) { return std::exp(Complex(0, t)); }, 0.0, std::numbers::pi);
  CHECK(std::abs(r.value - Complex(0, 2)) < 1e-13);
  QuadratureOptions tight;
  tight.abs_tol = 1e-300;
  tight.rel_tol = 0.0;
  tight.max_subdivisions = 3;
  CHECK_THROWS_AS(integrate([](double t) { return Complex(std::sqrt(std::abs(t - 0.3))); }, 0.0, 1.0, tight), Error);
}

TEST_CASE("monomial fields against quadrature") {
  CHECK(std::abs(monomial_field(2, Complex(0.3, 0.8)) - Complex(-0.04096, 0.028330666666666667)) < 1e-14);
  CHECK(std::abs(monomial_field(3, Complex(-1, 2)) - Complex(-1.6, -10.133333333333333)) < 1e-12);
  Complex z(0.7, 1.3);
  CHECK(std::abs(monomial_field(0, z) + kI * std::pow(z.imag(), 3) / 3.0) < 1e-14);
}

TEST_CASE("shifted fields") {
  CHECK(std::abs(beta_fd(shifted(1, kI), Complex(0, 2)) - kI) < 1e-6);
  Complex z(0.4, 0.9), a(-1.0, 2.0);
  CHECK(std::abs(shifted_field(0, a, z) - monomial_field(0, z)) < 1e-14);
  CHECK(std::abs(beta_fd(shifted(3, a), z) - std::pow(z - a, 3)) < 1e-6);
}

TEST_CASE("xi_c and the Wolpert field against quadrature") {
  Complex z(0.5, 1.2);
  CHECK(std::abs(xi_c(rational(), 50.0, z) - Complex(0.025557259259362357, 0.050846574945467699)) < 1e-11);
  CHECK(std::abs(wolpert_field(rational(), kI, z) - Complex(-0.071225404099296752, 0.12443810753298685)) < 1e-11);
  VectorField w = wolpert(rational(), kI);
  CHECK(std::abs(beta_fd(w, z) * kWolpertScale - rational()(z)) < 1e-6);
}

TEST_CASE("regularized field") {
  RegularizedField xr = rational_field();
  CHECK(std::abs(xr(kI)) < 1e-12);
  for (Complex z : Grid::parse("-2:2:5,0.3:3:4").points())
    CHECK(std::abs(beta(xr.field(), z) - rational()(z)) < 1e-6);
  Complex z(1.0, 0.5);
  double c = xr.cutoff_for(z);
  CHECK(std::abs(xr.at_cutoff(z, 2.0 * c) - xr.at_cutoff(z, c)) <= xr.tail_bound(z, c));
  CHECK(std::abs(xr.leibniz_constant() + std::conj(rational()(kI)) / 2.0) < 1e-15);
}

TEST_CASE("regularized minus Wolpert is holomorphic") {
  RegularizedField xr = rational_field();
  VectorField w = wolpert(rational(), kI);
  VectorField diff = xr.field() - scale(kWolpertScale, w);
  for (Complex z : Grid::parse("-1:1:4,0.5:2:3").points()) CHECK(std::abs(beta_fd(diff, z)) < 1e-6);
}

TEST_CASE("decay toward the boundary point 1") {
  RegularizedField xr = rational_field();
  double a = std::abs(xr.disk_value(cayley(Complex(0, 10)))), b = std::abs(xr.disk_value(cayley(Complex(0, 100))));
  CHECK(b < a);
  CHECK(std::abs(xr.disk_value(Complex(1.0))) == 0.0);
}

TEST_CASE("boundary values") {
  RegularizedField xr = rational_field();
  Complex v = xr(Complex(0.5, 0.0));
  CHECK(std::isfinite(v.real()));
  CHECK(std::abs(v - xr(Complex(0.5, 1e-9))) < 1e-6);
  CHECK(xr.boundary_bound() == doctest::Approx(xr.bounds().D / 4.0 * 1e-8));
}

TEST_CASE("bounds are required") {
  RegularizedFieldConfig cfg;
  CHECK_THROWS_AS(RegularizedField(make_qd(Model::HalfPlane, [](Complex) { return Complex(1.0); }), cfg), Error);
}

#include <doctest.h>

#include <numbers>
#include <random>

#include "hyperharm/circle.hpp"
#include "hyperharm/errors.hpp"
#include "hyperharm/qdiff.hpp"

using namespace hyperharm;

namespace {

CircleField random_field(std::mt19937_64& rng, int n, int band) {
  std::normal_distribution<double> nd;
  std::vector<Complex> c(n, 0.0);
  for (int m = -band; m <= band; ++m) c[m >= 0 ? m : m + n] = Complex(nd(rng), nd(rng));
  return CircleField::from_coefficients(c);
}

}  // namespace

TEST_CASE("samples and coefficients agree") {
  CircleField x = CircleField::from_function([](Complex w) { return 2.0 * w * w + 3.0 / w; }, 64);
  CHECK(std::abs(x.coefficient(2) - 2.0) < 1e-14);
  CHECK(std::abs(x.coefficient(-1) - 3.0) < 1e-14);
  CHECK(std::abs(x.coefficient(0)) < 1e-14);
  CircleField y = CircleField::from_samples(x.samples());
  CHECK(l2_distance(x, y) < 1e-14);
  CHECK(x.l2_norm() == doctest::Approx(std::sqrt(13.0)));
  CHECK_THROWS_AS(CircleField::from_samples(std::vector<Complex>(100)), Error);
}

TEST_CASE("splitting") {
  std::mt19937_64 rng(42);
  for (int k = 0; k < 20; ++k) {
    CircleField x = random_field(rng, 128, 20);
    FourierSplit s = split_tangential_h2(x);
    CHECK(l2_distance(s.tangential_part + s.h2_part, x) < 1e-12);
    CHECK(tangential_defect(s.tangential_part) < 1e-12);
    for (int m = -64; m < 0; ++m) CHECK(std::abs(s.h2_part.coefficient(m)) < 1e-12);
  }
}

TEST_CASE("Killing fields are tangential and in H2") {
  for (const auto& k : killing_basis()) {
    CircleField x = CircleField::from_function([&](Complex w) { return k(w); }, 64);
    CHECK(is_tangential(x));
    FourierSplit s = split_tangential_h2(x);
    CHECK(s.tangential_part.l2_norm() < 1e-13);
    KillingProjection p = killing_project(x);
    CHECK((p.triple - k).norm() < 1e-12);
    CHECK(p.residual < 1e-12);
  }
}

TEST_CASE("tangential projection") {
  CircleField x = CircleField::from_function([](Complex w) { return Complex(1.0) + kI * w; }, 64);
  CHECK_FALSE(is_tangential(x));
  CircleField t = tangential_projection(x);
  CHECK(is_tangential(t));
  auto f = tangential_factor(t);
  // Re(conj(i w)) + 1 = 1 - sin(theta)
  CHECK(f[0] == doctest::Approx(1.0));
  CHECK(f[48] == doctest::Approx(2.0));
}

TEST_CASE("scalar Poisson integral") {
  const int n = 256;
  std::vector<double> f(n);
  for (int k = 0; k < n; ++k) f[k] = std::cos(2.0 * std::numbers::pi * k / n);
  Complex z(0.3, 0.4);
  CHECK(scalar_poisson(f, z) == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("kernel field") {
  CHECK(std::abs(poisson_kernel_field(0.0) - kI) == 0.0);
  VectorField k = make_field(Model::Disk, poisson_kernel_field);
  for (Complex w : {Complex(0.1, 0.2), Complex(-0.5, 0.3), Complex(0.0, -0.7)})
    CHECK(harmonic_residual(k, w).max_abs() < 1e-6);
}

TEST_CASE("Poisson extension of Killing fields") {
  CircleField x = CircleField::from_function([](Complex w) { return kI * w; }, 256);
  VectorField f = poisson_extend(x);
  CHECK(std::abs(f(0.0)) < 1e-12);
  CHECK(std::abs(f(Complex(0.3, 0.2)) - kI * Complex(0.3, 0.2)) < 1e-10);
  CircleField bad = CircleField::from_function([](Complex) { return Complex(1.0); }, 256);
  CHECK_THROWS_AS(poisson_extend(bad), Error);
}

TEST_CASE("boundary convergence of the extension") {
  CircleField x = CircleField::from_function([](Complex w) { return std::cos(2.0 * std::arg(w)) * kI * w; }, 1024);
  VectorField f = poisson_extend(x);
  double e1 = l2_distance(radial_l2_restriction(f, 0.9, 1024), x);
  double e2 = l2_distance(radial_l2_restriction(f, 0.99, 1024), x);
  CHECK(e2 < e1);
  CHECK(e2 < 0.02);
}

TEST_CASE("kernel mass") {
  KernelMass m = kernel_mass(0.5);
  CHECK(std::abs(m.numeric - m.closed_form) < 1e-10);
  CHECK(std::abs(m.closed_form - kI) < 1e-12);
  CHECK(m.printed_closed_form == doctest::Approx(2.7407407407407407).epsilon(1e-14));
  CHECK(kernel_mass_samples(1e-3) == 65536);
  KernelMass small = kernel_mass(0.01);
  CHECK(std::abs(small.numeric - small.closed_form) < 1e-7);
}

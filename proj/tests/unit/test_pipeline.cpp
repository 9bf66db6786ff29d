#include <doctest.h>

#include "hyperharm/catalog.hpp"
#include "hyperharm/errors.hpp"
#include "hyperharm/pipeline.hpp"

using namespace hyperharm;

namespace {

const GroupPresentation& octagon() {
  static const GroupPresentation g = octagon_group();
  return g;
}

Cocycle sample_cocycle() {
  CohomologySpace h(octagon());
  Eigen::VectorXd v = h.h1_basis().col(0) - 0.5 * h.h1_basis().col(3);
  return Cocycle::from_vector(v);
}

}  // namespace

TEST_CASE("partition psi has coboundary c") {
  const auto& g = octagon();
  Cocycle c = sample_cocycle();
  PartitionPsi psi(c, g);
  CHECK(psi.neighbour_count() > 8);
  for (Complex z : probe_points(20, 0.0, 0.5)) {
    CHECK(psi.coverage(z) >= 0.5);
    for (std::size_t k = 0; k < g.generators.size(); ++k) {
      const MoebiusMap& m = g.generators[k];
      Complex d = psi(m.apply(z)) / m.derivative(z) - psi(z);
      CHECK(std::abs(d - c.values[k](z)) < 1e-8);
    }
  }
  PartitionOptions tiny;
  tiny.L = 0;
  tiny.plateau = 0.3;
  tiny.r0 = 0.4;
  PartitionPsi thin(c, g, tiny);
  CHECK_THROWS_AS(thin(Complex(0.5, 0.0)), Error);
}

TEST_CASE("phi of zero and of non-automorphic input") {
  const auto& g = octagon();
  PhiOptions opt;
  opt.boundary_samples = 1024;
  PhiResult r = phi_map(zero_qd(Model::Disk), g, opt);
  CHECK(r.cocycle.norm() == 0.0);
  QuadDiff z2 = make_qd(Model::Disk, [](Complex w) { return w * w; });
  CHECK_THROWS_AS(phi_map(z2, g, opt), Error);
}

TEST_CASE("psi of trivial classes") {
  const auto& g = octagon();
  PsiOptions opt;
  opt.boundary_samples = 1024;
  PsiResult zero = psi_map(zero_cocycle(g), g, opt);
  CHECK(std::abs(zero.raw_qd(Complex(0.1, 0.2))) == 0.0);
  PsiResult cob = psi_map(coboundary(KillingTriple{Complex(0.3, -0.2), 0.7}, g), g, opt);
  for (Complex w : probe_points(10, 0.0, 0.5)) CHECK(std::abs(cob.raw_qd(w)) < 1e-5);
}

TEST_CASE("harmonic lift") {
  const auto& g = octagon();
  Cocycle c = sample_cocycle();
  VectorField y = harmonic_lift(c, g);
  for (Complex w : probe_points(10, 0.0, 0.7)) CHECK(harmonic_residual(y, w).max_abs() < 1e-4);
  auto letters = pairing_letter_values(g, c);
  const MoebiusMap& m = g.side_pairings[0];
  std::vector<Complex> pts, vals;
  for (Complex w : probe_points(200, 0.0, 0.85)) {
    if (std::abs(m.apply(w)) > 0.85) continue;
    pts.push_back(w);
    vals.push_back(y(m.apply(w)) / m.derivative(w) - y(w));
  }
  CHECK((fit_killing(pts, vals).triple - letters[0]).norm() < 1e-3);
}

TEST_CASE("catalog specs") {
  CatalogEntry m = parse_qd_spec("monomial:2");
  CHECK(std::abs(m.qd(Complex(1, 1)) - Complex(0, 2)) < 1e-15);
  REQUIRE(m.closed_form.has_value());
  CatalogEntry s = parse_qd_spec("shifted:1:0.5:2");
  CHECK(std::abs(s.qd(Complex(1, 1)) - Complex(0.5, -1)) < 1e-15);
  CatalogEntry r = parse_qd_spec("rational:(z+i)^-4");
  CHECK_FALSE(r.closed_form.has_value());
  VectorField f = construct_field(r);
  CHECK(std::abs(beta(f, Complex(0.5, 1.0)) - r.qd(Complex(0.5, 1.0))) < 1e-6);
  CHECK_THROWS_AS(parse_qd_spec("monomial:x"), Error);
  CHECK_THROWS_AS(parse_qd_spec("nothing"), Error);
}

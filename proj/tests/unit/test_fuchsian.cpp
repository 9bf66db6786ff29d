#include <doctest.h>

#include "hyperharm/cocycle.hpp"
#include "hyperharm/errors.hpp"
#include "hyperharm/serialize.hpp"
#include "hyperharm/theta.hpp"

using namespace hyperharm;

namespace {

const GroupPresentation& octagon() {
  static const GroupPresentation g = octagon_group();
  return g;
}

}  // namespace

TEST_CASE("octagon group") {
  const auto& g = octagon();
  CHECK(g.genus == 2);
  CHECK(g.generators.size() == 4);
  CHECK(g.side_pairings.size() == 4);
  CHECK(g.relation_residual() < 1e-9);
  for (const auto& m : g.generators) CHECK(m.classify() == IsometryClass::Hyperbolic);
  // side pairing g0 has trace 2 + 2 sqrt 2
  CHECK(g.side_pairings[0].trace_squared() == doctest::Approx(std::pow(2.0 + 2.0 * std::sqrt(2.0), 2)));
  for (std::size_t k = 0; k < g.side_pairings.size(); ++k)
    CHECK(g.evaluate(g.side_pairing_words[k]).distance(g.side_pairings[k]) < 1e-9);
}

TEST_CASE("word counts") {
  CHECK(reduced_word_count(4, 0) == 1);
  CHECK(reduced_word_count(4, 1) == 9);
  CHECK(reduced_word_count(4, 4) == 3201);
  WordCensus c = word_census(octagon(), 3, true);
  CHECK(c.words == reduced_word_count(4, 3));
  CHECK(c.distinct_elements == c.words);
  CHECK(c.non_hyperbolic == 0);
  CHECK(c.identity_words == 0);
  std::size_t n = 0;
  enumerate_elements(octagon(), 4, [&](const Word&, const MoebiusMap&) { ++n; });
  CHECK(n == 3193);
  CHECK_THROWS_AS(enumerate_words(octagon().generators, 8, [](const Word&, const MoebiusMap&) {}, 1000), Error);
}

TEST_CASE("reduction to the domain") {
  const auto& g = octagon();
  Complex w(0.93, -0.2);
  Reduction r = reduce_to_domain(g, w);
  CHECK(std::abs(r.point) < std::abs(w));
  CHECK(std::abs(r.element.apply(w) - r.point) < 1e-12);
  MoebiusMap m = g.side_pairings[1] * g.side_pairings[2].inverse() * g.side_pairings[0];
  Word pw = pairing_word(g, m);
  MoebiusMap prod = MoebiusMap::identity(MatrixModel::SU11);
  for (int l : pw) prod = prod * g.pairing_letter(l);
  CHECK(prod.distance(m) < 1e-9);
  HalfPlaneReducer hr(g);
  Complex z(3.0, 1e-3);
  Reduction rh = hr.reduce(z);
  CHECK(std::abs(rh.element.apply(z) - rh.point) < 1e-9 * std::abs(rh.point));
  CHECK(std::abs(cayley(rh.point)) < 0.95);
}

TEST_CASE("commutator rank") {
  const auto& g = octagon();
  CHECK(commutator_rank(g.generators[0], g.generators[1]) == 3);
  CHECK(commutator_rank(g.generators[2], g.generators[3]) == 3);
  CHECK_THROWS_AS(commutator_rank(g.generators[0], g.generators[0]), Error);
}

TEST_CASE("cocycles and cohomology") {
  const auto& g = octagon();
  CohomologySpace h(g);
  CHECK(h.dims().z1 == 9);
  CHECK(h.dims().b1 == 3);
  CHECK(h.dims().h1 == 6);
  CohomologyDims d = cocycle_space_dims(g);
  CHECK(d.h1 == 6);
  KillingTriple u{Complex(0.2, 0.1), -0.4};
  Cocycle c = coboundary(u, g);
  CHECK(relation_defect(g, c) < 1e-6);
  CHECK(h.class_norm(c) < 1e-9);
  for (std::size_t k = 0; k < g.generators.size(); ++k) {
    Complex z(0.1, 0.3);
    const MoebiusMap& m = g.generators[k];
    CHECK(std::abs(c.values[k](z) - (u(m.apply(z)) / m.derivative(z) - u(z))) < 1e-10);
  }
  // c_{gh} = h^* c_g + c_h
  Word gh{0, 2};
  KillingTriple want = pullback(g.letter(2), c.values[0]) + c.values[1];
  CHECK((cocycle_on_word(g, c, gh) - want).norm() < 1e-12);
  Eigen::VectorXd v = h.h1_basis().col(0);
  Cocycle e = Cocycle::from_vector(v);
  CHECK(h.constraint_residual(e) < 1e-10);
  CHECK(std::abs(h.h1_coords(e)(0) - 1.0) < 1e-10);
  Cocycle back = cocycle_from_pairings(g, [&] {
    std::vector<KillingTriple> p;
    for (std::size_t k = 0; k < g.side_pairings.size(); ++k)
      p.push_back(cocycle_on_word(g, e, g.side_pairing_words[k]));
    return p;
  }());
  CHECK((back - e).norm() < 1e-9);
}

TEST_CASE("Killing pullback in closed form") {
  const auto& g = octagon();
  KillingTriple x{Complex(0.3, -0.1), 0.5};
  for (const auto& m : g.side_pairings) {
    KillingTriple p = pullback(m, x);
    Complex z(0.2, -0.15);
    CHECK(std::abs(p(z) - x(m.apply(z)) / m.derivative(z)) < 1e-12);
  }
  KillingFit f = fit_killing({0.1, Complex(0, 0.3), Complex(-0.4, 0.1), Complex(0.2, -0.5)},
                             {x(0.1), x(Complex(0, 0.3)), x(Complex(-0.4, 0.1)), x(Complex(0.2, -0.5))});
  CHECK((f.triple - x).norm() < 1e-12);
}

TEST_CASE("theta series") {
  const auto& g = octagon();
  CHECK(std::abs(ThetaQD(parse_theta_seed("1"), g, 0)(Complex(0.3, 0.2)) - 1.0) == 0.0);
  CHECK(std::abs(ThetaQD(parse_theta_seed("0"), g, 3)(Complex(0.3, 0.2))) == 0.0);
  CHECK_THROWS_AS(parse_theta_seed("sin z"), Error);
  ThetaQD t(parse_theta_seed("1"), g, 4);
  CHECK(t.element_count() == 3193);
  Complex w(0.2, 0.1);
  double h = 1e-5;
  Complex fd = (t(w + h) - t(w - h)) / (2.0 * h);
  CHECK(std::abs(fd - t.derivative(w)) < 1e-6);
  auto probes = probe_points(20, 0.2, 0.7);
  double d3 = 0.0, d4 = 0.0;
  for (double d : invariance_defects(ThetaQD(parse_theta_seed("1"), g, 3).qd(), g, probes)) d3 = std::max(d3, d);
  for (double d : invariance_defects(t.qd(), g, probes)) d4 = std::max(d4, d);
  CHECK(d4 < d3);
}

TEST_CASE("automorphic fit") {
  const auto& g = octagon();
  ThetaQD t(parse_theta_seed("1"), g, 4);
  AutomorphicQD a([&](Complex w) { return t(w); }, g);
  CHECK(a.side_jump() < 1e-3);
  auto probes = probe_points(30, 0.0, 0.9);
  for (double d : invariance_defects(a.qd(), g, probes)) CHECK(d < 1e-4);
  Complex z(0.3, 2.5);
  Complex w = cayley(z), dc = cayley_derivative(z);
  CHECK(std::abs(a.half_plane_value(z) - a(w) * dc * dc) < 1e-10 * std::max(1.0, std::abs(a.half_plane_value(z))));
  auto sides = side_points(g, 10);
  CHECK(!sides.empty());
  for (const auto& [k, p] : sides) {
    Complex q = g.side_pairings[k].apply(p);
    CHECK(std::abs(reduce_to_domain(g, q).point - q) < 1e-9);
  }
}

TEST_CASE("JSON round trips") {
  const auto& g = octagon();
  GroupPresentation back = group_from_json(Json::parse(to_json(g).dump()));
  CHECK(back.relation_residual() < 1e-9);
  CHECK(back.generators[1].distance(g.generators[1]) < 1e-12);
  Cocycle c = coboundary(KillingTriple{Complex(0.1, 0.2), 0.3}, g);
  Cocycle cb = cocycle_from_json(Json::parse(to_json(c).dump()));
  CHECK((cb - c).norm() == 0.0);
  CHECK_THROWS_AS(cocycle_from_json(Json::parse(R"({"convention":"other","values":[]})")), Error);
  MoebiusMap m = moebius_from_json(Json::parse(R"({"model":"SL2R","a":[2,0],"b":[0,0],"c":[0,0],"d":[0.5,0]})"));
  CHECK(std::abs(m.apply(kI) - 4.0 * kI) < 1e-15);
  CHECK(format_double(0.1) == "1.0000000000000001e-01");
  CsvWriter w({"x", "y"});
  w.row({1.0, 2.0});
  CHECK(w.str() == "x,y\n1.0000000000000000e+00,2.0000000000000000e+00\n");
}

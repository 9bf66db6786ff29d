#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include "hyperharm/hyperharm.h"

TEST_CASE("status reporting") {
  hh_map* m = nullptr;
  double a[2] = {1, 0}, b[2] = {1, 0};
  CHECK(hh_map_create(HH_SL2R, a, b, b, a, &m) == HH_CONSTRAINT_VIOLATION);
  CHECK(m == nullptr);
  CHECK(std::strlen(hh_last_error()) > 0);
  CHECK(std::string(hh_status_name(HH_CONSTRAINT_VIOLATION)) == "ConstraintViolation");
  CHECK(hh_map_apply(nullptr, 0, 1, nullptr, nullptr) == HH_INVALID_ARGUMENT);
  hh_qd* q = nullptr;
  CHECK(hh_qd_parse("bogus", &q) == HH_PARSE_ERROR);
  CHECK(hh_map_from_json("{not json", &m) == HH_PARSE_ERROR);
}

TEST_CASE("maps through the C API") {
  hh_map* m = nullptr;
  double a[2] = {2, 0}, z[2] = {0, 0}, d[2] = {0.5, 0};
  REQUIRE(hh_map_create(HH_SL2R, a, z, z, d, &m) == HH_OK);
  double re, im;
  CHECK(hh_map_apply(m, 0, 1, &re, &im) == HH_OK);
  CHECK(re == 0.0);
  CHECK(im == doctest::Approx(4.0));
  hh_isometry cls;
  CHECK(hh_map_classify(m, 1e-9, &cls) == HH_OK);
  CHECK(cls == HH_HYPERBOLIC);
  char* json = nullptr;
  REQUIRE(hh_map_to_json(m, &json) == HH_OK);
  hh_map* back = nullptr;
  CHECK(hh_map_from_json(json, &back) == HH_OK);
  hh_string_free(json);
  hh_map_free(back);
  hh_map_free(m);
}

TEST_CASE("group, cocycle and dims") {
  hh_group* g = nullptr;
  REQUIRE(hh_group_load("octagon", &g) == HH_OK);
  int z1, b1, h1;
  CHECK(hh_group_dims(g, &z1, &b1, &h1) == HH_OK);
  CHECK(z1 == 9);
  CHECK(b1 == 3);
  CHECK(h1 == 6);
  int rank = 0;
  CHECK(hh_group_commutator_rank(g, 0, 1, &rank) == HH_OK);
  CHECK(rank == 3);
  CHECK(hh_group_commutator_rank(g, 0, 0, &rank) == HH_COMMUTING_INPUTS);
  CHECK(hh_group_commutator_rank(g, 0, 9, &rank) == HH_INVALID_ARGUMENT);
  hh_group* missing = nullptr;
  CHECK(hh_group_load("/nonexistent/group.json", &missing) == HH_PARSE_ERROR);

  const char* cj = R"({"convention":"vector-field","values":[{"a":[0,0],"b":0},{"a":[0,0],"b":0},{"a":[0,0],"b":0},{"a":[0,0],"b":0}]})";
  hh_cocycle* c = nullptr;
  REQUIRE(hh_cocycle_from_json(cj, g, &c) == HH_OK);
  double coords[8];
  int n = 0;
  CHECK(hh_cocycle_class_coords(c, g, coords, 8, &n) == HH_OK);
  CHECK(n == 6);
  CHECK(coords[0] == 0.0);
  hh_cocycle* wrong = nullptr;
  CHECK(hh_cocycle_from_json(R"({"convention":"vector-field","values":[]})", g, &wrong) == HH_INVALID_ARGUMENT);
  hh_cocycle_free(c);
  hh_group_free(g);
}

TEST_CASE("fields through the C API") {
  hh_qd* q = nullptr;
  REQUIRE(hh_qd_parse("monomial:2", &q) == HH_OK);
  CHECK(hh_qd_model(q) == HH_HALF_PLANE);
  hh_field* f = nullptr;
  REQUIRE(hh_field_construct(q, 1e-8, &f) == HH_OK);
  double re, im, r1, r2;
  CHECK(hh_field_beta(f, 1.0, 1.0, &re, &im) == HH_OK);
  CHECK(std::hypot(re - 0.0, im - 2.0) < 1e-10);
  CHECK(hh_field_harmonic_residual(f, 0.5, 1.5, &r1, &r2) == HH_OK);
  CHECK(std::abs(r1) < 1e-6);
  char* csv = nullptr;
  REQUIRE(hh_field_grid_csv(f, "-1:1:2,1:2:2", &csv) == HH_OK);
  std::string text(csv);
  hh_string_free(csv);
  CHECK(text.rfind("x,y,re(xi),im(xi),r1,r2,re(f),im(f)\n", 0) == 0);
  CHECK(hh_field_grid_csv(f, "-1:1:2,-1:2:2", &csv) == HH_INVALID_ARGUMENT);
  hh_field_free(f);
  hh_qd_free(q);
}

TEST_CASE("circle functions through the C API") {
  double num[2], closed[2];
  REQUIRE(hh_kernel_mass(0.01, num, closed) == HH_OK);
  CHECK(std::hypot(num[0] - closed[0], num[1] - closed[1]) < 1e-7);
  CHECK(hh_kernel_mass(0.0, num, closed) == HH_INVALID_ARGUMENT);
  std::string json = R"({"N":64,"samples":[)";
  for (int k = 0; k < 64; ++k) {
    double t = 2.0 * M_PI * k / 64;
    // i w at w = e^{it}
    char buf[80];
    std::snprintf(buf, sizeof buf, "%s[%.17g,%.17g]", k ? "," : "", -std::sin(t), std::cos(t));
    json += buf;
  }
  json += "]}";
  hh_circle* x = nullptr;
  REQUIRE(hh_circle_from_json(json.c_str(), &x) == HH_OK);
  CHECK(hh_circle_size(x) == 64);
  char* out = nullptr;
  REQUIRE(hh_circle_split_json(x, &out) == HH_OK);
  CHECK(std::string(out).find("\"killing\"") != std::string::npos);
  hh_string_free(out);
  REQUIRE(hh_circle_poisson_ring_csv(x, 0.5, 8, &out) == HH_OK);
  CHECK(std::string(out).rfind("theta,re,im\n", 0) == 0);
  hh_string_free(out);
  hh_circle_free(x);
}

#include "hyperharm/catalog.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "hyperharm/errors.hpp"
#include "hyperharm/pipeline.hpp"

namespace hyperharm {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

int parse_int(const std::string& s, const std::string& spec) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::ParseError, "bad integer '" + s + "' in qd spec '" + spec + "'");
}

double parse_double(const std::string& s, const std::string& spec) {
  try {
    std::size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::ParseError, "bad number '" + s + "' in qd spec '" + spec + "'");
}

}  // namespace

CatalogEntry parse_qd_spec(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts.empty()) throw Error(ErrorCode::ParseError, "empty qd spec");
  CatalogEntry e;
  e.spec = spec;
  const std::string& kind = parts[0];
  if (kind == "monomial" && parts.size() == 2) {
    int n = parse_int(parts[1], spec);
    if (n < 0) throw Error(ErrorCode::ParseError, "monomial degree must be >= 0");
    e.qd = make_qd(
        Model::HalfPlane, [n](Complex z) { return std::pow(z, n); }, spec,
        [n](Complex z) { return n == 0 ? Complex(0.0) : double(n) * std::pow(z, n - 1); });
    e.closed_form = monomial(n);
  } else if (kind == "shifted" && parts.size() == 4) {
    int n = parse_int(parts[1], spec);
    if (n < 0) throw Error(ErrorCode::ParseError, "shifted degree must be >= 0");
    Complex a(parse_double(parts[2], spec), parse_double(parts[3], spec));
    e.qd = make_qd(
        Model::HalfPlane, [n, a](Complex z) { return std::pow(z - a, n); }, spec,
        [n, a](Complex z) { return n == 0 ? Complex(0.0) : double(n) * std::pow(z - a, n - 1); });
    e.closed_form = shifted(n, a);
  } else if (kind == "rational" && parts.size() == 2 && parts[1] == "(z+i)^-4") {
    e.qd = make_qd(
        Model::HalfPlane, [](Complex z) { return std::pow(z + kI, -4); }, spec,
        [](Complex z) { return -4.0 * std::pow(z + kI, -5); }, [](Complex z) { return 20.0 * std::pow(z + kI, -6); });
  } else if (kind == "theta" && parts.size() == 2) {
    int L = parse_int(parts[1], spec);
    auto a = std::make_shared<AutomorphicQD>(automorphic_theta("1", octagon_group(), L));
    e.qd = a->half_plane_qd();
    e.qd.label = spec;
    e.automorphic = a;
  } else {
    throw Error(ErrorCode::ParseError,
                "qd spec must be monomial:n, shifted:n:a_re:a_im, rational:(z+i)^-4 or theta:L, got '" + spec + "'");
  }
  return e;
}

VectorField construct_field(const CatalogEntry& e, double tail_tol) {
  if (e.closed_form) return *e.closed_form;
  RegularizedFieldConfig cfg;
  cfg.tail_tol = tail_tol;
  cfg.bounds = sampled_bounds(e.qd);
  if (e.automorphic) {
    cfg.quadrature.abs_tol = tail_tol / 10.0;
    cfg.quadrature.rel_tol = 1e-10;
  }
  return RegularizedField(e.qd, cfg).field();
}

}  // namespace hyperharm

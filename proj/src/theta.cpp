#include "hyperharm/theta.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "hyperharm/circle.hpp"
#include "hyperharm/errors.hpp"

namespace hyperharm {

QuadDiff parse_theta_seed(const std::string& spec) {
  if (spec == "0") return zero_qd(Model::Disk);
  int n = -1;
  if (spec == "1") {
    n = 0;
  } else if (spec.rfind("z^", 0) == 0) {
    try {
      n = std::stoi(spec.substr(2));
    } catch (const std::exception&) {
      n = -1;
    }
  } else if (spec == "z") {
    n = 1;
  }
  if (n < 0) throw Error(ErrorCode::ParseError, "theta seed must be 0, 1, z or z^n, got '" + spec + "'");
  return make_qd(
      Model::Disk, [n](Complex w) { return std::pow(w, n); }, spec,
      [n](Complex w) { return n == 0 ? Complex(0.0) : double(n) * std::pow(w, n - 1); });
}

namespace {

constexpr std::size_t kStoreLimit = 10'000'000;

struct Sum {
  Complex value{0.0};
  Complex deriv{0.0};
};

void accumulate(const QuadDiff& seed, const ThetaElement& e, Complex w, bool want_deriv, Sum& s) {
  Complex den = e.c * w + e.d;
  Complex g1 = 1.0 / (den * den);  // g'(w)
  Complex gw = (e.a * w + e.b) / den;
  Complex f0 = seed.coeff(gw);
  s.value += f0 * g1 * g1;
  if (want_deriv) {
    Complex g2 = -2.0 * e.c / (den * den * den);
    Complex df0 = seed.deriv ? seed.deriv(gw) : Complex(0.0);
    s.deriv += df0 * g1 * g1 * g1 + 2.0 * f0 * g1 * g2;
  }
}

}  // namespace

ThetaQD::ThetaQD(QuadDiff seed, const GroupPresentation& g, int L) : seed_(std::move(seed)), group_(g), L_(L) {
  if (seed_.model != Model::Disk) throw Error(ErrorCode::InvalidArgument, "theta seeds live on the disk");
  if (L < 0 || L > 10) throw Error(ErrorCode::InvalidArgument, "theta truncation must be in [0, 10]");
  int letters = 2 * static_cast<int>(g.side_pairings.size());
  if (reduced_word_count(letters / 2, L) > kWordCap)
    throw Error(ErrorCode::TruncationTooLarge, "theta truncation exceeds the word cap");
  if (reduced_word_count(letters / 2, L) <= kStoreLimit) {
    auto elems = std::make_shared<std::vector<ThetaElement>>();
    elems->reserve(reduced_word_count(letters / 2, L));
    enumerate_elements(g, L, [&](const Word&, const MoebiusMap& m) { elems->push_back({m.a(), m.b(), m.c(), m.d()}); });
    count_ = elems->size();
    elements_ = elems;
  } else {
    enumerate_elements(g, L, [&](const Word&, const MoebiusMap&) { ++count_; });
  }
}

Complex ThetaQD::operator()(Complex w) const {
  if (!(std::abs(w) < 1.0)) throw Error(ErrorCode::DomainViolation, "theta series lives on the open disk");
  Sum s;
  if (elements_) {
    for (const auto& e : *elements_) accumulate(seed_, e, w, false, s);
  } else {
    enumerate_elements(group_, L_, [&](const Word&, const MoebiusMap& m) {
      accumulate(seed_, {m.a(), m.b(), m.c(), m.d()}, w, false, s);
    });
  }
  return s.value;
}

Complex ThetaQD::derivative(Complex w) const {
  if (!(std::abs(w) < 1.0)) throw Error(ErrorCode::DomainViolation, "theta series lives on the open disk");
  Sum s;
  if (elements_) {
    for (const auto& e : *elements_) accumulate(seed_, e, w, true, s);
  } else {
    enumerate_elements(group_, L_, [&](const Word&, const MoebiusMap& m) {
      accumulate(seed_, {m.a(), m.b(), m.c(), m.d()}, w, true, s);
    });
  }
  return s.deriv;
}

QuadDiff ThetaQD::qd() const {
  auto self = std::make_shared<ThetaQD>(*this);
  return make_qd(
      Model::Disk, [self](Complex w) { return (*self)(w); }, "theta:" + std::to_string(L_),
      [self](Complex w) { return self->derivative(w); });
}

double invariance_defect(const QuadDiff& f, const MoebiusMap& g, const std::vector<Complex>& probes) {
  double d = 0.0;
  for (Complex w : probes) {
    Complex gp = g.derivative(w);
    d = std::max(d, std::abs(f.coeff(g.apply(w)) * gp * gp - f.coeff(w)));
  }
  return d;
}

std::vector<double> invariance_defects(const QuadDiff& f, const GroupPresentation& g,
                                       const std::vector<Complex>& probes) {
  std::vector<double> out;
  for (const auto& m : g.generators) out.push_back(invariance_defect(f, m, probes));
  return out;
}

std::vector<Complex> probe_points(int count, double r_min, double r_max) {
  // Deterministic spiral through the annulus.
  std::vector<Complex> pts;
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int k = 0; k < count; ++k) {
    double t = count == 1 ? 0.5 : double(k) / (count - 1);
    double r = std::sqrt(r_min * r_min + t * (r_max * r_max - r_min * r_min));
    pts.push_back(std::polar(r, golden * k + 0.3));
  }
  return pts;
}

std::vector<std::pair<int, Complex>> side_points(const GroupPresentation& g, int per_side, double offset) {
  std::vector<std::pair<int, Complex>> out;
  std::vector<MoebiusMap> letters;
  for (int l = 0; l < 2 * static_cast<int>(g.side_pairings.size()); ++l) letters.push_back(g.pairing_letter(l));
  for (std::size_t k = 0; k < g.side_pairings.size(); ++k) {
    const MoebiusMap& s = g.side_pairings[k];
    // The side is the bisector of 0 and s^-1(0): the geodesic through the
    // hyperbolic midpoint t, perpendicular to the ray towards s^-1(0).
    Complex p = s.inverse().apply(Complex(0.0));
    Complex dir = p / std::abs(p);
    double t = std::tanh(std::atanh(std::abs(p)) / 2.0);
    for (int j = 0; j < per_side; ++j) {
      Complex is(0.0, -1.0 + 2.0 * (j + offset) / per_side);
      Complex z = dir * (is + t) / (1.0 + t * is);
      bool inside = true;
      for (const auto& m : letters) inside = inside && std::abs(m.apply(z)) >= std::abs(z) - 1e-12;
      if (inside) out.emplace_back(static_cast<int>(k), z);
    }
  }
  return out;
}

AutomorphicQD::AutomorphicQD(const ComplexFn& f, const GroupPresentation& g, const AutomorphicFitOptions& opt)
    : group_(g), radius_(opt.radius) {
  if (!g.has_side_pairings()) throw Error(ErrorCode::InvalidArgument, "automorphic evaluation needs side pairings");
  reducer_ = std::make_shared<HalfPlaneReducer>(g);
  if (!(opt.radius > 0.0 && opt.radius < 1.0) || !(opt.data_radius > 0.0 && opt.data_radius < 1.0))
    throw Error(ErrorCode::InvalidArgument, "fit radii must be in (0, 1)");
  if (opt.degree < 1 || opt.data_points < 1 || opt.side_points < 2)
    throw Error(ErrorCode::InvalidArgument, "fit sizes must be positive");
  const int n = opt.degree;
  auto sides = side_points(g, 4 * opt.side_points);
  auto data = probe_points(opt.data_points, 0.0, opt.data_radius);
  // Every fourth side point goes to the fit, the rest are held out.
  std::vector<std::pair<int, Complex>> fit_sides, check_sides;
  for (std::size_t i = 0; i < sides.size(); ++i) (i % 4 == 1 ? fit_sides : check_sides).push_back(sides[i]);

  Eigen::MatrixXcd a(fit_sides.size() + data.size(), n);
  Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(a.rows());
  Eigen::Index r = 0;
  for (auto [k, z] : fit_sides) {
    const MoebiusMap& s = g.side_pairings[k];
    Complex sz = s.apply(z), d = s.derivative(z), d2 = d * d;
    Complex p1 = 1.0, p2 = 1.0;
    for (int j = 0; j < n; ++j) {
      a(r, j) = p1 * d2 - p2;
      p1 *= sz / radius_;
      p2 *= z / radius_;
    }
    ++r;
  }
  std::vector<Complex> fvals(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) fvals[i] = f(data[i]);
  for (std::size_t i = 0; i < data.size(); ++i, ++r) {
    Complex p = 1.0;
    for (int j = 0; j < n; ++j) {
      a(r, j) = p;
      p *= data[i] / radius_;
    }
    rhs(r) = fvals[i];
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  Eigen::VectorXcd c = svd.solve(rhs);
  coeffs_ = std::make_shared<std::vector<Complex>>(c.data(), c.data() + c.size());

  for (auto [k, z] : check_sides) {
    const MoebiusMap& s = g.side_pairings[k];
    Complex d = s.derivative(z);
    side_jump_ = std::max(side_jump_, std::abs(polynomial(s.apply(z)) * d * d - polynomial(z)));
  }
  double ss = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) ss += std::norm(polynomial(data[i]) - fvals[i]);
  data_residual_ = std::sqrt(ss / data.size());
}

Complex AutomorphicQD::polynomial(Complex w) const {
  Complex t = w / radius_, acc = 0.0;
  for (auto it = coeffs_->rbegin(); it != coeffs_->rend(); ++it) acc = acc * t + *it;
  return acc;
}

Complex AutomorphicQD::polynomial_derivative(Complex w) const {
  Complex t = w / radius_, acc = 0.0;
  const auto& c = *coeffs_;
  for (std::size_t n = c.size() - 1; n >= 1; --n) acc = acc * t + double(n) * c[n];
  return acc / radius_;
}

Complex AutomorphicQD::operator()(Complex w) const {
  Reduction r = reduce_to_domain(group_, w);
  Complex d = r.element.derivative(w);
  return polynomial(r.point) * d * d;
}

Complex AutomorphicQD::derivative(Complex w) const {
  Reduction r = reduce_to_domain(group_, w);
  Complex d = r.element.derivative(w), dd = r.element.second_derivative(w);
  return polynomial_derivative(r.point) * d * d * d + 2.0 * polynomial(r.point) * d * dd;
}

Complex AutomorphicQD::half_plane_value(Complex z) const {
  Reduction r = reducer_->reduce(z);
  Complex u = r.point, w = cayley(u), cd = cayley_derivative(u), rd = r.element.derivative(z);
  return polynomial(w) * cd * cd * rd * rd;
}

Complex AutomorphicQD::half_plane_derivative(Complex z) const {
  Reduction r = reducer_->reduce(z);
  Complex u = r.point, w = cayley(u);
  Complex c1 = cayley_derivative(u), c2 = -4.0 * kI / ((u + kI) * (u + kI) * (u + kI));
  Complex p = polynomial(w), dp = polynomial_derivative(w);
  Complex ph = p * c1 * c1, dph = dp * c1 * c1 * c1 + 2.0 * p * c1 * c2;
  Complex r1 = r.element.derivative(z), r2 = r.element.second_derivative(z);
  return dph * r1 * r1 * r1 + 2.0 * ph * r1 * r2;
}

QuadDiff AutomorphicQD::half_plane_qd() const {
  auto self = std::make_shared<AutomorphicQD>(*this);
  return make_qd(
      Model::HalfPlane, [self](Complex z) { return self->half_plane_value(z); }, "automorphic",
      [self](Complex z) { return self->half_plane_derivative(z); });
}

QuadDiff AutomorphicQD::qd() const {
  auto self = std::make_shared<AutomorphicQD>(*this);
  return make_qd(
      Model::Disk, [self](Complex w) { return (*self)(w); }, "automorphic",
      [self](Complex w) { return self->derivative(w); });
}

}  // namespace hyperharm

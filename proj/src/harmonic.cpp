#include "hyperharm/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hyperharm/errors.hpp"

namespace hyperharm {

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// -i sum_k C(n,k) u^(n-k) (-2i)^k y^(k+3)/(k+3)
Complex binomial_field(int n, Complex u, double y) {
  Complex acc = 0.0;
  Complex m2i(0.0, -2.0);
  for (int k = 0; k <= n; ++k) {
    acc += binomial(n, k) * std::pow(u, n - k) * std::pow(m2i, k) * std::pow(y, k + 3) / double(k + 3);
  }
  return -kI * acc;
}

void require_upper(Complex z) {
  if (!(z.imag() > 0.0)) throw Error(ErrorCode::DomainViolation, "point must lie in the open half-plane");
}

}  // namespace

Complex wolpert_field(const QuadDiff& q, Complex w, Complex z, const QuadratureOptions& opt) {
  require_upper(w);
  require_upper(z);
  Complex zb = std::conj(z);
  Complex dz = z - w;
  auto integrand = [&](double t) {
    Complex zeta = w + t * dz;
    Complex u = zb - zeta;
    return u * u * q.coeff(zeta) * dz;
  };
  return std::conj(integrate(integrand, 0.0, 1.0, opt).value);
}

VectorField wolpert(const QuadDiff& q, Complex w, const QuadratureOptions& opt) {
  return make_field(
      Model::HalfPlane, [q, w, opt](Complex z) { return wolpert_field(q, w, z, opt); }, "wolpert",
      FieldKind::Quadrature);
}

Complex xi_c(const QuadDiff& q, double c, Complex z, const QuadratureOptions& opt) {
  if (!(c >= 0.0)) throw Error(ErrorCode::DomainViolation, "cutoff must be non-negative");
  require_upper(z);
  Complex zb = std::conj(z);
  auto integrand = [&](double zeta) {
    Complex p = zb + 2.0 * kI * zeta;
    if (!(p.imag() > 0.0)) throw Error(ErrorCode::DomainViolation, "segment leaves the half-plane");
    return kI * zeta * zeta * std::conj(q.coeff(p));
  };
  return integrate(integrand, z.imag(), c, opt).value;
}

Complex monomial_field(int n, Complex z) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "monomial degree must be >= 0");
  require_upper(z);
  return binomial_field(n, z, z.imag());
}

VectorField monomial(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "monomial degree must be >= 0");
  return make_field(
      Model::HalfPlane, [n](Complex z) { return monomial_field(n, z); }, "monomial:" + std::to_string(n),
      FieldKind::ClosedForm,
      [n](Complex z) {
        double y = z.imag();
        return 0.5 * y * y * std::pow(std::conj(z), n);
      });
}

Complex shifted_field(int n, Complex a, Complex z) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "degree must be >= 0");
  require_upper(z);
  return binomial_field(n, z - std::conj(a), z.imag());
}

VectorField shifted(int n, Complex a) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "degree must be >= 0");
  return make_field(
      Model::HalfPlane, [n, a](Complex z) { return shifted_field(n, a, z); }, "shifted:" + std::to_string(n),
      FieldKind::ClosedForm,
      [n, a](Complex z) {
        double y = z.imag();
        return 0.5 * y * y * std::pow(std::conj(z - a), n);
      });
}

YPowerField y_power_field(int n, const QuadDiff& f) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "y_power_field needs n >= 3");
  if (f.model != Model::HalfPlane) throw Error(ErrorCode::InvalidArgument, "expected a half-plane coefficient");
  YPowerField out;
  auto fc = f.coeff;
  out.field = make_field(
      Model::HalfPlane, [n, fc](Complex z) { return std::pow(z.imag(), n) * fc(z); },
      "y^" + std::to_string(n) + "*f", FieldKind::ClosedForm,
      [n, fc](Complex z) { return 0.5 * kI * double(n) * std::pow(z.imag(), n - 1) * fc(z); });
  out.predicted_qd = make_qd(
      Model::HalfPlane,
      [n, fc](Complex z) { return -double(n) * kI * std::pow(z.imag(), n - 3) * std::conj(fc(z)); },
      "y-power prediction");
  return out;
}

RegularizedField::RegularizedField(QuadDiff q, RegularizedFieldConfig cfg)
    : q_(qd_to_half_plane(q)), cfg_(std::move(cfg)) {
  if (!cfg_.bounds) throw Error(ErrorCode::BoundsMissing, "xi_reg needs D, K1, K2");
  bounds_ = *cfg_.bounds;
  for (double v : {bounds_.D, bounds_.K1, bounds_.K2})
    if (!std::isfinite(v) || v < 0.0) throw Error(ErrorCode::BoundsMissing, "bounds must be finite and >= 0");
  if (!(cfg_.tail_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tail_tol must be positive");
  k_ = -0.5 * std::conj(q_.coeff(kI));
}

Complex RegularizedField::g(double zeta, Complex z) const {
  return kI * zeta * zeta * std::conj(q_.coeff(std::conj(z) + 2.0 * kI * zeta));
}

Complex RegularizedField::dg_at_i(double zeta) const {
  return kI * zeta * zeta * std::conj(coeff_derivative(q_, Complex(0.0, 2.0 * zeta - 1.0)));
}

double RegularizedField::tail_bound(Complex z, double c) const {
  return std::norm(z - kI) * bounds_.K2 / (4.0 * c);
}

double RegularizedField::boundary_bound() const { return bounds_.D * cfg_.boundary_eps / 4.0; }

double RegularizedField::cutoff_for(Complex z) const {
  double base = 2.0 * std::max(z.imag(), 1.0);
  double need = std::norm(z - kI) * bounds_.K2 / (4.0 * cfg_.tail_tol);
  return std::min(std::max(base, need), std::max(cfg_.max_cutoff, base));
}

Complex RegularizedField::at_cutoff(Complex z, double c) const {
  if (z.imag() < -1e-12 * std::max(1.0, std::abs(z)))
    throw Error(ErrorCode::DomainViolation, "xi_reg is defined on the closed half-plane");
  if (!(c >= 1.0)) throw Error(ErrorCode::InvalidArgument, "cutoff must be >= 1");
  if (z.imag() < 0.0) z = Complex(z.real(), 0.0);
  if (z == kI) return 0.0;
  QuadratureOptions opt = cfg_.quadrature;
  opt.abs_tol = std::min(opt.abs_tol, cfg_.tail_tol / 10.0);
  double lower = std::max(z.imag(), cfg_.boundary_eps);
  Complex dz = z - kI;
  auto near = [&](double s) {
    double zeta = std::exp(s);
    return g(zeta, z) * zeta;
  };
  auto far = [&](double s) {
    double zeta = std::exp(s);
    return (g(zeta, z) - g(zeta, kI) - dz * dg_at_i(zeta)) * zeta;
  };
  // Split at m = max(Im z, 1): below m only the part of the integrand that
  // stays inside the half-plane is integrated.
  double m = std::max(z.imag(), 1.0);
  Complex i1 = 0.0;
  if (z.imag() < 1.0) {
    i1 = integrate(near, std::log(lower), 0.0, opt).value;
  } else if (z.imag() > 1.0) {
    auto base = [&](double s) {
      double zeta = std::exp(s);
      return (g(zeta, kI) + dz * dg_at_i(zeta)) * zeta;
    };
    i1 = -integrate(base, 0.0, std::log(m), opt).value;
  }
  Complex i2 = integrate(far, std::log(m), std::log(std::max(c, m)), opt).value;
  return i1 + i2 - dz * k_;
}

Complex RegularizedField::operator()(Complex z) const { return at_cutoff(z, cutoff_for(z)); }

VectorField RegularizedField::field() const {
  RegularizedField self = *this;
  return make_field(
      Model::HalfPlane, [self](Complex z) { return self(z); }, "xi_reg", FieldKind::Quadrature);
}

VectorField RegularizedField::field_at_cutoff(double c) const {
  RegularizedField self = *this;
  return make_field(
      Model::HalfPlane, [self, c](Complex z) { return self.at_cutoff(z, c); }, "xi_reg", FieldKind::Quadrature);
}

Complex RegularizedField::disk_value(Complex w) const {
  if (std::abs(w) > 1.0 + 1e-12) throw Error(ErrorCode::DomainViolation, "point outside the closed disk");
  if (std::abs(1.0 - w) < 1e-14) return 0.0;
  return (*this)(cayley_inv(w)) / cayley_inv_derivative(w);
}

VectorField RegularizedField::disk_field() const {
  RegularizedField self = *this;
  return make_field(
      Model::Disk, [self](Complex w) { return self.disk_value(w); }, "chi", FieldKind::Quadrature);
}

VectorField RegularizedField::disk_field_at_cutoff(double c) const {
  RegularizedField self = *this;
  return make_field(
      Model::Disk,
      [self, c](Complex w) {
        if (std::abs(1.0 - w) < 1e-14) return Complex(0.0);
        return self.at_cutoff(cayley_inv(w), c) / cayley_inv_derivative(w);
      },
      "chi", FieldKind::Quadrature);
}

std::vector<Complex> bound_sample_points() {
  std::vector<Complex> pts;
  for (int i = 0; i <= 20; ++i) {
    double r = 0.99 * i / 20.0;
    int na = i == 0 ? 1 : 48;
    for (int k = 0; k < na; ++k) pts.push_back(cayley_inv(std::polar(r, 2.0 * std::numbers::pi * (k + 0.5) / na)));
  }
  return pts;
}

BoundsReport sampled_bounds(const QuadDiff& q, double safety) {
  BoundsReport b = derivative_bounds(q, bound_sample_points());
  if (!std::isfinite(b.D) || !std::isfinite(b.K1) || !std::isfinite(b.K2))
    throw Error(ErrorCode::BoundsMissing, "derivative bounds are not finite");
  b.D *= safety;
  b.K1 *= safety;
  b.K2 *= safety;
  return b;
}

Complex xi_reg(const QuadDiff& q, const std::optional<BoundsReport>& bounds, Complex z, double tail_tol) {
  RegularizedFieldConfig cfg;
  cfg.bounds = bounds;
  cfg.tail_tol = tail_tol;
  return RegularizedField(q, cfg)(z);
}

Complex closed_disk_extension(const QuadDiff& q, const std::optional<BoundsReport>& bounds, Complex w,
                              double tail_tol) {
  RegularizedFieldConfig cfg;
  cfg.bounds = bounds;
  cfg.tail_tol = tail_tol;
  return RegularizedField(q, cfg).disk_value(w);
}

}  // namespace hyperharm

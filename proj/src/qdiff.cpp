#include "hyperharm/qdiff.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hyperharm/errors.hpp"

namespace hyperharm {

double ConformalMetric::conformal_factor_sq(Complex z) const {
  if (model == Model::HalfPlane) {
    if (!(z.imag() > 0.0)) throw Error(ErrorCode::DomainViolation, "point not in the half-plane");
    return 1.0 / (z.imag() * z.imag());
  }
  double s = 1.0 - std::norm(z);
  if (!(s > 0.0)) throw Error(ErrorCode::DomainViolation, "point not in the disk");
  return 4.0 / (s * s);
}

QuadDiff make_qd(Model model, ComplexFn coeff, std::string label, ComplexFn deriv, ComplexFn deriv2) {
  QuadDiff q;
  q.model = model;
  q.coeff = std::move(coeff);
  q.deriv = std::move(deriv);
  q.deriv2 = std::move(deriv2);
  q.label = std::move(label);
  return q;
}

QuadDiff zero_qd(Model model) {
  auto zero = [](Complex) { return Complex(0.0); };
  return make_qd(model, zero, "0", zero, zero);
}

QuadDiff qd_to_half_plane(const QuadDiff& q) {
  if (q.model == Model::HalfPlane) return q;
  QuadDiff out;
  out.model = Model::HalfPlane;
  out.label = q.label;
  out.coeff = [f = q.coeff](Complex z) {
    Complex d = cayley_derivative(z);
    return f(cayley(z)) * d * d;
  };
  if (q.deriv) {
    out.deriv = [f = q.coeff, g = q.deriv](Complex z) {
      Complex d = cayley_derivative(z);
      Complex dd = -4.0 * kI / ((z + kI) * (z + kI) * (z + kI));
      Complex w = cayley(z);
      return g(w) * d * d * d + 2.0 * f(w) * d * dd;
    };
  }
  return out;
}

QuadDiff qd_to_disk(const QuadDiff& q) {
  if (q.model == Model::Disk) return q;
  QuadDiff out;
  out.model = Model::Disk;
  out.label = q.label;
  out.coeff = [f = q.coeff](Complex w) {
    Complex d = cayley_inv_derivative(w);
    return f(cayley_inv(w)) * d * d;
  };
  return out;
}

Grid Grid::parse(const std::string& spec) {
  Grid g;
  char c1, c2, comma, c3, c4;
  std::istringstream is(spec);
  if (!(is >> g.x0 >> c1 >> g.x1 >> c2 >> g.nx >> comma >> g.y0 >> c3 >> g.y1 >> c4 >> g.ny) || c1 != ':' ||
      c2 != ':' || comma != ',' || c3 != ':' || c4 != ':')
    throw Error(ErrorCode::ParseError, "grid must look like x0:x1:nx,y0:y1:ny, got '" + spec + "'");
  if (g.nx < 1 || g.ny < 1) throw Error(ErrorCode::ParseError, "grid counts must be positive");
  return g;
}

std::vector<Complex> Grid::points() const {
  std::vector<Complex> pts;
  pts.reserve(static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j) {
    double y = ny == 1 ? y0 : y0 + (y1 - y0) * j / (ny - 1);
    for (int i = 0; i < nx; ++i) {
      double x = nx == 1 ? x0 : x0 + (x1 - x0) * i / (nx - 1);
      pts.emplace_back(x, y);
    }
  }
  return pts;
}

std::string Grid::to_string() const {
  std::ostringstream os;
  os << x0 << ":" << x1 << ":" << nx << "," << y0 << ":" << y1 << ":" << ny;
  return os.str();
}

double default_step(Complex z) { return 1e-4 * std::max(1.0, std::abs(z)); }

Complex fd_dzbar(const ComplexFn& f, Complex z, double h) {
  Complex fx = (f(z + h) - f(z - h)) / (2.0 * h);
  Complex fy = (f(z + kI * h) - f(z - kI * h)) / (2.0 * h);
  return 0.5 * (fx + kI * fy);
}

Complex fd_dz(const ComplexFn& f, Complex z, double h) {
  Complex fx = (f(z + h) - f(z - h)) / (2.0 * h);
  Complex fy = (f(z + kI * h) - f(z - kI * h)) / (2.0 * h);
  return 0.5 * (fx - kI * fy);
}

Complex cauchy_derivative(const ComplexFn& f, Complex z, double r, int order, int nodes) {
  Complex acc = 0.0;
  for (int k = 0; k < nodes; ++k) {
    Complex e = std::polar(1.0, 2.0 * std::numbers::pi * k / nodes);
    acc += f(z + r * e) * std::pow(e, -order);
  }
  double fact = order == 2 ? 2.0 : 1.0;
  return fact * acc / (static_cast<double>(nodes) * std::pow(r, order));
}

namespace {

double interior_scale(Model model, Complex z) {
  double s = model == Model::HalfPlane ? z.imag() : 1.0 - std::abs(z);
  if (!(s > 0.0)) throw Error(ErrorCode::DomainViolation, "point outside the open domain");
  return s;
}

void check_step(Model model, Complex z, double h) {
  double s = model == Model::HalfPlane ? z.imag() : 1.0 - std::abs(z);
  if (s <= 2.0 * h) throw Error(ErrorCode::TooCloseToBoundary, "point within 2h of the boundary");
}

Complex beta_half_plane(const VectorField& xi, Complex z, double h, bool allow_exact) {
  Complex dzb;
  if (allow_exact && xi.dzbar) {
    check_step(Model::HalfPlane, z, h > 0.0 ? h : default_step(z));
    dzb = xi.dzbar(z);
  } else if (h > 0.0) {
    check_step(Model::HalfPlane, z, h);
    dzb = fd_dzbar(xi.eval, z, h);
  } else {
    // Richardson pair: the h^2 term of the central stencil does not vanish
    // even for holomorphic fields.
    check_step(Model::HalfPlane, z, default_step(z));
    h = std::min(1e-3 * std::max(1.0, std::abs(z)), 0.25 * z.imag());
    dzb = (4.0 * fd_dzbar(xi.eval, z, 0.5 * h) - fd_dzbar(xi.eval, z, h)) / 3.0;
  }
  double y = z.imag();
  return std::conj(2.0 * dzb / (y * y));
}

Complex beta_any(const VectorField& xi, Complex w, double h, bool allow_exact) {
  if (xi.model == Model::HalfPlane) return beta_half_plane(xi, w, h, allow_exact);
  VectorField xh = disk_to_half_plane(xi);
  Complex z = cayley_inv(w);
  Complex d = cayley_inv_derivative(w);
  return beta_half_plane(xh, z, h, allow_exact) * d * d;
}

}  // namespace

Complex coeff_derivative(const QuadDiff& q, Complex z) {
  if (q.deriv) return q.deriv(z);
  return cauchy_derivative(q.coeff, z, 0.1 * interior_scale(q.model, z), 1);
}

Complex coeff_second_derivative(const QuadDiff& q, Complex z) {
  if (q.deriv2) return q.deriv2(z);
  return cauchy_derivative(q.coeff, z, 0.1 * interior_scale(q.model, z), 2);
}

Complex beta(const VectorField& xi, Complex z, double h) { return beta_any(xi, z, h, true); }

Complex beta_fd(const VectorField& xi, Complex z, double h) { return beta_any(xi, z, h, false); }

QuadDiff beta_differential(const VectorField& xi, double h) {
  return make_qd(xi.model, [xi, h](Complex z) { return beta(xi, z, h); }, "beta(" + xi.label + ")");
}

double HarmonicResidual::max_abs() const { return std::max(std::abs(r1), std::abs(r2)); }

namespace {

HarmonicResidual residual_stencil(const ComplexFn& f, Complex z, double h) {
  Complex c = f(z);
  Complex xp = f(z + h), xm = f(z - h), yp = f(z + kI * h), ym = f(z - kI * h);
  Complex fx = (xp - xm) / (2.0 * h), fy = (yp - ym) / (2.0 * h);
  Complex fxx = (xp - 2.0 * c + xm) / (h * h), fyy = (yp - 2.0 * c + ym) / (h * h);
  double y = z.imag();
  HarmonicResidual r;
  r.r1 = fxx.real() + fyy.real() - (2.0 / y) * (fx.imag() + fy.real());
  r.r2 = fxx.imag() + fyy.imag() + (2.0 / y) * (fx.real() - fy.imag());
  return r;
}

}  // namespace

HarmonicResidual harmonic_residual(const VectorField& xi_in, Complex z, double h) {
  const VectorField xi = as_half_plane(xi_in);
  if (xi_in.model == Model::Disk) z = cayley_inv(z);
  if (h > 0.0) {
    check_step(Model::HalfPlane, z, h);
    return residual_stencil(xi.eval, z, h);
  }
  // Default: Richardson combination of steps h and h/2, which removes the
  // h^2 term and lets h be large enough to keep rounding small.
  check_step(Model::HalfPlane, z, default_step(z));
  h = std::min(4e-3 * std::max(1.0, std::abs(z)), 0.25 * z.imag());
  HarmonicResidual a = residual_stencil(xi.eval, z, h), b = residual_stencil(xi.eval, z, 0.5 * h);
  return {(4.0 * b.r1 - a.r1) / 3.0, (4.0 * b.r2 - a.r2) / 3.0};
}

double holomorphy_residual(const QuadDiff& q, Complex z, double h) {
  if (h <= 0.0) h = default_step(z);
  check_step(q.model, z, h);
  return std::abs(fd_dzbar(q.coeff, z, h));
}

double qd_norm(const QuadDiff& q, Complex z) {
  if (q.model == Model::HalfPlane) {
    double y = interior_scale(Model::HalfPlane, z);
    return std::abs(q.coeff(z)) * y * y;
  }
  double s = 1.0 - std::norm(z);
  if (!(s > 0.0)) throw Error(ErrorCode::DomainViolation, "point not in the disk");
  return std::abs(q.coeff(z)) * s * s / 4.0;
}

BoundsReport derivative_bounds(const QuadDiff& q_in, const std::vector<Complex>& points) {
  QuadDiff q = qd_to_half_plane(q_in);
  BoundsReport b;
  for (Complex z : points) {
    double y = interior_scale(Model::HalfPlane, z);
    b.D = std::max(b.D, std::abs(q.coeff(z)) * y * y);
    b.K1 = std::max(b.K1, std::abs(coeff_derivative(q, z)) * y * y * y);
    b.K2 = std::max(b.K2, std::abs(coeff_second_derivative(q, z)) * y * y * y * y);
  }
  return b;
}

BoundsReport derivative_bounds(const QuadDiff& q, const Grid& grid) { return derivative_bounds(q, grid.points()); }

Complex beltrami_of(const QuadDiff& q, Complex z) {
  Complex d = z - std::conj(z);
  return d * d * std::conj(q.coeff(z));
}

}  // namespace hyperharm

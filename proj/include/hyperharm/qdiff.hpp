#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyperharm/field.hpp"

namespace hyperharm {

// Wolpert's normalization of the potential equation relative to beta.
inline constexpr double kWolpertScale = -1.0 / 8.0;

struct ConformalMetric {
  Model model = Model::HalfPlane;
  // lambda^2(z): 1/Im(z)^2 on the half-plane, 4/(1-|z|^2)^2 on the disk.
  double conformal_factor_sq(Complex z) const;
};

// q = f dz^2. deriv/deriv2 are exact f', f'' when available.
struct QuadDiff {
  Model model = Model::HalfPlane;
  ComplexFn coeff;
  ComplexFn deriv;
  ComplexFn deriv2;
  std::string label;

  Complex operator()(Complex z) const { return coeff(z); }
};

QuadDiff make_qd(Model model, ComplexFn coeff, std::string label = {}, ComplexFn deriv = {}, ComplexFn deriv2 = {});
QuadDiff zero_qd(Model model);
// f_H(z) = f_D(Cz) C'(z)^2 and back.
QuadDiff qd_to_half_plane(const QuadDiff& q);
QuadDiff qd_to_disk(const QuadDiff& q);

// Sup-norm data: D = max|f| Im^2, K1 = max|f_z| Im^3, K2 = max|f_zz| Im^4.
struct BoundsReport {
  double D = 0.0;
  double K1 = 0.0;
  double K2 = 0.0;
};

// Rectangular sample grid "x0:x1:nx,y0:y1:ny" (inclusive endpoints).
struct Grid {
  double x0 = 0.0, x1 = 0.0;
  int nx = 1;
  double y0 = 1.0, y1 = 1.0;
  int ny = 1;

  static Grid parse(const std::string& spec);
  std::vector<Complex> points() const;
  std::string to_string() const;
};

double default_step(Complex z);

// Central-difference Wirtinger derivatives of a complex function.
Complex fd_dzbar(const ComplexFn& f, Complex z, double h);
Complex fd_dz(const ComplexFn& f, Complex z, double h);
// f'(z) and f''(z) of a holomorphic f by the Cauchy integral on |w - z| = r.
Complex cauchy_derivative(const ComplexFn& f, Complex z, double r, int order, int nodes = 32);

Complex coeff_derivative(const QuadDiff& q, Complex z);
Complex coeff_second_derivative(const QuadDiff& q, Complex z);

// beta(xi)(z) = f with conj(f) = -8/(z - zbar)^2 dxi/dzbar. Disk fields are
// transported to the half-plane; h <= 0 selects default_step. The step and the
// boundary check always refer to half-plane coordinates.
Complex beta(const VectorField& xi, Complex z, double h = 0.0);
// Same, but finite differences are used even if xi carries an exact dzbar.
Complex beta_fd(const VectorField& xi, Complex z, double h = 0.0);
QuadDiff beta_differential(const VectorField& xi, double h = 0.0);

struct HarmonicResidual {
  double r1 = 0.0;
  double r2 = 0.0;
  double max_abs() const;
};

HarmonicResidual harmonic_residual(const VectorField& xi, Complex z, double h = 0.0);
double holomorphy_residual(const QuadDiff& q, Complex z, double h = 0.0);
double qd_norm(const QuadDiff& q, Complex z);
// Points are half-plane points; disk differentials are transported first.
BoundsReport derivative_bounds(const QuadDiff& q, const std::vector<Complex>& points);
BoundsReport derivative_bounds(const QuadDiff& q, const Grid& grid);
Complex beltrami_of(const QuadDiff& q, Complex z);

}  // namespace hyperharm

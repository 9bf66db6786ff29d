#pragma once

#include <optional>
#include <vector>

#include "hyperharm/qdiff.hpp"
#include "hyperharm/quadrature.hpp"

namespace hyperharm {

// conj( int_w^z (conj(z) - zeta)^2 f(zeta) dzeta ) along the segment w -> z.
// beta of this field is -8 f (see kWolpertScale).
Complex wolpert_field(const QuadDiff& q, Complex w, Complex z, const QuadratureOptions& opt = {});
VectorField wolpert(const QuadDiff& q, Complex w, const QuadratureOptions& opt = {});

// int_{Im z}^{c} i zeta^2 conj(f(conj(z) + 2 i zeta)) dzeta.
Complex xi_c(const QuadDiff& q, double c, Complex z, const QuadratureOptions& opt = {});

// int_0^{Im z} -i zeta^2 (z - 2 i zeta)^n dzeta; beta = z^n.
Complex monomial_field(int n, Complex z);
VectorField monomial(int n);
// Field with beta = (z - a)^n.
Complex shifted_field(int n, Complex a, Complex z);
VectorField shifted(int n, Complex a);

struct YPowerField {
  VectorField field;      // y^n f(z) along the real direction
  QuadDiff predicted_qd;  // -n i y^(n-3) conj(f(z))
};
YPowerField y_power_field(int n, const QuadDiff& f);

struct RegularizedFieldConfig {
  double tail_tol = 1e-8;
  QuadratureOptions quadrature{};
  std::optional<BoundsReport> bounds;
  double max_cutoff = 1e10;
  double boundary_eps = 1e-8;
};

// The regularized solution: xi_c minus its first-order Taylor part at i, in
// the limit c -> infinity. Evaluations at a fixed cutoff are holomorphic
// perturbations of one another, so a fixed-cutoff field has the same beta.
class RegularizedField {
 public:
  RegularizedField(QuadDiff q, RegularizedFieldConfig cfg);

  // Cutoff picked from the tail bound |z - i|^2 K2 / (4c) <= tail_tol.
  Complex operator()(Complex z) const;
  Complex at_cutoff(Complex z, double c) const;
  double cutoff_for(Complex z) const;
  double tail_bound(Complex z, double c) const;
  // Bound D eps / 4 on the piece dropped at Im z = 0.
  double boundary_bound() const;

  VectorField field() const;
  VectorField field_at_cutoff(double c) const;
  // chi = C_* xi on the closed disk, with chi(1) = 0.
  Complex disk_value(Complex w) const;
  VectorField disk_field() const;
  VectorField disk_field_at_cutoff(double c) const;

  const BoundsReport& bounds() const { return bounds_; }
  const RegularizedFieldConfig& config() const { return cfg_; }
  const QuadDiff& differential() const { return q_; }
  Complex leibniz_constant() const { return k_; }

 private:
  Complex g(double zeta, Complex z) const;
  Complex dg_at_i(double zeta) const;

  QuadDiff q_;
  RegularizedFieldConfig cfg_;
  BoundsReport bounds_;
  Complex k_;
};

// Half-plane images of a polar grid on |w| <= 0.99.
std::vector<Complex> bound_sample_points();
// derivative_bounds over bound_sample_points(), each multiplied by safety.
BoundsReport sampled_bounds(const QuadDiff& q, double safety = 2.0);

Complex xi_reg(const QuadDiff& q, const std::optional<BoundsReport>& bounds, Complex z, double tail_tol);
Complex closed_disk_extension(const QuadDiff& q, const std::optional<BoundsReport>& bounds, Complex w,
                              double tail_tol);

}  // namespace hyperharm

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hyperharm/group.hpp"
#include "hyperharm/qdiff.hpp"

namespace hyperharm {

// Seed coefficient on the disk: "0", "1" or "z^n".
QuadDiff parse_theta_seed(const std::string& spec);

struct ThetaElement {
  Complex a, b, c, d;
};

// f(w) = sum over group elements with canonical word length <= L of
// f0(g w) g'(w)^2.
class ThetaQD {
 public:
  ThetaQD(QuadDiff seed, const GroupPresentation& g, int L);

  Complex operator()(Complex w) const;
  Complex derivative(Complex w) const;
  QuadDiff qd() const;

  int truncation() const { return L_; }
  std::size_t element_count() const { return count_; }
  const QuadDiff& seed() const { return seed_; }

 private:
  QuadDiff seed_;
  GroupPresentation group_;
  int L_;
  std::size_t count_ = 0;
  std::shared_ptr<const std::vector<ThetaElement>> elements_;  // null when streaming
};

// sup over probes of |f(g w) g'(w)^2 - f(w)| for one group element.
double invariance_defect(const QuadDiff& f, const MoebiusMap& g, const std::vector<Complex>& probes);
std::vector<double> invariance_defects(const QuadDiff& f, const GroupPresentation& g, const std::vector<Complex>& probes);
std::vector<Complex> probe_points(int count, double r_min, double r_max);

struct AutomorphicFitOptions {
  int degree = 80;           // polynomial terms
  double radius = 0.85;      // basis (w / radius)^n
  double data_radius = 0.5;  // f is only sampled on |w| <= data_radius
  int data_points = 120;
  int side_points = 80;      // per side pairing
};

// Exactly automorphic differential near a given holomorphic f. A polynomial p
// is fitted in least squares to f on the central disc together with the
// invariance relation p(s w) s'(w)^2 = p(w) on every side of the Dirichlet
// domain; it is then transported everywhere by the reducing element,
// f(w) = p(R w) R'(w)^2.
class AutomorphicQD {
 public:
  AutomorphicQD(const ComplexFn& f, const GroupPresentation& g, const AutomorphicFitOptions& opt = {});

  Complex operator()(Complex w) const;
  Complex derivative(Complex w) const;
  Complex polynomial(Complex w) const;
  Complex polynomial_derivative(Complex w) const;
  QuadDiff qd() const;
  // f_H(z) = f(Cz) C'(z)^2 computed by reducing z on the half-plane.
  Complex half_plane_value(Complex z) const;
  Complex half_plane_derivative(Complex z) const;
  QuadDiff half_plane_qd() const;
  // Largest invariance mismatch of p across the sides, on points not used in the fit.
  double side_jump() const { return side_jump_; }
  // RMS misfit against f on the data points.
  double data_residual() const { return data_residual_; }

 private:
  std::shared_ptr<const std::vector<Complex>> coeffs_;  // p(u) = sum c_n (u/radius)^n
  GroupPresentation group_;
  std::shared_ptr<const HalfPlaneReducer> reducer_;
  double radius_;
  double side_jump_ = 0.0;
  double data_residual_ = 0.0;
};

// Points on the sides of the Dirichlet domain, tagged with the pairing index
// that maps each one onto its partner side.
std::vector<std::pair<int, Complex>> side_points(const GroupPresentation& g, int per_side, double offset = 0.5);

}  // namespace hyperharm

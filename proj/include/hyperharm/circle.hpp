#pragma once

#include <vector>

#include "hyperharm/field.hpp"
#include "hyperharm/killing.hpp"

namespace hyperharm {

// Uniform samples X(e^{2 pi i k/N}) with Fourier coefficients kept alongside.
// N is a power of two >= 64.
class CircleField {
 public:
  CircleField() = default;
  static CircleField from_samples(std::vector<Complex> samples);
  static CircleField from_function(const ComplexFn& x, int n);
  // coeffs[k] is c_n for n = k (k < N/2) or n = k - N (k >= N/2).
  static CircleField from_coefficients(std::vector<Complex> coeffs);

  int size() const { return static_cast<int>(samples_.size()); }
  const std::vector<Complex>& samples() const { return samples_; }
  const std::vector<Complex>& coefficients() const { return coeffs_; }
  Complex point(int k) const;
  // c_n for -N/2 <= n < N/2.
  Complex coefficient(int n) const;
  double l2_norm() const;
  double coefficient_norm() const;

  CircleField operator+(const CircleField& o) const;
  CircleField operator-(const CircleField& o) const;

 private:
  std::vector<Complex> samples_;
  std::vector<Complex> coeffs_;
};

bool is_tangential(const CircleField& x, double tol = 1e-10);
double tangential_defect(const CircleField& x);
// f_k = Re(X_k conj(i w_k)); X is tangential iff X = f iz.
std::vector<double> tangential_factor(const CircleField& x);
// Pointwise projection Re(X conj(iw)) iw onto the tangential fields.
CircleField tangential_projection(const CircleField& x);

struct FourierSplit {
  CircleField tangential_part;
  CircleField h2_part;
};

// X1 = sum_{m <= -1} (c_m z^m - conj(c_m) z^{2-m}), X2 = X - X1. Exact for
// fields with c_m = 0 at m <= 2 - N/2.
FourierSplit split_tangential_h2(const CircleField& x);

struct KillingProjection {
  KillingTriple triple;
  double residual = 0.0;
};
KillingProjection killing_project(const CircleField& x);

double scalar_poisson(const std::vector<double>& f, Complex z);

Complex poisson_kernel_field(Complex z);

enum class ConvolutionMeasure { RotationEquivariant, BareScalar };

// F(X)(z) = (1/N) sum f(w_k) w_k K(conj(w_k) z), X = f iz.
VectorField poisson_extend(const CircleField& x, ConvolutionMeasure measure = ConvolutionMeasure::RotationEquivariant,
                           double tangential_tol = 1e-8);

struct KernelMass {
  Complex numeric;
  Complex closed_form;          // i (1-s^2)^3 Res(z^2/((1-sz)(z-s)^3), s)
  double printed_closed_form;   // 8 eps^3 (6s-12s^3+8s^5-2s^7)/(2(1-s^2)^4)
  int samples = 0;
};

// n <= 0 picks the sample count automatically (>= 4096 and >= 64/eps).
KernelMass kernel_mass(double eps, int n = 0);
int kernel_mass_samples(double eps);

CircleField radial_l2_restriction(const VectorField& field, double r, int n);
double l2_distance(const CircleField& a, const CircleField& b);

}  // namespace hyperharm

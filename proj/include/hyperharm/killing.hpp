#pragma once

#include <array>
#include <vector>

#include "hyperharm/moebius.hpp"

namespace hyperharm {

// Disk Killing field z -> a + i b z - conj(a) z^2.
struct KillingTriple {
  Complex a{0.0};
  double b = 0.0;

  Complex operator()(Complex z) const { return a + kI * b * z - std::conj(a) * z * z; }

  // Real coordinates (Re a, Im a, b).
  std::array<double, 3> coords() const { return {a.real(), a.imag(), b}; }
  static KillingTriple from_coords(const std::array<double, 3>& v) { return {Complex(v[0], v[1]), v[2]}; }

  KillingTriple operator+(const KillingTriple& o) const { return {a + o.a, b + o.b}; }
  KillingTriple operator-(const KillingTriple& o) const { return {a - o.a, b - o.b}; }
  KillingTriple operator*(double s) const { return {a * s, b * s}; }
  double norm() const;
};

// iz, (z^2 - 1)/2, i(z^2 + 1)/2
std::array<KillingTriple, 3> killing_basis();

// gamma^* X for an SU(1,1) map, in closed form.
KillingTriple pullback(const MoebiusMap& m, const KillingTriple& x);

struct KillingFit {
  KillingTriple triple;
  double residual = 0.0;  // RMS misfit over the points
  double data_norm = 0.0;  // RMS of the data
};

// Least-squares fit of values at points by a Killing field.
KillingFit fit_killing(const std::vector<Complex>& points, const std::vector<Complex>& values);

}  // namespace hyperharm

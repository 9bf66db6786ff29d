#pragma once

#include <complex>
#include <functional>

namespace hyperharm {

struct QuadratureOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_subdivisions = 4000;
};

struct QuadratureResult {
  std::complex<double> value;
  double error = 0.0;
  int evaluations = 0;
  int intervals = 0;
};

// Globally adaptive Gauss-Kronrod (7/15) integration of a complex integrand
// over [a, b]. Throws QuadratureFailure when the interval budget runs out
// before max(abs_tol, rel_tol |I|) is met.
QuadratureResult integrate(const std::function<std::complex<double>(double)>& f, double a, double b,
                           const QuadratureOptions& opt = {});

}  // namespace hyperharm

#include "hyperharm/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "hyperharm/errors.hpp"

namespace hyperharm {

namespace {

using Complex = std::complex<double>;

struct Segment {
  double a, b;
  Complex value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk15(const std::function<Complex(double)>& f, double a, double b) {
  const auto& xk = boost::math::quadrature::gauss_kronrod<double, 15>::abscissa();
  const auto& wk = boost::math::quadrature::gauss_kronrod<double, 15>::weights();
  const auto& wg = boost::math::quadrature::gauss<double, 7>::weights();
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  Complex f0 = f(mid);
  Complex kron = wk[0] * f0;
  Complex gauss = wg[0] * f0;
  for (std::size_t i = 1; i < xk.size(); ++i) {
    Complex s = f(mid - half * xk[i]) + f(mid + half * xk[i]);
    kron += wk[i] * s;
    if (i % 2 == 0) gauss += wg[i / 2] * s;
  }
  kron *= half;
  gauss *= half;
  return {a, b, kron, std::abs(kron - gauss)};
}

}  // namespace

QuadratureResult integrate(const std::function<Complex(double)>& f, double a, double b,
                           const QuadratureOptions& opt) {
  QuadratureResult res;
  if (a == b) return res;
  std::priority_queue<Segment> heap;
  Segment first = gk15(f, a, b);
  heap.push(first);
  Complex total = first.value;
  double err = first.error;
  int evals = 15;
  int intervals = 1;
  while (err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total))) {
    if (intervals >= opt.max_subdivisions) {
      std::ostringstream os;
      os << "error estimate " << err << " above tolerance after " << intervals << " intervals";
      throw Error(ErrorCode::QuadratureFailure, os.str());
    }
    Segment worst = heap.top();
    heap.pop();
    double m = 0.5 * (worst.a + worst.b);
    Segment l = gk15(f, worst.a, m), r = gk15(f, m, worst.b);
    evals += 30;
    ++intervals;
    total += l.value + r.value - worst.value;
    err += l.error + r.error - worst.error;
    heap.push(l);
    heap.push(r);
    if (!std::isfinite(std::abs(total))) throw Error(ErrorCode::QuadratureFailure, "non-finite integrand");
  }
  // Re-sum to avoid drift from incremental updates.
  total = 0.0;
  err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  res.value = total;
  res.error = err;
  res.evaluations = evals;
  res.intervals = intervals;
  return res;
}

}  // namespace hyperharm

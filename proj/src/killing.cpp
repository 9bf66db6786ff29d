#include "hyperharm/killing.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "hyperharm/errors.hpp"

namespace hyperharm {

double KillingTriple::norm() const { return std::sqrt(std::norm(a) + b * b); }

std::array<KillingTriple, 3> killing_basis() {
  return {KillingTriple{0.0, 1.0}, KillingTriple{-0.5, 0.0}, KillingTriple{Complex(0.0, 0.5), 0.0}};
}

KillingTriple pullback(const MoebiusMap& m, const KillingTriple& x) {
  if (m.matrix_model() != MatrixModel::SU11) throw Error(ErrorCode::InvalidArgument, "Killing triples live on the disk");
  // X(gz)/g'(z) = a (Cz+D)^2 + i b (Az+B)(Cz+D) - conj(a) (Az+B)^2
  Complex A = m.a(), B = m.b(), C = m.c(), D = m.d();
  Complex a = x.a, ab = std::conj(x.a), ib = kI * x.b;
  Complex c0 = a * D * D + ib * B * D - ab * B * B;
  Complex c1 = 2.0 * a * C * D + ib * (A * D + B * C) - 2.0 * ab * A * B;
  return {c0, (c1 / kI).real()};
}

KillingFit fit_killing(const std::vector<Complex>& points, const std::vector<Complex>& values) {
  if (points.size() != values.size() || points.empty())
    throw Error(ErrorCode::InvalidArgument, "fit_killing needs matching non-empty inputs");
  const Eigen::Index n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd M(2 * n, 3);
  Eigen::VectorXd rhs(2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Complex z = points[i];
    // columns: Re a, Im a, b
    Complex e0 = 1.0 - z * z, e1 = kI * (1.0 + z * z), e2 = kI * z;
    M(2 * i, 0) = e0.real(), M(2 * i + 1, 0) = e0.imag();
    M(2 * i, 1) = e1.real(), M(2 * i + 1, 1) = e1.imag();
    M(2 * i, 2) = e2.real(), M(2 * i + 1, 2) = e2.imag();
    rhs(2 * i) = values[i].real();
    rhs(2 * i + 1) = values[i].imag();
  }
  Eigen::Vector3d sol = M.colPivHouseholderQr().solve(rhs);
  KillingFit fit;
  fit.triple = KillingTriple::from_coords({sol(0), sol(1), sol(2)});
  fit.residual = std::sqrt((M * sol - rhs).squaredNorm() / double(n));
  fit.data_norm = std::sqrt(rhs.squaredNorm() / double(n));
  return fit;
}

}  // namespace hyperharm

#include "hyperharm/cocycle.hpp"

#include <cmath>

#include "hyperharm/errors.hpp"

namespace hyperharm {

Eigen::VectorXd Cocycle::to_vector() const {
  Eigen::VectorXd v(3 * values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto c = values[i].coords();
    for (int k = 0; k < 3; ++k) v(3 * i + k) = c[k];
  }
  return v;
}

Cocycle Cocycle::from_vector(const Eigen::VectorXd& v) {
  if (v.size() % 3 != 0) throw Error(ErrorCode::InvalidArgument, "cocycle vector length must be a multiple of 3");
  Cocycle c;
  for (Eigen::Index i = 0; i < v.size() / 3; ++i)
    c.values.push_back(KillingTriple::from_coords({v(3 * i), v(3 * i + 1), v(3 * i + 2)}));
  return c;
}

Cocycle Cocycle::operator+(const Cocycle& o) const { return from_vector(to_vector() + o.to_vector()); }
Cocycle Cocycle::operator-(const Cocycle& o) const { return from_vector(to_vector() - o.to_vector()); }
Cocycle Cocycle::operator*(double s) const { return from_vector(to_vector() * s); }
double Cocycle::norm() const { return to_vector().norm(); }

Cocycle zero_cocycle(const GroupPresentation& g) {
  Cocycle c;
  c.values.assign(g.generators.size(), KillingTriple{});
  return c;
}

KillingTriple cocycle_on_word(const GroupPresentation& g, const Cocycle& c, const Word& w) {
  if (c.values.size() != g.generators.size()) throw Error(ErrorCode::InvalidArgument, "cocycle size mismatch");
  KillingTriple acc{};
  for (int l : w) {
    MoebiusMap m = g.letter(l);
    const KillingTriple& base = c.values.at(l / 2);
    KillingTriple cl = (l & 1) ? pullback(m, base) * -1.0 : base;
    acc = pullback(m, acc) + cl;
  }
  return acc;
}

std::vector<KillingTriple> pairing_letter_values(const GroupPresentation& g, const Cocycle& c) {
  std::vector<KillingTriple> out(2 * g.side_pairings.size());
  for (std::size_t k = 0; k < g.side_pairings.size(); ++k) {
    KillingTriple v = cocycle_on_word(g, c, g.side_pairing_words[k]);
    out[2 * k] = v;
    out[2 * k + 1] = pullback(g.side_pairings[k].inverse(), v) * -1.0;
  }
  return out;
}

KillingTriple cocycle_on_pairing_word(const GroupPresentation& g, const std::vector<KillingTriple>& letter_values,
                                      const Word& w) {
  KillingTriple acc{};
  for (int l : w) acc = pullback(g.pairing_letter(l), acc) + letter_values.at(l);
  return acc;
}

Cocycle cocycle_from_pairings(const GroupPresentation& g, const std::vector<KillingTriple>& pairing_values) {
  if (pairing_values.size() != g.side_pairings.size())
    throw Error(ErrorCode::InvalidArgument, "one value per side pairing expected");
  std::vector<KillingTriple> letters(2 * pairing_values.size());
  for (std::size_t k = 0; k < pairing_values.size(); ++k) {
    letters[2 * k] = pairing_values[k];
    letters[2 * k + 1] = pullback(g.side_pairings[k].inverse(), pairing_values[k]) * -1.0;
  }
  Cocycle c;
  for (const auto& m : g.generators) c.values.push_back(cocycle_on_pairing_word(g, letters, pairing_word(g, m)));
  return c;
}

double relation_defect(const GroupPresentation& g, const Cocycle& c) {
  return cocycle_on_word(g, c, g.relation()).norm();
}

Cocycle coboundary(const KillingTriple& u, const GroupPresentation& g) {
  Cocycle c;
  for (const auto& m : g.generators) c.values.push_back(pullback(m, u) - u);
  return c;
}

std::vector<VectorField> coboundary_fields(const VectorField& u, const GroupPresentation& g) {
  std::vector<VectorField> out;
  for (const auto& m : g.generators) out.push_back(pullback_field(m, u) - u);
  return out;
}

namespace {

int numerical_rank(const Eigen::MatrixXd& m, double tol) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  auto s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > tol * s(0)) ++r;
  return r;
}

// Orthonormal basis of the column space (first `rank` left singular vectors).
Eigen::MatrixXd range_basis(const Eigen::MatrixXd& m, int rank) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU);
  return svd.matrixU().leftCols(rank);
}

Eigen::MatrixXd null_basis(const Eigen::MatrixXd& m, int rank) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  return svd.matrixV().rightCols(m.cols() - rank);
}

}  // namespace

CohomologySpace::CohomologySpace(const GroupPresentation& g, double rank_tol) {
  const int n = 3 * static_cast<int>(g.generators.size());
  constraint_.resize(3, n);
  Word rel = g.relation();
  for (int j = 0; j < n; ++j) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
    e(j) = 1.0;
    auto v = cocycle_on_word(g, Cocycle::from_vector(e), rel).coords();
    for (int k = 0; k < 3; ++k) constraint_(k, j) = v[k];
  }
  int rc = numerical_rank(constraint_, rank_tol);
  z1_ = null_basis(constraint_, rc);

  Eigen::MatrixXd delta(n, 3);
  for (int k = 0; k < 3; ++k) {
    std::array<double, 3> e{};
    e[k] = 1.0;
    delta.col(k) = coboundary(KillingTriple::from_coords(e), g).to_vector();
  }
  int rb = numerical_rank(delta, rank_tol);
  b1_ = range_basis(delta, rb);

  // Complement of B^1 inside Z^1.
  Eigen::MatrixXd zb = z1_ - b1_ * (b1_.transpose() * z1_);
  int rh = numerical_rank(zb, 1e-6);
  h1_ = range_basis(zb, rh);
  dims_ = {static_cast<int>(z1_.cols()), rb, static_cast<int>(z1_.cols()) - rb};
}

Eigen::VectorXd CohomologySpace::h1_coords(const Cocycle& c) const { return h1_.transpose() * c.to_vector(); }

double CohomologySpace::class_norm(const Cocycle& c) const {
  Eigen::VectorXd v = c.to_vector();
  return (v - b1_ * (b1_.transpose() * v)).norm();
}

double CohomologySpace::constraint_residual(const Cocycle& c) const { return (constraint_ * c.to_vector()).norm(); }

CohomologyDims cocycle_space_dims(const GroupPresentation& g) { return CohomologySpace(g).dims(); }

}  // namespace hyperharm

#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "hyperharm/field.hpp"
#include "hyperharm/group.hpp"
#include "hyperharm/killing.hpp"

namespace hyperharm {

// Values on the presentation generators; extended to words by
// c_{g h} = h^* c_g + c_h and c_{g^-1} = -(g^-1)^* c_g.
struct Cocycle {
  std::vector<KillingTriple> values;
  std::string convention = "vector-field";

  Eigen::VectorXd to_vector() const;
  static Cocycle from_vector(const Eigen::VectorXd& v);
  Cocycle operator+(const Cocycle& o) const;
  Cocycle operator-(const Cocycle& o) const;
  Cocycle operator*(double s) const;
  double norm() const;
};

Cocycle zero_cocycle(const GroupPresentation& g);
KillingTriple cocycle_on_word(const GroupPresentation& g, const Cocycle& c, const Word& w);
// Values on the side-pairing letters (2k: pairing k, 2k+1: its inverse).
std::vector<KillingTriple> pairing_letter_values(const GroupPresentation& g, const Cocycle& c);
KillingTriple cocycle_on_pairing_word(const GroupPresentation& g, const std::vector<KillingTriple>& letter_values,
                                      const Word& w);
// Cocycle on the generators from its values on the side pairings.
Cocycle cocycle_from_pairings(const GroupPresentation& g, const std::vector<KillingTriple>& pairing_values);

// Norm of the value on the relation word.
double relation_defect(const GroupPresentation& g, const Cocycle& c);

// delta u (gamma) = gamma^* u - u on each generator.
Cocycle coboundary(const KillingTriple& u, const GroupPresentation& g);
std::vector<VectorField> coboundary_fields(const VectorField& u, const GroupPresentation& g);

struct CohomologyDims {
  int z1 = 0;
  int b1 = 0;
  int h1 = 0;
};

// Z^1 = kernel of the relation constraint, B^1 = image of delta, and an
// orthonormal basis of the complement of B^1 inside Z^1 as H^1 coordinates.
class CohomologySpace {
 public:
  explicit CohomologySpace(const GroupPresentation& g, double rank_tol = 1e-9);

  CohomologyDims dims() const { return dims_; }
  const Eigen::MatrixXd& constraint() const { return constraint_; }
  const Eigen::MatrixXd& z1_basis() const { return z1_; }
  const Eigen::MatrixXd& b1_basis() const { return b1_; }
  const Eigen::MatrixXd& h1_basis() const { return h1_; }

  Eigen::VectorXd h1_coords(const Cocycle& c) const;
  // Norm of the component orthogonal to B^1.
  double class_norm(const Cocycle& c) const;
  double constraint_residual(const Cocycle& c) const;

 private:
  CohomologyDims dims_;
  Eigen::MatrixXd constraint_, z1_, b1_, h1_;
};

CohomologyDims cocycle_space_dims(const GroupPresentation& g);

}  // namespace hyperharm

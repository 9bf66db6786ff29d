#pragma once

#include <memory>
#include <optional>
#include <string>

#include "hyperharm/harmonic.hpp"
#include "hyperharm/theta.hpp"

namespace hyperharm {

// Differentials addressable from the command line:
//   monomial:n            z^n on the half-plane
//   shifted:n:a_re:a_im   (z - a)^n on the half-plane
//   rational:(z+i)^-4     (z + i)^-4 on the half-plane
//   theta:L               automorphic theta differential of seed 1 (octagon group)
struct CatalogEntry {
  std::string spec;
  QuadDiff qd;                                  // half-plane coefficient
  std::optional<VectorField> closed_form;       // catalog field with beta = qd, when one exists
  std::shared_ptr<const AutomorphicQD> automorphic;
};

CatalogEntry parse_qd_spec(const std::string& spec);

// Half-plane field with beta = qd: the closed form when available, otherwise
// the regularized field with sampled bounds.
VectorField construct_field(const CatalogEntry& e, double tail_tol = 1e-8);

}  // namespace hyperharm

#pragma once

#include <memory>
#include <vector>

#include "hyperharm/circle.hpp"
#include "hyperharm/cocycle.hpp"
#include "hyperharm/harmonic.hpp"
#include "hyperharm/theta.hpp"

namespace hyperharm {

struct PhiOptions {
  int boundary_samples = 16384;
  // Probes fill |w| <= probe_r_max; each side pairing uses those whose image
  // also lies there.
  int probe_count = 400;
  double probe_r_max = 0.85;
  double tail_tol = 1e-7;
  double max_defect = 1e-3;  // relative invariance defect accepted on input
  bool tangential_correction = true;
  AutomorphicFitOptions fit{};
};

struct PhiResult {
  Cocycle cocycle;
  std::vector<double> fit_residuals;  // RMS misfit per side pairing
  std::vector<double> delta_norms;    // RMS size of the fitted data per side pairing
  double fit_residual = 0.0;          // max of fit_residuals
  double delta_norm = 0.0;            // max of delta_norms
  double relation_defect = 0.0;
  double invariance_defect = 0.0;     // relative misfit of the automorphic fit
  double cutoff = 0.0;
  BoundsReport bounds;
  VectorField chi;                    // disk field used for the fit
};

// q must be (approximately) invariant under g; it is replaced by its
// automorphic fit, whose misfit is the reported invariance defect.
PhiResult phi_map(const QuadDiff& q, const GroupPresentation& g, const PhiOptions& opt = {});
PhiResult phi_map(const AutomorphicQD& q, const GroupPresentation& g, const PhiOptions& opt = {});

struct PartitionOptions {
  int L = 4;
  double plateau = 0.85;  // bump is 1 for |w| <= plateau
  double r0 = 0.9;        // and 0 for |w| >= r0
};

// psi(z) = -sum_gamma phi(gamma z) c_gamma(z) / sum_gamma phi(gamma z).
class PartitionPsi {
 public:
  PartitionPsi(const Cocycle& c, const GroupPresentation& g, const PartitionOptions& opt = {});

  Complex operator()(Complex z) const;
  double coverage(Complex z) const;
  VectorField field() const;
  std::size_t neighbour_count() const { return neighbours_.size(); }
  // Cocycle value on a word in side-pairing letters.
  KillingTriple pairing_cocycle(const Word& pairing_word) const;

 private:
  struct Neighbour {
    MoebiusMap element;
    KillingTriple value;
  };
  double bump(Complex p) const;

  GroupPresentation group_;
  PartitionOptions opt_;
  std::vector<KillingTriple> pairing_values_;
  std::vector<Neighbour> neighbours_;
};

VectorField partition_psi(const Cocycle& c, const GroupPresentation& g, const PartitionOptions& opt = {});

struct PsiOptions {
  PartitionOptions partition{};
  int boundary_samples = 4096;
  double boundary_radius = 1.0 - 1e-7;
  AutomorphicFitOptions fit{};
};

struct PsiResult {
  CircleField boundary;  // psi sharp
  VectorField lift;      // F(psi sharp)
  std::shared_ptr<AutomorphicQD> automorphic;  // beta of the lift, made automorphic
  QuadDiff qd;                                 // the same as a disk differential
  QuadDiff raw_qd;                             // beta of the lift, evaluated directly
};

PsiResult psi_map(const Cocycle& c, const GroupPresentation& g, const PsiOptions& opt = {});
VectorField harmonic_lift(const Cocycle& c, const GroupPresentation& g, const PsiOptions& opt = {});

struct RoundTripResult {
  Cocycle input;
  Cocycle output;
  Eigen::VectorXd input_coords;
  Eigen::VectorXd output_coords;
  double relative_error = 0.0;
  double input_fit_residual = 0.0;
  double output_fit_residual = 0.0;
};

RoundTripResult roundtrip(const Cocycle& c, const GroupPresentation& g, const PsiOptions& psi_opt = {},
                          const PhiOptions& phi_opt = {});

// Theta differential of the seed made exactly automorphic (for phi_map).
AutomorphicQD automorphic_theta(const std::string& seed, const GroupPresentation& g, int L,
                                const AutomorphicFitOptions& opt = {});

}  // namespace hyperharm

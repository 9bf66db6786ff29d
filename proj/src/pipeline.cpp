#include "hyperharm/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hyperharm/errors.hpp"
#include "hyperharm/parallel.hpp"

namespace hyperharm {

namespace {

double max_of(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m;
}

}  // namespace

PhiResult phi_map(const QuadDiff& q, const GroupPresentation& g, const PhiOptions& opt) {
  QuadDiff qd = q.model == Model::Disk ? q : qd_to_disk(q);
  return phi_map(AutomorphicQD(qd.coeff, g, opt.fit), g, opt);
}

PhiResult phi_map(const AutomorphicQD& aq, const GroupPresentation& g, const PhiOptions& opt) {
  if (g.generators.empty()) throw Error(ErrorCode::InvalidArgument, "empty presentation");
  if (opt.boundary_samples < 64 || (opt.boundary_samples & (opt.boundary_samples - 1)))
    throw Error(ErrorCode::InvalidArgument, "boundary sample count must be a power of two >= 64");
  if (!(opt.tail_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tail tolerance must be positive");
  PhiResult res;
  auto probes = probe_points(opt.probe_count, 0.0, opt.probe_r_max);

  double scale = 0.0;
  for (Complex w : probe_points(64, 0.0, opt.fit.data_radius)) scale = std::max(scale, std::abs(aq.polynomial(w)));
  double defect = std::max(aq.side_jump(), aq.data_residual());
  res.invariance_defect = scale > 0.0 ? defect / scale : defect;
  if (res.invariance_defect > opt.max_defect)
    throw Error(ErrorCode::InvarianceDefectTooLarge,
                "relative invariance defect " + std::to_string(res.invariance_defect) + " exceeds " +
                    std::to_string(opt.max_defect));

  QuadDiff qh = aq.half_plane_qd();
  // |f| Im^2 is invariant, so sampling up to |w| = 0.99 covers the domain.
  BoundsReport b = sampled_bounds(qh);
  res.bounds = b;

  RegularizedFieldConfig cfg;
  cfg.bounds = b;
  cfg.tail_tol = opt.tail_tol;
  // Far out the integrand is a difference of O(D zeta) terms, so rounding
  // sets a floor well above the default tolerances.
  cfg.quadrature.abs_tol = opt.tail_tol / 10.0;
  cfg.quadrature.rel_tol = 1e-10;
  RegularizedField xr(qh, cfg);
  // One cutoff for every point. On the disk the tail of xi_c is bounded by
  // K2 / (2c) uniformly, since |z - i|^2 |C'(z)| <= 2.
  res.cutoff = std::clamp(b.K2 / (2.0 * opt.tail_tol), 1e3, cfg.max_cutoff);
  VectorField chi = xr.disk_field_at_cutoff(res.cutoff);

  VectorField chi_tan = chi;
  if (opt.tangential_correction) {
    const int n = opt.boundary_samples;
    std::vector<Complex> samples(n);
    parallel_for(n, [&](std::size_t k) {
      samples[k] = chi(std::polar(1.0, 2.0 * std::numbers::pi * double(k) / n));
    });
    FourierSplit split = split_tangential_h2(CircleField::from_samples(std::move(samples)));
    auto d = std::make_shared<std::vector<Complex>>(n / 2);
    for (int m = 0; m < n / 2; ++m) (*d)[m] = split.h2_part.coefficient(m);
    auto h2 = [d](Complex w) {
      Complex acc = 0.0;
      for (auto it = d->rbegin(); it != d->rend(); ++it) acc = acc * w + *it;
      return acc;
    };
    chi_tan = make_field(
        Model::Disk, [chi, h2](Complex w) { return chi(w) - h2(w); }, "chi_tan", FieldKind::Quadrature);
  }
  res.chi = chi_tan;

  // Fit on the side pairings, over the probes that stay inside |w| <= r_max
  // together with their images; generator values follow from the words.
  const std::size_t np = g.side_pairings.size();
  std::vector<std::vector<Complex>> pts(np), delta(np);
  for (std::size_t k = 0; k < np; ++k) {
    const MoebiusMap& m = g.side_pairings[k];
    for (Complex w : probes)
      if (std::abs(m.apply(w)) <= opt.probe_r_max) pts[k].push_back(w);
    if (pts[k].size() < 8) throw Error(ErrorCode::InvalidArgument, "too few probe points near a side");
    delta[k].resize(pts[k].size());
  }
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t k = 0; k < np; ++k)
    for (std::size_t i = 0; i < pts[k].size(); ++i) jobs.emplace_back(k, i);
  parallel_for(jobs.size(), [&](std::size_t j) {
    auto [k, i] = jobs[j];
    const MoebiusMap& m = g.side_pairings[k];
    Complex w = pts[k][i];
    delta[k][i] = chi_tan(m.apply(w)) / m.derivative(w) - chi_tan(w);
  });
  std::vector<KillingTriple> pairing_values;
  for (std::size_t k = 0; k < np; ++k) {
    KillingFit fit = fit_killing(pts[k], delta[k]);
    pairing_values.push_back(fit.triple);
    res.fit_residuals.push_back(fit.residual);
    res.delta_norms.push_back(fit.data_norm);
  }
  res.cocycle = cocycle_from_pairings(g, pairing_values);
  res.fit_residual = max_of(res.fit_residuals);
  res.delta_norm = max_of(res.delta_norms);
  res.relation_defect = relation_defect(g, res.cocycle);
  return res;
}

PartitionPsi::PartitionPsi(const Cocycle& c, const GroupPresentation& g, const PartitionOptions& opt)
    : group_(g), opt_(opt) {
  if (!g.has_side_pairings()) throw Error(ErrorCode::InvalidArgument, "partition needs side pairings");
  if (c.values.size() != g.generators.size()) throw Error(ErrorCode::InvalidArgument, "cocycle size mismatch");
  if (!(opt.plateau > 0.0 && opt.plateau < opt.r0 && opt.r0 < 1.0))
    throw Error(ErrorCode::InvalidArgument, "bump needs 0 < plateau < r0 < 1");
  if (opt.L < 0) throw Error(ErrorCode::InvalidArgument, "partition truncation must be >= 0");
  pairing_values_ = pairing_letter_values(g, c);
  // Keep the elements n for which n(D) can meet the bump support when D is
  // the Dirichlet domain (Euclidean radius < 0.86).
  double reach = std::tanh(std::atanh(opt.r0) + std::atanh(0.86));
  enumerate_elements(g, opt.L, [&](const Word& w, const MoebiusMap& m) {
    if (std::abs(m.apply(Complex(0.0))) < reach) neighbours_.push_back({m, pairing_cocycle(w)});
  });
}

KillingTriple PartitionPsi::pairing_cocycle(const Word& w) const {
  return cocycle_on_pairing_word(group_, pairing_values_, w);
}

double PartitionPsi::bump(Complex p) const {
  double r = std::abs(p);
  if (r <= opt_.plateau) return 1.0;
  if (r >= opt_.r0) return 0.0;
  double t = (opt_.r0 - r) / (opt_.r0 - opt_.plateau);
  double u = std::exp(-1.0 / t), v = std::exp(-1.0 / (1.0 - t));
  return u / (u + v);
}

double PartitionPsi::coverage(Complex z) const {
  Complex z0 = reduce_to_domain(group_, z).point;
  double s = 0.0;
  for (const auto& n : neighbours_) s += bump(n.element.apply(z0));
  return s;
}

Complex PartitionPsi::operator()(Complex z) const {
  Reduction red = reduce_to_domain(group_, z);
  // gamma = n R with R z = z0, so c_gamma = R^* c_n + c_R.
  Word r_word(red.letters.rbegin(), red.letters.rend());
  KillingTriple c_r = pairing_cocycle(r_word);
  double total = 0.0;
  KillingTriple avg{};
  for (const auto& n : neighbours_) {
    double w = bump(n.element.apply(red.point));
    if (w == 0.0) continue;
    total += w;
    avg = avg + n.value * w;
  }
  if (total < 0.5)
    throw Error(ErrorCode::CoverageGap, "partition normalizer " + std::to_string(total) + " below 0.5");
  KillingTriple val = pullback(red.element, avg * (1.0 / total)) + c_r;
  return -val(z);
}

VectorField PartitionPsi::field() const {
  auto self = std::make_shared<PartitionPsi>(*this);
  return make_field(
      Model::Disk, [self](Complex z) { return (*self)(z); }, "psi", FieldKind::GridSampled);
}

VectorField partition_psi(const Cocycle& c, const GroupPresentation& g, const PartitionOptions& opt) {
  return PartitionPsi(c, g, opt).field();
}

namespace {

// Samples psi on |z| = r with `oversample` points per output sample and
// drops the frequencies the output grid cannot hold.
CircleField boundary_restriction(const PartitionPsi& psi, double r, int n, int oversample) {
  const int nf = n * oversample;
  std::vector<Complex> fine(nf);
  parallel_for(nf, [&](std::size_t k) { fine[k] = psi(std::polar(r, 2.0 * std::numbers::pi * double(k) / nf)); });
  CircleField f = CircleField::from_samples(std::move(fine));
  std::vector<Complex> coeffs(n, Complex(0.0));
  for (int m = -n / 2; m < n / 2; ++m) coeffs[m >= 0 ? m : m + n] = f.coefficient(m);
  return CircleField::from_coefficients(std::move(coeffs));
}

constexpr int kOversample = 16;

}  // namespace

PsiResult psi_map(const Cocycle& c, const GroupPresentation& g, const PsiOptions& opt) {
  if (!(opt.boundary_radius > 0.0 && opt.boundary_radius < 1.0))
    throw Error(ErrorCode::InvalidArgument, "boundary radius must be in (0, 1)");
  PartitionPsi psi(c, g, opt.partition);
  PsiResult res;
  res.boundary = tangential_projection(boundary_restriction(psi, opt.boundary_radius, opt.boundary_samples, kOversample));
  res.lift = poisson_extend(res.boundary);
  res.raw_qd = beta_differential(res.lift);
  res.automorphic = std::make_shared<AutomorphicQD>(res.raw_qd.coeff, g, opt.fit);
  res.qd = res.automorphic->qd();
  res.qd.label = "psi";
  return res;
}

VectorField harmonic_lift(const Cocycle& c, const GroupPresentation& g, const PsiOptions& opt) {
  PartitionPsi psi(c, g, opt.partition);
  return poisson_extend(
      tangential_projection(boundary_restriction(psi, opt.boundary_radius, opt.boundary_samples, kOversample)));
}

RoundTripResult roundtrip(const Cocycle& c, const GroupPresentation& g, const PsiOptions& psi_opt,
                          const PhiOptions& phi_opt) {
  CohomologySpace h(g);
  RoundTripResult res;
  res.input = c;
  PsiResult psi = psi_map(c, g, psi_opt);
  PhiResult phi = phi_map(*psi.automorphic, g, phi_opt);
  res.output = phi.cocycle;
  res.output_fit_residual = phi.fit_residual;
  res.input_coords = h.h1_coords(c);
  res.output_coords = h.h1_coords(res.output);
  double scale = res.input_coords.norm();
  res.relative_error = (res.output_coords - res.input_coords).norm() / (scale > 0.0 ? scale : 1.0);
  return res;
}

AutomorphicQD automorphic_theta(const std::string& seed, const GroupPresentation& g, int L,
                                const AutomorphicFitOptions& opt) {
  ThetaQD t(parse_theta_seed(seed), g, L);
  return AutomorphicQD(t.qd().coeff, g, opt);
}

}  // namespace hyperharm

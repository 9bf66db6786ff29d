#include "hyperharm/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <random>

#include <Eigen/Dense>

#include "hyperharm/circle.hpp"
#include "hyperharm/errors.hpp"
#include "hyperharm/harmonic.hpp"
#include "hyperharm/pipeline.hpp"
#include "hyperharm/serialize.hpp"

namespace hyperharm {

namespace {

constexpr double kPi = std::numbers::pi;

CheckResult check(std::string name, double value, double bound, Compare cmp = Compare::AtMost,
                  std::string detail = {}) {
  CheckResult c{std::move(name), value, bound, cmp, false, std::move(detail)};
  switch (cmp) {
    case Compare::AtMost:
      c.pass = std::isfinite(value) && value <= bound;
      break;
    case Compare::AtLeast:
      c.pass = std::isfinite(value) && value >= bound;
      break;
    case Compare::Equal:
      c.pass = value == bound;
      break;
  }
  return c;
}

// Runs body; an exception becomes a failed check carrying the message.
void guarded(std::vector<CheckResult>& out, const std::string& name, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    out.push_back(check(name, std::nan(""), 0.0, Compare::AtMost, e.what()));
  }
}

std::vector<Complex> grid_15x15() { return Grid::parse("-2:2:15,0.5:3:15").points(); }

QuadDiff hp_poly(std::function<Complex(Complex)> f) { return make_qd(Model::HalfPlane, std::move(f)); }

// Shared expensive pieces.
struct Context {
  VerifyOptions opt;
  GroupPresentation group = octagon_group();
  std::optional<AutomorphicQD> theta;
  std::optional<PhiResult> phi;

  PhiOptions phi_options() const {
    PhiOptions p;
    return p;
  }
  const AutomorphicQD& theta6() {
    if (!theta) theta.emplace(automorphic_theta("1", group, 6));
    return *theta;
  }
  const PhiResult& phi6() {
    if (!phi) phi.emplace(phi_map(theta6(), group, phi_options()));
    return *phi;
  }
};

// 1. beta(y^n f eta) = -n i y^(n-3) conj(f)
void criterion1(Context&, std::vector<CheckResult>& out) {
  guarded(out, "y-power identity, n in {3,4,5}, f in {1,z,z^2}", [&] {
    double worst = 0.0;
    for (int n : {3, 4, 5}) {
      for (int p : {0, 1, 2}) {
        YPowerField yp = y_power_field(n, hp_poly([p](Complex z) { return std::pow(z, p); }));
        for (Complex z : grid_15x15()) {
          Complex want = yp.predicted_qd(z), got = beta_fd(yp.field, z);
          worst = std::max(worst, std::abs(got - want) / std::max(std::abs(want), 1e-300));
        }
      }
    }
    out.push_back(check("y-power identity, n in {3,4,5}, f in {1,z,z^2}", worst, 1e-5));
  });
  guarded(out, "beta(y^3 eta) at 1+2i is -3i", [&] {
    YPowerField yp = y_power_field(3, hp_poly([](Complex) { return Complex(1.0); }));
    out.push_back(check("beta(y^3 eta) at 1+2i is -3i", std::abs(beta_fd(yp.field, Complex(1, 2)) + 3.0 * kI), 1e-6));
  });
}

// 2. monomial and shifted catalog fields
void criterion2(Context&, std::vector<CheckResult>& out) {
  guarded(out, "beta of catalog fields", [&] {
    double beta_err = 0.0, harm = 0.0;
    const Complex a(0.4, -0.7);
    for (int n = 0; n <= 3; ++n) {
      VectorField m = monomial(n), s = shifted(n, a);
      for (Complex z : grid_15x15()) {
        double scale = std::max(1.0, std::abs(std::pow(z, n)));
        beta_err = std::max(beta_err, std::abs(beta_fd(m, z) - std::pow(z, n)) / scale);
        scale = std::max(1.0, std::abs(std::pow(z - a, n)));
        beta_err = std::max(beta_err, std::abs(beta_fd(s, z) - std::pow(z - a, n)) / scale);
        harm = std::max({harm, harmonic_residual(m, z).max_abs(), harmonic_residual(s, z).max_abs()});
      }
    }
    out.push_back(check("beta(monomial_n) = z^n and beta(shifted_n) = (z-a)^n, n <= 3", beta_err, 1e-5));
    out.push_back(check("harmonic residual of catalog fields", harm, 1e-5));
  });
}

QuadDiff rational_qd() {
  return make_qd(
      Model::HalfPlane, [](Complex z) { return std::pow(z + kI, -4); }, "(z+i)^-4",
      [](Complex z) { return -4.0 * std::pow(z + kI, -5); }, [](Complex z) { return 20.0 * std::pow(z + kI, -6); });
}

RegularizedField rational_field(double eps = 1e-8) {
  RegularizedFieldConfig cfg;
  QuadDiff q = rational_qd();
  cfg.bounds = sampled_bounds(q, 1.0);
  cfg.boundary_eps = eps;
  return RegularizedField(q, cfg);
}

// 3. xi_reg for (z+i)^-4
void criterion3(Context&, std::vector<CheckResult>& out) {
  guarded(out, "xi_reg", [&] {
    RegularizedField xr = rational_field();
    VectorField xi = xr.field();
    QuadDiff q = xr.differential();
    auto pts = Grid::parse("-2:2:10,0.3:3:5").points();
    double berr = 0.0, worst_ratio = 0.0;
    for (Complex z : pts) {
      berr = std::max(berr, std::abs(beta(xi, z) - q(z)));
      double c = xr.cutoff_for(z);
      double change = std::abs(xr.at_cutoff(z, 2.0 * c) - xr.at_cutoff(z, c));
      worst_ratio = std::max(worst_ratio, change / xr.tail_bound(z, c));
    }
    out.push_back(check("beta(xi_reg) = (z+i)^-4", berr, 1e-5));
    out.push_back(check("doubling the cutoff stays inside the tail bound (ratio)", worst_ratio, 1.0, Compare::AtMost,
                        "50 points"));
    out.push_back(check("xi_reg(i) = 0", std::abs(xr(kI)), 1e-10));
  });
}

// 4. decay and boundary values
void criterion4(Context&, std::vector<CheckResult>& out) {
  guarded(out, "decay of the disk field", [&] {
    RegularizedField xr = rational_field();
    double prev = std::numeric_limits<double>::infinity(), mono = 1.0, last = 0.0;
    for (double y : {10.0, 100.0, 1000.0}) {
      double v = std::abs(xr.disk_value(cayley(Complex(0.0, y))));
      if (!(v < prev)) mono = 0.0;
      prev = last = v;
    }
    out.push_back(check("|C_* xi_reg| decreases along 10i, 100i, 1000i", mono, 1.0, Compare::Equal));
    out.push_back(check("|C_* xi_reg(1000i)|", last, 1e-3));
  });
  guarded(out, "boundary value", [&] {
    RegularizedField a = rational_field(1e-8), b = rational_field(1e-12);
    double worst = 0.0;
    for (double x : {-2.0, -0.5, 0.0, 0.7, 3.0}) worst = std::max(worst, std::abs(a(Complex(x, 0)) - b(Complex(x, 0))));
    out.push_back(check("boundary value matches the eps -> 0 integral", worst, a.bounds().D / 4.0 * 1e-7));
  });
}

// 5. Fourier splitting
void criterion5(Context&, std::vector<CheckResult>& out) {
  guarded(out, "split", [&] {
    std::mt19937_64 rng(20240607);
    std::normal_distribution<double> nd;
    const int n = 64;
    double rec = 0.0, tan = 0.0, neg = 0.0;
    for (int t = 0; t < 200; ++t) {
      std::vector<Complex> c(n, 0.0);
      for (int m = -8; m <= 8; ++m) c[m >= 0 ? m : m + n] = Complex(nd(rng), nd(rng));
      CircleField x = CircleField::from_coefficients(c);
      FourierSplit s = split_tangential_h2(x);
      rec = std::max(rec, l2_distance(s.tangential_part + s.h2_part, x));
      tan = std::max(tan, tangential_defect(s.tangential_part));
      for (int m = -n / 2; m < 0; ++m) neg = std::max(neg, std::abs(s.h2_part.coefficient(m)));
    }
    out.push_back(check("split reconstructs 200 random fields", rec, 1e-9));
    out.push_back(check("tangential part is tangential", tan, 1e-9));
    out.push_back(check("H2 part has no negative frequencies", neg, 1e-9));
  });
  guarded(out, "tangential H2 intersection", [&] {
    // X = sum_{k=0}^{M} c_k z^k with X(w) conj(i w) real at N points.
    const int m_max = 10, n = 64;
    Eigen::MatrixXd a(n, 2 * (m_max + 1));
    for (int j = 0; j < n; ++j) {
      Complex w = std::polar(1.0, 2.0 * kPi * j / n), t = std::conj(kI * w);
      for (int k = 0; k <= m_max; ++k) {
        Complex wk = std::pow(w, k) * t;
        a(j, 2 * k) = wk.imag();          // Re c_k
        a(j, 2 * k + 1) = (kI * wk).imag();  // Im c_k
      }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i) rank += sv(i) > 1e-9 * sv(0);
    int nullity = static_cast<int>(a.cols()) - rank;
    out.push_back(check("dim(tangential and H2)", nullity, 3, Compare::Equal));
    Eigen::MatrixXd null = svd.matrixV().rightCols(nullity);
    double worst = 0.0;
    for (const auto& kt : killing_basis()) {
      // a + i b z - conj(a) z^2
      Eigen::VectorXd v = Eigen::VectorXd::Zero(a.cols());
      Complex c0 = kt.a, c1 = kI * kt.b, c2 = -std::conj(kt.a);
      v << c0.real(), c0.imag(), c1.real(), c1.imag(), c2.real(), c2.imag(), Eigen::VectorXd::Zero(a.cols() - 6);
      Eigen::VectorXd r = v - null * (null.transpose() * v);
      worst = std::max(worst, r.norm() / v.norm());
    }
    out.push_back(check("Killing basis lies in the intersection", worst, 1e-9));
  });
}

// Taylor coefficients of K at 0 from ring averages: the e^{i m t} mode of
// K(r e^{it}) is sum_{j-k=m} c_{jk} r^{j+k}; fit in r^2.
double kernel_taylor_error() {
  const int nr = 8, na = 64, deg = 7;
  // modes m = -2..2; expected leading coefficients from i(1 + z + 3 zbar + z^2 + 6 zbar^2)
  // and the vanishing z zbar term.
  struct Want {
    int m, power_index;
    Complex value;
  };
  const Want wants[] = {{0, 0, kI}, {1, 0, kI}, {-1, 0, 3.0 * kI}, {2, 0, kI}, {-2, 0, 6.0 * kI}, {0, 1, 0.0}};
  double worst = 0.0;
  for (const auto& w : wants) {
    int am = std::abs(w.m);
    Eigen::MatrixXcd a(nr, deg + 1);
    Eigen::VectorXcd b(nr);
    for (int i = 0; i < nr; ++i) {
      double r = 0.04 * (i + 1);
      Complex acc = 0.0;
      for (int k = 0; k < na; ++k) {
        double t = 2.0 * kPi * k / na;
        acc += poisson_kernel_field(std::polar(r, t)) * std::polar(1.0, -w.m * t);
      }
      b(i) = acc / double(na) / std::pow(r, am);
      for (int p = 0; p <= deg; ++p) a(i, p) = std::pow(r * r, p);
    }
    Eigen::VectorXcd coef = a.colPivHouseholderQr().solve(b);
    worst = std::max(worst, std::abs(coef(w.power_index) - w.value));
  }
  return worst;
}

// 6. kernel facts
void criterion6(Context&, std::vector<CheckResult>& out) {
  guarded(out, "K(0) = i", [&] {
    out.push_back(check("K(0) = i", std::abs(poisson_kernel_field(0.0) - kI), 0.0));
  });
  guarded(out, "Taylor coefficients of K", [&] {
    out.push_back(check("second-order Taylor coefficients of K at 0", kernel_taylor_error(), 1e-10));
  });
  guarded(out, "Stab(1) equivariance", [&] {
    double worst = 0.0;
    const double params[5][2] = {{2.0, 0.0}, {0.5, 1.0}, {1.0, -3.0}, {3.0, 0.25}, {0.8, 0.6}};
    auto pts = probe_points(100, 0.0, 0.9);
    for (const auto& p : params) {
      double s = std::sqrt(p[0]);
      MoebiusMap g = to_disk(MoebiusMap::sl2r(s, p[1] / s, 0.0, 1.0 / s));  // z -> lambda z + t fixes infinity
      Complex d1 = g.derivative(Complex(1.0));
      for (Complex z : pts) {
        Complex lhs = poisson_kernel_field(g.apply(z)) / g.derivative(z);
        Complex rhs = poisson_kernel_field(z) / (d1 * d1);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
      }
    }
    out.push_back(check("gamma^* K = gamma'(1)^-2 K for 5 elements of Stab(1)", worst, 1e-9));
  });
  guarded(out, "K harmonic", [&] {
    VectorField k = make_field(Model::Disk, poisson_kernel_field, "K");
    double worst = 0.0;
    for (Complex z : probe_points(40, 0.0, 0.8)) worst = std::max(worst, harmonic_residual(k, z).max_abs());
    out.push_back(check("transported harmonic residual of K", worst, 1e-4));
  });
  guarded(out, "kernel mass", [&] {
    KernelMass m = kernel_mass(1e-3);
    out.push_back(check("kernel_mass(1e-3) close to i", std::abs(m.numeric - kI), 5e-3));
    out.push_back(check("kernel_mass numeric = residue expression", std::abs(m.numeric - m.closed_form), 1e-7));
  });
}

// 7. group data and cohomology dimensions
void criterion7(Context& ctx, std::vector<CheckResult>& out) {
  const auto& g = ctx.group;
  guarded(out, "relation", [&] { out.push_back(check("octagon relation residual", g.relation_residual(), 1e-9)); });
  guarded(out, "hyperbolic words", [&] {
    WordCensus c = word_census(g, 6, false);
    out.push_back(check("non-hyperbolic reduced words of length <= 6", double(c.non_hyperbolic + c.identity_words), 0.0,
                        Compare::Equal, std::to_string(c.words) + " words"));
  });
  guarded(out, "dims", [&] {
    CohomologyDims d = cocycle_space_dims(g);
    out.push_back(check("dim Z1", d.z1, 9, Compare::Equal));
    out.push_back(check("dim B1", d.b1, 3, Compare::Equal));
    out.push_back(check("dim H1", d.h1, 6, Compare::Equal));
  });
  guarded(out, "commutator rank", [&] {
    const auto& s = g.generators;
    const auto& p = g.side_pairings;
    int worst = 3;
    for (auto [a, b] : {std::pair{s[0], s[1]}, std::pair{s[2], s[3]}, std::pair{p[0], p[1]}})
      worst = std::min(worst, commutator_rank(a, b));
    out.push_back(check("commutator_rank on three generator pairs (min)", worst, 3, Compare::Equal));
  });
}

// 8. Phi audit on the theta differential
void criterion8(Context& ctx, std::vector<CheckResult>& out) {
  guarded(out, "phi audit", [&] {
    const PhiResult& r = ctx.phi6();
    double worst = 0.0;
    for (std::size_t k = 0; k < r.fit_residuals.size(); ++k)
      worst = std::max(worst, r.fit_residuals[k] / r.delta_norms[k]);
    out.push_back(check("Killing fit residual / |delta chi|", worst, 1e-3));
    out.push_back(check("relation constraint of Phi(q)", r.relation_defect, std::max(1e-6, 10.0 * r.invariance_defect)));
    CohomologySpace h(ctx.group);
    double cn = h.class_norm(r.cocycle);
    out.push_back(check("B1-complement norm / (10 x fit residual)", cn / (10.0 * r.fit_residual), 1.0, Compare::AtLeast));
  });
}

// 9. Poisson extension of cos(2t) iz
void criterion9(Context&, std::vector<CheckResult>& out) {
  guarded(out, "poisson convergence", [&] {
    const int n = 4096;
    CircleField x = CircleField::from_function([](Complex w) { return std::cos(2.0 * std::arg(w)) * kI * w; }, n);
    VectorField f = poisson_extend(x);
    std::vector<double> err;
    for (double r : {0.9, 0.99, 0.999}) err.push_back(l2_distance(radial_l2_restriction(f, r, n), x));
    double mono = (err[1] < err[0] && err[2] < err[1]) ? 1.0 : 0.0;
    out.push_back(check("restriction error decreases over r = 0.9, 0.99, 0.999", mono, 1.0, Compare::Equal));
    out.push_back(check("restriction error at r = 0.999", err[2], 0.01));
  });
}

// 10. round trip
void criterion10(Context& ctx, std::vector<CheckResult>& out) {
  guarded(out, "round trip", [&] {
    const PhiResult& r = ctx.phi6();
    PsiResult psi = psi_map(r.cocycle, ctx.group);
    PhiResult back = phi_map(*psi.automorphic, ctx.group, ctx.phi_options());
    CohomologySpace h(ctx.group);
    Eigen::VectorXd a = h.h1_coords(r.cocycle), b = h.h1_coords(back.cocycle);
    out.push_back(check("H1 coordinates of Phi(Psi(c)) vs c (relative)", (b - a).norm() / a.norm(), 0.05));
    double num = 0.0, den = 0.0;
    QuadDiff q0 = ctx.theta6().qd();
    for (Complex w : probe_points(200, 0.0, 0.5)) {
      num += std::norm(psi.qd(w) - q0(w));
      den += std::norm(q0(w));
    }
    out.push_back(check("Psi(c) vs theta differential, relative L2 on |z| <= 0.5", std::sqrt(num / den), 0.05));
  });
}

// 11. finite-difference orders
double order(const std::function<double(double)>& err) {
  double e1 = err(0.1), e2 = err(0.05), e3 = err(0.025);
  return std::min(std::log2(e1 / e2), std::log2(e2 / e3));
}

void criterion11(Context&, std::vector<CheckResult>& out) {
  guarded(out, "stencil orders", [&] {
    const Complex z(0.3, 2.0);
    auto f = [](Complex u) { return std::exp(u) * std::conj(u) * std::conj(u); };
    auto f_zbar = [](Complex u) { return 2.0 * std::exp(u) * std::conj(u); };
    auto f_z = [](Complex u) { return std::exp(u) * std::conj(u) * std::conj(u); };
    double o_zbar = order([&](double h) { return std::abs(fd_dzbar(f, z, h) - f_zbar(z)); });
    double o_z = order([&](double h) { return std::abs(fd_dz(f, z, h) - f_z(z)); });
    VectorField m = monomial(3);
    double o_beta = order([&](double h) { return std::abs(beta_fd(m, z, h) - z * z * z); });
    double o_harm = order([&](double h) { return harmonic_residual(m, z, h).max_abs(); });
    out.push_back(check("order of d/dzbar stencil", o_zbar, 1.9, Compare::AtLeast));
    out.push_back(check("order of d/dz stencil", o_z, 1.9, Compare::AtLeast));
    out.push_back(check("order of beta stencil", o_beta, 1.9, Compare::AtLeast));
    out.push_back(check("order of 5-point harmonic stencil", o_harm, 1.9, Compare::AtLeast));
  });
}

const char* kTitles[kCriterionCount] = {
    "beta of y^n f along the real direction",
    "catalog fields hit z^n and (z-a)^n",
    "regularized field for (z+i)^-4",
    "decay and boundary value",
    "tangential/H2 splitting",
    "Poisson kernel field",
    "octagon group and cohomology dimensions",
    "Phi on the theta differential",
    "Poisson extension convergence",
    "round trip Phi after Psi",
    "finite-difference orders",
};

using CriterionFn = void (*)(Context&, std::vector<CheckResult>&);
const CriterionFn kCriteria[kCriterionCount] = {criterion1, criterion2, criterion3, criterion4,  criterion5, criterion6,
                                                criterion7, criterion8, criterion9, criterion10, criterion11};

CriterionResult run_with(Context& ctx, int id) {
  if (id < 1 || id > kCriterionCount) throw Error(ErrorCode::InvalidArgument, "criterion id must be 1..11");
  CriterionResult r;
  r.id = id;
  r.title = kTitles[id - 1];
  auto t0 = std::chrono::steady_clock::now();
  kCriteria[id - 1](ctx, r.checks);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

void module_checks(Context& ctx, std::vector<CheckResult>& out) {
  const auto& g = ctx.group;
  guarded(out, "moebius", [&] {
    MoebiusMap m = g.side_pairings[0];
    out.push_back(check("trace^2 of g0 = (2+2 sqrt2)^2", std::abs(m.trace_squared() - std::pow(2.0 + 2.0 * std::sqrt(2.0), 2)),
                        1e-9));
    double worst = 0.0;
    for (Complex z : Grid::parse("-3:3:7,0.1:4:7").points()) worst = std::max(worst, std::abs(cayley_inv(cayley(z)) - z));
    out.push_back(check("Cayley round trip", worst, 1e-12));
  });
  guarded(out, "coboundary", [&] {
    KillingTriple u{Complex(0.3, -0.2), 0.7};
    Cocycle c = coboundary(u, g);
    out.push_back(check("relation constraint of a coboundary", relation_defect(g, c), 1e-6));
    Word w{0, 2, 5};
    KillingTriple direct = pullback(g.evaluate(w), u) - u;
    out.push_back(check("cocycle rule on a word", (cocycle_on_word(g, c, w) - direct).norm(), 1e-9));
  });
  guarded(out, "theta", [&] {
    ThetaQD t0(parse_theta_seed("1"), g, 0);
    out.push_back(check("theta seed 1 at L = 0 is 1", std::abs(t0(Complex(0.3, 0.2)) - 1.0), 1e-15));
    ThetaQD t6(parse_theta_seed("1"), g, 6);
    double hol = 0.0;
    for (Complex w : probe_points(20, 0.0, 0.6)) hol = std::max(hol, holomorphy_residual(t6.qd(), w));
    out.push_back(check("theta holomorphy residual on |z| <= 0.6", hol, 1e-5));
    auto probes = probe_points(20, 0.2, 0.7);
    auto sup = [&](const ThetaQD& t) {
      double m = 0.0;
      for (double d : invariance_defects(t.qd(), g, probes)) m = std::max(m, d);
      return m;
    };
    double d4 = sup(ThetaQD(parse_theta_seed("1"), g, 4)), d6 = sup(t6);
    out.push_back(check("theta defect ratio L4 / L6", d4 / d6, 1.0, Compare::AtLeast));
    if (!ctx.opt.fast) {
      double d8 = sup(ThetaQD(parse_theta_seed("1"), g, 8));
      out.push_back(check("theta defect ratio L6 / L8", d6 / d8, 2.0, Compare::AtLeast));
    }
    out.push_back(check("automorphic fit side jump", ctx.theta6().side_jump(), 1e-4));
  });
  guarded(out, "phi zero", [&] {
    PhiOptions po = ctx.phi_options();
    po.boundary_samples = 1024;
    PhiResult r = phi_map(zero_qd(Model::Disk), g, po);
    out.push_back(check("Phi(0) = 0", r.cocycle.norm() + r.fit_residual, 1e-8));
  });
  guarded(out, "class shift", [&] {
    const PhiResult& r = ctx.phi6();
    CohomologySpace h(g);
    Cocycle shifted = r.cocycle + coboundary(KillingTriple{Complex(0.5, 0.1), -0.3}, g);
    out.push_back(check("adding delta X leaves the H1 class unchanged",
                        (h.h1_coords(shifted) - h.h1_coords(r.cocycle)).norm(), 1e-9));
  });
  guarded(out, "partition", [&] {
    const PhiResult& r = ctx.phi6();
    PartitionPsi psi(r.cocycle, g);
    double worst = 0.0, cover = 1e300;
    for (Complex z : probe_points(40, 0.0, 0.5)) {
      cover = std::min(cover, psi.coverage(z));
      for (std::size_t i = 0; i < g.generators.size(); ++i) {
        const MoebiusMap& m = g.generators[i];
        Complex d = psi(m.apply(z)) / m.derivative(z) - psi(z);
        worst = std::max(worst, std::abs(d - r.cocycle.values[i](z)));
      }
    }
    out.push_back(check("delta psi = c on |z| <= 0.5", worst, 1e-5));
    out.push_back(check("partition coverage on |z| <= 0.5", cover, 0.5, Compare::AtLeast));
  });
  guarded(out, "psi trivial inputs", [&] {
    PsiResult z = psi_map(zero_cocycle(g), g);
    double m0 = 0.0;
    for (Complex w : probe_points(30, 0.0, 0.6)) m0 = std::max(m0, std::abs(z.raw_qd(w)));
    out.push_back(check("Psi(0) = 0 on |z| <= 0.6", m0, 1e-5));
    PsiResult b = psi_map(coboundary(KillingTriple{Complex(0.3, -0.2), 0.7}, g), g);
    double mb = 0.0;
    for (Complex w : probe_points(30, 0.0, 0.6)) mb = std::max(mb, std::abs(b.raw_qd(w)));
    out.push_back(check("Psi(delta u) = 0 on |z| <= 0.6", mb, 1e-5));
  });
  guarded(out, "harmonic lift", [&] {
    const PhiResult& r = ctx.phi6();
    VectorField y = harmonic_lift(r.cocycle, g);
    auto letters = pairing_letter_values(g, r.cocycle);
    auto probes = probe_points(200, 0.0, 0.85);
    double worst = 0.0;
    for (std::size_t k = 0; k < g.side_pairings.size(); ++k) {
      const MoebiusMap& m = g.side_pairings[k];
      std::vector<Complex> pts, vals;
      for (Complex w : probes) {
        if (std::abs(m.apply(w)) > 0.85) continue;
        pts.push_back(w);
        vals.push_back(y(m.apply(w)) / m.derivative(w) - y(w));
      }
      worst = std::max(worst, (fit_killing(pts, vals).triple - letters[2 * k]).norm());
    }
    out.push_back(check("delta of the harmonic lift fits c", worst, 1e-4));
    double hr = 0.0;
    for (Complex w : probe_points(20, 0.0, 0.8)) hr = std::max(hr, harmonic_residual(y, w).max_abs());
    out.push_back(check("harmonic residual of the lift on |z| <= 0.8", hr, 1e-4));
  });
  guarded(out, "phi linearity", [&] {
    PhiOptions po = ctx.phi_options();
    po.boundary_samples = 4096;
    ThetaQD t1(parse_theta_seed("1"), g, 6), t2(parse_theta_seed("z^2"), g, 6);
    auto f1 = t1.qd(), f2 = t2.qd();
    PhiResult r1 = phi_map(f1, g, po), r2 = phi_map(f2, g, po);
    PhiResult r12 = phi_map(make_qd(Model::Disk, [f1, f2](Complex w) { return f1(w) + f2(w); }), g, po);
    CohomologySpace h(g);
    double diff = (h.h1_coords(r12.cocycle) - h.h1_coords(r1.cocycle) - h.h1_coords(r2.cocycle)).norm();
    out.push_back(check("Phi is linear on classes", diff, r1.fit_residual + r2.fit_residual + r12.fit_residual));
  });
  guarded(out, "serialization", [&] {
    GroupPresentation back = group_from_json(Json::parse(to_json(g).dump()));
    double worst = 0.0;
    for (std::size_t i = 0; i < g.generators.size(); ++i)
      worst = std::max(worst, back.generators[i].distance(g.generators[i]));
    out.push_back(check("group JSON round trip", worst, 1e-12));
  });
  guarded(out, "kernel mass 0.01", [&] {
    KernelMass m = kernel_mass(0.01);
    out.push_back(check("kernel_mass(0.01) numeric = closed form", std::abs(m.numeric - m.closed_form), 1e-7));
  });
  guarded(out, "commuting inputs", [&] {
    bool thrown = false;
    try {
      commutator_rank(g.generators[0], g.generators[0]);
    } catch (const Error& e) {
      thrown = e.code() == ErrorCode::CommutingInputs;
    }
    out.push_back(check("commutator_rank(A, A) raises CommutingInputs", thrown ? 1.0 : 0.0, 1.0, Compare::Equal));
  });
}

const char* compare_name(Compare c) {
  switch (c) {
    case Compare::AtMost:
      return "<=";
    case Compare::AtLeast:
      return ">=";
    case Compare::Equal:
      return "==";
  }
  return "?";
}

nlohmann::json check_json(const CheckResult& c) {
  nlohmann::json j{{"name", c.name}, {"compare", compare_name(c.compare)}, {"bound", c.bound}, {"pass", c.pass}};
  j["value"] = std::isfinite(c.value) ? nlohmann::json(c.value) : nlohmann::json(nullptr);
  if (!c.detail.empty()) j["detail"] = c.detail;
  return j;
}

}  // namespace

bool CriterionResult::pass() const {
  if (checks.empty()) return false;
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

CriterionResult run_criterion(int id, const VerifyOptions& opt) {
  Context ctx;
  ctx.opt = opt;
  return run_with(ctx, id);
}

std::size_t VerifyReport::check_count() const {
  std::size_t n = extra.size();
  for (const auto& c : criteria) n += c.checks.size();
  return n;
}

bool VerifyReport::all_pass() const {
  for (const auto& c : criteria)
    if (!c.pass()) return false;
  for (const auto& c : extra)
    if (!c.pass) return false;
  return true;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& cr : criteria) {
    for (const auto& c : cr.checks) {
      auto j = check_json(c);
      j["criterion"] = cr.id;
      checks.push_back(j);
    }
  }
  for (const auto& c : extra) checks.push_back(check_json(c));
  nlohmann::json crit = nlohmann::json::array();
  for (const auto& cr : criteria) crit.push_back({{"id", cr.id}, {"title", cr.title}, {"pass", cr.pass()}});
  return {{"schema", "1"},       {"mode", fast ? "fast" : "full"}, {"pass", all_pass()},
          {"count", check_count()}, {"criteria", crit},               {"checks", checks}};
}

VerifyReport verify_all(const VerifyOptions& opt) {
  Context ctx;
  ctx.opt = opt;
  VerifyReport rep;
  rep.fast = opt.fast;
  for (int id = 1; id <= kCriterionCount; ++id) rep.criteria.push_back(run_with(ctx, id));
  module_checks(ctx, rep.extra);
  return rep;
}

}  // namespace hyperharm

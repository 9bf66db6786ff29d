#include "hyperharm/hyperharm.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <numbers>
#include <optional>
#include <string>

#include "hyperharm/catalog.hpp"
#include "hyperharm/errors.hpp"
#include "hyperharm/parallel.hpp"
#include "hyperharm/pipeline.hpp"
#include "hyperharm/serialize.hpp"
#include "hyperharm/verify.hpp"

using namespace hyperharm;

struct hh_map {
  MoebiusMap m;
};
struct hh_group {
  explicit hh_group(GroupPresentation p) : g(std::move(p)), space(g) {}
  GroupPresentation g;
  CohomologySpace space;
};
struct hh_cocycle {
  Cocycle c;
};
struct hh_circle {
  CircleField x;
};
struct hh_qd {
  QuadDiff q;
  std::shared_ptr<const AutomorphicQD> automorphic;
  std::optional<CatalogEntry> entry;
};
struct hh_field {
  VectorField f;
};

namespace {

thread_local std::string g_last_error;

template <class F>
hh_status guard(F&& body) {
  try {
    g_last_error.clear();
    body();
    return HH_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return static_cast<hh_status>(static_cast<int>(e.code()));
  } catch (const Json::exception& e) {
    g_last_error = e.what();
    return HH_PARSE_ERROR;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return HH_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HH_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

Complex pair(const double v[2]) { return {v[0], v[1]}; }

void put(Complex z, double* re, double* im) {
  *re = z.real();
  *im = z.imag();
}

// Grid points that must lie inside the open domain of the model.
std::vector<Complex> domain_grid(const char* spec, Model model) {
  require(spec, "grid spec is null");
  auto pts = Grid::parse(spec).points();
  for (Complex z : pts) {
    bool inside = model == Model::HalfPlane ? z.imag() > 0.0 : std::abs(z) < 1.0;
    if (!inside)
      throw Error(ErrorCode::InvalidArgument,
                  std::string("grid point outside the ") + model_name(model) + ": " + ExtendedPoint(z).to_string());
  }
  return pts;
}

std::vector<double> row_of(std::initializer_list<double> v) { return v; }

}  // namespace

extern "C" {

const char* hh_last_error(void) { return g_last_error.c_str(); }

const char* hh_status_name(hh_status s) {
  if (s == HH_OK) return "Ok";
  if (s == HH_IO_ERROR) return "IoError";
  if (s == HH_INTERNAL) return "Internal";
  if (s >= HH_POLE_AT_POINT && s <= HH_PARSE_ERROR) return error_name(static_cast<ErrorCode>(static_cast<int>(s)));
  return "Unknown";
}

const char* hh_version(void) { return "1.0.0"; }

void hh_string_free(char* s) { std::free(s); }

hh_status hh_map_create(hh_matrix_model model, const double a[2], const double b[2], const double c[2],
                        const double d[2], hh_map** out) {
  return guard([&] {
    require(a && b && c && d && out, "null argument");
    MatrixModel mm = model == HH_SU11 ? MatrixModel::SU11 : MatrixModel::SL2R;
    *out = new hh_map{MoebiusMap::from_entries(pair(a), pair(b), pair(c), pair(d), mm)};
  });
}

hh_status hh_map_from_json(const char* json, hh_map** out) {
  return guard([&] {
    require(json && out, "null argument");
    *out = new hh_map{moebius_from_json(Json::parse(json))};
  });
}

hh_status hh_map_to_json(const hh_map* m, char** out) {
  return guard([&] {
    require(m && out, "null argument");
    *out = dup_string(to_json(m->m).dump());
  });
}

void hh_map_free(hh_map* m) { delete m; }

hh_status hh_map_apply(const hh_map* m, double re, double im, double* out_re, double* out_im) {
  return guard([&] {
    require(m && out_re && out_im, "null argument");
    put(m->m.apply(Complex(re, im)), out_re, out_im);
  });
}

hh_status hh_map_classify(const hh_map* m, double tol, hh_isometry* out) {
  return guard([&] {
    require(m && out, "null argument");
    require(tol > 0.0, "tolerance must be positive");
    *out = static_cast<hh_isometry>(static_cast<int>(m->m.classify(tol)));
  });
}

hh_status hh_map_trace_squared(const hh_map* m, double* out) {
  return guard([&] {
    require(m && out, "null argument");
    *out = m->m.trace_squared();
  });
}

const char* hh_isometry_name(hh_isometry c) { return isometry_class_name(static_cast<IsometryClass>(static_cast<int>(c))); }

hh_status hh_group_load(const char* spec, hh_group** out) {
  return guard([&] {
    require(spec && out, "null argument");
    std::string s(spec);
    if (s == "octagon") {
      *out = new hh_group(octagon_group());
    } else {
      *out = new hh_group(group_from_json(read_json_file(s)));
    }
  });
}

hh_status hh_group_to_json(const hh_group* g, char** out) {
  return guard([&] {
    require(g && out, "null argument");
    *out = dup_string(to_json(g->g).dump(2));
  });
}

void hh_group_free(hh_group* g) { delete g; }

hh_status hh_group_dims(const hh_group* g, int* z1, int* b1, int* h1) {
  return guard([&] {
    require(g && z1 && b1 && h1, "null argument");
    CohomologyDims d = g->space.dims();
    *z1 = d.z1;
    *b1 = d.b1;
    *h1 = d.h1;
  });
}

hh_status hh_group_relation_residual(const hh_group* g, double* out) {
  return guard([&] {
    require(g && out, "null argument");
    *out = g->g.relation_residual();
  });
}

hh_status hh_group_commutator_rank(const hh_group* g, int i, int j, int* out) {
  return guard([&] {
    require(g && out, "null argument");
    int n = static_cast<int>(g->g.generators.size());
    require(i >= 0 && i < n && j >= 0 && j < n, "generator index out of range");
    *out = commutator_rank(g->g.generators[i], g->g.generators[j]);
  });
}

hh_status hh_cocycle_from_json(const char* json, const hh_group* g, hh_cocycle** out) {
  return guard([&] {
    require(json && g && out, "null argument");
    Cocycle c = cocycle_from_json(Json::parse(json));
    if (c.values.size() != g->g.generators.size())
      throw Error(ErrorCode::InvalidArgument, "cocycle has " + std::to_string(c.values.size()) +
                                                  " values but the group has " +
                                                  std::to_string(g->g.generators.size()) + " generators");
    *out = new hh_cocycle{std::move(c)};
  });
}

hh_status hh_cocycle_to_json(const hh_cocycle* c, char** out) {
  return guard([&] {
    require(c && out, "null argument");
    *out = dup_string(to_json(c->c).dump(2));
  });
}

void hh_cocycle_free(hh_cocycle* c) { delete c; }

hh_status hh_cocycle_relation_defect(const hh_cocycle* c, const hh_group* g, double* out) {
  return guard([&] {
    require(c && g && out, "null argument");
    *out = relation_defect(g->g, c->c);
  });
}

hh_status hh_cocycle_class_coords(const hh_cocycle* c, const hh_group* g, double* coords, int cap, int* count) {
  return guard([&] {
    require(c && g && count && (coords || cap == 0), "null argument");
    Eigen::VectorXd v = g->space.h1_coords(c->c);
    *count = static_cast<int>(v.size());
    for (int k = 0; k < std::min(cap, *count); ++k) coords[k] = v(k);
  });
}

hh_status hh_qd_parse(const char* spec, hh_qd** out) {
  return guard([&] {
    require(spec && out, "null argument");
    CatalogEntry e = parse_qd_spec(spec);
    *out = new hh_qd{e.qd, e.automorphic, e};
  });
}

hh_status hh_qd_theta(const hh_group* g, const char* seed, int L, hh_qd** out) {
  return guard([&] {
    require(g && seed && out, "null argument");
    auto a = std::make_shared<const AutomorphicQD>(automorphic_theta(seed, g->g, L));
    *out = new hh_qd{a->qd(), a, std::nullopt};
  });
}

void hh_qd_free(hh_qd* q) { delete q; }

hh_model hh_qd_model(const hh_qd* q) { return q && q->q.model == Model::Disk ? HH_DISK : HH_HALF_PLANE; }

hh_status hh_qd_eval(const hh_qd* q, double re, double im, double* out_re, double* out_im) {
  return guard([&] {
    require(q && out_re && out_im, "null argument");
    put(q->q(Complex(re, im)), out_re, out_im);
  });
}

hh_status hh_theta_defect(const hh_group* g, const char* seed, int L, double* out) {
  return guard([&] {
    require(g && seed && out, "null argument");
    ThetaQD t(parse_theta_seed(seed), g->g, L);
    auto probes = probe_points(40, 0.2, 0.7);
    double sup = 0.0, scale = 0.0;
    for (double d : invariance_defects(t.qd(), g->g, probes)) sup = std::max(sup, d);
    for (Complex w : probes) scale = std::max(scale, std::abs(t(w)));
    *out = scale > 0.0 ? sup / scale : sup;
  });
}

hh_status hh_qd_sample_csv(const hh_qd* q, const char* grid, char** out) {
  return guard([&] {
    require(q && out, "null argument");
    auto pts = domain_grid(grid, q->q.model);
    std::vector<Complex> vals(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) { vals[i] = q->q(pts[i]); });
    CsvWriter csv({"x", "y", "re(q)", "im(q)"});
    for (std::size_t i = 0; i < pts.size(); ++i)
      csv.row(row_of({pts[i].real(), pts[i].imag(), vals[i].real(), vals[i].imag()}));
    *out = dup_string(csv.str());
  });
}

hh_status hh_field_construct(const hh_qd* q, double tol, hh_field** out) {
  return guard([&] {
    require(q && out, "null argument");
    require(tol > 0.0, "tolerance must be positive");
    require(q->q.model == Model::HalfPlane, "construct needs a half-plane differential");
    CatalogEntry e = q->entry ? *q->entry : CatalogEntry{q->q.label, q->q, std::nullopt, q->automorphic};
    *out = new hh_field{construct_field(e, tol)};
  });
}

void hh_field_free(hh_field* f) { delete f; }

hh_status hh_field_eval(const hh_field* f, double re, double im, double* out_re, double* out_im) {
  return guard([&] {
    require(f && out_re && out_im, "null argument");
    put(f->f(Complex(re, im)), out_re, out_im);
  });
}

hh_status hh_field_beta(const hh_field* f, double re, double im, double* out_re, double* out_im) {
  return guard([&] {
    require(f && out_re && out_im, "null argument");
    put(beta(f->f, Complex(re, im)), out_re, out_im);
  });
}

hh_status hh_field_harmonic_residual(const hh_field* f, double re, double im, double* r1, double* r2) {
  return guard([&] {
    require(f && r1 && r2, "null argument");
    HarmonicResidual r = harmonic_residual(f->f, Complex(re, im));
    *r1 = r.r1;
    *r2 = r.r2;
  });
}

hh_status hh_field_grid_csv(const hh_field* f, const char* grid, char** out) {
  return guard([&] {
    require(f && out, "null argument");
    auto pts = domain_grid(grid, f->f.model);
    std::vector<std::vector<double>> rows(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) {
      Complex z = pts[i], x = f->f(z), b = beta(f->f, z);
      HarmonicResidual r = harmonic_residual(f->f, z);
      rows[i] = {z.real(), z.imag(), x.real(), x.imag(), r.r1, r.r2, b.real(), b.imag()};
    });
    CsvWriter csv({"x", "y", "re(xi)", "im(xi)", "r1", "r2", "re(f)", "im(f)"});
    for (const auto& r : rows) csv.row(r);
    *out = dup_string(csv.str());
  });
}

hh_status hh_field_beta_csv(const hh_field* f, const hh_qd* q, const char* grid, char** out, double* max_err) {
  return guard([&] {
    require(f && q && out && max_err, "null argument");
    require(f->f.model == q->q.model, "field and differential live on different models");
    auto pts = domain_grid(grid, f->f.model);
    std::vector<std::vector<double>> rows(pts.size());
    parallel_for(pts.size(), [&](std::size_t i) {
      Complex z = pts[i], b = beta_fd(f->f, z), v = q->q(z);
      rows[i] = {z.real(), z.imag(), b.real(), b.imag(), v.real(), v.imag(), std::abs(b - v)};
    });
    CsvWriter csv({"x", "y", "re(beta)", "im(beta)", "re(q)", "im(q)", "err"});
    *max_err = 0.0;
    for (const auto& r : rows) {
      csv.row(r);
      *max_err = std::max(*max_err, r[6]);
    }
    *out = dup_string(csv.str());
  });
}

hh_status hh_circle_from_json(const char* json, hh_circle** out) {
  return guard([&] {
    require(json && out, "null argument");
    *out = new hh_circle{circle_from_json(Json::parse(json))};
  });
}

hh_status hh_circle_to_json(const hh_circle* x, char** out) {
  return guard([&] {
    require(x && out, "null argument");
    *out = dup_string(to_json(x->x).dump());
  });
}

void hh_circle_free(hh_circle* x) { delete x; }

int hh_circle_size(const hh_circle* x) { return x ? x->x.size() : 0; }

hh_status hh_circle_split_json(const hh_circle* x, char** out) {
  return guard([&] {
    require(x && out, "null argument");
    FourierSplit s = split_tangential_h2(x->x);
    KillingProjection k = killing_project(x->x);
    Json j{{"tangential", to_json(s.tangential_part)},
           {"h2", to_json(s.h2_part)},
           {"tangential_defect", tangential_defect(s.tangential_part)},
           {"killing", {{"a", complex_to_json(k.triple.a)}, {"b", k.triple.b}, {"residual", k.residual}}}};
    *out = dup_string(j.dump());
  });
}

hh_status hh_circle_poisson_ring_csv(const hh_circle* x, double radius, int n, char** out) {
  return guard([&] {
    require(x && out, "null argument");
    require(radius > 0.0 && radius < 1.0, "radius must lie in (0, 1)");
    require(n >= 1, "sample count must be positive");
    VectorField f = poisson_extend(x->x);
    std::vector<Complex> vals(n);
    parallel_for(n, [&](std::size_t k) { vals[k] = f(std::polar(radius, 2.0 * std::numbers::pi * k / n)); });
    CsvWriter csv({"theta", "re", "im"});
    for (int k = 0; k < n; ++k) csv.row(row_of({2.0 * std::numbers::pi * k / n, vals[k].real(), vals[k].imag()}));
    *out = dup_string(csv.str());
  });
}

hh_status hh_kernel_mass(double eps, double numeric[2], double closed_form[2]) {
  return guard([&] {
    require(numeric && closed_form, "null argument");
    require(eps > 0.0 && eps < 1.0, "eps must lie in (0, 1)");
    KernelMass m = kernel_mass(eps);
    put(m.numeric, &numeric[0], &numeric[1]);
    put(m.closed_form, &closed_form[0], &closed_form[1]);
  });
}

hh_status hh_phi(const hh_qd* q, const hh_group* g, int boundary_samples, hh_cocycle** out, hh_phi_report* report) {
  return guard([&] {
    require(q && g && out, "null argument");
    PhiOptions opt;
    if (boundary_samples > 0) opt.boundary_samples = boundary_samples;
    PhiResult r = q->automorphic ? phi_map(*q->automorphic, g->g, opt) : phi_map(q->q, g->g, opt);
    if (report) {
      report->fit_residual = r.fit_residual;
      report->delta_norm = r.delta_norm;
      report->relation_defect = r.relation_defect;
      report->invariance_defect = r.invariance_defect;
      report->cutoff = r.cutoff;
      report->class_norm = g->space.class_norm(r.cocycle);
    }
    *out = new hh_cocycle{std::move(r.cocycle)};
  });
}

hh_status hh_psi(const hh_cocycle* c, const hh_group* g, int boundary_samples, hh_qd** out) {
  return guard([&] {
    require(c && g && out, "null argument");
    PsiOptions opt;
    if (boundary_samples > 0) opt.boundary_samples = boundary_samples;
    PsiResult r = psi_map(c->c, g->g, opt);
    *out = new hh_qd{r.qd, r.automorphic, std::nullopt};
  });
}

hh_status hh_roundtrip(const hh_cocycle* c, const hh_group* g, int psi_samples, int phi_samples,
                       hh_roundtrip_report* report) {
  return guard([&] {
    require(c && g && report, "null argument");
    PsiOptions po;
    PhiOptions fo;
    if (psi_samples > 0) po.boundary_samples = psi_samples;
    if (phi_samples > 0) fo.boundary_samples = phi_samples;
    RoundTripResult r = roundtrip(c->c, g->g, po, fo);
    *report = hh_roundtrip_report{};
    report->relative_error = r.relative_error;
    report->input_fit_residual = r.input_fit_residual;
    report->output_fit_residual = r.output_fit_residual;
    report->dim = static_cast<int>(r.input_coords.size());
    for (int k = 0; k < std::min(report->dim, 16); ++k) {
      report->input_coords[k] = r.input_coords(k);
      report->output_coords[k] = r.output_coords(k);
    }
  });
}

hh_status hh_harmonic_lift(const hh_cocycle* c, const hh_group* g, hh_field** out) {
  return guard([&] {
    require(c && g && out, "null argument");
    *out = new hh_field{harmonic_lift(c->c, g->g)};
  });
}

int hh_criterion_count(void) { return kCriterionCount; }

hh_status hh_verify_criterion(int id, int fast, int* pass, char** json) {
  return guard([&] {
    require(pass && json, "null argument");
    VerifyReport rep;
    rep.fast = fast != 0;
    rep.criteria.push_back(run_criterion(id, VerifyOptions{fast != 0}));
    *pass = rep.all_pass() ? 1 : 0;
    *json = dup_string(rep.to_json().dump(2));
  });
}

hh_status hh_verify_all(int fast, int* pass, char** json) {
  return guard([&] {
    require(pass && json, "null argument");
    VerifyReport rep = verify_all(VerifyOptions{fast != 0});
    *pass = rep.all_pass() ? 1 : 0;
    *json = dup_string(rep.to_json().dump(2));
  });
}

}  // extern "C"

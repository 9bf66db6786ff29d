#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hyperharm/hyperharm.h"

namespace {

constexpr int kExitCheck = 1;
constexpr int kExitConfig = 2;

struct Failure {
  int code;
  std::string message;
};

bool is_config_error(hh_status s) {
  return s == HH_INVALID_ARGUMENT || s == HH_PARSE_ERROR || s == HH_IO_ERROR || s == HH_DOMAIN_VIOLATION ||
         s == HH_TOO_CLOSE_TO_BOUNDARY;
}

void check(hh_status s) {
  if (s != HH_OK)
    throw Failure{is_config_error(s) ? kExitConfig : kExitCheck, hh_last_error()};
}

std::string take(char* s) {
  std::string out(s ? s : "");
  hh_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kExitConfig, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to the path, or to stdout when the path is empty.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
  if (!out) throw Failure{kExitConfig, "cannot write " + path};
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
  T** out() { return &p; }
  operator T*() const { return p; }  // NOLINT(implicit)
};

using Map = Handle<hh_map, hh_map_free>;
using Group = Handle<hh_group, hh_group_free>;
using CocycleH = Handle<hh_cocycle, hh_cocycle_free>;
using Circle = Handle<hh_circle, hh_circle_free>;
using Qd = Handle<hh_qd, hh_qd_free>;
using Field = Handle<hh_field, hh_field_free>;

struct Config {
  std::string grid = "-2:2:9,0.5:3:6";
  std::string disk_grid = "-0.5:0.5:11,-0.5:0.5:11";
  double eps = 0.01;
  int L = 6;
  int N = 0;
  double tol = 0.0;
  std::string out;
  std::string group = "octagon";
  std::string qd;
  std::string seed = "1";
  std::string in;
  std::string map;
  double radius = 0.9;
  bool fast = false;
};

double tol_or(const Config& c, double def) { return c.tol > 0.0 ? c.tol : def; }

void load_group(const Config& c, Group& g) { check(hh_group_load(c.group.c_str(), g.out())); }

int cmd_classify(const Config& c) {
  Map m;
  if (!c.in.empty()) {
    check(hh_map_from_json(read_file(c.in).c_str(), m.out()));
  } else {
    std::vector<double> e;
    std::stringstream ss(c.map);
    for (std::string tok; std::getline(ss, tok, ',');) {
      try {
        e.push_back(std::stod(tok));
      } catch (const std::exception&) {
        throw Failure{kExitConfig, "--map entries must be numbers"};
      }
    }
    if (e.size() != 4) throw Failure{kExitConfig, "--map needs four real entries a,b,c,d (or --in map.json)"};
    double a[2] = {e[0], 0}, b[2] = {e[1], 0}, cc[2] = {e[2], 0}, d[2] = {e[3], 0};
    check(hh_map_create(HH_SL2R, a, b, cc, d, m.out()));
  }
  hh_isometry cls;
  double t2;
  check(hh_map_classify(m, tol_or(c, 1e-9), &cls));
  check(hh_map_trace_squared(m, &t2));
  emit(c.out, std::string(hh_isometry_name(cls)) + "\ntrace^2 " + fmt(t2));
  return 0;
}

void build_field(const Config& c, Qd& q, Field& f, double tail_tol) {
  if (c.qd.empty()) throw Failure{kExitConfig, "--qd is required"};
  check(hh_qd_parse(c.qd.c_str(), q.out()));
  check(hh_field_construct(q, tail_tol, f.out()));
}

int cmd_construct(const Config& c) {
  Qd q;
  Field f;
  build_field(c, q, f, tol_or(c, 1e-8));
  char* csv = nullptr;
  check(hh_field_grid_csv(f, c.grid.c_str(), &csv));
  emit(c.out, take(csv));
  return 0;
}

int cmd_check_harmonic(const Config& c) {
  Qd q;
  Field f;
  build_field(c, q, f, 1e-8);
  char* csv = nullptr;
  check(hh_field_grid_csv(f, c.grid.c_str(), &csv));
  std::string text = take(csv);
  // columns x,y,re,im,r1,r2,...
  double worst = 0.0;
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  while (std::getline(lines, line)) {
    std::vector<double> v;
    std::stringstream ss(line);
    for (std::string tok; std::getline(ss, tok, ',');) v.push_back(std::stod(tok));
    if (v.size() >= 6) worst = std::max({worst, std::abs(v[4]), std::abs(v[5])});
  }
  if (!c.out.empty()) emit(c.out, text);
  double bound = tol_or(c, 1e-5);
  std::cout << "max_residual " << fmt(worst) << "\nbound " << fmt(bound) << "\n"
            << (worst <= bound ? "PASS" : "FAIL") << "\n";
  return worst <= bound ? 0 : kExitCheck;
}

int cmd_beta(const Config& c) {
  Qd q;
  Field f;
  build_field(c, q, f, 1e-8);
  char* csv = nullptr;
  double worst = 0.0;
  check(hh_field_beta_csv(f, q, c.grid.c_str(), &csv, &worst));
  std::string text = take(csv);
  if (!c.out.empty()) emit(c.out, text);
  double bound = tol_or(c, 1e-5);
  std::cout << "max_error " << fmt(worst) << "\nbound " << fmt(bound) << "\n"
            << (worst <= bound ? "PASS" : "FAIL") << "\n";
  return worst <= bound ? 0 : kExitCheck;
}

void load_circle(const Config& c, Circle& x) {
  if (c.in.empty()) throw Failure{kExitConfig, "--in field.json is required"};
  check(hh_circle_from_json(read_file(c.in).c_str(), x.out()));
}

int cmd_poisson_extend(const Config& c) {
  Circle x;
  load_circle(c, x);
  char* csv = nullptr;
  check(hh_circle_poisson_ring_csv(x, c.radius, c.N > 0 ? c.N : hh_circle_size(x), &csv));
  emit(c.out, take(csv));
  return 0;
}

int cmd_split_circle(const Config& c) {
  Circle x;
  load_circle(c, x);
  char* json = nullptr;
  check(hh_circle_split_json(x, &json));
  emit(c.out, take(json));
  return 0;
}

int cmd_kernel_mass(const Config& c) {
  double num[2], closed[2];
  check(hh_kernel_mass(c.eps, num, closed));
  double diff = std::hypot(num[0] - closed[0], num[1] - closed[1]);
  std::string text = "numeric " + fmt(num[0]) + " " + fmt(num[1]) + "\nclosed_form " + fmt(closed[0]) + " " +
                     fmt(closed[1]) + "\ndifference " + fmt(diff);
  emit(c.out, text);
  return diff <= tol_or(c, 1e-7) ? 0 : kExitCheck;
}

int cmd_cohomology_dims(const Config& c) {
  Group g;
  load_group(c, g);
  int z1, b1, h1;
  check(hh_group_dims(g, &z1, &b1, &h1));
  emit(c.out, std::to_string(z1) + " " + std::to_string(b1) + " " + std::to_string(h1));
  return 0;
}

int cmd_theta(const Config& c) {
  Group g;
  load_group(c, g);
  Qd q;
  double defect;
  check(hh_theta_defect(g, c.seed.c_str(), c.L, &defect));
  check(hh_qd_theta(g, c.seed.c_str(), c.L, q.out()));
  char* csv = nullptr;
  check(hh_qd_sample_csv(q, c.disk_grid.c_str(), &csv));
  emit(c.out, take(csv));
  std::cerr << "theta seed " << c.seed << " L " << c.L << " relative invariance defect " << fmt(defect) << "\n";
  return 0;
}

void print_phi(const hh_phi_report& r) {
  std::cout << "fit_residual " << fmt(r.fit_residual) << "\ndelta_norm " << fmt(r.delta_norm)
            << "\nrelation_defect " << fmt(r.relation_defect) << "\ninvariance_defect " << fmt(r.invariance_defect)
            << "\ncutoff " << fmt(r.cutoff) << "\nclass_norm " << fmt(r.class_norm) << "\n";
}

void phi_of_theta(const Config& c, const Group& g, CocycleH& out, hh_phi_report& rep) {
  Qd q;
  if (c.qd.empty())
    check(hh_qd_theta(g, c.seed.c_str(), c.L, q.out()));
  else
    check(hh_qd_parse(c.qd.c_str(), q.out()));
  check(hh_phi(q, g, c.N, out.out(), &rep));
}

int cmd_phi(const Config& c) {
  Group g;
  load_group(c, g);
  CocycleH co;
  hh_phi_report rep;
  phi_of_theta(c, g, co, rep);
  char* json = nullptr;
  check(hh_cocycle_to_json(co, &json));
  emit(c.out, take(json));
  if (!c.out.empty()) print_phi(rep);
  return 0;
}

void load_cocycle(const Config& c, const Group& g, CocycleH& co) {
  check(hh_cocycle_from_json(read_file(c.in).c_str(), g, co.out()));
}

int cmd_psi(const Config& c) {
  if (c.in.empty()) throw Failure{kExitConfig, "--in cocycle.json is required"};
  Group g;
  load_group(c, g);
  CocycleH co;
  load_cocycle(c, g, co);
  Qd q;
  check(hh_psi(co, g, c.N, q.out()));
  char* csv = nullptr;
  check(hh_qd_sample_csv(q, c.disk_grid.c_str(), &csv));
  emit(c.out, take(csv));
  return 0;
}

int cmd_roundtrip(const Config& c) {
  Group g;
  load_group(c, g);
  CocycleH co;
  if (!c.in.empty()) {
    load_cocycle(c, g, co);
  } else {
    hh_phi_report rep;
    phi_of_theta(c, g, co, rep);
  }
  hh_roundtrip_report r;
  check(hh_roundtrip(co, g, 0, c.N, &r));
  std::ostringstream os;
  os << "input_coords";
  for (int k = 0; k < r.dim; ++k) os << " " << fmt(r.input_coords[k]);
  os << "\noutput_coords";
  for (int k = 0; k < r.dim; ++k) os << " " << fmt(r.output_coords[k]);
  os << "\nrelative_error " << fmt(r.relative_error);
  emit(c.out, os.str());
  double bound = tol_or(c, 0.05);
  return r.relative_error <= bound ? 0 : kExitCheck;
}

int cmd_verify_all(const Config& c) {
  int pass = 0;
  char* json = nullptr;
  check(hh_verify_all(c.fast ? 1 : 0, &pass, &json));
  std::string text = take(json);
  emit(c.out, text);
  if (!c.out.empty()) std::cout << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : kExitCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperharm: harmonic vector fields, quadratic differentials and Fuchsian cohomology"};
  app.require_subcommand(1);
  Config cfg;

  auto out = [&](CLI::App* s) { s->add_option("--out", cfg.out, "output path (stdout if omitted)"); };
  auto tol = [&](CLI::App* s, const std::string& what) { s->add_option("--tol", cfg.tol, what)->check(CLI::PositiveNumber); };
  auto grid = [&](CLI::App* s) { s->add_option("--grid", cfg.grid, "x0:x1:nx,y0:y1:ny in the half-plane"); };
  auto disk_grid = [&](CLI::App* s) { s->add_option("--grid", cfg.disk_grid, "x0:x1:nx,y0:y1:ny in the disk"); };
  auto group = [&](CLI::App* s) { s->add_option("--group", cfg.group, "octagon or a group JSON path"); };
  auto samples = [&](CLI::App* s, const std::string& what) { s->add_option("--N", cfg.N, what)->check(CLI::PositiveNumber); };

  std::vector<std::pair<CLI::App*, int (*)(const Config&)>> commands;
  auto sub = [&](const char* name, const char* help, int (*fn)(const Config&)) {
    CLI::App* s = app.add_subcommand(name, help);
    commands.emplace_back(s, fn);
    return s;
  };

  auto* s = sub("classify", "classify a Moebius map", cmd_classify);
  s->add_option("--map", cfg.map, "a,b,c,d of an SL(2,R) map");
  s->add_option("--in", cfg.in, "MoebiusMap JSON");
  tol(s, "parabolic tolerance on |trace^2 - 4|");
  out(s);

  s = sub("construct", "sample xi_reg, its harmonic residual and beta on a grid (CSV)", cmd_construct);
  s->add_option("--qd", cfg.qd, "differential spec")->required();
  grid(s);
  tol(s, "tail tolerance of the regularized field");
  out(s);

  s = sub("check-harmonic", "max harmonic residual of the constructed field on a grid", cmd_check_harmonic);
  s->add_option("--qd", cfg.qd, "differential spec")->required();
  grid(s);
  tol(s, "pass threshold (default 1e-5)");
  out(s);

  s = sub("beta", "compare beta of the constructed field with the differential", cmd_beta);
  s->add_option("--qd", cfg.qd, "differential spec")->required();
  grid(s);
  tol(s, "pass threshold (default 1e-5)");
  out(s);

  s = sub("poisson-extend", "Poisson extension of a circle field sampled on a ring", cmd_poisson_extend);
  s->add_option("--in", cfg.in, "CircleField JSON")->required();
  s->add_option("--radius", cfg.radius, "ring radius")->check(CLI::Range(0.0, 1.0));
  samples(s, "ring samples (default: input N)");
  out(s);

  s = sub("kernel-mass", "kernel-mass integral against its residue expression", cmd_kernel_mass);
  s->add_option("--eps", cfg.eps, "distance 1 - s of the kernel centre")->check(CLI::PositiveNumber);
  tol(s, "agreement threshold (default 1e-7)");
  out(s);

  s = sub("split-circle", "tangential + H2 decomposition of a circle field", cmd_split_circle);
  s->add_option("--in", cfg.in, "CircleField JSON")->required();
  out(s);

  s = sub("cohomology-dims", "dim Z1, dim B1, dim H1", cmd_cohomology_dims);
  group(s);
  out(s);

  s = sub("theta", "automorphic theta differential sampled on a disk grid", cmd_theta);
  s->add_option("--seed", cfg.seed, "seed polynomial, e.g. 1 or z^2");
  s->add_option("--L", cfg.L, "word-length truncation")->check(CLI::Range(0, 8));
  group(s);
  disk_grid(s);
  out(s);

  s = sub("phi", "cocycle of a differential (JSON)", cmd_phi);
  s->add_option("--qd", cfg.qd, "differential spec (default: theta of --seed at --L)");
  s->add_option("--seed", cfg.seed, "theta seed");
  s->add_option("--L", cfg.L, "theta truncation")->check(CLI::Range(0, 8));
  samples(s, "boundary samples");
  group(s);
  out(s);

  s = sub("psi", "differential of a cocycle sampled on a disk grid", cmd_psi);
  s->add_option("--in", cfg.in, "cocycle JSON")->required();
  samples(s, "boundary samples");
  group(s);
  disk_grid(s);
  out(s);

  s = sub("roundtrip", "H1 coordinates of c and Phi(Psi(c))", cmd_roundtrip);
  s->add_option("--in", cfg.in, "cocycle JSON (default: Phi of the theta differential)");
  s->add_option("--seed", cfg.seed, "theta seed");
  s->add_option("--L", cfg.L, "theta truncation")->check(CLI::Range(0, 8));
  samples(s, "boundary samples for Phi");
  tol(s, "pass threshold on the relative error (default 0.05)");
  group(s);
  out(s);

  s = sub("verify-all", "run the acceptance suite; JSON report", cmd_verify_all);
  s->add_flag("--fast", cfg.fast, "skip the slowest checks");
  out(s);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfig;
  }

  try {
    for (auto& [cmd, fn] : commands)
      if (cmd->parsed()) return fn(cfg);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  }
  return kExitConfig;
}

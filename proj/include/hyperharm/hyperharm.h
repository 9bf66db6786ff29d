#ifndef HYPERHARM_H
#define HYPERHARM_H

#include <stddef.h>

#if defined(HH_BUILDING_LIBRARY)
#define HH_API __attribute__((visibility("default")))
#else
#define HH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. 0 is success; the rest mirror the library error kinds. */
typedef enum hh_status {
  HH_OK = 0,
  HH_POLE_AT_POINT = 1,
  HH_IDENTITY_MAP,
  HH_CONSTRAINT_VIOLATION,
  HH_TOO_CLOSE_TO_BOUNDARY,
  HH_QUADRATURE_FAILURE,
  HH_DOMAIN_VIOLATION,
  HH_BOUNDS_MISSING,
  HH_NOT_TANGENTIAL,
  HH_COMMUTING_INPUTS,
  HH_CONSTRUCTION_FAILED,
  HH_TRUNCATION_TOO_LARGE,
  HH_INVARIANCE_DEFECT_TOO_LARGE,
  HH_COVERAGE_GAP,
  HH_INVALID_ARGUMENT,
  HH_PARSE_ERROR,
  HH_IO_ERROR,
  HH_INTERNAL = 99
} hh_status;

typedef enum hh_isometry { HH_IDENTITY = 0, HH_ELLIPTIC, HH_PARABOLIC, HH_HYPERBOLIC } hh_isometry;
typedef enum hh_model { HH_HALF_PLANE = 0, HH_DISK = 1 } hh_model;
typedef enum hh_matrix_model { HH_SL2R = 0, HH_SU11 = 1 } hh_matrix_model;

typedef struct hh_map hh_map;
typedef struct hh_group hh_group;
typedef struct hh_cocycle hh_cocycle;
typedef struct hh_circle hh_circle;
typedef struct hh_qd hh_qd;
typedef struct hh_field hh_field;

/* Message of the last failure on the calling thread ("" if none). */
HH_API const char* hh_last_error(void);
HH_API const char* hh_status_name(hh_status s);
HH_API const char* hh_version(void);
/* Strings returned through char** out-parameters are released here. */
HH_API void hh_string_free(char* s);

/* Moebius maps. Entries are (re, im) pairs. */
HH_API hh_status hh_map_create(hh_matrix_model model, const double a[2], const double b[2], const double c[2],
                               const double d[2], hh_map** out);
HH_API hh_status hh_map_from_json(const char* json, hh_map** out);
HH_API hh_status hh_map_to_json(const hh_map* m, char** out);
HH_API void hh_map_free(hh_map* m);
HH_API hh_status hh_map_apply(const hh_map* m, double re, double im, double* out_re, double* out_im);
HH_API hh_status hh_map_classify(const hh_map* m, double tol, hh_isometry* out);
HH_API hh_status hh_map_trace_squared(const hh_map* m, double* out);
HH_API const char* hh_isometry_name(hh_isometry c);

/* Groups. spec is "octagon" or a path to a group JSON file. */
HH_API hh_status hh_group_load(const char* spec, hh_group** out);
HH_API hh_status hh_group_to_json(const hh_group* g, char** out);
HH_API void hh_group_free(hh_group* g);
HH_API hh_status hh_group_dims(const hh_group* g, int* z1, int* b1, int* h1);
HH_API hh_status hh_group_relation_residual(const hh_group* g, double* out);
/* Rank of the commutator map's differential at (generator i, generator j). */
HH_API hh_status hh_group_commutator_rank(const hh_group* g, int i, int j, int* out);

/* Cocycles. */
HH_API hh_status hh_cocycle_from_json(const char* json, const hh_group* g, hh_cocycle** out);
HH_API hh_status hh_cocycle_to_json(const hh_cocycle* c, char** out);
HH_API void hh_cocycle_free(hh_cocycle* c);
HH_API hh_status hh_cocycle_relation_defect(const hh_cocycle* c, const hh_group* g, double* out);
/* H^1 coordinates; writes min(cap, dim H^1) values and the dimension to *count. */
HH_API hh_status hh_cocycle_class_coords(const hh_cocycle* c, const hh_group* g, double* coords, int cap,
                                         int* count);

/* Quadratic differentials.
   hh_qd_parse accepts monomial:n, shifted:n:a_re:a_im, rational:(z+i)^-4 and
   theta:L; values are half-plane coefficients.
   hh_qd_theta builds the automorphic theta differential of a seed on the disk. */
HH_API hh_status hh_qd_parse(const char* spec, hh_qd** out);
HH_API hh_status hh_qd_theta(const hh_group* g, const char* seed, int L, hh_qd** out);
HH_API void hh_qd_free(hh_qd* q);
HH_API hh_model hh_qd_model(const hh_qd* q);
HH_API hh_status hh_qd_eval(const hh_qd* q, double re, double im, double* out_re, double* out_im);
/* Sup over probes of the relative invariance defect of the raw truncated series. */
HH_API hh_status hh_theta_defect(const hh_group* g, const char* seed, int L, double* out);
/* CSV x,y,re(q),im(q) over a grid "x0:x1:nx,y0:y1:ny" in the differential's model. */
HH_API hh_status hh_qd_sample_csv(const hh_qd* q, const char* grid, char** out);

/* Harmonic vector fields on the half-plane with beta = q. */
HH_API hh_status hh_field_construct(const hh_qd* q, double tol, hh_field** out);
HH_API void hh_field_free(hh_field* f);
HH_API hh_status hh_field_eval(const hh_field* f, double re, double im, double* out_re, double* out_im);
HH_API hh_status hh_field_beta(const hh_field* f, double re, double im, double* out_re, double* out_im);
HH_API hh_status hh_field_harmonic_residual(const hh_field* f, double re, double im, double* r1, double* r2);
/* CSV x,y,re(xi),im(xi),r1,r2,re(f),im(f) where f is beta(xi). */
HH_API hh_status hh_field_grid_csv(const hh_field* f, const char* grid, char** out);
/* CSV x,y,re(beta),im(beta),re(q),im(q),err and the largest |beta - q|. */
HH_API hh_status hh_field_beta_csv(const hh_field* f, const hh_qd* q, const char* grid, char** out, double* max_err);

/* Fields on the unit circle. */
HH_API hh_status hh_circle_from_json(const char* json, hh_circle** out);
HH_API hh_status hh_circle_to_json(const hh_circle* x, char** out);
HH_API void hh_circle_free(hh_circle* x);
HH_API int hh_circle_size(const hh_circle* x);
/* Tangential + H^2 decomposition and the Killing projection as one JSON document. */
HH_API hh_status hh_circle_split_json(const hh_circle* x, char** out);
/* CSV theta,re,im of the Poisson extension sampled on |z| = radius with n points. */
HH_API hh_status hh_circle_poisson_ring_csv(const hh_circle* x, double radius, int n, char** out);
HH_API hh_status hh_kernel_mass(double eps, double numeric[2], double closed_form[2]);

/* Pipelines. boundary_samples <= 0 selects the default. */
typedef struct hh_phi_report {
  double fit_residual;
  double delta_norm;
  double relation_defect;
  double invariance_defect;
  double cutoff;
  double class_norm;
} hh_phi_report;

HH_API hh_status hh_phi(const hh_qd* q, const hh_group* g, int boundary_samples, hh_cocycle** out,
                        hh_phi_report* report);
/* Psi(c) as a disk differential (automorphic fit of beta of the harmonic lift). */
HH_API hh_status hh_psi(const hh_cocycle* c, const hh_group* g, int boundary_samples, hh_qd** out);

typedef struct hh_roundtrip_report {
  double relative_error;
  double input_fit_residual;
  double output_fit_residual;
  int dim;
  double input_coords[16];
  double output_coords[16];
} hh_roundtrip_report;

HH_API hh_status hh_roundtrip(const hh_cocycle* c, const hh_group* g, int psi_samples, int phi_samples,
                              hh_roundtrip_report* report);
HH_API hh_status hh_harmonic_lift(const hh_cocycle* c, const hh_group* g, hh_field** out);

/* Acceptance suite. JSON reports carry per-check name, value, bound and pass. */
HH_API int hh_criterion_count(void);
HH_API hh_status hh_verify_criterion(int id, int fast, int* pass, char** json);
HH_API hh_status hh_verify_all(int fast, int* pass, char** json);

#ifdef __cplusplus
}
#endif

#endif

#ifndef MONOPOLE_H
#define MONOPOLE_H

/*
 * C interface to the monopole moduli toolkit.
 *
 * Objects are opaque handles created and released through this API.
 * Every fallible call returns an mnp_status; MNP_OK is 0. After a failure
 * mnp_last_error() returns a thread-local description of the problem.
 * Handles passed to getters must be valid and non-NULL.
 *
 * Rational arguments are strings: "p", "p/q" or a decimal such as "0.5".
 * Vectors are comma separated, e.g. mass "0,3" or charge "1/1,-2".
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mnp_status {
  MNP_OK = 0,
  MNP_ERR_INVALID = 2,     /* unparsable input or precondition violation */
  MNP_ERR_INTEGRALITY = 3, /* charge outside the coroot lattice */
  MNP_ERR_INTERNAL = 4     /* internal consistency failure */
} mnp_status;

const char* mnp_last_error(void);

/* ---- root systems ---- */

typedef struct mnp_rootsys mnp_rootsys;

/* group: comma separated simple types, e.g. "A1", "a2,B3,E8". */
mnp_status mnp_rootsys_create(const char* group, mnp_rootsys** out);
void mnp_rootsys_free(mnp_rootsys* rs);

int mnp_rootsys_rank(const mnp_rootsys* rs);
int mnp_rootsys_root_count(const mnp_rootsys* rs);
/* cartan[i][j] = <alpha_j, alpha_i^vee>; 0 for indices out of range. */
long long mnp_rootsys_cartan(const mnp_rootsys* rs, int i, int j);
/* Canonical spelling of the group spec ("A2,B3"). */
const char* mnp_rootsys_group(const mnp_rootsys* rs);

/* ---- dimension, charges, symmetry breaking ---- */

typedef struct mnp_report mnp_report;

/*
 * Computes the full dimension report for (mass, charge) on rs.
 * mass: rank rationals in the coweight basis; charge: rank integers in the
 * coroot basis; tiebreak: rank rationals or NULL for the default.
 */
mnp_status mnp_dim(const mnp_rootsys* rs, const char* mass, const char* charge,
                   const char* tiebreak, mnp_report** out);
void mnp_report_free(mnp_report* rep);

long long mnp_report_dimension(const mnp_report* rep);
long long mnp_report_scattering(const mnp_report* rep);
long long mnp_report_defect(const mnp_report* rep);
long long mnp_report_stratum_dim(const mnp_report* rep);
long long mnp_report_base_dim(const mnp_report* rep);
long long mnp_report_centralizer_mu_dim(const mnp_report* rep);
long long mnp_report_stabilizer_mu_kappa_dim(const mnp_report* rep);
int mnp_report_empty_flag(const mnp_report* rep);
long long mnp_report_roots_mu_positive(const mnp_report* rep);
long long mnp_report_roots_mu_zero(const mnp_report* rep);
long long mnp_report_roots_mu_zero_kappa_nonzero(const mnp_report* rep);

/* Adapted charges, ordered by base root (sorted by coordinates). */
int mnp_report_charge_count(const mnp_report* rep);
long long mnp_report_charge_value(const mnp_report* rep, int i);
int mnp_report_charge_is_magnetic(const mnp_report* rep, int i);
/* Coordinates of the i-th adapted base root, comma separated ("0,1"). */
const char* mnp_report_base_coords(const mnp_report* rep, int i);

/* Canonical echoes of the inputs ("0,3" / "0,2"). */
const char* mnp_report_mass(const mnp_report* rep);
const char* mnp_report_charge(const mnp_report* rep);

/* ---- b-spectrum and defect ---- */

typedef struct mnp_bspec mnp_bspec;

/*
 * Indicial roots with |lambda| <= lambda_max for degree d at parameter t,
 * one row per (j, sign) branch, sorted by lambda. The two j = 0 branches
 * collide at lambda = 0 when t = 0 and d != 0; both rows are kept.
 */
mnp_status mnp_bspec_create(long long d, const char* t, const char* lambda_max, mnp_bspec** out);
void mnp_bspec_free(mnp_bspec* bs);
int mnp_bspec_count(const mnp_bspec* bs);
long long mnp_bspec_j(const mnp_bspec* bs, int row);
int mnp_bspec_sign(const mnp_bspec* bs, int row);
double mnp_bspec_lambda(const mnp_bspec* bs, int row);
/* Exact lambda^2 as num/den. */
mnp_status mnp_bspec_lambda_sq(const mnp_bspec* bs, int row, long long* num, long long* den);

/* |d| at the root -t|d|/2 (sign -1), 0 at +t|d|/2 (sign +1); t = 0 rejected. */
mnp_status mnp_j0_nullity(long long d, const char* t, int sign, long long* out);

/* Defect per line-bundle copy at weight delta, |delta| < 1; half-integer
 * returned as num/den. Weights on the indicial line are rejected. */
mnp_status mnp_defect_region(long long d, const char* t, const char* delta,
                             long long* num, long long* den);

/* Fills js/eigs with (j, j(j+|d|)) for j = 0..jmax (j = 0 only when d > 0).
 * cap is the array capacity; *count receives the number of rows. */
mnp_status mnp_dirac_specsq(long long d, long long jmax, long long* js, long long* eigs,
                            int cap, int* count);

/* ---- abelian model ---- */

typedef enum mnp_patch { MNP_PATCH_NORTH = 0, MNP_PATCH_SOUTH = 1 } mnp_patch;

mnp_status mnp_model_fields(long long d, double m, mnp_patch patch, double r, double theta,
                            double* a_phi, double* phi, double* f_thetaphi);
mnp_status mnp_chern_number(long long d, int n_theta, int n_phi, double* out);
mnp_status mnp_bogomolny_residual(long long d, double m, double r_min, double r_max,
                                  int n_r, int n_theta, int n_phi, double* out);

#ifdef __cplusplus
}
#endif

#endif /* MONOPOLE_H */

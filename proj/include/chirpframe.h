/* C interface to the chirped-Gaussian Gabor toolkit.
 *
 * Every function returns a status code; results go through out-pointers.
 * Closed-form results are plain value structs. Sampled signals and grids
 * are opaque handles with explicit destroy functions. On a nonzero status
 * the out-parameters are unspecified and cf_last_error() returns a
 * thread-local message describing the failure.
 */
#ifndef CHIRPFRAME_H
#define CHIRPFRAME_H

#ifdef __cplusplus
extern "C" {
#endif

#define CF_OK 0
#define CF_ERR_DOMAIN 2  /* invalid argument or precondition violation */
#define CF_ERR_NUMERIC 3 /* search, certification, or grid failure */

typedef struct cf_complex {
  double re;
  double im;
} cf_complex;

/* g(x) = c * exp(-pi*w*x^2 + l*x), Re w > 0. */
typedef struct cf_atom {
  cf_complex c;
  cf_complex w;
  cf_complex l;
} cf_atom;

/* Row-major 2x2 matrix; the lattice is Q Z^2. */
typedef struct cf_mat2 {
  double a, b, c, d;
} cf_mat2;

typedef struct cf_qr_factors {
  double theta;
  double lambda;
  double alpha;
  double beta;
} cf_qr_factors;

typedef struct cf_lu_rotation {
  double lambda_prime;
  double d1;
  double d2;
  double theta;
} cf_lu_rotation;

typedef struct cf_chirp_design {
  double lambda;
  double lambda_prime;
  double gamma_conv;
  double u;
  double v;
  double r;
  cf_complex s;
} cf_chirp_design;

typedef struct cf_zero_certificate {
  double t;
  double omega;
  int winding;
  double simplicity_constant;
  int search_resolution;
} cf_zero_certificate;

typedef struct cf_bound_estimate {
  double A_est;
  double B_est;
  double L;
  int N;
  int M;
  int certified;
} cf_bound_estimate;

typedef struct cf_canonical_form {
  cf_atom window;
  double lambda;
  double alpha;
  double beta;
  double scale;
  double theta;
} cf_canonical_form;

typedef struct cf_janssen {
  int certified;
  double A_lower;
  double B_upper;
  double c00;
  double off_sum;
  double tail;
} cf_janssen;

typedef struct cf_equivalence {
  double ratio_direct;
  double ratio_canonical;
  double drift;
  int pass;
  cf_canonical_form canonical;
} cf_equivalence;

typedef struct cf_sweep_row {
  double det;
  double A_est;
  double B_est;
  double ratio;
  int certified;
  int density_violating;
} cf_sweep_row;

typedef struct cf_signal cf_signal; /* uniform complex samples */
typedef struct cf_grid cf_grid;     /* N x N scalar field on the unit square */

/* Thread-local message for the most recent failing call on this thread. */
const char* cf_last_error(void);
const char* cf_version(void);

/* ---- Gaussian atom algebra (closed form) ---- */

int cf_make_atom(cf_complex c, cf_complex w, cf_complex l, cf_atom* out);
int cf_gaussian(double gamma, cf_atom* out);
/* Atom with w = u + i*r: the chirped Gaussian h_r * phi_sqrt(u). */
int cf_chirped_gaussian(double u, double r, cf_atom* out);
int cf_evaluate(const cf_atom* g, double x, cf_complex* out);
int cf_multiply_chirp(const cf_atom* g, double lambda, cf_atom* out);
int cf_fourier(const cf_atom* g, cf_atom* out);
int cf_inverse_fourier(const cf_atom* g, cf_atom* out);
int cf_convolve_chirp(const cf_atom* g, double lambda_prime, cf_atom* out);
/* (M_a T_b g)(x) = exp(2*pi*i*a*x) g(x - b). */
int cf_tf_shift(const cf_atom* g, double a, double b, cf_atom* out);
int cf_dilate(const cf_atom* g, double gamma, cf_atom* out);
int cf_reflect(const cf_atom* g, cf_atom* out);
int cf_l2_norm(const cf_atom* g, double* out);
int cf_inner_product(const cf_atom* f, const cf_atom* g, cf_complex* out);
/* h_lambda * (h_lambda' convolved with phi_{1/gamma}) in closed form. */
int cf_product_convolution(double lambda, double lambda_prime, double gamma,
                           cf_atom* atom, cf_complex* s, double* u, double* v);

/* ---- Lattice factorizations and the chirp-design solver ---- */

/* Q = R_theta U_lambda diag(beta, alpha); requires det Q > 0. */
int cf_factor_qr(cf_mat2 Q, cf_qr_factors* out);
/* L_{lambda'} U_lambda = diag(d1, d2) R_theta, lambda != 0. */
int cf_factor_lu_rotation(double lambda, cf_lu_rotation* out);
int cf_design_chirp(double lambda, cf_chirp_design* out);
/* G(lambda) = r/u for the design at lambda. */
int cf_ratio_G(double lambda, double* out);
/* Smallest-|lambda| solution of G(lambda) = rho, sign matching rho. */
int cf_solve_lambda(double rho, double* out);
/* Design plus dilation reaching the window w = u + i*r. */
int cf_window_design(double u, double r, cf_chirp_design* design,
                     double* gamma_dil);

/* ---- Fractional Fourier transform ---- */

int cf_frft_atom(const cf_atom* g, double theta, cf_atom* out);
/* Phase in pi(z) F_theta = phase * F_theta pi(R_theta z) for z = (a, b). */
int cf_commutation_phase(double a, double b, double theta, cf_complex* out);

int cf_signal_create(const cf_complex* samples, int n, double x0, double dx,
                     cf_signal** out);
int cf_signal_from_atom(const cf_atom* g, double x0, double dx, int n,
                        cf_signal** out);
/* O(N^2) quadrature transform; fails with CF_ERR_NUMERIC on grids too
 * coarse for the kernel phase (aliasing guard). */
int cf_signal_frft(const cf_signal* f, double theta, cf_signal** out);
int cf_signal_info(const cf_signal* f, int* n, double* x0, double* dx);
/* Copies all samples into caller storage of length n from cf_signal_info. */
int cf_signal_samples(const cf_signal* f, cf_complex* out);
int cf_signal_l2(const cf_signal* f, double* out);
void cf_signal_destroy(cf_signal* f);

/* ---- Theta functions and the Zak transform ---- */

#define CF_THETA_SERIES 0
#define CF_THETA_PRODUCT 1

/* Theta(z, q) = sum_k q^(k^2) z^k with adaptive truncation from K terms;
 * tail is a bound on the truncation error. */
int cf_theta_eval(cf_complex z, cf_complex q, int K, int mode,
                  cf_complex* value, double* tail, int* k_used);
/* Zak transform of h_lambda phi_gamma via the theta reduction. */
int cf_zak_theta(double lambda, double gamma, double t, double omega,
                 cf_complex* out);
/* Truncated direct series sum_{|k|<=K} g(t-k) e^(2 pi i k omega). */
int cf_zak_direct(const cf_atom* g, double t, double omega, int K,
                  cf_complex* value, double* tail);
/* Grid search plus Newton refinement; certifies uniqueness, the winding
 * number, and a sampled simplicity constant. */
int cf_find_zero(double lambda, double gamma, int N, cf_zero_certificate* out);
/* |Z(h_lambda phi_gamma)| on an N x N grid, row-major, t fastest. */
int cf_zak_grid(double lambda, double gamma, int N, cf_grid** out);
int cf_grid_size(const cf_grid* g, int* N);
/* Copies N*N values into caller storage. */
int cf_grid_values(const cf_grid* g, double* out);
void cf_grid_destroy(cf_grid* g);

#define CF_SYMMETRY_REAL 0
#define CF_SYMMETRY_EVEN 1
#define CF_SYMMETRY_ODD 2
#define CF_SYMMETRY_EIGENFUNCTION 3

/* Residual of the Zak identity implied by the declared window class; the
 * window is sampled through the callback. pass = residual <= 1e-10. */
int cf_symmetry_suite(cf_complex (*window)(double x, void* ctx), void* ctx,
                      int kind, cf_complex eigenvalue, double* max_residual,
                      int* pass);

/* ---- Frame-bound estimation and certification ---- */

/* Separable chirped-Gaussian reduction of G(phi_gamma, Q Z^2); bounds of
 * the input system equal scale times bounds of the canonical one. */
int cf_canonicalize(double gamma, cf_mat2 Q, cf_canonical_form* out);
/* Finite-section estimates at N and 2N grid points (coarse, fine). */
int cf_estimate_bounds(const cf_atom* window, cf_mat2 Q, double L, int N,
                       int M, cf_bound_estimate* coarse,
                       cf_bound_estimate* fine);
/* Dual-lattice dominance certificate from closed-form correlations. */
int cf_janssen_certify(const cf_atom* window, double alpha, double beta,
                       int K, cf_janssen* out);
/* Compares A/B of the direct and canonicalized systems. */
int cf_equivalence_check(double gamma, cf_mat2 Q, double L, int N, int M,
                         cf_equivalence* out);
/* One row per det in dets (rows has length n_dets); |det| > 1 rows are
 * flagged density_violating and carry NaN estimates. */
int cf_sweep_det(double gamma, cf_mat2 shape, const double* dets, int n_dets,
                 double L, int N, int M, cf_sweep_row* rows);

/* Runs the built-in invariant battery for one module ("atom", "lattice",
 * "frft", "zak", "frame") or all of them (NULL or "all"). Writes a
 * human-readable report into buf (truncated to buflen). The status is
 * CF_OK even when checks fail; *failed carries the count. */
int cf_selftest(const char* module, char* buf, int buflen, int* passed,
                int* failed);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CHIRPFRAME_H */

#include "chirpframe.h"

#include <cstdio>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "atom.hpp"
#include "common.hpp"
#include "frame.hpp"
#include "frft.hpp"
#include "lattice.hpp"
#include "selftest.hpp"
#include "zak.hpp"

struct cf_signal {
  cf::SampledSignal s;
};

struct cf_grid {
  int N;
  std::vector<double> values;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* msg) { g_last_error = msg ? msg : ""; }

int code_for(const cf::Error& e) {
  switch (e.kind()) {
    case cf::ErrorKind::Domain:
    case cf::ErrorKind::Degenerate:
      return CF_ERR_DOMAIN;
    default:
      return CF_ERR_NUMERIC;
  }
}

template <typename F>
int guarded(F&& fn) {
  try {
    fn();
    return CF_OK;
  } catch (const cf::Error& e) {
    set_error(e.what());
    return code_for(e);
  } catch (const std::exception& e) {
    set_error(e.what());
    return CF_ERR_NUMERIC;
  }
}

int null_arg(const char* name) {
  g_last_error = std::string("null pointer argument: ") + name;
  return CF_ERR_DOMAIN;
}

cf::cd to_cd(cf_complex z) { return cf::cd(z.re, z.im); }
cf_complex from_cd(cf::cd z) { return cf_complex{z.real(), z.imag()}; }

cf::Atom to_atom(const cf_atom& a) {
  return cf::Atom{to_cd(a.c), to_cd(a.w), to_cd(a.l)};
}

cf_atom from_atom(const cf::Atom& a) {
  return cf_atom{from_cd(a.c), from_cd(a.w), from_cd(a.l)};
}

cf::Mat2 to_mat2(cf_mat2 m) { return cf::Mat2{m.a, m.b, m.c, m.d}; }

cf_chirp_design from_design(const cf::ChirpDesign& d) {
  return cf_chirp_design{d.lambda, d.lambda_prime, d.gamma_conv,
                         d.u,      d.v,            d.r,
                         from_cd(d.s)};
}

cf_canonical_form from_canonical(const cf::CanonicalForm& c) {
  return cf_canonical_form{from_atom(c.window), c.lambda, c.alpha,
                           c.beta,              c.scale,  c.theta};
}

cf_bound_estimate from_estimate(const cf::BoundEstimate& e) {
  return cf_bound_estimate{e.A_est, e.B_est, e.L, e.N, e.M,
                           e.certified ? 1 : 0};
}

}  // namespace

extern "C" {

const char* cf_last_error(void) { return g_last_error.c_str(); }

const char* cf_version(void) { return "0.1.0"; }

int cf_make_atom(cf_complex c, cf_complex w, cf_complex l, cf_atom* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = from_atom(cf::make_atom(to_cd(c), to_cd(w), to_cd(l)));
  });
}

int cf_gaussian(double gamma, cf_atom* out) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = from_atom(cf::gaussian(gamma)); });
}

int cf_chirped_gaussian(double u, double r, cf_atom* out) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = from_atom(cf::chirped_gaussian(u, r)); });
}

int cf_evaluate(const cf_atom* g, double x, cf_complex* out) {
  if (!g) return null_arg("g");
  if (!out) return null_arg("out");
  return guarded([&] { *out = from_cd(cf::evaluate(to_atom(*g), x)); });
}

int cf_multiply_chirp(const cf_atom* g, double lambda, cf_atom* out) {
  if (!g) return null_arg("g");
  if (!out) return null_arg("out");
  return guarded(
      [&] { *out = from_atom(cf::multiply_chirp(to_atom(*g), lambda)); });
}

int cf_fourier(const cf_atom* g, cf_atom* out) {
  if (!g) return null_arg("g");
  if (!out) return null_arg("out");
  return guarded([&] { *out = from_atom(cf::fourier(to_atom(*g))); });
}

int cf_inverse_fourier(const cf_atom* g, cf_atom* out) {
  if (!g) return null_arg("g");
  if (!out) return null_arg("out");
  return guarded([&] { *out = from_atom(cf::inverse_fourier(to_atom(*g))); });
}

int cf_convolve_chirp(const cf_atom* g, double lambda_prime, cf_atom* out) {
  if (!g) return null_arg("g");
  if (!out) return null_arg("out");
  return guarded(
      [&] { *out = from_atom(cf::convolve_chirp(to_atom(*g), lambda_prime)); });
}

int cf_tf_shift(const cf_atom* g, double a, double b, cf_atom* out) {
  if (!g) return null_arg("g");
  if (!out) return null_arg("out");
  return guarded([&] { *out = from_atom(cf::tf_shift(to_atom(*g), a, b)); });
}

int cf_dilate(const cf_atom* g, double gamma, cf_atom* out) {
  if (!g) return null_arg("g");
  if (!out) return null_arg("out");
  return guarded([&] { *out = from_atom(cf::dilate(to_atom(*g), gamma)); });
}

int cf_reflect(const cf_atom* g, cf_atom* out) {
  if (!g) return null_arg("g");
  if (!out) return null_arg("out");
  return guarded([&] { *out = from_atom(cf::reflect(to_atom(*g))); });
}

int cf_l2_norm(const cf_atom* g, double* out) {
  if (!g) return null_arg("g");
  if (!out) return null_arg("out");
  return guarded([&] { *out = cf::l2_norm(to_atom(*g)); });
}

int cf_inner_product(const cf_atom* f, const cf_atom* g, cf_complex* out) {
  if (!f) return null_arg("f");
  if (!g) return null_arg("g");
  if (!out) return null_arg("out");
  return guarded(
      [&] { *out = from_cd(cf::inner_product(to_atom(*f), to_atom(*g))); });
}

int cf_product_convolution(double lambda, double lambda_prime, double gamma,
                           cf_atom* atom, cf_complex* s, double* u,
                           double* v) {
  if (!atom) return null_arg("atom");
  if (!s) return null_arg("s");
  if (!u) return null_arg("u");
  if (!v) return null_arg("v");
  return guarded([&] {
    cf::ProductConvolution pc =
        cf::product_convolution(lambda, lambda_prime, gamma);
    *atom = from_atom(pc.atom);
    *s = from_cd(pc.s);
    *u = pc.u;
    *v = pc.v;
  });
}

int cf_factor_qr(cf_mat2 Q, cf_qr_factors* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    cf::QrFactors f = cf::factor_qr(to_mat2(Q));
    *out = cf_qr_factors{f.theta, f.lambda, f.alpha, f.beta};
  });
}

int cf_factor_lu_rotation(double lambda, cf_lu_rotation* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    cf::LuRotation f = cf::factor_lu_rotation(lambda);
    *out = cf_lu_rotation{f.lambda_prime, f.d1, f.d2, f.theta};
  });
}

int cf_design_chirp(double lambda, cf_chirp_design* out) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = from_design(cf::chirp_design(lambda)); });
}

int cf_ratio_G(double lambda, double* out) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = cf::ratio_G(lambda); });
}

int cf_solve_lambda(double rho, double* out) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = cf::solve_lambda(rho); });
}

int cf_window_design(double u, double r, cf_chirp_design* design,
                     double* gamma_dil) {
  if (!design) return null_arg("design");
  if (!gamma_dil) return null_arg("gamma_dil");
  return guarded([&] {
    cf::WindowDesign wd = cf::window_design(u, r);
    *design = from_design(wd.design);
    *gamma_dil = wd.gamma_dil;
  });
}

int cf_frft_atom(const cf_atom* g, double theta, cf_atom* out) {
  if (!g) return null_arg("g");
  if (!out) return null_arg("out");
  return guarded([&] { *out = from_atom(cf::frft_atom(to_atom(*g), theta)); });
}

int cf_commutation_phase(double a, double b, double theta, cf_complex* out) {
  if (!out) return null_arg("out");
  return guarded([&] { *out = from_cd(cf::commutation_phase(a, b, theta)); });
}

int cf_signal_create(const cf_complex* samples, int n, double x0, double dx,
                     cf_signal** out) {
  if (!samples) return null_arg("samples");
  if (!out) return null_arg("out");
  return guarded([&] {
    if (n <= 0) throw cf::DomainError("cf_signal_create: n <= 0");
    auto* sig = new cf_signal;
    sig->s.x0 = x0;
    sig->s.dx = dx;
    sig->s.samples.resize(n);
    for (int i = 0; i < n; ++i) sig->s.samples[i] = to_cd(samples[i]);
    *out = sig;
  });
}

int cf_signal_from_atom(const cf_atom* g, double x0, double dx, int n,
                        cf_signal** out) {
  if (!g) return null_arg("g");
  if (!out) return null_arg("out");
  return guarded([&] {
    if (n <= 0) throw cf::DomainError("cf_signal_from_atom: n <= 0");
    auto* sig = new cf_signal;
    sig->s = cf::sample_atom(to_atom(*g), x0, dx, n);
    *out = sig;
  });
}

int cf_signal_frft(const cf_signal* f, double theta, cf_signal** out) {
  if (!f) return null_arg("f");
  if (!out) return null_arg("out");
  return guarded([&] {
    auto* sig = new cf_signal;
    try {
      sig->s = cf::frft_numeric(f->s, theta);
    } catch (...) {
      delete sig;
      throw;
    }
    *out = sig;
  });
}

int cf_signal_info(const cf_signal* f, int* n, double* x0, double* dx) {
  if (!f) return null_arg("f");
  if (n) *n = static_cast<int>(f->s.samples.size());
  if (x0) *x0 = f->s.x0;
  if (dx) *dx = f->s.dx;
  return CF_OK;
}

int cf_signal_samples(const cf_signal* f, cf_complex* out) {
  if (!f) return null_arg("f");
  if (!out) return null_arg("out");
  for (size_t i = 0; i < f->s.samples.size(); ++i) {
    out[i] = from_cd(f->s.samples[i]);
  }
  return CF_OK;
}

int cf_signal_l2(const cf_signal* f, double* out) {
  if (!f) return null_arg("f");
  if (!out) return null_arg("out");
  return guarded([&] { *out = cf::signal_l2(f->s); });
}

void cf_signal_destroy(cf_signal* f) { delete f; }

int cf_theta_eval(cf_complex z, cf_complex q, int K, int mode,
                  cf_complex* value, double* tail, int* k_used) {
  if (!value) return null_arg("value");
  return guarded([&] {
    cf::ThetaMode m;
    if (mode == CF_THETA_SERIES) {
      m = cf::ThetaMode::Series;
    } else if (mode == CF_THETA_PRODUCT) {
      m = cf::ThetaMode::Product;
    } else {
      throw cf::DomainError("cf_theta_eval: unknown mode");
    }
    cf::ThetaValue v = cf::theta_eval(to_cd(z), to_cd(q), K, m);
    *value = from_cd(v.value);
    if (tail) *tail = v.tail;
    if (k_used) *k_used = v.k_used;
  });
}

int cf_zak_theta(double lambda, double gamma, double t, double omega,
                 cf_complex* out) {
  if (!out) return null_arg("out");
  return guarded(
      [&] { *out = from_cd(cf::zak_theta(lambda, gamma, t, omega)); });
}

int cf_zak_direct(const cf_atom* g, double t, double omega, int K,
                  cf_complex* value, double* tail) {
  if (!g) return null_arg("g");
  if (!value) return null_arg("value");
  return guarded([&] {
    cf::ZakValue v = cf::zak_direct(to_atom(*g), t, omega, K);
    *value = from_cd(v.value);
    if (tail) *tail = v.tail;
  });
}

int cf_find_zero(double lambda, double gamma, int N,
                 cf_zero_certificate* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    cf::ZeroCertificate c = cf::find_zero(lambda, gamma, N);
    *out = cf_zero_certificate{c.t, c.omega, c.winding, c.simplicity_constant,
                               c.search_resolution};
  });
}

int cf_zak_grid(double lambda, double gamma, int N, cf_grid** out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    auto* g = new cf_grid;
    try {
      g->values = cf::zak_grid(lambda, gamma, N);
      g->N = N;
    } catch (...) {
      delete g;
      throw;
    }
    *out = g;
  });
}

int cf_grid_size(const cf_grid* g, int* N) {
  if (!g) return null_arg("g");
  if (!N) return null_arg("N");
  *N = g->N;
  return CF_OK;
}

int cf_grid_values(const cf_grid* g, double* out) {
  if (!g) return null_arg("g");
  if (!out) return null_arg("out");
  std::memcpy(out, g->values.data(), g->values.size() * sizeof(double));
  return CF_OK;
}

void cf_grid_destroy(cf_grid* g) { delete g; }

int cf_symmetry_suite(cf_complex (*window)(double x, void* ctx), void* ctx,
                      int kind, cf_complex eigenvalue, double* max_residual,
                      int* pass) {
  if (!window) return null_arg("window");
  if (!max_residual) return null_arg("max_residual");
  if (!pass) return null_arg("pass");
  return guarded([&] {
    cf::SymmetryKind k;
    switch (kind) {
      case CF_SYMMETRY_REAL:
        k = cf::SymmetryKind::Real;
        break;
      case CF_SYMMETRY_EVEN:
        k = cf::SymmetryKind::Even;
        break;
      case CF_SYMMETRY_ODD:
        k = cf::SymmetryKind::Odd;
        break;
      case CF_SYMMETRY_EIGENFUNCTION:
        k = cf::SymmetryKind::Eigenfunction;
        break;
      default:
        throw cf::DomainError("cf_symmetry_suite: unknown kind");
    }
    auto fn = [window, ctx](double x) { return to_cd(window(x, ctx)); };
    cf::SymmetryReport rep = cf::symmetry_suite(fn, k, to_cd(eigenvalue));
    *max_residual = rep.max_residual;
    *pass = rep.pass ? 1 : 0;
  });
}

int cf_canonicalize(double gamma, cf_mat2 Q, cf_canonical_form* out) {
  if (!out) return null_arg("out");
  return guarded(
      [&] { *out = from_canonical(cf::canonicalize(gamma, to_mat2(Q))); });
}

int cf_estimate_bounds(const cf_atom* window, cf_mat2 Q, double L, int N,
                       int M, cf_bound_estimate* coarse,
                       cf_bound_estimate* fine) {
  if (!window) return null_arg("window");
  if (!coarse) return null_arg("coarse");
  return guarded([&] {
    cf::LatticeSystem sys{to_atom(*window), to_mat2(Q)};
    cf::EstimatePair pair = cf::estimate_bounds(sys, L, N, M);
    *coarse = from_estimate(pair.coarse);
    if (fine) *fine = from_estimate(pair.fine);
  });
}

int cf_janssen_certify(const cf_atom* window, double alpha, double beta,
                       int K, cf_janssen* out) {
  if (!window) return null_arg("window");
  if (!out) return null_arg("out");
  return guarded([&] {
    cf::JanssenCertificate c =
        cf::janssen_certify(to_atom(*window), alpha, beta, K);
    *out = cf_janssen{c.certified ? 1 : 0, c.A_lower, c.B_upper,
                      c.c00,               c.off_sum, c.tail};
  });
}

int cf_equivalence_check(double gamma, cf_mat2 Q, double L, int N, int M,
                         cf_equivalence* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    cf::EquivalenceReport r =
        cf::equivalence_check(gamma, to_mat2(Q), L, N, M);
    *out = cf_equivalence{r.ratio_direct, r.ratio_canonical, r.drift,
                          r.pass ? 1 : 0, from_canonical(r.canonical)};
  });
}

int cf_sweep_det(double gamma, cf_mat2 shape, const double* dets, int n_dets,
                 double L, int N, int M, cf_sweep_row* rows) {
  if (!dets) return null_arg("dets");
  if (!rows) return null_arg("rows");
  return guarded([&] {
    if (n_dets <= 0) throw cf::DomainError("cf_sweep_det: n_dets <= 0");
    std::vector<double> ds(dets, dets + n_dets);
    std::vector<cf::SweepRow> out =
        cf::sweep_det(gamma, to_mat2(shape), ds, L, N, M);
    for (int i = 0; i < n_dets; ++i) {
      rows[i] = cf_sweep_row{out[i].det,
                             out[i].A_est,
                             out[i].B_est,
                             out[i].ratio,
                             out[i].certified ? 1 : 0,
                             out[i].density_violating ? 1 : 0};
    }
  });
}

int cf_selftest(const char* module, char* buf, int buflen, int* passed,
                int* failed) {
  return guarded([&] {
    std::vector<cf::SelfTestResult> results;
    std::string want = module ? module : "all";
    if (want == "all") {
      results = cf::selftest_all();
    } else if (want == "atom") {
      results = {cf::selftest_atom()};
    } else if (want == "lattice") {
      results = {cf::selftest_lattice()};
    } else if (want == "frft") {
      results = {cf::selftest_frft()};
    } else if (want == "zak") {
      results = {cf::selftest_zak()};
    } else if (want == "frame") {
      results = {cf::selftest_frame()};
    } else {
      throw cf::DomainError("cf_selftest: unknown module '" + want + "'");
    }

    int np = 0, nf = 0;
    std::string report;
    for (const auto& r : results) {
      np += r.passed;
      nf += r.failed;
      char line[128];
      std::snprintf(line, sizeof(line), "%-8s %3d passed %3d failed\n",
                    r.module.c_str(), r.passed, r.failed);
      report += line;
      for (const auto& f : r.failures) {
        report += "  FAIL ";
        report += f;
        report += "\n";
      }
    }
    if (passed) *passed = np;
    if (failed) *failed = nf;
    if (buf && buflen > 0) {
      std::snprintf(buf, buflen, "%s", report.c_str());
    }
  });
}

}  // extern "C"

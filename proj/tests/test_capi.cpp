#include <cmath>
#include <complex>
#include <cstring>
#include <string>
#include <vector>

#include "atom.hpp"
#include "chirpframe.h"
#include "common.hpp"
#include "doctest.h"
#include "frame.hpp"
#include "frft.hpp"
#include "lattice.hpp"
#include "zak.hpp"

using cf::cd;

namespace {

cd lift(cf_complex z) { return cd(z.re, z.im); }

cf::Atom lift(const cf_atom& a) {
  return cf::make_atom(lift(a.c), lift(a.w), lift(a.l));
}

cf_complex real_gaussian_cb(double x, void*) {
  return cf_complex{std::exp(-cf::kPi * x * x), 0.0};
}

cf_complex odd_window_cb(double x, void*) {
  return cf_complex{x * std::exp(-cf::kPi * x * x), 0.0};
}

}  // namespace

TEST_CASE("version and error strings") {
  REQUIRE(cf_version() != nullptr);
  CHECK(std::string(cf_version()).size() > 0);

  cf_atom out;
  int rc = cf_make_atom(cf_complex{1, 0}, cf_complex{0, 1}, cf_complex{0, 0},
                        &out);
  CHECK(rc == CF_ERR_DOMAIN);
  CHECK(std::string(cf_last_error()).size() > 0);
}

TEST_CASE("atom wrappers match the native algebra") {
  cf_atom g;
  REQUIRE(cf_chirped_gaussian(0.8, 0.5, &g) == CF_OK);
  cf::Atom gn = cf::chirped_gaussian(0.8, 0.5);
  CHECK(lift(g.w) == gn.w);

  cf_complex val;
  REQUIRE(cf_evaluate(&g, 0.7, &val) == CF_OK);
  CHECK(std::abs(lift(val) - cf::evaluate(gn, 0.7)) <= 1e-15);

  cf_atom gf;
  REQUIRE(cf_fourier(&g, &gf) == CF_OK);
  cf::Atom gfn = cf::fourier(gn);
  CHECK(std::abs(lift(gf.w) - gfn.w) <= 1e-15);
  CHECK(std::abs(lift(gf.c) - gfn.c) <= 1e-15);

  cf_atom gs;
  REQUIRE(cf_tf_shift(&g, 0.3, -1.2, &gs) == CF_OK);
  cf::Atom gsn = cf::tf_shift(gn, 0.3, -1.2);
  CHECK(std::abs(lift(gs.l) - gsn.l) <= 1e-14);

  double nrm;
  REQUIRE(cf_l2_norm(&g, &nrm) == CF_OK);
  CHECK(nrm == doctest::Approx(cf::l2_norm(gn)).epsilon(1e-14));

  cf_complex ip;
  REQUIRE(cf_inner_product(&g, &gs, &ip) == CF_OK);
  CHECK(std::abs(lift(ip) - cf::inner_product(gn, gsn)) <= 1e-14);

  cf_atom pc_atom;
  cf_complex pc_s;
  double pc_u, pc_v;
  REQUIRE(cf_product_convolution(1.0, -2.0, std::sqrt(2.0), &pc_atom, &pc_s,
                                 &pc_u, &pc_v) == CF_OK);
  cf::ProductConvolution pcn =
      cf::product_convolution(1.0, -2.0, std::sqrt(2.0));
  CHECK(pc_u == doctest::Approx(pcn.u).epsilon(1e-14));
  CHECK(pc_v == doctest::Approx(pcn.v).epsilon(1e-14));
  CHECK(std::abs(lift(pc_atom.w) - pcn.atom.w) <= 1e-13);
}

TEST_CASE("domain failures map to CF_ERR_DOMAIN") {
  cf_atom out;
  CHECK(cf_gaussian(0.0, &out) == CF_ERR_DOMAIN);
  CHECK(cf_gaussian(1.0, nullptr) == CF_ERR_DOMAIN);

  cf_qr_factors qr;
  CHECK(cf_factor_qr(cf_mat2{1, 0, 0, -1}, &qr) == CF_ERR_DOMAIN);

  double lam;
  CHECK(cf_solve_lambda(0.0, &lam) == CF_ERR_DOMAIN);

  cf_zero_certificate zc;
  CHECK(cf_find_zero(0.0, 1.0, 32, &zc) == CF_ERR_DOMAIN);

  cf_complex v;
  double tail;
  int k_used;
  CHECK(cf_theta_eval(cf_complex{1, 0}, cf_complex{0.1, 0}, 16, 7, &v, &tail,
                      &k_used) == CF_ERR_DOMAIN);
  CHECK(cf_theta_eval(cf_complex{1, 0}, cf_complex{1.2, 0}, 16,
                      CF_THETA_SERIES, &v, &tail, &k_used) == CF_ERR_DOMAIN);
}

TEST_CASE("lattice wrappers reproduce the reference design") {
  cf_qr_factors qr;
  REQUIRE(cf_factor_qr(cf_mat2{1, 1, 0, 1}, &qr) == CF_OK);
  CHECK(qr.theta == doctest::Approx(0.0));
  CHECK(qr.lambda == doctest::Approx(1.0));
  CHECK(qr.alpha == doctest::Approx(1.0));
  CHECK(qr.beta == doctest::Approx(1.0));

  cf_chirp_design d;
  REQUIRE(cf_design_chirp(1.0, &d) == CF_OK);
  CHECK(d.lambda_prime == doctest::Approx(-2.0));
  CHECK(d.gamma_conv == doctest::Approx(std::sqrt(2.0)));
  CHECK(d.u == doctest::Approx(8.0 / 17.0).epsilon(1e-15));
  CHECK(d.v == doctest::Approx(-2.0 / 17.0).epsilon(1e-15));
  CHECK(d.r == doctest::Approx(15.0 / 17.0).epsilon(1e-15));

  double G;
  REQUIRE(cf_ratio_G(1.0, &G) == CF_OK);
  CHECK(G == doctest::Approx(15.0 / 8.0).epsilon(1e-15));

  cf_chirp_design wd;
  double gamma_dil;
  REQUIRE(cf_window_design(8.0 / 17.0, 15.0 / 17.0, &wd, &gamma_dil) == CF_OK);
  CHECK(wd.lambda == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(gamma_dil == doctest::Approx(1.0).epsilon(1e-9));

  cf_lu_rotation lu;
  REQUIRE(cf_factor_lu_rotation(1.0, &lu) == CF_OK);
  cf::LuRotation lun = cf::factor_lu_rotation(1.0);
  CHECK(lu.lambda_prime == doctest::Approx(lun.lambda_prime));
  CHECK(lu.d1 == doctest::Approx(lun.d1));
  CHECK(lu.d2 == doctest::Approx(lun.d2));
  CHECK(lu.theta == doctest::Approx(lun.theta));
}

TEST_CASE("fractional transform wrappers") {
  cf_atom g;
  REQUIRE(cf_gaussian(1.3, &g) == CF_OK);
  cf_atom gt;
  REQUIRE(cf_frft_atom(&g, 0.7, &gt) == CF_OK);
  cf::Atom gtn = cf::frft_atom(cf::gaussian(1.3), 0.7);
  CHECK(std::abs(lift(gt.w) - gtn.w) <= 1e-13);
  CHECK(std::abs(lift(gt.c) - gtn.c) <= 1e-13);

  cf_complex ph;
  REQUIRE(cf_commutation_phase(0.4, -0.9, 0.7, &ph) == CF_OK);
  CHECK(std::abs(lift(ph) - cf::commutation_phase(0.4, -0.9, 0.7)) <= 1e-15);
}

TEST_CASE("signal handles round trip and guard aliasing") {
  cf_atom g;
  REQUIRE(cf_gaussian(1.0, &g) == CF_OK);

  cf_signal* f = nullptr;
  REQUIRE(cf_signal_from_atom(&g, -6.0, 12.0 / 2048, 2048, &f) == CF_OK);
  REQUIRE(f != nullptr);

  int n;
  double x0, dx;
  REQUIRE(cf_signal_info(f, &n, &x0, &dx) == CF_OK);
  CHECK(n == 2048);
  CHECK(x0 == doctest::Approx(-6.0));

  double nrm;
  REQUIRE(cf_signal_l2(f, &nrm) == CF_OK);
  CHECK(nrm == doctest::Approx(cf::l2_norm(cf::gaussian(1.0))).epsilon(1e-6));

  cf_signal* ft = nullptr;
  REQUIRE(cf_signal_frft(f, 0.7, &ft) == CF_OK);
  REQUIRE(ft != nullptr);
  std::vector<cf_complex> buf(2048);
  REQUIRE(cf_signal_samples(ft, buf.data()) == CF_OK);
  cf::Atom closed = cf::frft_atom(cf::gaussian(1.0), 0.7);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    double x = x0 + i * dx;
    worst = std::max(worst, std::abs(lift(buf[i]) - cf::evaluate(closed, x)));
  }
  CHECK(worst <= 1e-6);
  cf_signal_destroy(ft);
  cf_signal_destroy(f);

  cf_signal* coarse = nullptr;
  REQUIRE(cf_signal_from_atom(&g, -6.0, 12.0 / 128, 128, &coarse) == CF_OK);
  cf_signal* bad = nullptr;
  CHECK(cf_signal_frft(coarse, 0.7, &bad) == CF_ERR_NUMERIC);
  CHECK(bad == nullptr);
  cf_signal_destroy(coarse);

  std::vector<cf_complex> raw = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  cf_signal* s = nullptr;
  REQUIRE(cf_signal_create(raw.data(), 4, 0.0, 0.25, &s) == CF_OK);
  REQUIRE(cf_signal_info(s, &n, &x0, &dx) == CF_OK);
  CHECK(n == 4);
  CHECK(dx == doctest::Approx(0.25));
  cf_signal_destroy(s);
}

TEST_CASE("zak wrappers agree with the native path") {
  cf_complex v;
  REQUIRE(cf_zak_theta(0.5, 1.2, 0.3, 0.7, &v) == CF_OK);
  CHECK(std::abs(lift(v) - cf::zak_theta(0.5, 1.2, 0.3, 0.7)) <= 1e-14);

  cf_atom g;
  REQUIRE(cf_chirped_gaussian(1.44, 0.5, &g) == CF_OK);
  cf_complex dv;
  double tail;
  REQUIRE(cf_zak_direct(&g, 0.3, 0.7, 40, &dv, &tail) == CF_OK);
  CHECK(std::abs(lift(dv) - lift(v)) <= 1e-10);

  cf_zero_certificate zc;
  REQUIRE(cf_find_zero(1.0, 1.0, 128, &zc) == CF_OK);
  CHECK(std::fabs(zc.t - 0.5) <= 1e-6);
  CHECK(std::fabs(zc.omega - 0.5) <= 1e-6);
  CHECK(zc.winding == 1);
  CHECK(zc.simplicity_constant > 0.0);

  cf_grid* grid = nullptr;
  REQUIRE(cf_zak_grid(0.5, 1.0, 16, &grid) == CF_OK);
  int N;
  REQUIRE(cf_grid_size(grid, &N) == CF_OK);
  REQUIRE(N == 16);
  std::vector<double> vals(static_cast<size_t>(N) * N);
  REQUIRE(cf_grid_values(grid, vals.data()) == CF_OK);
  std::vector<double> native = cf::zak_grid(0.5, 1.0, 16);
  double worst = 0.0;
  for (size_t i = 0; i < vals.size(); ++i)
    worst = std::max(worst, std::fabs(vals[i] - native[i]));
  CHECK(worst <= 1e-12);
  cf_grid_destroy(grid);

  double residual;
  int pass;
  REQUIRE(cf_symmetry_suite(&real_gaussian_cb, nullptr, CF_SYMMETRY_REAL,
                            cf_complex{1, 0}, &residual, &pass) == CF_OK);
  CHECK(pass == 1);
  CHECK(residual <= 1e-10);
  REQUIRE(cf_symmetry_suite(&odd_window_cb, nullptr, CF_SYMMETRY_ODD,
                            cf_complex{1, 0}, &residual, &pass) == CF_OK);
  CHECK(pass == 1);
  REQUIRE(cf_symmetry_suite(&real_gaussian_cb, nullptr,
                            CF_SYMMETRY_EIGENFUNCTION, cf_complex{1, 0},
                            &residual, &pass) == CF_OK);
  CHECK(pass == 1);
}

TEST_CASE("frame wrappers agree with the native path") {
  cf_canonical_form canon;
  REQUIRE(cf_canonicalize(1.0, cf_mat2{0.6, 0, 0, 0.7}, &canon) == CF_OK);
  CHECK(canon.alpha == doctest::Approx(0.7));
  CHECK(canon.beta == doctest::Approx(0.6));
  CHECK(canon.lambda == doctest::Approx(0.0));

  cf_atom g;
  REQUIRE(cf_gaussian(1.0, &g) == CF_OK);
  cf_bound_estimate coarse, fine;
  REQUIRE(cf_estimate_bounds(&g, cf_mat2{0.5, 0, 0, 0.5}, 4.0, 128, 6,
                             &coarse, &fine) == CF_OK);
  cf::EstimatePair native = cf::estimate_bounds(
      {cf::gaussian(1.0), cf::Mat2{0.5, 0, 0, 0.5}}, 4.0, 128, 6);
  CHECK(coarse.A_est == doctest::Approx(native.coarse.A_est).epsilon(1e-12));
  CHECK(fine.B_est == doctest::Approx(native.fine.B_est).epsilon(1e-12));
  CHECK(coarse.N == 128);
  CHECK(fine.N == 256);

  cf_janssen j;
  REQUIRE(cf_janssen_certify(&g, 0.5, 0.5, 24, &j) == CF_OK);
  cf::JanssenCertificate jn = cf::janssen_certify(cf::gaussian(1.0), 0.5, 0.5, 24);
  CHECK(j.certified == 1);
  CHECK(j.A_lower == doctest::Approx(jn.A_lower).epsilon(1e-14));
  CHECK(j.B_upper == doctest::Approx(jn.B_upper).epsilon(1e-14));

  cf_equivalence eq;
  REQUIRE(cf_equivalence_check(1.0, cf_mat2{0.5, 0, 0, 0.5}, 4.0, 128, 6,
                               &eq) == CF_OK);
  CHECK(eq.pass == 1);
  CHECK(eq.drift <= 1e-12);

  double dets[2] = {0.5, 1.1};
  cf_sweep_row rows[2];
  REQUIRE(cf_sweep_det(1.0, cf_mat2{1, 0, 0, 1}, dets, 2, 4.0, 128, 6, rows) ==
          CF_OK);
  CHECK(rows[0].density_violating == 0);
  CHECK(rows[0].ratio > 0.0);
  CHECK(rows[1].density_violating == 1);
  CHECK(std::isnan(rows[1].A_est));
}

TEST_CASE("embedded selftest battery is green") {
  char buf[8192];
  int passed = 0, failed = 0;
  REQUIRE(cf_selftest("atom", buf, sizeof(buf), &passed, &failed) == CF_OK);
  CHECK(passed > 0);
  CHECK(failed == 0);
  CHECK(std::strstr(buf, "atom") != nullptr);
}

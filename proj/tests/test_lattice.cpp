#include <cmath>

#include "common.hpp"
#include "doctest.h"
#include "lattice.hpp"
#include "oracle.hpp"

using cf::Mat2;

TEST_CASE("matrix helpers") {
  Mat2 q{2.0, 1.0, 0.5, 1.5};
  Mat2 id = q * q.inverse();
  CHECK(cf::max_abs_diff(id, Mat2::identity()) <= 1e-14);
  CHECK(q.det() == doctest::Approx(2.5));
  CHECK_THROWS_AS((Mat2{1, 2, 2, 4}.inverse()), cf::DomainError);
}

TEST_CASE("QR-type factorization reconstructs 100 random matrices") {
  oracle::Rng rng(501);
  int tested = 0;
  while (tested < 100) {
    Mat2 q{rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-3, 3),
           rng.uniform(-3, 3)};
    if (q.det() < 0.05) continue;
    ++tested;
    cf::QrFactors f = cf::factor_qr(q);
    Mat2 rec = cf::rotation(f.theta) * cf::shear_upper(f.lambda) *
               cf::lattice_scale(f.alpha, f.beta);
    CHECK(cf::max_abs_diff(rec, q) <= 1e-12);
    CHECK(std::fabs(f.alpha * f.beta - q.det()) <= 1e-12 * q.det());
    CHECK(f.alpha > 0.0);
    CHECK(f.beta > 0.0);
  }
  CHECK_THROWS_AS(cf::factor_qr(Mat2{1, 0, 0, -1}), cf::DomainError);
  CHECK_THROWS_AS(cf::factor_qr(Mat2{1, 2, 2, 4}), cf::DomainError);
}

TEST_CASE("shear pair factorization on 100 random shears") {
  oracle::Rng rng(502);
  for (int i = 0; i < 100; ++i) {
    double lam = rng.uniform(-4, 4);
    if (std::fabs(lam) < 1e-3) lam = 0.5;
    cf::LuRotation f = cf::factor_lu_rotation(lam);
    CHECK(f.lambda_prime == doctest::Approx(-(lam + 1.0 / lam)).epsilon(1e-14));
    Mat2 lhs = cf::shear_lower(f.lambda_prime) * cf::shear_upper(lam);
    Mat2 rhs = Mat2{f.d1, 0.0, 0.0, f.d2} * cf::rotation(f.theta);
    CHECK(cf::max_abs_diff(lhs, rhs) <= 1e-12);
    CHECK(std::fabs(f.d1 * f.d2 - 1.0) <= 1e-12);
  }
  CHECK_THROWS_AS(cf::factor_lu_rotation(0.0), cf::DomainError);
}

TEST_CASE("reference design at lambda = 1") {
  cf::ChirpDesign d = cf::chirp_design(1.0);
  CHECK(std::fabs(d.lambda_prime - (-2.0)) <= 1e-14);
  CHECK(std::fabs(d.gamma_conv - std::sqrt(2.0)) <= 1e-14);
  CHECK(std::fabs(d.u - 8.0 / 17.0) <= 1e-14);
  CHECK(std::fabs(d.v - (-2.0 / 17.0)) <= 1e-14);
  CHECK(std::fabs(d.r - 15.0 / 17.0) <= 1e-14);
}

TEST_CASE("designed chirp closed form") {
  // r = v + lambda = lambda ((lambda^2+1)^4 - 1) / ((lambda^2+1)^4 +
  // lambda^2), and the ratio G = r/u with u = (lambda^2+1)^3 / the same
  // denominator.
  oracle::Rng rng(503);
  for (int i = 0; i < 20; ++i) {
    double lam = rng.uniform(-3, 3);
    if (std::fabs(lam) < 1e-6) lam = 0.25;
    double p = std::pow(lam * lam + 1.0, 4);
    double den = p + lam * lam;
    double r_expect = lam * (p - 1.0) / den;
    double u_expect = std::pow(lam * lam + 1.0, 3) / den;
    cf::ChirpDesign d = cf::chirp_design(lam);
    CHECK(d.r == doctest::Approx(r_expect).epsilon(1e-12));
    CHECK(d.u == doctest::Approx(u_expect).epsilon(1e-12));
    CHECK(cf::ratio_G(lam) == doctest::Approx(r_expect / u_expect).epsilon(1e-12));
    CHECK(cf::ratio_G(-lam) == doctest::Approx(-cf::ratio_G(lam)).epsilon(1e-14));
  }
  CHECK(cf::ratio_G(10.0) > 1e3);
  CHECK(cf::ratio_G(100.0) > 1e4);
}

TEST_CASE("ratio solver round trips") {
  for (double rho : {0.01, -0.01, 1.0, -1.0, 100.0, -100.0}) {
    double lam = cf::solve_lambda(rho);
    CHECK(std::fabs(cf::ratio_G(lam) - rho) <=
          1e-10 * std::max(1.0, std::fabs(rho)));
    CHECK(lam * rho > 0.0);
  }
  CHECK_THROWS_AS(cf::solve_lambda(0.0), cf::DomainError);
}

TEST_CASE("window design reaches 20 random targets") {
  oracle::Rng rng(504);
  for (int i = 0; i < 20; ++i) {
    double u = rng.uniform(0.05, 4.0);
    double r = rng.uniform(-4.0, 4.0);
    if (std::fabs(r) < 1e-3) r = 0.7;
    cf::WindowDesign wd = cf::window_design(u, r);
    double g2 = wd.gamma_dil * wd.gamma_dil;
    CHECK(std::fabs(g2 * wd.design.u - u) <= 1e-9);
    CHECK(std::fabs(g2 * wd.design.r - r) <= 1e-9);
  }
  CHECK_THROWS_AS(cf::window_design(1.0, 0.0), cf::DomainError);
  CHECK_THROWS_AS(cf::window_design(-1.0, 1.0), cf::DomainError);
}

TEST_CASE("design window round trip through the designed ratio") {
  // r/u for the design at lambda=1 is 15/8; the reference window used by
  // the design chain: w = 8/17 + 15/17 i realizes it.
  cf::WindowDesign wd = cf::window_design(8.0 / 17.0, 15.0 / 17.0);
  CHECK(wd.design.lambda == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(wd.gamma_dil == doctest::Approx(1.0).epsilon(1e-9));
}

#include <cmath>
#include <functional>

#include "atom.hpp"
#include "common.hpp"
#include "doctest.h"
#include "oracle.hpp"
#include "zak.hpp"

using cf::cd;
using cf::kPi;

TEST_CASE("theta series and product agree for 50 draws up to |q| = 0.8") {
  oracle::Rng rng(701);
  for (int i = 0; i < 50; ++i) {
    cd z = std::polar(rng.uniform(0.4, 2.5), rng.uniform(-3.1, 3.1));
    cd q = std::polar(rng.uniform(0.05, 0.8), rng.uniform(-3.1, 3.1));
    cf::ThetaValue s = cf::theta_eval(z, q, 8, cf::ThetaMode::Series);
    cf::ThetaValue p = cf::theta_eval(z, q, 8, cf::ThetaMode::Product);
    double scale = std::max(1.0, std::abs(s.value));
    CHECK(std::abs(s.value - p.value) <= 1e-12 * scale);
  }
}

TEST_CASE("theta reference value") {
  cf::ThetaValue v =
      cf::theta_eval(cd(1.0, 0.0), cd(0.1, 0.0), 8, cf::ThetaMode::Series);
  CHECK(v.value.real() == doctest::Approx(1.2002000020000002).epsilon(1e-15));
  CHECK(std::fabs(v.value.imag()) <= 1e-16);
  CHECK(v.tail >= 0.0);
}

TEST_CASE("theta zeros sit at z = -q^m for odd m") {
  oracle::Rng rng(702);
  for (int i = 0; i < 10; ++i) {
    cd q = std::polar(rng.uniform(0.3, 0.75), rng.uniform(-1.0, 1.0));
    for (int m : {-3, -1, 1, 3}) {
      cd z = -std::pow(q, m);
      cf::ThetaValue v = cf::theta_eval(z, q, 16, cf::ThetaMode::Series);
      CHECK(std::abs(v.value) <= 1e-10);
    }
  }
}

TEST_CASE("theta domain checks") {
  CHECK_THROWS_AS(cf::theta_eval(cd(1.0), cd(1.1, 0.0), 8, cf::ThetaMode::Series),
                  cf::DomainError);
  CHECK_THROWS_AS(cf::theta_eval(cd(0.0), cd(0.5, 0.0), 8, cf::ThetaMode::Series),
                  cf::DomainError);
  CHECK_THROWS_AS(cf::theta_eval(cd(1.0), cd(0.5, 0.0), 0, cf::ThetaMode::Series),
                  cf::DomainError);
}

TEST_CASE("theta route matches the direct series on 100 random points") {
  oracle::Rng rng(703);
  for (int i = 0; i < 100; ++i) {
    double lam = rng.uniform(-2.0, 2.0);
    double gam = rng.uniform(0.5, 2.0);
    double t = rng.uniform(-1.5, 1.5);
    double w = rng.uniform(-1.5, 1.5);
    cd a = cf::zak_theta(lam, gam, t, w);
    cf::ZakValue d =
        cf::zak_direct(cf::chirped_gaussian(gam * gam, lam), t, w, 40);
    CHECK(std::abs(a - d.value) <= 1e-10);
    CHECK(d.tail <= 1e-12);
  }
}

TEST_CASE("quasi-periodicity on the unit square") {
  oracle::Rng rng(704);
  for (int i = 0; i < 30; ++i) {
    double lam = rng.uniform(-2.0, 2.0);
    double gam = rng.uniform(0.5, 2.0);
    double t = rng.uniform(0.0, 1.0);
    double w = rng.uniform(0.0, 1.0);
    cd base = cf::zak_theta(lam, gam, t, w);
    cd shift_t = cf::zak_theta(lam, gam, t + 1.0, w);
    cd shift_w = cf::zak_theta(lam, gam, t, w + 1.0);
    CHECK(std::abs(shift_t - std::exp(cd(0.0, 2.0 * kPi * w)) * base) <= 1e-10);
    CHECK(std::abs(shift_w - base) <= 1e-10);
  }
}

TEST_CASE("central zero for the plain Gaussian") {
  cf::ZeroCertificate c = cf::find_zero(0.0, 1.0, 128);
  CHECK(std::fabs(c.t - 0.5) <= 1e-9);
  CHECK(std::fabs(c.omega - 0.5) <= 1e-9);
  CHECK(c.winding == 1);
  CHECK(c.simplicity_constant > 0.0);
  CHECK(c.search_resolution == 128);
}

TEST_CASE("zero location is invariant across the parameter sweep") {
  for (double lam : {-1.0, 0.5, 2.0}) {
    for (double gam : {0.5, 2.0}) {
      cf::ZeroCertificate c = cf::find_zero(lam, gam, 96);
      CHECK(std::fabs(c.t - 0.5) <= 1e-6);
      CHECK(std::fabs(c.omega - 0.5) <= 1e-6);
      CHECK(c.winding == 1);
      CHECK(c.simplicity_constant > 0.0);
    }
  }
  CHECK_THROWS_AS(cf::find_zero(0.0, 1.0, 32), cf::DomainError);
  CHECK_THROWS_AS(cf::find_zero(0.0, -1.0, 128), cf::DomainError);
}

TEST_CASE("symmetry identities for sampled windows") {
  auto gauss = [](double x) { return cd(std::exp(-kPi * x * x), 0.0); };
  auto off_center = [](double x) {
    return cd(std::exp(-kPi * (x - 0.2) * (x - 0.2)), 0.0);
  };
  auto even_wiggle = [](double x) {
    return cd(std::cos(2.0 * kPi * x) * std::exp(-kPi * x * x), 0.0);
  };
  auto odd_window = [](double x) {
    return cd(x * std::exp(-kPi * x * x), 0.0);
  };
  // Second Hermite eigenfunction: eigenvalue -1, built from the Gaussian.
  auto hermite2 = [](double x) {
    return cd((4.0 * kPi * x * x - 1.0) * std::exp(-kPi * x * x), 0.0);
  };

  cf::SymmetryReport real1 = cf::symmetry_suite(gauss, cf::SymmetryKind::Real);
  CHECK(real1.pass);
  cf::SymmetryReport real2 =
      cf::symmetry_suite(off_center, cf::SymmetryKind::Real);
  CHECK(real2.pass);
  CHECK(cf::symmetry_suite(gauss, cf::SymmetryKind::Even).pass);
  CHECK(cf::symmetry_suite(even_wiggle, cf::SymmetryKind::Even).pass);
  CHECK(cf::symmetry_suite(odd_window, cf::SymmetryKind::Odd).pass);
  CHECK(cf::symmetry_suite(gauss, cf::SymmetryKind::Eigenfunction, cd(1.0, 0.0))
            .pass);
  CHECK(cf::symmetry_suite(hermite2, cf::SymmetryKind::Eigenfunction,
                           cd(-1.0, 0.0))
            .pass);
}

TEST_CASE("grid values match pointwise evaluation") {
  int N = 16;
  std::vector<double> grid = cf::zak_grid(0.8, 1.2, N);
  REQUIRE(grid.size() == static_cast<size_t>(N) * N);
  for (int j = 0; j < N; j += 5) {
    for (int i = 0; i < N; i += 3) {
      double expect =
          std::abs(cf::zak_theta(0.8, 1.2, double(i) / N, double(j) / N));
      CHECK(grid[j * N + i] == doctest::Approx(expect).epsilon(1e-12));
    }
  }
}

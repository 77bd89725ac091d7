#include <cmath>

#include "atom.hpp"
#include "common.hpp"
#include "doctest.h"
#include "frft.hpp"
#include "oracle.hpp"

using cf::Atom;
using cf::cd;
using cf::kPi;

namespace {

double atom_gap(const Atom& f, const Atom& g) {
  double worst = 0.0;
  for (int i = 0; i <= 120; ++i) {
    double x = -3.0 + 6.0 * i / 120.0;
    worst = std::max(worst, std::abs(cf::evaluate(f, x) - cf::evaluate(g, x)));
  }
  return worst;
}

}  // namespace

TEST_CASE("Gaussian invariance across angles") {
  for (double th : {0.1, 0.7, 1.3, 2.9, 4.0, 6.0}) {
    CHECK(atom_gap(cf::frft_atom(cf::gaussian(1.0), th), cf::gaussian(1.0)) <=
          1e-12);
  }
}

TEST_CASE("quarter and half turns") {
  oracle::Rng rng(601);
  for (int i = 0; i < 8; ++i) {
    Atom g = oracle::random_atom(rng);
    CHECK(atom_gap(cf::frft_atom(g, kPi / 2.0), cf::fourier(g)) <= 1e-12);
    CHECK(atom_gap(cf::frft_atom(g, -kPi / 2.0), cf::inverse_fourier(g)) <=
          1e-12);
    CHECK(atom_gap(cf::frft_atom(g, kPi), cf::reflect(g)) <= 1e-12);
    CHECK(atom_gap(cf::frft_atom(g, 2.0 * kPi), g) <= 1e-12);
    CHECK(atom_gap(cf::frft_atom(g, 0.0), g) <= 1e-12);
  }
}

TEST_CASE("group law on atoms") {
  oracle::Rng rng(602);
  for (int i = 0; i < 10; ++i) {
    Atom g = oracle::random_atom(rng);
    double t1 = rng.uniform(0.1, 3.0);
    double t2 = rng.uniform(0.1, 3.0);
    CHECK(atom_gap(cf::frft_atom(cf::frft_atom(g, t1), t2),
                   cf::frft_atom(g, t1 + t2)) <= 1e-8);
  }
}

TEST_CASE("norm preservation on atoms") {
  oracle::Rng rng(603);
  for (int i = 0; i < 8; ++i) {
    Atom g = oracle::random_atom(rng);
    double th = rng.uniform(0.1, 6.0);
    CHECK(std::fabs(cf::l2_norm(cf::frft_atom(g, th)) - cf::l2_norm(g)) <=
          1e-9 * cf::l2_norm(g));
  }
}

TEST_CASE("shift commutation phase identity") {
  // pi(z) F_theta = phase(z, theta) F_theta pi(R_theta z).
  oracle::Rng rng(604);
  for (int i = 0; i < 10; ++i) {
    Atom g = oracle::random_atom(rng);
    double a = rng.uniform(-1.5, 1.5), b = rng.uniform(-1.5, 1.5);
    double th = rng.uniform(0.2, 2.9);
    Atom lhs = cf::tf_shift(cf::frft_atom(g, th), a, b);
    double ar = a * std::cos(th) + b * std::sin(th);
    double br = -a * std::sin(th) + b * std::cos(th);
    Atom rhs = cf::frft_atom(cf::tf_shift(g, ar, br), th);
    rhs.c *= cf::commutation_phase(a, b, th);
    CHECK(atom_gap(lhs, rhs) <= 1e-8);
  }
}

TEST_CASE("angle reduction snaps near-degenerate angles") {
  oracle::Rng rng(605);
  Atom g = oracle::random_atom(rng);
  CHECK(atom_gap(cf::frft_atom(g, 1e-9), g) <= 1e-8);
  CHECK(atom_gap(cf::frft_atom(g, kPi + 1e-9), cf::reflect(g)) <= 1e-8);
  CHECK(atom_gap(cf::frft_atom(g, 4.0 * kPi + 0.8), cf::frft_atom(g, 0.8)) <=
        1e-10);
}

TEST_CASE("quadrature transform matches the closed form at N=2048") {
  int N = 2048;
  double L = 6.0;
  Atom g = cf::make_atom(1.0, cd(1.0, 0.5), cd(0.0, 0.9));
  cf::SampledSignal in = cf::sample_atom(g, -L, 2.0 * L / N, N);
  for (double th : {0.7, 2.2}) {
    cf::SampledSignal out = cf::frft_numeric(in, th);
    Atom ref = cf::frft_atom(g, th);
    double worst = 0.0;
    for (int i = 0; i < N; ++i) {
      worst = std::max(worst, std::abs(out.samples[i] -
                                       cf::evaluate(ref, out.x0 + i * out.dx)));
    }
    CHECK(worst <= 1e-6);
    CHECK(std::fabs(cf::signal_l2(out) - cf::signal_l2(in)) <= 1e-6);
  }
}

TEST_CASE("quadrature transform special angles") {
  // The reversal branch requires a grid symmetric about zero, so sample
  // n = 513 points covering [-L, L] inclusive.
  int n = 513;
  double L = 5.0;
  double dx = 2.0 * L / (n - 1);
  Atom g = cf::make_atom(1.0, cd(1.2, -0.4), cd(0.3, 0.2));
  cf::SampledSignal in = cf::sample_atom(g, -L, dx, n);

  cf::SampledSignal qt = cf::frft_numeric(in, kPi / 2.0);
  Atom ghat = cf::fourier(g);
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    worst = std::max(worst,
                     std::abs(qt.samples[i] - cf::evaluate(ghat, qt.x0 + i * qt.dx)));
  }
  CHECK(worst <= 1e-6);

  cf::SampledSignal refl = cf::frft_numeric(in, kPi);
  worst = 0.0;
  for (int i = 0; i < n; ++i) {
    worst = std::max(worst, std::abs(refl.samples[i] -
                                     cf::evaluate(g, -(refl.x0 + i * refl.dx))));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("aliasing guard rejects coarse grids") {
  Atom g = cf::gaussian(1.0);
  cf::SampledSignal in = cf::sample_atom(g, -6.0, 12.0 / 128, 128);
  CHECK_THROWS_AS(cf::frft_numeric(in, 0.7), cf::GridError);
}

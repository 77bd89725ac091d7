#pragma once

#include <vector>

#include "atom.hpp"
#include "common.hpp"

namespace cf {

// Uniform complex samples at x0 + k*dx, k = 0..n-1.
struct SampledSignal {
  std::vector<cd> samples;
  double x0 = 0.0;
  double dx = 1.0;
};

// F_theta g in closed form via the chirp-Fourier-chirp kernel factorization.
// theta is reduced mod 2*pi; |sin theta| < 1e-3 snaps to the nearest
// identity/reflection case, +-pi/2 is the (inverse) Fourier transform.
Atom frft_atom(const Atom& g, double theta);

// Direct O(N^2) trapezoid quadrature of the transform on the input grid.
// Throws GridError when the kernel phase advances >= pi/2 per step at the
// grid edge (aliasing guard).
SampledSignal frft_numeric(const SampledSignal& f, double theta);

// Scalar phase in pi(z) F_theta = phase * F_theta pi(R_theta z), |phase| = 1.
cd commutation_phase(double a, double b, double theta);

// Discrete L2 norm with the grid weight.
double signal_l2(const SampledSignal& f);

SampledSignal sample_atom(const Atom& g, double x0, double dx, int n);

}  // namespace cf

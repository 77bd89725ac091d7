#pragma once

#include "common.hpp"

namespace cf {

// g(x) = c * exp(-pi*w*x^2 + l*x) with Re w > 0. Closed under chirp
// multiplication, Fourier transform, chirp convolution, dilation,
// reflection, and time-frequency shifts.
struct Atom {
  cd c;
  cd w;
  cd l;
};

Atom make_atom(cd c, cd w, cd l);

// phi_gamma(x) = exp(-pi*gamma^2*x^2); phi = phi_1.
Atom gaussian(double gamma = 1.0);
// h_r * phi_{sqrt(u)} as the atom with w = u + i*r.
Atom chirped_gaussian(double u, double r);

cd evaluate(const Atom& g, double x);

// h_lambda(x) = exp(-pi*i*lambda*x^2) times g.
Atom multiply_chirp(const Atom& g, double lambda);

// ghat(xi) = integral g(x) exp(-2*pi*i*x*xi) dx, in closed form.
Atom fourier(const Atom& g);
Atom inverse_fourier(const Atom& g);

// hhat_{lambda'} = c_{lambda'} h_{-1/lambda'}; |c| = |lambda'|^{-1/2},
// phase -pi/4 for lambda' > 0 and +pi/4 for lambda' < 0.
cd chirp_fourier_scalar(double lambda_prime);

// (h_{lambda'} * g)(x), computed through the Fourier side.
Atom convolve_chirp(const Atom& g, double lambda_prime);

// (M_a T_b g)(x) = exp(2*pi*i*a*x) g(x - b).
Atom tf_shift(const Atom& g, double a, double b);

// x -> g(gamma * x), gamma > 0.
Atom dilate(const Atom& g, double gamma);

// x -> g(-x).
Atom reflect(const Atom& g);

// integral exp(-pi*A*x^2 + B*x) dx = exp(B^2/(4*pi*A)) / sqrt(A), Re A > 0.
cd gaussian_integral(cd A, cd B);

double l2_norm(const Atom& g);

// <g1, g2> = integral g1 * conj(g2).
cd inner_product(const Atom& g1, const Atom& g2);

struct ProductConvolution {
  Atom atom;  // s * h_{v+lambda} * phi_{sqrt(u)}
  cd s;
  double u;
  double v;
};

// h_lambda * (h_{lambda'} * phi_{1/gamma}) in closed form.
ProductConvolution product_convolution(double lambda, double lambda_prime,
                                       double gamma);

}  // namespace cf

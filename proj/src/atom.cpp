#include "atom.hpp"

#include <cmath>

namespace cf {

Atom make_atom(cd c, cd w, cd l) {
  if (!(w.real() > 0.0)) {
    throw DomainError("atom requires Re w > 0, got Re w = " +
                      std::to_string(w.real()));
  }
  return Atom{c, w, l};
}

Atom gaussian(double gamma) {
  if (!(gamma > 0.0)) throw DomainError("gaussian requires gamma > 0");
  return Atom{1.0, gamma * gamma, 0.0};
}

Atom chirped_gaussian(double u, double r) {
  if (!(u > 0.0)) throw DomainError("chirped_gaussian requires u > 0");
  return Atom{1.0, cd(u, r), 0.0};
}

cd evaluate(const Atom& g, double x) {
  return g.c * std::exp(-kPi * g.w * x * x + g.l * x);
}

Atom multiply_chirp(const Atom& g, double lambda) {
  return Atom{g.c, g.w + cd(0.0, lambda), g.l};
}

// Principal square root keeps arg in (-pi/4, pi/4) since Re w > 0.
Atom fourier(const Atom& g) {
  cd eta = std::sqrt(g.w);
  cd c = g.c / eta * std::exp(g.l * g.l / (4.0 * kPi * g.w));
  return Atom{c, 1.0 / g.w, -cd(0.0, 1.0) * g.l / g.w};
}

Atom inverse_fourier(const Atom& g) {
  cd eta = std::sqrt(g.w);
  cd c = g.c / eta * std::exp(g.l * g.l / (4.0 * kPi * g.w));
  return Atom{c, 1.0 / g.w, cd(0.0, 1.0) * g.l / g.w};
}

cd chirp_fourier_scalar(double lambda_prime) {
  if (lambda_prime == 0.0) {
    throw DomainError("chirp rate lambda' must be nonzero");
  }
  double m = 1.0 / std::sqrt(std::fabs(lambda_prime));
  double phase = (lambda_prime > 0.0) ? -kPi / 4.0 : kPi / 4.0;
  return std::polar(m, phase);
}

Atom convolve_chirp(const Atom& g, double lambda_prime) {
  cd scalar = chirp_fourier_scalar(lambda_prime);
  Atom hat = fourier(g);
  Atom prod = multiply_chirp(hat, -1.0 / lambda_prime);
  prod.c *= scalar;
  if (!(prod.w.real() > 0.0)) {
    throw DomainError("chirp convolution left the atom class");
  }
  return inverse_fourier(prod);
}

Atom tf_shift(const Atom& g, double a, double b) {
  cd c = g.c * std::exp(-kPi * g.w * b * b - g.l * b);
  cd l = g.l + 2.0 * kPi * g.w * b + cd(0.0, 2.0 * kPi * a);
  return Atom{c, g.w, l};
}

Atom dilate(const Atom& g, double gamma) {
  if (!(gamma > 0.0)) throw DomainError("dilate requires gamma > 0");
  return Atom{g.c, g.w * gamma * gamma, g.l * gamma};
}

Atom reflect(const Atom& g) { return Atom{g.c, g.w, -g.l}; }

cd gaussian_integral(cd A, cd B) {
  if (!(A.real() > 0.0)) {
    throw DomainError("gaussian_integral requires Re A > 0");
  }
  return std::exp(B * B / (4.0 * kPi * A)) / std::sqrt(A);
}

double l2_norm(const Atom& g) {
  double A = 2.0 * g.w.real();
  double B = 2.0 * g.l.real();
  // Log-space magnitude: a far-shifted atom pairs a subnormal amplitude with
  // a huge completed-square exponential, and the naive product degrades to
  // 0 * inf.
  double ln_mag =
      std::log(std::abs(g.c)) + B * B / (8.0 * kPi * A) - 0.25 * std::log(A);
  return std::exp(ln_mag);
}

cd inner_product(const Atom& g1, const Atom& g2) {
  cd A = g1.w + std::conj(g2.w);
  cd B = g1.l + std::conj(g2.l);
  if (!(A.real() > 0.0)) {
    throw DomainError("inner_product requires a decaying product");
  }
  cd expo = B * B / (4.0 * kPi * A);
  double ln_mag = std::log(std::abs(g1.c)) + std::log(std::abs(g2.c)) +
                  expo.real() - 0.5 * std::log(std::abs(A));
  if (std::isnan(ln_mag)) return cd(0.0);
  double phase = std::arg(g1.c) - std::arg(g2.c) + expo.imag() -
                 0.5 * std::arg(A);
  return std::polar(std::exp(ln_mag), phase);
}

ProductConvolution product_convolution(double lambda, double lambda_prime,
                                       double gamma) {
  if (lambda == 0.0) throw DomainError("product_convolution: lambda = 0");
  if (lambda_prime == 0.0) throw DomainError("product_convolution: lambda' = 0");
  if (!(gamma > 0.0)) throw DomainError("product_convolution: gamma <= 0");

  double ip = 1.0 / lambda_prime;
  double den = gamma * gamma * gamma * gamma + ip * ip;
  double u = gamma * gamma / den;
  double v = ip / den;
  cd eta = std::sqrt(cd(u, v));
  cd s = chirp_fourier_scalar(lambda_prime) * gamma * eta;

  Atom window = make_atom(1.0, 1.0 / (gamma * gamma), 0.0);
  Atom atom = multiply_chirp(convolve_chirp(window, lambda_prime), lambda);
  return ProductConvolution{atom, s, u, v};
}

}  // namespace cf

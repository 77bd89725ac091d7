#pragma once

#include <functional>
#include <vector>

#include "atom.hpp"
#include "common.hpp"

namespace cf {

enum class ThetaMode { Series, Product };

struct ThetaValue {
  cd value;
  double tail;  // bound on the truncation error
  int k_used;
};

// Theta(z, q) = sum_k q^(k^2) z^k, |q| < 1, z != 0. Truncation starts at K
// and doubles until two successive values agree to 1e-13 (relative).
ThetaValue theta_eval(cd z, cd q, int K, ThetaMode mode);

struct ZakValue {
  cd value;
  double tail;
};

// Zg(t, omega) = sum_k g(t-k) e^(2*pi*i*k*omega), truncated at |k| <= K,
// with an explicit bound on the omitted Gaussian tail.
ZakValue zak_direct(const Atom& g, double t, double omega, int K);

// Same series for an arbitrary sampled window; no tail bound.
cd zak_direct_fn(const std::function<cd(double)>& f, double t, double omega,
                 int K);

// Z(h_lambda phi_gamma)(t, omega) through the theta reduction
// exp(-pi(gamma^2+lambda*i)t^2) * Theta(z, q). gamma < 0.1 grows the
// starting truncation as ceil(30/gamma^2).
cd zak_theta(double lambda, double gamma, double t, double omega);

struct ZeroCertificate {
  double t;
  double omega;
  int winding;
  double simplicity_constant;
  int search_resolution;
};

// Locates the zeros of Z(h_lambda phi_gamma) on the unit square from an
// N x N grid plus damped Newton refinement; certifies uniqueness, the
// winding number on a half-side 0.05 square contour, and a sampled
// simplicity constant min |Z|/distance.
ZeroCertificate find_zero(double lambda, double gamma, int N);

enum class SymmetryKind { Real, Even, Odd, Eigenfunction };

struct SymmetryReport {
  SymmetryKind kind;
  double max_residual;
  bool pass;  // max_residual <= 1e-10
};

// Residuals of the Zak identities implied by the declared window class:
// real: conj(Z(t,w)) = Z(t,1-w); even: Z(1/2,1/2) = 0; odd:
// Z(0,0) = Z(1/2,0) = Z(0,1/2) = 0; eigenfunction of the Fourier transform
// with eigenvalue ev != -i: Z(t,w) = ev*e^(2*pi*i*t*w)*Z(w,1-t) and
// Z(1/2,1/2) = 0.
SymmetryReport symmetry_suite(const std::function<cd(double)>& window,
                              SymmetryKind kind, cd eigenvalue = cd(1.0));

// N x N values of |Z(h_lambda phi_gamma)| on the unit square, row-major
// with t fastest: out[j*N + i] = |Z(i/N, j/N)|.
std::vector<double> zak_grid(double lambda, double gamma, int N);

}  // namespace cf

#pragma once

#include "atom.hpp"
#include "common.hpp"

namespace cf {

// Row-major 2x2 real matrix; columns generate the lattice Q Z^2.
struct Mat2 {
  double a, b, c, d;

  double det() const { return a * d - b * c; }
  Mat2 operator*(const Mat2& o) const {
    return Mat2{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c,
                c * o.b + d * o.d};
  }
  Mat2 inverse() const;
  static Mat2 identity() { return Mat2{1.0, 0.0, 0.0, 1.0}; }
};

double max_abs_diff(const Mat2& x, const Mat2& y);

// R_theta = (cos, sin; -sin, cos).
Mat2 rotation(double theta);
// U_lambda = (1, lambda; 0, 1).
Mat2 shear_upper(double lambda);
// L_{lambda'} = (1, 0; 1/lambda', 1), lambda' != 0.
Mat2 shear_lower(double lambda_prime);
// diag(1/gamma, gamma), gamma > 0.
Mat2 dilation_matrix(double gamma);
// diag(beta, alpha): modulation step beta, translation step alpha.
Mat2 lattice_scale(double alpha, double beta);

struct QrFactors {
  double theta;
  double lambda;
  double alpha;
  double beta;
};

// Q = R_theta * U_lambda * diag(beta, alpha), exact reconstruction;
// requires det Q > 0.
QrFactors factor_qr(const Mat2& Q);

struct LuRotation {
  double lambda_prime;
  double d1;
  double d2;
  double theta;
};

// L_{lambda'} U_lambda = diag(d1, d2) R_theta with lambda' = -(lambda+1/lambda);
// d1, d2 are the row norms of the product and d1*d2 = 1.
LuRotation factor_lu_rotation(double lambda);

struct ChirpDesign {
  double lambda;
  double lambda_prime;  // -(lambda + 1/lambda)
  double gamma_conv;    // sqrt(lambda^2 + 1)
  double u;
  double v;
  double r;  // lambda + v, nonzero for lambda != 0
  cd s;
};

ChirpDesign chirp_design(double lambda);

// G(lambda) = r/u; odd, vanishes only at lambda = 0, surjective onto R\{0}.
double ratio_G(double lambda);

// Smallest-|lambda| root of G(lambda) = rho, same sign as rho, found by a
// geometric bracket scan over |lambda| in [1e-6, 1e6] plus bisection.
double solve_lambda(double rho);

struct WindowDesign {
  ChirpDesign design;
  double gamma_dil;  // dilating the designed atom by this yields w = u + r*i
};

WindowDesign window_design(double u, double r);

}  // namespace cf

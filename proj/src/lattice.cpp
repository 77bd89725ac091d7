#include "lattice.hpp"

#include <cmath>
#include <string>

namespace cf {

Mat2 Mat2::inverse() const {
  double dt = det();
  if (dt == 0.0) throw DomainError("singular matrix");
  return Mat2{d / dt, -b / dt, -c / dt, a / dt};
}

double max_abs_diff(const Mat2& x, const Mat2& y) {
  double m = std::fabs(x.a - y.a);
  m = std::max(m, std::fabs(x.b - y.b));
  m = std::max(m, std::fabs(x.c - y.c));
  m = std::max(m, std::fabs(x.d - y.d));
  return m;
}

Mat2 rotation(double theta) {
  double ct = std::cos(theta), st = std::sin(theta);
  return Mat2{ct, st, -st, ct};
}

Mat2 shear_upper(double lambda) { return Mat2{1.0, lambda, 0.0, 1.0}; }

Mat2 shear_lower(double lambda_prime) {
  if (lambda_prime == 0.0) throw DomainError("shear_lower: lambda' = 0");
  return Mat2{1.0, 0.0, 1.0 / lambda_prime, 1.0};
}

Mat2 dilation_matrix(double gamma) {
  if (!(gamma > 0.0)) throw DomainError("dilation_matrix: gamma <= 0");
  return Mat2{1.0 / gamma, 0.0, 0.0, gamma};
}

Mat2 lattice_scale(double alpha, double beta) {
  return Mat2{beta, 0.0, 0.0, alpha};
}

QrFactors factor_qr(const Mat2& Q) {
  double det = Q.det();
  if (!(det > 0.0)) {
    throw DomainError("factor_qr requires det Q > 0, got det = " +
                      std::to_string(det));
  }
  double beta = std::hypot(Q.a, Q.c);
  if (beta == 0.0) throw DomainError("factor_qr: first column is zero");
  double lambda = (Q.a * Q.b + Q.c * Q.d) / det;
  double alpha = det / beta;
  // R_theta's first column is (cos, -sin); it must align with (a, c)/beta.
  double theta = std::atan2(-Q.c, Q.a);
  return QrFactors{theta, lambda, alpha, beta};
}

LuRotation factor_lu_rotation(double lambda) {
  if (lambda == 0.0) throw DomainError("factor_lu_rotation: lambda = 0");
  double lambda_prime = -(lambda + 1.0 / lambda);
  Mat2 P = shear_lower(lambda_prime) * shear_upper(lambda);
  double d1 = std::hypot(P.a, P.b);
  double d2 = std::hypot(P.c, P.d);
  double theta = std::atan2(P.b, P.a);
  return LuRotation{lambda_prime, d1, d2, theta};
}

ChirpDesign chirp_design(double lambda) {
  if (lambda == 0.0) throw DomainError("chirp_design: lambda = 0");
  double lambda_prime = -(lambda + 1.0 / lambda);
  double gamma_conv = std::sqrt(lambda * lambda + 1.0);
  ProductConvolution pc =
      product_convolution(lambda, lambda_prime, gamma_conv);
  double r = lambda + pc.v;
  return ChirpDesign{lambda, lambda_prime, gamma_conv, pc.u, pc.v, r, pc.s};
}

double ratio_G(double lambda) {
  ChirpDesign d = chirp_design(lambda);
  return d.r / d.u;
}

namespace {

// G is odd and positive on lambda > 0, spanning ~[4e-18, 1e18] over the scan
// range, so a bracket always exists for representable rho.
double solve_positive(double rho) {
  const double lo = 1e-6, hi = 1e6;
  const int per_decade = 64;
  const int decades = 12;
  const int n = per_decade * decades;
  double prev_l = lo;
  double prev_f = ratio_G(lo) - rho;
  if (prev_f == 0.0) return lo;
  double bl = 0.0, bh = 0.0;
  bool found = false;
  for (int i = 1; i <= n; ++i) {
    double lam = lo * std::pow(hi / lo, double(i) / n);
    double f = ratio_G(lam) - rho;
    if (f == 0.0) return lam;
    if ((prev_f < 0.0) != (f < 0.0)) {
      bl = prev_l;
      bh = lam;
      found = true;
      break;
    }
    prev_l = lam;
    prev_f = f;
  }
  if (!found) {
    throw NoRootError("solve_lambda: no sign change for rho = " +
                      std::to_string(rho));
  }
  double fl = ratio_G(bl) - rho;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (bl + bh);
    double fm = ratio_G(mid) - rho;
    if (std::fabs(fm) <= 1e-12 * std::max(1.0, std::fabs(rho)) ||
        (bh - bl) <= 1e-15 * mid) {
      return mid;
    }
    if ((fl < 0.0) != (fm < 0.0)) {
      bh = mid;
    } else {
      bl = mid;
      fl = fm;
    }
  }
  return 0.5 * (bl + bh);
}

}  // namespace

double solve_lambda(double rho) {
  if (rho == 0.0) throw DomainError("solve_lambda: rho = 0 has no solution");
  double lam = solve_positive(std::fabs(rho));
  return rho > 0.0 ? lam : -lam;
}

WindowDesign window_design(double u, double r) {
  if (r == 0.0) throw DomainError("window_design: r = 0");
  if (!(u > 0.0)) throw DomainError("window_design: u <= 0");
  ChirpDesign design = chirp_design(solve_lambda(r / u));
  double gamma_dil = std::sqrt(u / design.u);
  return WindowDesign{design, gamma_dil};
}

}  // namespace cf

#pragma once

#include <vector>

#include "atom.hpp"
#include "lattice.hpp"

namespace cf {

// Gabor system G(window, Q Z^2): atoms M_{p1} T_{p2} window over p = Qz.
struct LatticeSystem {
  Atom window;
  Mat2 Q;
};

struct BoundEstimate {
  double A_est = 0.0;
  double B_est = 0.0;
  double L = 0.0;
  int N = 0;
  int M = 0;
  bool certified = false;
};

struct CanonicalForm {
  Atom window;  // h_lambda * phi
  double lambda;
  double alpha;
  double beta;
  double scale;  // bound bookkeeping for the dilation step
  double theta;  // dropped rotation angle
};

// Reduces G(phi_gamma, Q Z^2) to the separable chirped-Gaussian system
// G(h_lambda phi, diag(beta, alpha) Z^2) via dilation absorption, the
// QR-with-column-scaling factorization, and rotation invariance of the
// Gaussian under the fractional Fourier transform. alpha*beta = |det Q|.
// det Q < 0 is handled by negating the second column (same lattice).
CanonicalForm canonicalize(double gamma, const Mat2& Q);

struct EstimatePair {
  BoundEstimate coarse;  // at N
  BoundEstimate fine;    // at 2N
};

// Finite-section estimate: lattice atoms with ||Qz||_inf <= M sampled on the
// periodic grid over [-L, L) with N nodes; A_est/B_est are the extreme
// squared singular values of the analysis map restricted to the covered
// frequency band (orthonormal DFT exponentials with |freq| <= M minus a
// window-dependent margin). The window width is normalized away first, so
// the estimate is exactly dilation covariant. Estimates at N and 2N are
// both returned. Measures the discretized, truncated system, not the true
// frame bounds.
EstimatePair estimate_bounds(const LatticeSystem& system, double L, int N,
                             int M);

struct JanssenCertificate {
  bool certified = false;
  double A_lower = 0.0;
  double B_upper = 0.0;
  double c00 = 0.0;
  double off_sum = 0.0;
  double tail = 0.0;
};

// Dual-lattice dominance bound from the closed-form correlations
// c_{k,l} = <g, M_{l/alpha} T_{k/beta} g>, |k|,|l| <= K, with a geometric
// tail bound for the discarded terms. Inconclusive (certified = false)
// when the diagonal does not dominate.
JanssenCertificate janssen_certify(const Atom& window, double alpha,
                                   double beta, int K);

struct EquivalenceReport {
  double ratio_direct;     // A/B of G(phi_gamma, Q)
  double ratio_canonical;  // A/B of the canonicalized separable system
  double drift;            // |direct/canonical - 1|
  bool pass;               // drift <= 0.15
  CanonicalForm canonical;
};

EquivalenceReport equivalence_check(double gamma, const Mat2& Q, double L,
                                    int N, int M);

struct SweepRow {
  double det;
  double A_est;
  double B_est;
  double ratio;
  bool certified;
  bool density_violating;  // |det| > 1: flagged, not estimated
};

// Estimates G(phi_gamma, (sqrt|s| * shape) Z^2) for each s in dets, scaling
// both columns by sqrt|s| (negating the second column for s < 0).
// Certification is Janssen on the canonicalized system.
std::vector<SweepRow> sweep_det(double gamma, const Mat2& shape,
                                const std::vector<double>& dets, double L,
                                int N, int M);

}  // namespace cf

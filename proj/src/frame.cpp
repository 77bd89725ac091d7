#include "frame.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "parallel.hpp"

namespace cf {

CanonicalForm canonicalize(double gamma, const Mat2& Q) {
  if (!(gamma > 0.0)) throw DomainError("canonicalize requires gamma > 0");
  double det = Q.det();
  if (det == 0.0) throw DomainError("canonicalize requires det Q != 0");
  Mat2 Qp = Q;
  if (det < 0.0) {
    // Negating the second column keeps the lattice Q Z^2 and flips det.
    Qp.b = -Qp.b;
    Qp.d = -Qp.d;
  }
  Qp = dilation_matrix(gamma) * Qp;
  QrFactors qr = factor_qr(Qp);
  Atom window = make_atom(1.0, cd(1.0, qr.lambda), 0.0);
  return CanonicalForm{window, qr.lambda, qr.alpha,
                       qr.beta,  1.0 / gamma, qr.theta};
}

namespace {

struct Section {
  Eigen::MatrixXcd H;  // atoms x grid, rows carry sqrt(dx)
  int kept = 0;
};

Section assemble(const Atom& window, const Mat2& Q, double L, int N, int M) {
  double dx = 2.0 * L / N;
  Mat2 Qi = Q.inverse();
  int cap1 = static_cast<int>(
                 std::ceil(M * (std::fabs(Qi.a) + std::fabs(Qi.b)))) + 1;
  int cap2 = static_cast<int>(
                 std::ceil(M * (std::fabs(Qi.c) + std::fabs(Qi.d)))) + 1;
  double lim = M + 1e-9 * std::max(1.0, double(M));

  std::vector<std::pair<double, double>> points;
  for (int z1 = -cap1; z1 <= cap1; ++z1) {
    for (int z2 = -cap2; z2 <= cap2; ++z2) {
      double p1 = Q.a * z1 + Q.b * z2;
      double p2 = Q.c * z1 + Q.d * z2;
      if (std::max(std::fabs(p1), std::fabs(p2)) > lim) continue;
      points.emplace_back(p1, p2);
    }
  }

  Eigen::MatrixXcd rows(points.size(), N);
  std::vector<char> keep(points.size(), 0);
  double sdx = std::sqrt(dx);
  parallel_for(static_cast<int>(points.size()), [&](int p) {
    Atom a = tf_shift(window, points[p].first, points[p].second);
    double peak = 0.0;
    for (int i = 0; i < N; ++i) {
      cd v = evaluate(a, -L + dx * i);
      peak = std::max(peak, std::abs(v));
      rows(p, i) = v * sdx;
    }
    keep[p] = peak > 1e-14 ? 1 : 0;
  });

  Section s;
  s.kept = static_cast<int>(std::count(keep.begin(), keep.end(), 1));
  s.H.resize(s.kept, N);
  int r = 0;
  for (size_t p = 0; p < points.size(); ++p) {
    if (keep[p]) s.H.row(r++) = rows.row(p);
  }
  return s;
}

// Extreme eigenvalues of the analysis Gram restricted to the orthonormal
// DFT band |freq| <= W on the periodic grid.
std::pair<double, double> band_extremes(const Eigen::MatrixXcd& H, double L,
                                        int N, double W) {
  int Kf = static_cast<int>(std::floor(W * 2.0 * L));
  Kf = std::min(Kf, (N - 1) / 2);
  int m = 2 * Kf + 1;
  Eigen::MatrixXcd E(N, m);
  double inv_sqrt_n = 1.0 / std::sqrt(double(N));
  for (int i = 0; i < N; ++i) {
    double x = -L + (2.0 * L / N) * i;
    for (int j = -Kf; j <= Kf; ++j) {
      double nu = j / (2.0 * L);
      E(i, j + Kf) = std::exp(cd(0.0, 2.0 * kPi * nu * x)) * inv_sqrt_n;
    }
  }
  Eigen::MatrixXcd C = H.conjugate() * E;
  Eigen::MatrixXcd G = C.adjoint() * C;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(G,
                                                     Eigen::EigenvaluesOnly);
  double lo = std::max(es.eigenvalues()(0), 0.0);
  double hi = es.eigenvalues()(m - 1);
  return {lo, hi};
}

BoundEstimate estimate_once(const Atom& window, const Mat2& Q, double L,
                            int N, int M, double W, double scale) {
  Section s = assemble(window, Q, L, N, M);
  if (s.kept < 3) {
    throw DegenerateError(
        "fewer than 3 lattice atoms intersect the grid support (" +
        std::to_string(s.kept) + ")");
  }
  auto [lo, hi] = band_extremes(s.H, L, N, W);
  BoundEstimate e;
  e.A_est = scale * lo;
  e.B_est = scale * hi;
  e.L = L;
  e.N = N;
  e.M = M;
  return e;
}

}  // namespace

EstimatePair estimate_bounds(const LatticeSystem& system, double L, int N,
                             int M) {
  if (N < 128) throw DomainError("estimate_bounds requires N >= 128");
  if (M < 4) throw DomainError("estimate_bounds requires M >= 4");
  if (!(L >= 4.0)) throw DomainError("estimate_bounds requires L >= 4");
  if (system.Q.det() == 0.0) throw DomainError("estimate_bounds: det Q = 0");

  // Width normalization (exact unitary equivalence): the grid then always
  // sees a unit-width window, and the estimate is dilation covariant.
  double gw = std::sqrt(system.window.w.real());
  Atom window = dilate(system.window, 1.0 / gw);
  Mat2 Q = dilation_matrix(gw) * system.Q;
  double scale = 1.0 / gw;

  double sigma = std::abs(window.w);  // frequency spread of the unit window
  double W = std::max(double(M) - (2.0 * sigma + 5.0), 1.0);

  EstimatePair pair;
  pair.coarse = estimate_once(window, Q, L, N, M, W, scale);
  pair.fine = estimate_once(window, Q, L, 2 * N, M, W, scale);
  return pair;
}

JanssenCertificate janssen_certify(const Atom& window, double alpha,
                                   double beta, int K) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw DomainError("janssen_certify requires alpha, beta > 0");
  }
  if (K < 8) throw DomainError("janssen_certify requires K >= 8");

  auto corr = [&](int k, int l) {
    return std::abs(
        inner_product(window, tf_shift(window, l / alpha, k / beta)));
  };

  double c00 = corr(0, 0);
  double off = 0.0;
  for (int k = -K; k <= K; ++k) {
    for (int l = -K; l <= K; ++l) {
      if (k == 0 && l == 0) continue;
      off += corr(k, l);
    }
  }

  // Rings max(|k|,|l|) = R decay like a Gaussian in R; sum 20 explicit rings
  // past K and close with a geometric bound on the rest.
  auto ring = [&](int R) {
    double s = 0.0;
    for (int k = -R; k <= R; ++k) {
      s += corr(k, -R) + corr(k, R);
    }
    for (int l = -R + 1; l <= R - 1; ++l) {
      s += corr(-R, l) + corr(R, l);
    }
    return s;
  };
  double tail = 0.0;
  double prev = 0.0;
  for (int R = K + 1; R <= K + 20; ++R) {
    prev = ring(R);
    tail += prev;
  }
  double prev2 = ring(K + 21);
  double rho = (prev > 0.0) ? prev2 / prev : 0.0;
  tail += (rho < 1.0) ? prev2 / (1.0 - rho)
                      : std::numeric_limits<double>::infinity();

  double ab = alpha * beta;
  JanssenCertificate cert;
  cert.c00 = c00;
  cert.off_sum = off;
  cert.tail = tail;
  cert.A_lower = (c00 - off - tail) / ab;
  cert.B_upper = (c00 + off + tail) / ab;
  cert.certified = (c00 - off - tail) > 0.0;
  return cert;
}

EquivalenceReport equivalence_check(double gamma, const Mat2& Q, double L,
                                    int N, int M) {
  double det = std::fabs(Q.det());
  if (!(det > 0.0 && det < 1.0)) {
    throw DomainError("equivalence_check requires 0 < |det Q| < 1");
  }
  LatticeSystem direct{gaussian(gamma), Q};
  BoundEstimate d = estimate_bounds(direct, L, N, M).coarse;

  CanonicalForm canon = canonicalize(gamma, Q);
  LatticeSystem sep{canon.window, lattice_scale(canon.alpha, canon.beta)};
  BoundEstimate c = estimate_bounds(sep, L, N, M).coarse;

  EquivalenceReport rep;
  rep.ratio_direct = d.A_est / d.B_est;
  rep.ratio_canonical = c.A_est / c.B_est;
  rep.drift = std::fabs(rep.ratio_direct / rep.ratio_canonical - 1.0);
  rep.pass = rep.drift <= 0.15;
  rep.canonical = canon;
  return rep;
}

std::vector<SweepRow> sweep_det(double gamma, const Mat2& shape,
                                const std::vector<double>& dets, double L,
                                int N, int M) {
  for (double s : dets) {
    if (s == 0.0) throw DomainError("sweep_det: det = 0");
  }
  std::vector<SweepRow> rows(dets.size());
  parallel_for(static_cast<int>(dets.size()), [&](int i) {
    double s = dets[i];
    SweepRow row{};
    row.det = s;
    if (std::fabs(s) > 1.0) {
      row.density_violating = true;
      row.A_est = row.B_est = row.ratio =
          std::numeric_limits<double>::quiet_NaN();
    } else {
      double sc = std::sqrt(std::fabs(s));
      Mat2 Qs{sc * shape.a, sc * shape.b, sc * shape.c, sc * shape.d};
      if (s < 0.0) {
        Qs.b = -Qs.b;
        Qs.d = -Qs.d;
      }
      BoundEstimate est =
          estimate_bounds(LatticeSystem{gaussian(gamma), Qs}, L, N, M).coarse;
      row.A_est = est.A_est;
      row.B_est = est.B_est;
      row.ratio = est.A_est / est.B_est;
      CanonicalForm canon = canonicalize(gamma, Qs);
      row.certified =
          janssen_certify(canon.window, canon.alpha, canon.beta, 24)
              .certified;
    }
    rows[i] = row;
  });
  return rows;
}

}  // namespace cf

#include "zak.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "parallel.hpp"

namespace cf {

namespace {

struct ThetaTruncated {
  cd value;
  double tail;
};

ThetaTruncated theta_series_at(cd z, cd q, int K) {
  // Each term is exp(k^2 log q +- k log z), so its floating-point magnitude
  // is bounded by the true term size; iterated powers of a large |z| would
  // overflow to inf long before q^(k^2) stopped underflowing to zero and
  // poison the sum with 0 * inf.
  cd lq = std::log(q);
  cd lz = std::log(z);
  cd acc = 1.0;
  for (int k = 1; k <= K; ++k) {
    cd e = (double(k) * double(k)) * lq;
    cd s = double(k) * lz;
    acc += std::exp(e + s) + std::exp(e - s);
  }
  double lqa = lq.real();             // log|q| < 0
  double lza = std::fabs(lz.real());  // |log|z||
  double ln_first = double(K + 1) * double(K + 1) * lqa + (K + 1) * lza;
  double ln_ratio = (2.0 * K + 3.0) * lqa + lza;
  double tail;
  if (ln_ratio >= 0.0) {
    tail = std::numeric_limits<double>::infinity();
  } else {
    double first = 2.0 * ((ln_first < -744.0) ? 0.0 : std::exp(ln_first));
    tail = first / (1.0 - std::exp(ln_ratio));
  }
  return ThetaTruncated{acc, tail};
}

ThetaTruncated theta_product_at(cd z, cd q, int K) {
  cd acc = 1.0;
  cd q2j = 1.0;
  cd q2 = q * q;
  cd zi = 1.0 / z;
  cd qodd = q;
  for (int k = 0; k < K; ++k) {
    q2j *= q2;  // q^(2(k+1))
    acc *= (1.0 - q2j) * (1.0 + qodd * z) * (1.0 + qodd * zi);
    qodd *= q2;
  }
  // Remaining factors differ from 1 by at most |q|^m * (2 + |z| + 1/|z|)
  // summed geometrically over m > 2K.
  double aq = std::abs(q), az = std::abs(z);
  double lead = std::pow(aq, 2.0 * K + 1.0) * (2.0 + az + 1.0 / az);
  double tail = (aq < 1.0 && lead < 0.5)
                    ? 2.0 * std::abs(acc) * lead / (1.0 - aq)
                    : std::numeric_limits<double>::infinity();
  return ThetaTruncated{acc, tail};
}

}  // namespace

ThetaValue theta_eval(cd z, cd q, int K, ThetaMode mode) {
  if (!(std::abs(q) < 1.0)) throw DomainError("theta_eval requires |q| < 1");
  if (z == cd(0.0)) throw DomainError("theta_eval requires z != 0");
  if (K < 1) throw DomainError("theta_eval requires K >= 1");
  const int k_cap = 1 << 21;
  auto eval = (mode == ThetaMode::Series) ? theta_series_at : theta_product_at;
  ThetaTruncated cur = eval(z, q, K);
  int k = K;
  while (k < k_cap) {
    ThetaTruncated next = eval(z, q, 2 * k);
    double scale = std::max(1.0, std::abs(next.value));
    bool settled = std::abs(next.value - cur.value) <= 1e-13 * scale;
    cur = next;
    k *= 2;
    if (settled) break;
  }
  return ThetaValue{cur.value, cur.tail, k};
}

ZakValue zak_direct(const Atom& g, double t, double omega, int K) {
  if (K < 1) throw DomainError("zak_direct requires K >= 1");
  cd acc = 0.0;
  for (int k = -K; k <= K; ++k) {
    acc += evaluate(g, t - k) * std::exp(cd(0.0, 2.0 * kPi * k * omega));
  }
  // |g(t-k)| decays super-geometrically; the first 40 omitted terms are an
  // honest bound up to doubling.
  double tail = 0.0;
  for (int k = K + 1; k <= K + 40; ++k) {
    tail += std::abs(evaluate(g, t - k)) + std::abs(evaluate(g, t + k));
  }
  return ZakValue{acc, 2.0 * tail};
}

cd zak_direct_fn(const std::function<cd(double)>& f, double t, double omega,
                 int K) {
  cd acc = 0.0;
  for (int k = -K; k <= K; ++k) {
    acc += f(t - k) * std::exp(cd(0.0, 2.0 * kPi * k * omega));
  }
  return acc;
}

cd zak_theta(double lambda, double gamma, double t, double omega) {
  if (!(gamma > 0.0)) throw DomainError("zak_theta requires gamma > 0");
  cd w(gamma * gamma, lambda);
  cd z = std::exp(2.0 * kPi * (cd(gamma * gamma * t, omega + lambda * t)));
  cd q = std::exp(-kPi * w);
  int K = 30;
  if (gamma < 0.1) K = static_cast<int>(std::ceil(30.0 / (gamma * gamma)));
  ThetaValue th = theta_eval(z, q, K, ThetaMode::Series);
  return std::exp(-kPi * w * t * t) * th.value;
}

namespace {

double wrap01(double x) {
  double y = x - std::floor(x);
  return (y >= 1.0) ? 0.0 : y;
}

double torus_dist(double a, double b) {
  double d = std::fabs(wrap01(a) - wrap01(b));
  return std::min(d, 1.0 - d);
}

struct Root {
  double t, omega;
};

bool newton_refine(double lambda, double gamma, double& t, double& omega,
                   double zscale) {
  const double h = 1e-6;
  for (int it = 0; it < 60; ++it) {
    cd Z = zak_theta(lambda, gamma, t, omega);
    if (std::abs(Z) <= 1e-12 * zscale) return true;
    cd Zt = (zak_theta(lambda, gamma, t + h, omega) -
             zak_theta(lambda, gamma, t - h, omega)) /
            (2.0 * h);
    cd Zw = (zak_theta(lambda, gamma, t, omega + h) -
             zak_theta(lambda, gamma, t, omega - h)) /
            (2.0 * h);
    // Solve [Re Zt, Re Zw; Im Zt, Im Zw] * step = -(Re Z, Im Z).
    double det = Zt.real() * Zw.imag() - Zw.real() * Zt.imag();
    if (std::fabs(det) < 1e-300) return false;
    double st = -(Z.real() * Zw.imag() - Zw.real() * Z.imag()) / det;
    double sw = -(Zt.real() * Z.imag() - Z.real() * Zt.imag()) / det;
    double len = std::hypot(st, sw);
    if (len > 0.2) {
      st *= 0.2 / len;
      sw *= 0.2 / len;
    }
    double damp = 1.0;
    double cur = std::abs(Z);
    for (int half = 0; half < 30; ++half) {
      double nt = t + damp * st, nw = omega + damp * sw;
      if (std::abs(zak_theta(lambda, gamma, nt, nw)) < cur) {
        t = nt;
        omega = nw;
        break;
      }
      damp *= 0.5;
      if (half == 29) return false;
    }
  }
  return std::abs(zak_theta(lambda, gamma, t, omega)) <= 1e-12 * zscale;
}

}  // namespace

ZeroCertificate find_zero(double lambda, double gamma, int N) {
  if (!(gamma > 0.0)) throw DomainError("find_zero requires gamma > 0");
  if (N < 64) throw DomainError("find_zero requires N >= 64");

  std::vector<double> grid = zak_grid(lambda, gamma, N);
  double zscale = *std::max_element(grid.begin(), grid.end());
  if (!(zscale > 0.0)) throw NoZeroError("|Z| vanished identically on the grid");

  auto at = [&](int i, int j) {
    return grid[((j % N + N) % N) * N + ((i % N + N) % N)];
  };

  std::vector<Root> roots;
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < N; ++i) {
      double v = at(i, j);
      bool is_min = true;
      for (int dj = -1; dj <= 1 && is_min; ++dj) {
        for (int di = -1; di <= 1; ++di) {
          if (di == 0 && dj == 0) continue;
          if (at(i + di, j + dj) < v) {
            is_min = false;
            break;
          }
        }
      }
      if (!is_min) continue;
      double t = double(i) / N, omega = double(j) / N;
      if (newton_refine(lambda, gamma, t, omega, zscale)) {
        roots.push_back(Root{wrap01(t), wrap01(omega)});
      }
    }
  }

  std::vector<Root> distinct;
  for (const Root& r : roots) {
    bool merged = false;
    for (const Root& d : distinct) {
      if (torus_dist(r.t, d.t) < 1e-5 && torus_dist(r.omega, d.omega) < 1e-5) {
        merged = true;
        break;
      }
    }
    if (!merged) distinct.push_back(r);
  }
  if (distinct.empty()) {
    throw NoZeroError("no zero located at resolution " + std::to_string(N));
  }
  if (distinct.size() > 1) {
    throw MultipleZeroError(std::to_string(distinct.size()) +
                            " distinct zeros located");
  }
  double t0 = distinct[0].t, w0 = distinct[0].omega;

  // Winding on a square contour, half side 0.05, 512 samples, with a
  // continuous-argument step guard.
  const int per_side = 128;
  const double r = 0.05;
  std::vector<cd> contour;
  contour.reserve(4 * per_side);
  for (int s = 0; s < 4; ++s) {
    for (int k = 0; k < per_side; ++k) {
      double u = -r + 2.0 * r * (double(k) / per_side);
      double dt, dw;
      switch (s) {
        case 0: dt = u;  dw = -r; break;
        case 1: dt = r;  dw = u;  break;
        case 2: dt = -u; dw = r;  break;
        default: dt = -r; dw = -u; break;
      }
      contour.push_back(zak_theta(lambda, gamma, t0 + dt, w0 + dw));
    }
  }
  double total = 0.0;
  for (size_t k = 0; k < contour.size(); ++k) {
    cd cur = contour[k];
    cd nxt = contour[(k + 1) % contour.size()];
    if (std::abs(cur) <= 1e-13 * zscale) {
      throw ContourError("|Z| vanishes on the winding contour");
    }
    double step = std::arg(nxt / cur);
    if (std::fabs(step) >= kPi / 2.0) {
      throw ContourError("argument step " + std::to_string(step) +
                         " rad on the contour (limit pi/2)");
    }
    total += step;
  }
  int winding = static_cast<int>(std::lround(total / (2.0 * kPi)));

  double simplicity = std::numeric_limits<double>::infinity();
  const int rings = 8, angles = 64;
  for (int ri = 0; ri < rings; ++ri) {
    double rad = 1e-3 * std::pow(5e-2 / 1e-3, double(ri) / (rings - 1));
    for (int ai = 0; ai < angles; ++ai) {
      double phi = 2.0 * kPi * ai / angles;
      double v = std::abs(zak_theta(lambda, gamma, t0 + rad * std::cos(phi),
                                    w0 + rad * std::sin(phi)));
      simplicity = std::min(simplicity, v / rad);
    }
  }
  return ZeroCertificate{t0, w0, winding, simplicity, N};
}

SymmetryReport symmetry_suite(const std::function<cd(double)>& window,
                              SymmetryKind kind, cd eigenvalue) {
  const int K = 30;
  auto Z = [&](double t, double w) { return zak_direct_fn(window, t, w, K); };
  double res = 0.0;
  switch (kind) {
    case SymmetryKind::Real: {
      for (int i = 1; i <= 5; ++i) {
        for (int j = 1; j <= 5; ++j) {
          double t = i / 6.0, w = j / 6.0;
          res = std::max(res, std::abs(std::conj(Z(t, w)) - Z(t, 1.0 - w)));
        }
      }
      break;
    }
    case SymmetryKind::Even:
      res = std::abs(Z(0.5, 0.5));
      break;
    case SymmetryKind::Odd:
      res = std::max({std::abs(Z(0.0, 0.0)), std::abs(Z(0.5, 0.0)),
                      std::abs(Z(0.0, 0.5))});
      break;
    case SymmetryKind::Eigenfunction: {
      for (int i = 1; i <= 5; ++i) {
        for (int j = 1; j <= 5; ++j) {
          double t = i / 6.0, w = j / 6.0;
          cd rot = eigenvalue * std::exp(cd(0.0, 2.0 * kPi * t * w)) *
                   Z(w, 1.0 - t);
          res = std::max(res, std::abs(Z(t, w) - rot));
        }
      }
      if (std::abs(eigenvalue - cd(0.0, -1.0)) > 1e-12) {
        res = std::max(res, std::abs(Z(0.5, 0.5)));
      }
      break;
    }
  }
  return SymmetryReport{kind, res, res <= 1e-10};
}

std::vector<double> zak_grid(double lambda, double gamma, int N) {
  if (!(gamma > 0.0)) throw DomainError("zak_grid requires gamma > 0");
  if (N < 2) throw DomainError("zak_grid requires N >= 2");
  std::vector<double> out(static_cast<size_t>(N) * N);
  parallel_for(N, [&](int j) {
    double omega = double(j) / N;
    for (int i = 0; i < N; ++i) {
      out[size_t(j) * N + i] =
          std::abs(zak_theta(lambda, gamma, double(i) / N, omega));
    }
  });
  return out;
}

}  // namespace cf

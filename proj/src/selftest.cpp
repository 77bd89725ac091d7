#include "selftest.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "atom.hpp"
#include "frame.hpp"
#include "frft.hpp"
#include "lattice.hpp"
#include "zak.hpp"

namespace cf {
namespace {

struct Battery {
  SelfTestResult res;

  explicit Battery(const char* name) { res.module = name; }

  void check(bool ok, const std::string& what) {
    if (ok) {
      ++res.passed;
    } else {
      ++res.failed;
      res.failures.push_back(what);
    }
  }

  void close(double err, double tol, const std::string& what) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), " (err=%.3g, tol=%.3g)", err, tol);
    check(err <= tol, what + buf);
  }
};

// Portable deterministic uniforms: raw mt19937_64 bits, not distributions.
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(uint64_t seed) : gen(seed) {}
  double uniform(double lo, double hi) {
    double u = (gen() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
};

Atom random_atom(Rng& rng) {
  return make_atom(cd(rng.uniform(-1, 1), rng.uniform(-1, 1)),
                   cd(rng.uniform(0.3, 3.0), rng.uniform(-2, 2)),
                   cd(rng.uniform(-2, 2), rng.uniform(-2, 2)));
}

double atom_distance(const Atom& f, const Atom& g) {
  double worst = 0.0;
  for (int i = -4; i <= 4; ++i) {
    double x = 0.7 * i;
    worst = std::max(worst, std::abs(evaluate(f, x) - evaluate(g, x)));
  }
  return worst;
}

}  // namespace

SelfTestResult selftest_atom() {
  Battery b("atom");
  Rng rng(12001);

  b.close(std::abs(evaluate(gaussian(1.0), 0.5) - std::exp(-kPi * 0.25)),
          1e-15, "gaussian pointwise value");

  Atom phi_hat = fourier(gaussian(1.0));
  b.close(std::abs(phi_hat.c - 1.0) + std::abs(phi_hat.w - 1.0) +
              std::abs(phi_hat.l),
          1e-15, "gaussian is its own Fourier transform");

  for (int i = 0; i < 5; ++i) {
    Atom g = random_atom(rng);
    b.close(atom_distance(fourier(fourier(g)), reflect(g)), 1e-12,
            "double Fourier equals reflection");
    b.close(std::fabs(l2_norm(fourier(g)) - l2_norm(g)),
            1e-12 * l2_norm(g), "Fourier preserves the L2 norm");
    double n2 = l2_norm(g) * l2_norm(g);
    b.close(std::abs(inner_product(g, g) - n2), 1e-12 * n2,
            "self inner product equals squared norm");
    Atom s = tf_shift(g, 0.8, -1.3);
    b.close(std::fabs(l2_norm(s) - l2_norm(g)), 1e-12 * l2_norm(g),
            "time-frequency shift preserves the L2 norm");
    double gam = 0.5 + i * 0.4;
    double d2 = l2_norm(dilate(g, gam));
    b.close(std::fabs(d2 * d2 - n2 / gam), 1e-12 * n2,
            "dilation scales the squared norm by 1/gamma");
    b.close(std::fabs(l2_norm(multiply_chirp(g, 1.7)) - l2_norm(g)),
            1e-12 * l2_norm(g), "chirp multiplication preserves the norm");
  }

  {
    double lam = 0.8, lamp = -2.3, gam = 1.4;
    ProductConvolution pc = product_convolution(lam, lamp, gam);
    double ip = 1.0 / lamp;
    double den = gam * gam * gam * gam + ip * ip;
    b.close(std::fabs(pc.u - gam * gam / den), 1e-14, "width parameter u");
    b.close(std::fabs(pc.v - ip / den), 1e-14, "chirp parameter v");
    b.close(std::fabs(pc.atom.w.real() - pc.u), 1e-14,
            "output atom has width u");
    b.close(std::fabs(pc.atom.w.imag() - (pc.v + lam)), 1e-14,
            "output atom has chirp v + lambda");
    cd s = chirp_fourier_scalar(lamp);
    b.close(std::fabs(std::abs(s) - 1.0 / std::sqrt(std::fabs(lamp))),
            1e-14, "convolution scalar magnitude");
    b.close(std::fabs(std::arg(s) - kPi / 4.0), 1e-14,
            "convolution scalar phase for negative chirp rate");
  }

  return b.res;
}

SelfTestResult selftest_lattice() {
  Battery b("lattice");
  Rng rng(12002);

  for (int i = 0; i < 10; ++i) {
    Mat2 Q{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2),
           rng.uniform(-2, 2)};
    if (Q.det() <= 0.05) {
      Q.a += 3.0;
      Q.d += 3.0;
    }
    QrFactors f = factor_qr(Q);
    Mat2 rec = rotation(f.theta) * shear_upper(f.lambda) *
               lattice_scale(f.alpha, f.beta);
    b.close(max_abs_diff(rec, Q), 1e-12, "QR-type factorization rebuilds Q");
    b.close(std::fabs(f.alpha * f.beta - Q.det()), 1e-12 * Q.det(),
            "alpha*beta equals det Q");
  }

  for (double lam : {0.4, -0.9, 2.5, -3.1}) {
    LuRotation f = factor_lu_rotation(lam);
    Mat2 lhs = shear_lower(f.lambda_prime) * shear_upper(lam);
    Mat2 rhs = Mat2{f.d1, 0, 0, f.d2} * rotation(f.theta);
    b.close(max_abs_diff(lhs, rhs), 1e-12,
            "shear pair equals diagonal times rotation");
    b.close(std::fabs(f.d1 * f.d2 - 1.0), 1e-12, "d1*d2 = 1");
  }

  {
    ChirpDesign d = chirp_design(1.0);
    double err = std::fabs(d.lambda_prime + 2.0) +
                 std::fabs(d.gamma_conv - std::sqrt(2.0)) +
                 std::fabs(d.u - 8.0 / 17.0) + std::fabs(d.v + 2.0 / 17.0) +
                 std::fabs(d.r - 15.0 / 17.0);
    b.close(err, 1e-12, "reference design at lambda = 1");
  }

  for (double rho : {0.5, -0.5, 3.0, -3.0}) {
    double lam = solve_lambda(rho);
    b.close(std::fabs(ratio_G(lam) - rho), 1e-10 * std::max(1.0, std::fabs(rho)),
            "chirp-to-width ratio round trip");
  }

  for (int i = 0; i < 5; ++i) {
    double u = rng.uniform(0.1, 3.0);
    double r = rng.uniform(-3.0, 3.0);
    if (std::fabs(r) < 0.01) r = 0.5;
    WindowDesign wd = window_design(u, r);
    double g2 = wd.gamma_dil * wd.gamma_dil;
    b.close(std::fabs(g2 * wd.design.u - u) + std::fabs(g2 * wd.design.r - r),
            1e-9, "window design reaches the target width and chirp");
  }

  return b.res;
}

SelfTestResult selftest_frft() {
  Battery b("frft");
  Rng rng(12003);

  b.close(atom_distance(frft_atom(gaussian(1.0), 0.7), gaussian(1.0)), 1e-12,
          "the Gaussian is invariant under every rotation angle");

  for (int i = 0; i < 4; ++i) {
    Atom g = random_atom(rng);
    double t1 = rng.uniform(0.2, 2.8), t2 = rng.uniform(0.2, 2.8);
    b.close(atom_distance(frft_atom(frft_atom(g, t1), t2),
                          frft_atom(g, t1 + t2)),
            1e-9, "rotation group law");
    b.close(atom_distance(frft_atom(g, kPi / 2.0), fourier(g)), 1e-12,
            "quarter turn equals the Fourier transform");
    b.close(atom_distance(frft_atom(g, kPi), reflect(g)), 1e-12,
            "half turn equals reflection");

    double a = rng.uniform(-1, 1), bb = rng.uniform(-1, 1);
    double th = rng.uniform(0.3, 1.2);
    Atom lhs = tf_shift(frft_atom(g, th), a, bb);
    double ar = a * std::cos(th) + bb * std::sin(th);
    double br = -a * std::sin(th) + bb * std::cos(th);
    Atom rhs = frft_atom(tf_shift(g, ar, br), th);
    rhs.c *= commutation_phase(a, bb, th);
    b.close(atom_distance(lhs, rhs), 1e-9,
            "shift commutation with rotated phase");
  }

  {
    int N = 2048;
    double L = 6.0, th = 0.7;
    Atom g = make_atom(1.0, cd(1.0, 0.4), cd(0.0, 1.1));
    SampledSignal in = sample_atom(g, -L, 2.0 * L / N, N);
    SampledSignal out = frft_numeric(in, th);
    Atom ref = frft_atom(g, th);
    double worst = 0.0;
    for (int i = 0; i < N; ++i) {
      worst = std::max(
          worst, std::abs(out.samples[i] - evaluate(ref, out.x0 + i * out.dx)));
    }
    b.close(worst, 1e-6, "quadrature transform matches the closed form");
    b.close(std::fabs(signal_l2(out) - signal_l2(in)), 1e-6,
            "quadrature transform preserves the discrete norm");
  }

  return b.res;
}

SelfTestResult selftest_zak() {
  Battery b("zak");
  Rng rng(12004);

  for (int i = 0; i < 5; ++i) {
    cd z = std::polar(rng.uniform(0.5, 2.0), rng.uniform(-3.0, 3.0));
    cd q = std::polar(rng.uniform(0.05, 0.7), rng.uniform(-3.0, 3.0));
    ThetaValue s = theta_eval(z, q, 8, ThetaMode::Series);
    ThetaValue p = theta_eval(z, q, 8, ThetaMode::Product);
    b.close(std::abs(s.value - p.value), 1e-12 * std::abs(s.value) + 1e-13,
            "theta sum equals theta product");
  }

  b.close(std::abs(theta_eval(cd(1.0, 0.0), cd(0.1, 0.0), 8,
                              ThetaMode::Series)
                       .value -
                   1.2002000020000002),
          1e-15, "theta reference value at z=1, q=0.1");

  for (int i = 0; i < 5; ++i) {
    double lam = rng.uniform(-2, 2), gam = rng.uniform(0.5, 2.0);
    double t = rng.uniform(-1, 1), w = rng.uniform(-1, 1);
    cd a = zak_theta(lam, gam, t, w);
    ZakValue d = zak_direct(chirped_gaussian(gam * gam, lam), t, w, 40);
    b.close(std::abs(a - d.value), 1e-10, "theta route matches direct sum");
    cd shift_t = zak_theta(lam, gam, t + 1.0, w);
    cd expect = std::exp(cd(0.0, 2.0 * kPi * w)) * a;
    b.close(std::abs(shift_t - expect), 1e-10 * (1.0 + std::abs(a)),
            "quasi-periodicity in time");
    cd shift_w = zak_theta(lam, gam, t, w + 1.0);
    b.close(std::abs(shift_w - a), 1e-10 * (1.0 + std::abs(a)),
            "periodicity in frequency");
  }

  {
    ZeroCertificate cert = find_zero(0.0, 1.0, 64);
    b.close(std::fabs(cert.t - 0.5) + std::fabs(cert.omega - 0.5), 1e-6,
            "unique zero sits at (1/2, 1/2)");
    b.check(cert.winding == 1, "zero has winding number one");
    b.check(cert.simplicity_constant > 0.0, "zero is simple");
  }

  {
    auto even_real = [](double x) { return cd(std::exp(-kPi * x * x), 0.0); };
    b.check(symmetry_suite(even_real, SymmetryKind::Real).pass,
            "real window symmetry");
    b.check(symmetry_suite(even_real, SymmetryKind::Even).pass,
            "even window zero at (1/2, 1/2)");
    auto odd = [](double x) { return cd(x * std::exp(-kPi * x * x), 0.0); };
    b.check(symmetry_suite(odd, SymmetryKind::Odd).pass,
            "odd window zeros at half-integer corners");
    b.check(symmetry_suite(even_real, SymmetryKind::Eigenfunction, cd(1.0, 0.0))
                .pass,
            "Fourier eigenfunction relation");
  }

  return b.res;
}

SelfTestResult selftest_frame() {
  Battery b("frame");
  Rng rng(12005);

  for (int i = 0; i < 5; ++i) {
    Mat2 Q{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5),
           rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)};
    if (std::fabs(Q.det()) < 0.05) Q.a += 2.0;
    CanonicalForm cform = canonicalize(rng.uniform(0.5, 2.0), Q);
    b.close(std::fabs(cform.alpha * cform.beta - std::fabs(Q.det())),
            1e-12 * std::fabs(Q.det()),
            "canonical alpha*beta equals |det Q|");
    b.check(cform.alpha > 0.0 && cform.beta > 0.0,
            "canonical steps are positive");
  }

  {
    JanssenCertificate c = janssen_certify(gaussian(1.0), 0.5, 0.5, 16);
    b.check(c.certified && c.A_lower > 0.0, "quarter-density system certified");
    b.check(c.B_upper > c.A_lower, "certificate is ordered");
    JanssenCertificate crit = janssen_certify(gaussian(1.0), 1.0, 1.0, 16);
    b.check(!crit.certified, "critical-density system not certified");
  }

  {
    LatticeSystem sys{gaussian(1.0), lattice_scale(0.5, 0.5)};
    EstimatePair est = estimate_bounds(sys, 4.0, 128, 6);
    b.check(est.coarse.A_est > 0.5 && est.coarse.B_est < 5.0 &&
                est.coarse.A_est <= est.coarse.B_est,
            "finite-section estimate lands in the expected window");
    b.check(est.fine.A_est > 0.5 && est.fine.B_est < 5.0,
            "refined estimate lands in the expected window");
  }

  {
    Mat2 Q{0.7, 0.2, -0.1, 0.8};
    EquivalenceReport rep = equivalence_check(1.0, Q, 6.0, 256, 8);
    b.check(rep.ratio_direct > 0.0 && rep.ratio_canonical > 0.0,
            "equivalence ratios are positive");
    b.close(rep.drift, 0.5, "equivalence smoke drift (loose bound)");
  }

  return b.res;
}

std::vector<SelfTestResult> selftest_all() {
  return {selftest_atom(), selftest_lattice(), selftest_frft(),
          selftest_zak(), selftest_frame()};
}

}  // namespace cf

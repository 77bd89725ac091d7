#include "frft.hpp"

#include <cmath>

#include "parallel.hpp"

namespace cf {

namespace {

double reduce_2pi(double theta) {
  double t = std::fmod(theta, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;
  return t;
}

}  // namespace

Atom frft_atom(const Atom& g, double theta) {
  double t = reduce_2pi(theta);
  double s = std::sin(t);
  if (std::fabs(s) < 1e-3) {
    long k = std::lround(t / kPi);
    return (k % 2 == 0) ? g : reflect(g);
  }
  if (std::fabs(t - kPi / 2.0) <= 1e-12) return fourier(g);
  if (std::fabs(t - 3.0 * kPi / 2.0) <= 1e-12) return inverse_fourier(g);

  double cot = std::cos(t) / s;
  double csc = 1.0 / s;
  Atom a = multiply_chirp(g, -cot);
  a = fourier(a);
  a = dilate(a, std::fabs(csc));
  if (csc < 0.0) a = reflect(a);
  a = multiply_chirp(a, -cot);
  a.c *= std::sqrt(cd(1.0, -cot));
  return a;
}

cd commutation_phase(double a, double b, double theta) {
  double s2 = std::sin(2.0 * theta);
  double st = std::sin(theta);
  double arg = (b * b - a * a) * s2 / 4.0 - a * b * st * st;
  return std::exp(cd(0.0, -2.0 * kPi * arg));
}

double signal_l2(const SampledSignal& f) {
  double acc = 0.0;
  for (const cd& v : f.samples) acc += std::norm(v);
  return std::sqrt(acc * f.dx);
}

SampledSignal sample_atom(const Atom& g, double x0, double dx, int n) {
  if (n < 2 || !(dx > 0.0)) throw DomainError("sample grid needs n >= 2, dx > 0");
  SampledSignal out;
  out.x0 = x0;
  out.dx = dx;
  out.samples.resize(n);
  for (int k = 0; k < n; ++k) out.samples[k] = evaluate(g, x0 + k * dx);
  return out;
}

SampledSignal frft_numeric(const SampledSignal& f, double theta) {
  const int n = static_cast<int>(f.samples.size());
  if (n < 2) throw DomainError("frft_numeric needs at least 2 samples");
  double t = reduce_2pi(theta);
  double s = std::sin(t);
  SampledSignal out;
  out.x0 = f.x0;
  out.dx = f.dx;
  out.samples.assign(n, cd(0.0));

  if (std::fabs(s) < 1e-3) {
    long k = std::lround(t / kPi);
    if (k % 2 == 0) {
      out.samples = f.samples;
      return out;
    }
    double right = f.x0 + (n - 1) * f.dx;
    if (std::fabs(f.x0 + right) > 1e-9 * std::max(1.0, std::fabs(right))) {
      throw GridError("reflection needs a symmetric grid");
    }
    for (int i = 0; i < n; ++i) out.samples[i] = f.samples[n - 1 - i];
    return out;
  }

  double cot = std::cos(t) / s;
  double csc = 1.0 / s;
  bool plain_fourier = std::fabs(t - kPi / 2.0) <= 1e-12;
  bool plain_inverse = std::fabs(t - 3.0 * kPi / 2.0) <= 1e-12;
  if (plain_fourier || plain_inverse) {
    cot = 0.0;
    csc = plain_fourier ? 1.0 : -1.0;
  }

  double edge = std::max(std::fabs(f.x0), std::fabs(f.x0 + (n - 1) * f.dx));
  double step_phase =
      2.0 * kPi * edge * (std::fabs(cot) + std::fabs(csc)) * f.dx;
  if (step_phase >= kPi / 2.0) {
    throw GridError("kernel phase advances " + std::to_string(step_phase) +
                    " rad per step at the grid edge (limit pi/2)");
  }

  cd scale = std::sqrt(cd(1.0, -cot));
  parallel_for(n, [&](int j) {
    double xi = f.x0 + j * f.dx;
    cd acc = 0.0;
    for (int k = 0; k < n; ++k) {
      double x = f.x0 + k * f.dx;
      double w = (k == 0 || k == n - 1) ? 0.5 : 1.0;
      double phase = kPi * (xi * xi + x * x) * cot - 2.0 * kPi * xi * x * csc;
      acc += w * f.samples[k] * std::exp(cd(0.0, phase));
    }
    out.samples[j] = scale * acc * f.dx;
  });
  return out;
}

}  // namespace cf

// Command-line front end; talks to the library through the C interface only.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chirpframe.h"

namespace {

struct ApiFailure {
  int status;
};

struct UsageFailure {
  std::string msg;
};

void require(int status) {
  if (status != CF_OK) throw ApiFailure{status};
}

std::string fmt(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char b[40];
  std::snprintf(b, sizeof(b), "%.17g", v);
  return b;
}

// Flat JSON object writer with insertion-ordered keys and %.17g reals.
class Json {
 public:
  void num(const char* k, double v) { raw(k, fmt(v)); }
  void integer(const char* k, long v) { raw(k, std::to_string(v)); }
  void boolean(const char* k, bool v) { raw(k, v ? "true" : "false"); }
  void text(const char* k, const std::string& v) { raw(k, "\"" + v + "\""); }
  void pair(const char* k, double re, double im) {
    raw(k, "[" + fmt(re) + "," + fmt(im) + "]");
  }
  void raw(const char* k, const std::string& v) {
    if (!first_) body_ += ",";
    first_ = false;
    body_ += "\"";
    body_ += k;
    body_ += "\":";
    body_ += v;
  }
  std::string str() const { return "{" + body_ + "}\n"; }

 private:
  std::string body_;
  bool first_ = true;
};

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::fputs(text.c_str(), stdout);
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageFailure{"cannot open output file: " + out_path};
  f << text;
}

void warn_gamma(double gamma) {
  if (gamma > 0.0 && gamma < 0.1) {
    std::fprintf(stderr,
                 "warning: gamma = %g is very small; series truncations grow "
                 "like 1/gamma^2\n",
                 gamma);
  }
}

double need(double v, const char* flag) {
  if (std::isnan(v)) throw UsageFailure{std::string(flag) + " is required"};
  return v;
}

cf_mat2 need_mat(const std::vector<double>& m, const char* flag) {
  if (m.size() != 4) {
    throw UsageFailure{std::string(flag) +
                       " is required (four reals, row-major)"};
  }
  return cf_mat2{m[0], m[1], m[2], m[3]};
}

// Shared state filled by CLI11 callbacks.
int g_exit = 0;
std::string g_out;

void run_selftest(const char* module) {
  char buf[16384];
  int passed = 0, failed = 0;
  require(cf_selftest(module, buf, sizeof(buf), &passed, &failed));
  std::string report(buf);
  report += "total: " + std::to_string(passed) + " passed, " +
            std::to_string(failed) + " failed\n";
  emit(g_out, report);
  if (failed > 0) g_exit = 3;
}

// Returns true when the subcommand should run its battery instead of the
// command body.
bool battery(bool flag, const char* module) {
  if (flag) run_selftest(module);
  return flag;
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string svg_heatmap(int N, const std::vector<double>& values,
                        bool have_zero, double zt, double zw) {
  std::string s;
  s.reserve(values.size() * 60 + 512);
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"512\" "
       "height=\"512\" viewBox=\"0 0 512 512\">\n";
  double cell = 512.0 / N;
  char buf[160];
  for (int j = 0; j < N; ++j) {
    for (int i = 0; i < N; ++i) {
      double v = -std::log10(values[j * N + i] + 1e-16);
      v = std::min(std::max(v, 0.0), 12.0);
      int gray = 255 - static_cast<int>(std::lround(255.0 * v / 12.0));
      // omega increases upward; SVG y increases downward.
      std::snprintf(buf, sizeof(buf),
                    "<rect x=\"%g\" y=\"%g\" width=\"%g\" height=\"%g\" "
                    "fill=\"#%02x%02x%02x\"/>\n",
                    i * cell, (N - 1 - j) * cell, cell, cell, gray, gray,
                    gray);
      s += buf;
    }
  }
  if (have_zero) {
    std::snprintf(buf, sizeof(buf),
                  "<circle cx=\"%g\" cy=\"%g\" r=\"6\" fill=\"none\" "
                  "stroke=\"#d62728\" stroke-width=\"2\"/>\n",
                  zt * 512.0, (1.0 - zw) * 512.0);
    s += buf;
  }
  s += "</svg>\n";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chirped-Gaussian Gabor system toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a key=value config file");
  app.add_option("--output", g_out, "Write output to this file, not stdout");

  auto make_sub = [&](const char* name, const char* desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
  };

  // factor
  {
    auto* sub = make_sub("factor", "Factor Q = R_theta U_lambda diag(beta, alpha)");
    auto m = std::make_shared<std::vector<double>>();
    auto st = std::make_shared<bool>(false);
    sub->add_option("--matrix", *m, "Lattice matrix a,b,c,d (row-major)")
        ->delimiter(',')
        ->expected(4);
    sub->add_flag("--selftest", *st, "Run the lattice invariant battery");
    sub->callback([m, st] {
      if (battery(*st, "lattice")) return;
      cf_qr_factors f;
      require(cf_factor_qr(need_mat(*m, "--matrix"), &f));
      Json j;
      j.num("theta", f.theta);
      j.num("lambda", f.lambda);
      j.num("alpha", f.alpha);
      j.num("beta", f.beta);
      emit(g_out, j.str());
    });
  }

  // lu-rotation
  {
    auto* sub = make_sub("lu-rotation",
                         "Factor L_lambda' U_lambda = diag(d1,d2) R_theta");
    auto lambda = std::make_shared<double>(kNaN);
    auto st = std::make_shared<bool>(false);
    sub->add_option("--lambda", *lambda, "Shear parameter, nonzero");
    sub->add_flag("--selftest", *st, "Run the lattice invariant battery");
    sub->callback([lambda, st] {
      if (battery(*st, "lattice")) return;
      cf_lu_rotation f;
      require(cf_factor_lu_rotation(need(*lambda, "--lambda"), &f));
      Json j;
      j.num("lambda_prime", f.lambda_prime);
      j.num("d1", f.d1);
      j.num("d2", f.d2);
      j.num("theta", f.theta);
      emit(g_out, j.str());
    });
  }

  // chirp-design
  {
    auto* sub = make_sub("chirp-design",
                         "Closed-form window parameters for a shear lambda");
    auto lambda = std::make_shared<double>(kNaN);
    auto st = std::make_shared<bool>(false);
    sub->add_option("--lambda", *lambda, "Shear parameter, nonzero");
    sub->add_flag("--selftest", *st, "Run the lattice invariant battery");
    sub->callback([lambda, st] {
      if (battery(*st, "lattice")) return;
      cf_chirp_design d;
      require(cf_design_chirp(need(*lambda, "--lambda"), &d));
      double G;
      require(cf_ratio_G(d.lambda, &G));
      Json j;
      j.num("lambda", d.lambda);
      j.num("lambda_prime", d.lambda_prime);
      j.num("gamma_conv", d.gamma_conv);
      j.num("u", d.u);
      j.num("v", d.v);
      j.num("r", d.r);
      j.pair("s", d.s.re, d.s.im);
      j.num("ratio_G", G);
      emit(g_out, j.str());
    });
  }

  // window-design
  {
    auto* sub = make_sub("window-design",
                         "Shear and dilation reaching the window w = u + r*i");
    auto u = std::make_shared<double>(kNaN);
    auto r = std::make_shared<double>(kNaN);
    auto st = std::make_shared<bool>(false);
    sub->add_option("--u", *u, "Target width, positive");
    sub->add_option("--r", *r, "Target chirp, nonzero");
    sub->add_flag("--selftest", *st, "Run the lattice invariant battery");
    sub->callback([u, r, st] {
      if (battery(*st, "lattice")) return;
      cf_chirp_design d;
      double gamma_dil;
      require(cf_window_design(need(*u, "--u"), need(*r, "--r"), &d,
                               &gamma_dil));
      Json j;
      j.num("u", *u);
      j.num("r", *r);
      j.num("lambda", d.lambda);
      j.num("gamma_dil", gamma_dil);
      j.num("design_u", d.u);
      j.num("design_v", d.v);
      j.num("design_r", d.r);
      emit(g_out, j.str());
    });
  }

  // frft-check
  {
    auto* sub = make_sub("frft-check",
                         "Quadrature transform vs the closed form on a grid");
    auto theta = std::make_shared<double>(kNaN);
    auto u = std::make_shared<double>(1.0);
    auto r = std::make_shared<double>(0.0);
    auto mod = std::make_shared<double>(0.0);
    auto shift = std::make_shared<double>(0.0);
    auto n = std::make_shared<int>(2048);
    auto len = std::make_shared<double>(6.0);
    auto st = std::make_shared<bool>(false);
    sub->add_option("--theta", *theta, "Rotation angle");
    sub->add_option("--u", *u, "Window width");
    sub->add_option("--r", *r, "Window chirp");
    sub->add_option("--mod", *mod, "Modulation applied to the window");
    sub->add_option("--shift", *shift, "Translation applied to the window");
    sub->add_option("--resolution", *n, "Grid points");
    sub->add_option("--length", *len, "Grid half-width");
    sub->add_flag("--selftest", *st, "Run the transform invariant battery");
    sub->callback([theta, u, r, mod, shift, n, len, st] {
      if (battery(*st, "frft")) return;
      double th = need(*theta, "--theta");
      cf_atom g;
      require(cf_chirped_gaussian(*u, *r, &g));
      if (*mod != 0.0 || *shift != 0.0) {
        require(cf_tf_shift(&g, *mod, *shift, &g));
      }
      double dx = 2.0 * *len / *n;
      cf_signal* in = nullptr;
      require(cf_signal_from_atom(&g, -*len, dx, *n, &in));
      cf_signal* out = nullptr;
      int status = cf_signal_frft(in, th, &out);
      if (status != CF_OK) {
        cf_signal_destroy(in);
        throw ApiFailure{status};
      }
      cf_atom ref;
      require(cf_frft_atom(&g, th, &ref));
      int nn;
      double x0, dd;
      require(cf_signal_info(out, &nn, &x0, &dd));
      std::vector<cf_complex> buf(nn);
      require(cf_signal_samples(out, buf.data()));
      double worst = 0.0;
      for (int i = 0; i < nn; ++i) {
        cf_complex v;
        require(cf_evaluate(&ref, x0 + i * dd, &v));
        double er = buf[i].re - v.re, ei = buf[i].im - v.im;
        worst = std::max(worst, std::hypot(er, ei));
      }
      double l2_in, l2_out;
      require(cf_signal_l2(in, &l2_in));
      require(cf_signal_l2(out, &l2_out));
      cf_signal_destroy(in);
      cf_signal_destroy(out);
      Json j;
      j.num("theta", th);
      j.integer("resolution", *n);
      j.num("length", *len);
      j.num("max_abs_error", worst);
      j.num("unitarity_defect", std::fabs(l2_out - l2_in));
      emit(g_out, j.str());
    });
  }

  // zak-eval
  {
    auto* sub = make_sub("zak-eval",
                         "Zak transform of the chirped Gaussian at one point");
    auto lambda = std::make_shared<double>(0.0);
    auto gamma = std::make_shared<double>(1.0);
    auto t = std::make_shared<double>(kNaN);
    auto omega = std::make_shared<double>(kNaN);
    auto terms = std::make_shared<int>(40);
    auto st = std::make_shared<bool>(false);
    sub->add_option("--lambda", *lambda, "Window chirp");
    sub->add_option("--gamma", *gamma, "Window width");
    sub->add_option("--t", *t, "Time coordinate");
    sub->add_option("--omega", *omega, "Frequency coordinate");
    sub->add_option("--terms", *terms, "Direct-series truncation");
    sub->add_flag("--selftest", *st, "Run the Zak invariant battery");
    sub->callback([lambda, gamma, t, omega, terms, st] {
      if (battery(*st, "zak")) return;
      warn_gamma(*gamma);
      double tt = need(*t, "--t"), ww = need(*omega, "--omega");
      cf_complex z;
      require(cf_zak_theta(*lambda, *gamma, tt, ww, &z));
      cf_atom g;
      require(cf_chirped_gaussian(*gamma * *gamma, *lambda, &g));
      cf_complex dz;
      double tail;
      require(cf_zak_direct(&g, tt, ww, *terms, &dz, &tail));
      Json j;
      j.num("re", z.re);
      j.num("im", z.im);
      j.num("abs", std::hypot(z.re, z.im));
      j.num("direct_re", dz.re);
      j.num("direct_im", dz.im);
      j.num("difference", std::hypot(z.re - dz.re, z.im - dz.im));
      j.num("direct_tail", tail);
      emit(g_out, j.str());
    });
  }

  // zak-zeros
  {
    auto* sub = make_sub("zak-zeros",
                         "Locate and certify the Zak zero on the unit square");
    auto lambda = std::make_shared<double>(0.0);
    auto gamma = std::make_shared<double>(1.0);
    auto res = std::make_shared<int>(256);
    auto st = std::make_shared<bool>(false);
    sub->add_option("--lambda", *lambda, "Window chirp");
    sub->add_option("--gamma", *gamma, "Window width");
    sub->add_option("--resolution", *res, "Search grid size");
    sub->add_flag("--selftest", *st, "Run the Zak invariant battery");
    sub->callback([lambda, gamma, res, st] {
      if (battery(*st, "zak")) return;
      warn_gamma(*gamma);
      cf_zero_certificate c;
      require(cf_find_zero(*lambda, *gamma, *res, &c));
      Json j;
      j.num("t", c.t);
      j.num("omega", c.omega);
      j.integer("winding", c.winding);
      j.num("simplicity_constant", c.simplicity_constant);
      j.integer("search_resolution", c.search_resolution);
      emit(g_out, j.str());
    });
  }

  // zak-heatmap
  {
    auto* sub = make_sub("zak-heatmap",
                         "SVG heatmap of |Z| with the located zero marked");
    auto lambda = std::make_shared<double>(0.0);
    auto gamma = std::make_shared<double>(1.0);
    auto res = std::make_shared<int>(64);
    auto st = std::make_shared<bool>(false);
    sub->add_option("--lambda", *lambda, "Window chirp");
    sub->add_option("--gamma", *gamma, "Window width");
    sub->add_option("--resolution", *res, "Heatmap grid size");
    sub->add_flag("--selftest", *st, "Run the Zak invariant battery");
    sub->callback([lambda, gamma, res, st] {
      if (battery(*st, "zak")) return;
      warn_gamma(*gamma);
      cf_grid* grid = nullptr;
      require(cf_zak_grid(*lambda, *gamma, *res, &grid));
      int N;
      require(cf_grid_size(grid, &N));
      std::vector<double> v(static_cast<size_t>(N) * N);
      require(cf_grid_values(grid, v.data()));
      cf_grid_destroy(grid);
      cf_zero_certificate c;
      int zst = cf_find_zero(*lambda, *gamma, std::max(N, 64), &c);
      emit(g_out, svg_heatmap(N, v, zst == CF_OK, c.t, c.omega));
    });
  }

  // theta
  {
    auto* sub = make_sub("theta", "Evaluate Theta(z, q) with a tail bound");
    auto zre = std::make_shared<double>(kNaN);
    auto zim = std::make_shared<double>(0.0);
    auto qre = std::make_shared<double>(kNaN);
    auto qim = std::make_shared<double>(0.0);
    auto terms = std::make_shared<int>(16);
    auto mode = std::make_shared<std::string>("series");
    auto st = std::make_shared<bool>(false);
    sub->add_option("--z-re", *zre, "Re z");
    sub->add_option("--z-im", *zim, "Im z");
    sub->add_option("--q-re", *qre, "Re q");
    sub->add_option("--q-im", *qim, "Im q");
    sub->add_option("--terms", *terms, "Starting truncation");
    sub->add_option("--mode", *mode, "series or product")
        ->check(CLI::IsMember({"series", "product"}));
    sub->add_flag("--selftest", *st, "Run the Zak invariant battery");
    sub->callback([zre, zim, qre, qim, terms, mode, st] {
      if (battery(*st, "zak")) return;
      cf_complex z{need(*zre, "--z-re"), *zim};
      cf_complex q{need(*qre, "--q-re"), *qim};
      cf_complex val;
      double tail;
      int k_used;
      int m = (*mode == "series") ? CF_THETA_SERIES : CF_THETA_PRODUCT;
      require(cf_theta_eval(z, q, *terms, m, &val, &tail, &k_used));
      Json j;
      j.num("re", val.re);
      j.num("im", val.im);
      j.num("abs", std::hypot(val.re, val.im));
      j.num("tail", tail);
      j.integer("k_used", k_used);
      j.text("mode", *mode);
      emit(g_out, j.str());
    });
  }

  // frame-estimate
  {
    auto* sub = make_sub("frame-estimate",
                         "Finite-section frame-bound estimate for G(window, Q)");
    auto gamma = std::make_shared<double>(1.0);
    auto lambda = std::make_shared<double>(0.0);
    auto m = std::make_shared<std::vector<double>>();
    auto len = std::make_shared<double>(6.0);
    auto res = std::make_shared<int>(512);
    auto range = std::make_shared<int>(12);
    auto st = std::make_shared<bool>(false);
    sub->add_option("--gamma", *gamma, "Window width");
    sub->add_option("--lambda", *lambda, "Window chirp");
    sub->add_option("--matrix", *m, "Lattice matrix a,b,c,d")
        ->delimiter(',')
        ->expected(4);
    sub->add_option("--length", *len, "Grid half-width L");
    sub->add_option("--resolution", *res, "Grid points N");
    sub->add_option("--range", *range, "Lattice truncation M");
    sub->add_flag("--selftest", *st, "Run the frame invariant battery");
    sub->callback([gamma, lambda, m, len, res, range, st] {
      if (battery(*st, "frame")) return;
      warn_gamma(*gamma);
      cf_atom window;
      require(cf_chirped_gaussian(*gamma * *gamma, *lambda, &window));
      cf_bound_estimate coarse, fine;
      require(cf_estimate_bounds(&window, need_mat(*m, "--matrix"), *len,
                                 *res, *range, &coarse, &fine));
      Json j;
      j.num("A_est", coarse.A_est);
      j.num("B_est", coarse.B_est);
      j.num("ratio", coarse.A_est / coarse.B_est);
      j.num("A_fine", fine.A_est);
      j.num("B_fine", fine.B_est);
      j.num("ratio_fine", fine.A_est / fine.B_est);
      j.num("length", coarse.L);
      j.integer("resolution", coarse.N);
      j.integer("range", coarse.M);
      j.text("note",
             "finite-section estimate of the discretized truncated system, "
             "not the true frame bounds");
      emit(g_out, j.str());
    });
  }

  // frame-certify
  {
    auto* sub = make_sub(
        "frame-certify",
        "Dual-lattice dominance certificate; --matrix certifies the "
        "canonicalized system");
    auto gamma = std::make_shared<double>(1.0);
    auto lambda = std::make_shared<double>(0.0);
    auto alpha = std::make_shared<double>(kNaN);
    auto beta = std::make_shared<double>(kNaN);
    auto m = std::make_shared<std::vector<double>>();
    auto terms = std::make_shared<int>(24);
    auto st = std::make_shared<bool>(false);
    sub->add_option("--gamma", *gamma, "Window width");
    sub->add_option("--lambda", *lambda, "Window chirp");
    sub->add_option("--alpha", *alpha, "Translation step");
    sub->add_option("--beta", *beta, "Modulation step");
    sub->add_option("--matrix", *m, "Lattice matrix a,b,c,d")
        ->delimiter(',')
        ->expected(4);
    sub->add_option("--terms", *terms, "Correlation truncation K");
    sub->add_flag("--selftest", *st, "Run the frame invariant battery");
    sub->callback([gamma, lambda, alpha, beta, m, terms, st] {
      if (battery(*st, "frame")) return;
      warn_gamma(*gamma);
      cf_atom window;
      double a, b;
      if (!m->empty()) {
        cf_canonical_form canon;
        require(cf_canonicalize(*gamma, need_mat(*m, "--matrix"), &canon));
        window = canon.window;
        a = canon.alpha;
        b = canon.beta;
      } else {
        require(cf_chirped_gaussian(*gamma * *gamma, *lambda, &window));
        a = need(*alpha, "--alpha");
        b = need(*beta, "--beta");
      }
      cf_janssen cert;
      require(cf_janssen_certify(&window, a, b, *terms, &cert));
      Json j;
      j.boolean("certified", cert.certified != 0);
      j.num("A_lower", cert.A_lower);
      j.num("B_upper", cert.B_upper);
      j.num("c00", cert.c00);
      j.num("off_sum", cert.off_sum);
      j.num("tail", cert.tail);
      j.num("alpha", a);
      j.num("beta", b);
      emit(g_out, j.str());
    });
  }

  // canonicalize
  {
    auto* sub = make_sub("canonicalize",
                         "Separable chirped-Gaussian reduction of G(phi_gamma, Q)");
    auto gamma = std::make_shared<double>(1.0);
    auto m = std::make_shared<std::vector<double>>();
    auto st = std::make_shared<bool>(false);
    sub->add_option("--gamma", *gamma, "Window width");
    sub->add_option("--matrix", *m, "Lattice matrix a,b,c,d")
        ->delimiter(',')
        ->expected(4);
    sub->add_flag("--selftest", *st, "Run the frame invariant battery");
    sub->callback([gamma, m, st] {
      if (battery(*st, "frame")) return;
      warn_gamma(*gamma);
      cf_canonical_form c;
      require(cf_canonicalize(*gamma, need_mat(*m, "--matrix"), &c));
      Json j;
      j.num("lambda", c.lambda);
      j.num("alpha", c.alpha);
      j.num("beta", c.beta);
      j.num("scale", c.scale);
      j.num("theta", c.theta);
      j.pair("window_w", c.window.w.re, c.window.w.im);
      emit(g_out, j.str());
    });
  }

  // sweep-det
  {
    auto* sub = make_sub("sweep-det",
                         "Bound estimates along a determinant sweep");
    auto gamma = std::make_shared<double>(1.0);
    auto shape =
        std::make_shared<std::vector<double>>(std::vector<double>{1, 0, 0, 1});
    auto dets = std::make_shared<std::vector<double>>(
        std::vector<double>{0.5, 0.8, 0.95, 1.0});
    auto len = std::make_shared<double>(6.0);
    auto res = std::make_shared<int>(512);
    auto range = std::make_shared<int>(12);
    auto format = std::make_shared<std::string>("csv");
    auto st = std::make_shared<bool>(false);
    sub->add_option("--gamma", *gamma, "Window width");
    sub->add_option("--shape", *shape, "Unit-determinant shape a,b,c,d")
        ->delimiter(',')
        ->expected(4);
    sub->add_option("--dets", *dets, "Determinants to sweep")
        ->delimiter(',');
    sub->add_option("--length", *len, "Grid half-width L");
    sub->add_option("--resolution", *res, "Grid points N");
    sub->add_option("--range", *range, "Lattice truncation M");
    sub->add_option("--format", *format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--selftest", *st, "Run the frame invariant battery");
    sub->callback([gamma, shape, dets, len, res, range, format, st] {
      if (battery(*st, "frame")) return;
      warn_gamma(*gamma);
      if (dets->empty()) throw UsageFailure{"--dets must be nonempty"};
      std::vector<cf_sweep_row> rows(dets->size());
      require(cf_sweep_det(*gamma, need_mat(*shape, "--shape"), dets->data(),
                           static_cast<int>(dets->size()), *len, *res,
                           *range, rows.data()));
      std::string out;
      if (*format == "csv") {
        out = "det,A_est,B_est,ratio,certified\n";
        for (const auto& r : rows) {
          const char* cert = r.density_violating
                                 ? "density-violating"
                                 : (r.certified ? "true" : "false");
          out += fmt(r.det) + "," + fmt(r.A_est) + "," + fmt(r.B_est) + "," +
                 fmt(r.ratio) + "," + cert + "\n";
        }
      } else {
        out = "[";
        for (size_t i = 0; i < rows.size(); ++i) {
          const auto& r = rows[i];
          Json j;
          j.num("det", r.det);
          if (r.density_violating) {
            j.raw("A_est", "null");
            j.raw("B_est", "null");
            j.raw("ratio", "null");
          } else {
            j.num("A_est", r.A_est);
            j.num("B_est", r.B_est);
            j.num("ratio", r.ratio);
          }
          j.boolean("certified", r.certified != 0);
          j.boolean("density_violating", r.density_violating != 0);
          std::string obj = j.str();
          obj.pop_back();  // trailing newline
          out += (i ? "," : "") + obj;
        }
        out += "]\n";
      }
      emit(g_out, out);
    });
  }

  // selftest
  {
    auto* sub = make_sub("selftest", "Run the built-in invariant batteries");
    auto module = std::make_shared<std::string>("all");
    sub->add_option("--module", *module,
                    "atom, lattice, frft, zak, frame, or all")
        ->check(CLI::IsMember({"atom", "lattice", "frft", "zak", "frame",
                               "all"}));
    sub->callback([module] { run_selftest(module->c_str()); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const ApiFailure& f) {
    std::fprintf(stderr, "error: %s\n", cf_last_error());
    return f.status == CF_ERR_DOMAIN ? 2 : 3;
  } catch (const UsageFailure& u) {
    std::fprintf(stderr, "error: %s\n", u.msg.c_str());
    return 2;
  }
  return g_exit;
}

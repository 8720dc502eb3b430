#include "cylgabor/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "cylgabor/fock.hpp"
#include "cylgabor/frames.hpp"
#include "cylgabor/quadrature.hpp"
#include "cylgabor/sampling.hpp"
#include "cylgabor/special_fn.hpp"
#include "cylgabor/stft.hpp"
#include "cylgabor/superframes.hpp"

namespace cylgabor::verify {

namespace {

using Clock = std::chrono::steady_clock;
using Rng = std::mt19937_64;

class Suite {
 public:
  explicit Suite(std::string name) { report_.suite = std::move(name); }

  // measured <= tol
  void at_most(const std::string& name, const std::string& claim, double tol, const std::function<double()>& body) {
    add(name, claim, "<=", tol, body);
  }
  // measured >= tol
  void at_least(const std::string& name, const std::string& claim, double tol, const std::function<double()>& body) {
    add(name, claim, ">=", tol, body);
  }

  SuiteReport finish() { return std::move(report_); }

 private:
  void add(const std::string& name, const std::string& claim, const char* rel, double tol,
           const std::function<double()>& body) {
    Check c{name, claim, rel, tol, 0.0, false, 0.0};
    const auto t0 = Clock::now();
    try {
      c.measured = body();
      c.passed = (c.relation == "<=") ? c.measured <= tol : c.measured >= tol;
    } catch (const std::exception& e) {
      c.claim += " [error: " + std::string(e.what()) + "]";
      c.measured = std::numeric_limits<double>::quiet_NaN();
    }
    c.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    report_.seconds += c.seconds;
    report_.checks.push_back(std::move(c));
  }

  SuiteReport report_;
};

QPSignal random_signal(Rng& rng, double nu, int K) {
  std::normal_distribution<double> n;
  std::vector<std::pair<int, cplx>> e;
  for (int k = -K; k <= K; ++k) e.emplace_back(k, cplx(n(rng), n(rng)));
  return make_signal(nu, e);
}

CylinderPoint random_point(Rng& rng, double xi_max) {
  std::uniform_real_distribution<double> ux(0.0, 1.0), uxi(-xi_max, xi_max);
  return {ux(rng), uxi(rng)};
}

std::vector<Window> test_windows() { return {Window::gaussian(), Window::hermite(1), Window::hermite(2)}; }

// int_0^1 int_{xi0}^{xi1} F(x, xi) dxi dx, trapezoid in x, Gauss panels in xi.
cplx strip_quadrature(const std::function<cplx(double, double)>& F, double xi0, double xi1, int nx) {
  const auto rule = panel_rule(xi0, xi1, 1.0);
  cplx acc = 0.0;
  for (int i = 0; i < nx; ++i) {
    const double x = double(i) / nx;
    for (const auto& [xi, w] : rule) acc += w * F(x, xi);
  }
  return acc / double(nx);
}

// ------------------------------------------------------------------ moyal

SuiteReport moyal_suite() {
  Suite s("moyal");
  const auto W = test_windows();

  s.at_most("moyal_coefficient", "<V_g1 f1, V_g2 f2> = <f1,f2> conj<g1,g2> on 100 random pairs", 1e-12, [&] {
    Rng rng(11);
    std::uniform_real_distribution<double> unu(0.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Window& g1 = W[i % 3];
      const Window& g2 = W[(i / 3) % 3];
      const double nu = unu(rng);
      const QPSignal f1 = random_signal(rng, nu, 4), f2 = random_signal(rng, nu, 4);
      const cplx lhs = stft_inner_product(f1, g1, f2, g2);
      const cplx rhs = inner_product(f1, f2) * std::conj(window_inner(g1, g2));
      worst = std::max(worst, std::abs(lhs - rhs) / std::sqrt(f1.norm_squared() * f2.norm_squared()));
    }
    return worst;
  });

  s.at_most("moyal_quadrature", "strip quadrature of V_g1 f1 conj(V_g2 f2) matches the coefficient form, 10 pairs",
            1e-6, [&] {
              Rng rng(12);
              double worst = 0.0;
              for (int i = 0; i < 10; ++i) {
                const Window& g1 = W[i % 3];
                const Window& g2 = W[(i + 1) % 3];
                const double nu = 0.1 * i;
                const QPSignal f1 = random_signal(rng, nu, 3), f2 = random_signal(rng, nu, 3);
                const cplx q = strip_quadrature(
                    [&](double x, double xi) {
                      return stft_eval(f1, g1, {x, xi}) * std::conj(stft_eval(f2, g2, {x, xi}));
                    },
                    -12.0, 13.0, 32);
                const cplx c = stft_inner_product(f1, g1, f2, g2);
                worst = std::max(worst, std::abs(q - c) / std::sqrt(f1.norm_squared() * f2.norm_squared()));
              }
              return worst;
            });

  s.at_most("basis_orthonormality",
            "quadrature Gram matrix of V_g e_k, |k| <= 16, is the identity (gaussian, h1, h2; nu = 0, 0.3)", 1e-6,
            [&] {
              constexpr int K = 16, nx = 64;
              double worst = 0.0;
              for (const auto& g : W)
                for (double nu : {0.0, 0.3}) {
                  const auto rule = panel_rule(nu - K - 8.0, nu + K + 8.0, 1.0);
                  const Eigen::Index nodes = Eigen::Index(rule.size()) * nx;
                  Eigen::MatrixXcd V(2 * K + 1, nodes);
                  parallel_for(2 * K + 1, [&](std::size_t row) {
                    const QPSignal e = make_signal(nu, {{int(row) - K, 1.0}});
                    Eigen::Index col = 0;
                    for (int i = 0; i < nx; ++i)
                      for (const auto& [xi, w] : rule)
                        V(Eigen::Index(row), col++) = std::sqrt(w / nx) * stft_eval(e, g, {double(i) / nx, xi});
                  });
                  const Eigen::MatrixXcd G = V * V.adjoint();
                  worst = std::max(worst, (G - Eigen::MatrixXcd::Identity(2 * K + 1, 2 * K + 1)).cwiseAbs().maxCoeff());
                }
              return worst;
            });

  s.at_most("stft_quasi_periodicity", "V_g f(x+k, xi) = e^{2 pi i k (nu - xi)} V_g f(x, xi), 100 random cases", 1e-10,
            [&] {
              Rng rng(13);
              std::uniform_int_distribution<int> uk(-2, 2);
              double worst = 0.0;
              for (int i = 0; i < 100; ++i) {
                const double nu = 0.37 * (i % 3);
                const QPSignal f = random_signal(rng, nu, 3);
                const CylinderPoint p = random_point(rng, 3.0);
                const int k = uk(rng);
                const cplx a = stft_eval(f, W[i % 3], {p.x + k, p.xi});
                const cplx b = std::exp(2.0 * pi * I * double(k) * (nu - p.xi)) * stft_eval(f, W[i % 3], p);
                worst = std::max(worst, std::abs(a - b));
              }
              return worst;
            });
  return s.finish();
}

// ------------------------------------------------------------------ kernels

SuiteReport kernels_suite() {
  Suite s("kernels");

  s.at_most("reproducing_property", "V_g f(w) = <V_g f, K(., w)> by strip quadrature (gaussian and h1, nu = 0.3)",
            1e-9, [&] {
              Rng rng(21);
              double worst = 0.0;
              for (const Window& g : {Window::gaussian(), Window::hermite(1)}) {
                const QPSignal f = random_signal(rng, 0.3, 2);
                for (int i = 0; i < 2; ++i) {
                  const CylinderPoint w = random_point(rng, 1.5);
                  const cplx q = strip_quadrature(
                      [&](double x, double xi) {
                        return stft_eval(f, g, {x, xi}) * std::conj(gabor_kernel(g, 0.3, {x, xi}, w));
                      },
                      -10.0, 11.0, 16);
                  worst = std::max(worst, std::abs(q - stft_eval(f, g, w)) / std::sqrt(f.norm_squared()));
                }
              }
              return worst;
            });

  auto closed_vs_sum = [](int r, std::uint64_t seed) {
    Rng rng(seed);
    const Window g = r == 0 ? Window::gaussian() : Window::hermite(r);
    double worst = 0.0;
    for (double nu : {0.0, 0.3})
      for (int i = 0; i < 50; ++i) {
        const CylinderPoint z = random_point(rng, 3.0), w = random_point(rng, 3.0);
        const cplx closed = r == 0 ? kernel_gaussian_closed(nu, z, w) : kernel_hermite_closed(r, nu, z, w);
        const cplx sum = std::conj(gabor_kernel(g, nu, z, w));
        worst = std::max(worst, std::abs(closed - sum) / (1.0 + std::abs(sum)));
      }
    return worst;
  };
  s.at_most("gaussian_closed_kernel", "Poincare form of the gaussian-window kernel equals the basis sum", 1e-10,
            [&] { return closed_vs_sum(0, 22); });
  s.at_most("hermite_closed_kernel", "Laguerre form of the h_r-window kernel equals the basis sum, r = 1, 2", 1e-10,
            [&] { return std::max(closed_vs_sum(1, 23), closed_vs_sum(2, 24)); });

  s.at_most("fock_theta_form",
            "analytic Fock kernel: Poincare series equals theta form, relative to sqrt(K(z,z) K(w,w))", 1e-10, [&] {
    Rng rng(25);
    double worst = 0.0;
    for (double nu : {0.0, 0.3, 0.75})
      for (int i = 0; i < 50; ++i) {
        const cplx z = random_point(rng, 3.0).z(), w = random_point(rng, 3.0).z();
        const cplx a = fock_kernel_analytic(nu, z, w), b = fock_kernel_analytic_theta(nu, z, w);
        const double scale = std::sqrt(std::abs(fock_kernel_analytic(nu, z, z)) * std::abs(fock_kernel_analytic(nu, w, w)));
        worst = std::max(worst, std::abs(a - b) / scale);
      }
    return worst;
  });

  s.at_most("laguerre_summation", "L^1_n = sum_{r <= n} L_r for n <= 16 on 20 abscissae", 1e-12, [&] {
    double worst = 0.0;
    for (int n = 0; n <= 16; ++n)
      for (int j = 0; j < 20; ++j) {
        const double x = 0.75 * j + 0.1;
        double sum = 0.0;
        for (int r = 0; r <= n; ++r) sum += laguerre(r, 0.0, x);
        const double l1 = laguerre(n, 1.0, x);
        worst = std::max(worst, std::abs(l1 - sum) / std::max(1.0, std::abs(l1)));
      }
    return worst;
  });

  s.at_most("bargmann_functional_equation",
            "B f(z+k) = e^{2 pi i k nu} e^{pi k^2/2 + pi z k} B f(z), 50 random (f, z), k in [-2, 2]", 1e-9, [&] {
              Rng rng(26);
              std::uniform_real_distribution<double> unu(0.0, 1.0);
              double worst = 0.0;
              for (int i = 0; i < 50; ++i) {
                const double nu = unu(rng);
                const QPSignal f = random_signal(rng, nu, 3);
                const cplx z = random_point(rng, 2.0).z();
                const cplx F = bargmann_eval(f, z);
                for (int k = -2; k <= 2; ++k) {
                  const cplx lhs = bargmann_eval(f, z + double(k));
                  const cplx rhs = std::exp(2.0 * pi * I * double(k) * nu + pi * k * k / 2.0 + pi * z * double(k)) * F;
                  worst = std::max(worst, std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1e-300));
                }
              }
              return worst;
            });

  s.at_most("bargmann_isometry", "||B f||^2 under e^{-pi |z|^2} on the strip equals 2^{-1/2} ||f||^2", 1e-8, [&] {
    Rng rng(27);
    double worst = 0.0;
    for (double nu : {0.0, 0.4}) {
      const QPSignal f = random_signal(rng, nu, 2);
      auto F = [&](cplx z) { return bargmann_eval(f, z); };
      const cplx n2 = fock_inner_product(F, F, -9.0, 9.0, 16);
      worst = std::max(worst, std::abs(n2 - std::sqrt(0.5) * f.norm_squared()) / f.norm_squared());
    }
    return worst;
  });
  return s.finish();
}

// ------------------------------------------------------------------ vasilevski

SuiteReport vasilevski_suite() {
  Suite s("vasilevski");

  s.at_most("poly_kernel_layer_sum",
            "K_poly(N) = sum_{r<N} K_true(r), N = 1..4, 100 random (z, w), |xi| <= 3, relative to 1 + |K_poly|", 1e-9,
            [&] {
              Rng rng(31);
              double worst = 0.0;
              for (int N = 1; N <= 4; ++N)
                for (int i = 0; i < 100; ++i) {
                  const double nu = (i % 2) ? 0.3 : 0.0;
                  const cplx z = random_point(rng, 3.0).z(), w = random_point(rng, 3.0).z();
                  const cplx kp = fock_kernel_poly(N, nu, z, w);
                  worst = std::max(worst, std::abs(kp - fock_kernel_poly_sum(N, nu, z, w)) / (1.0 + std::abs(kp)));
                }
              return worst;
            });

  s.at_most("poly_order_one_is_analytic", "K_poly(1) equals the analytic kernel", 1e-12, [&] {
    Rng rng(32);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const cplx z = random_point(rng, 3.0).z(), w = random_point(rng, 3.0).z();
      const cplx a = fock_kernel_analytic(0.3, z, w);
      worst = std::max(worst, std::abs(fock_kernel_poly(1, 0.3, z, w) - a) / (1.0 + std::abs(a)));
    }
    return worst;
  });

  s.at_most("true_layers_orthogonal", "images of channel-disjoint vector signals are orthogonal (N = 3)", 1e-12, [&] {
    Rng rng(33);
    const VectorWindow G = VectorWindow::hermite(3);
    double worst = 0.0;
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        VectorSignal F1{0.2, std::vector<QPSignal>(3, QPSignal{0.2, {}})};
        VectorSignal F2 = F1;
        F1.channels[a] = random_signal(rng, 0.2, 3);
        F2.channels[b] = random_signal(rng, 0.2, 3);
        worst = std::max(worst, std::abs(vector_stft_inner_product(F1, F2, G)) /
                                    std::sqrt(F1.norm_squared() * F2.norm_squared()));
      }
    return worst;
  });

  s.at_most("raising_operator",
            "true Bargmann transform of level r equals (pi^r r!)^{-1/2} (d/dz - pi conj z)^r B f, r = 1..3", 1e-8, [&] {
              Rng rng(34);
              double worst = 0.0;
              for (int i = 0; i < 10; ++i) {
                const QPSignal f = random_signal(rng, 0.25, 2);
                const cplx z = random_point(rng, 1.0).z();
                auto B = [&](cplx u) { return bargmann_eval(f, u); };
                for (int r = 1; r <= 3; ++r) {
                  const double norm = std::sqrt(std::pow(pi, r) * std::tgamma(r + 1.0));
                  const cplx a = true_bargmann_eval(r, f, z);
                  const cplx b = raising_apply(B, r, z) / norm;
                  worst = std::max(worst, std::abs(a - b) / (std::abs(a) + std::abs(b)));
                }
              }
              return worst;
            });
  return s.finish();
}

// ------------------------------------------------------------------ wexler_raz

SuiteReport wexler_raz_suite() {
  Suite s("wexler_raz");
  const Window g = Window::gaussian();

  s.at_most("gaussian_dual_residual",
            "gaussian, beta = 1/2, computed dual: Wexler-Raz residual over k, l in [-3, 3]", 1e-6, [&] {
              const DualWindow d = dual_window(g, Rational{1, 2});
              return wexler_raz_residual(g, d.gamma, 0.5, {-3, 3}, {-3, 3});
            });

  s.at_most("correlation_fourier_identity",
            "Fourier coefficients of G_n over [0,1] equal <gamma, M_k T_{n/beta} g> (g gaussian, gamma = h_1)", 1e-8,
            [&] {
              const Window gam = Window::hermite(1);
              constexpr int nx = 64;
              double worst = 0.0;
              for (int n = -1; n <= 2; ++n) {
                std::vector<cplx> G(nx);
                for (int j = 0; j < nx; ++j) G[j] = correlation_fn(g, gam, 0.5, n, double(j) / nx);
                for (int k = -3; k <= 3; ++k) {
                  cplx c = 0.0;
                  for (int j = 0; j < nx; ++j) c += G[j] * std::exp(-2.0 * pi * I * double(k * j) / double(nx));
                  c /= double(nx);
                  worst = std::max(worst, std::abs(c - janssen_coeffs(g, gam, 0.5, k, n)));
                }
              }
              return worst;
            });

  s.at_most("correlation_periodic", "G_n(x + 1) = G_n(x)", 1e-12, [&] {
    double worst = 0.0;
    for (int n = -2; n <= 2; ++n)
      for (double x : {0.0, 0.13, 0.5, 0.77})
        worst = std::max(worst, std::abs(correlation_fn(g, g, 0.5, n, x + 1.0) - correlation_fn(g, g, 0.5, n, x)));
    return worst;
  });

  s.at_most("janssen_gaussian_overlap", "<g, T_1 g> = e^{-pi/2} and <g, g> = 1 for the gaussian", 1e-10, [&] {
    return std::max(std::abs(janssen_coeffs(g, g, 0.5, 0, 0) - 1.0),
                    std::abs(janssen_coeffs(g, g, 1.0, 0, 1) - std::exp(-pi / 2.0)));
  });

  s.at_most("dual_symmetry", "the dual of the even gaussian is even on the grid", 1e-8, [&] {
    const SampledWindow& sw = *dual_window(g, Rational{1, 2}).gamma.samples();
    double worst = 0.0;
    const std::size_t n = sw.values.size();
    for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(sw.values[i] - sw.values[n - 1 - i]));
    return worst;
  });

  s.at_most("dual_singular_values_decrease",
            "minimal singular value of the periodized frame operator decreases over beta = 0.5, 0.8, 0.95", 0.0, [&] {
              double prev = std::numeric_limits<double>::infinity(), worst = -std::numeric_limits<double>::infinity();
              for (Rational b : {Rational{1, 2}, Rational{4, 5}, Rational{19, 20}}) {
                const double sv = dual_window(g, b).min_singular;
                worst = std::max(worst, sv - prev);
                prev = sv;
              }
              return worst;
            });
  return s.finish();
}

// ------------------------------------------------------------------ frames

// S f through Walnut's form, sampled on nx points and transformed back to coefficients.
QPSignal walnut_apply(const Window& g, double beta, const QPSignal& f, int n_tail, int nx, int K_out) {
  std::vector<cplx> Sf(nx);
  parallel_for(nx, [&](std::size_t j) {
    const double x = double(j) / nx;
    cplx acc = 0.0;
    for (int n = -n_tail; n <= n_tail; ++n) acc += correlation_fn(g, g, beta, n, x) * eval_signal(f, x - n / beta);
    Sf[j] = acc / beta;
  });
  QPSignal out{f.nu, {}};
  for (int k = -K_out; k <= K_out; ++k) {
    cplx c = 0.0;
    for (int j = 0; j < nx; ++j) c += Sf[j] * std::exp(-2.0 * pi * I * (f.nu + k) * (double(j) / nx));
    out.coeffs[k] = c / double(nx);
  }
  return out;
}

// S f through Janssen's form on the coefficient side.
QPSignal janssen_apply(const Window& g, double beta, const QPSignal& f, int k_tail, int n_tail, int K_out) {
  std::map<std::pair<int, int>, cplx> c;
  for (int k = -k_tail; k <= k_tail; ++k)
    for (int n = -n_tail; n <= n_tail; ++n) c[{k, n}] = janssen_coeffs(g, g, beta, k, n);
  QPSignal out{f.nu, {}};
  for (int m = -K_out; m <= K_out; ++m) {
    cplx acc = 0.0;
    for (int k = -k_tail; k <= k_tail; ++k) {
      const cplx a = f.coeff(m - k);
      if (a == 0.0) continue;
      for (int n = -n_tail; n <= n_tail; ++n)
        acc += c[{k, n}] * a * std::exp(-2.0 * pi * I * (f.nu + m - k) * (n / beta));
    }
    out.coeffs[m] = acc / beta;
  }
  return out;
}

double coeff_distance(const QPSignal& a, const QPSignal& b, int K) {
  double worst = 0.0;
  for (int k = -K; k <= K; ++k) worst = std::max(worst, std::abs(a.coeff(k) - b.coeff(k)));
  return worst;
}

SuiteReport frames_suite() {
  Suite s("frames");
  const Window g = Window::gaussian();

  std::vector<FrameBounds> gauss_runs;
  auto gauss = [&]() -> const std::vector<FrameBounds>& {
    if (gauss_runs.empty())
      for (int K : {32, 64, 128}) gauss_runs.push_back(frame_bounds(FrameSpec{g, 0.5, 0.0, K, 1e-12}));
    return gauss_runs;
  };
  s.at_most("gaussian_frame_stable", "gaussian, beta = 0.5: relative change of A at the last doubling to K = 128",
            1e-3, [&] {
              const auto& r = gauss();
              return std::abs(r[2].A - r[1].A) / r[2].A;
            });
  s.at_least("gaussian_frame_ratio", "gaussian, beta = 0.5, K = 128: A/B", 0.05, [&] {
    const auto& r = gauss();
    return r[2].A / r[2].B;
  });
  s.at_most("gaussian_supercritical", "gaussian, beta = 1.25, K = 128: A/B", 1e-6, [&] {
    const FrameBounds fb = frame_bounds(FrameSpec{g, 1.25, 0.0, 128, 1e-12});
    return fb.A / fb.B;
  });

  std::vector<FrameBounds> herm_runs;
  auto herm = [&]() -> const std::vector<FrameBounds>& {
    if (herm_runs.empty())
      for (int K : {32, 64, 128}) herm_runs.push_back(frame_bounds(FrameSpec{Window::hermite(1), 0.4, 0.0, K, 1e-12}));
    return herm_runs;
  };
  s.at_least("hermite_frame_ratio", "h_1, beta = 0.4, K = 128: A/B", 1e-4, [&] {
    const auto& r = herm();
    return r[2].A / r[2].B;
  });
  s.at_most("hermite_frame_stable", "h_1, beta = 0.4: relative change of A at the last doubling to K = 128", 1e-2,
            [&] {
              const auto& r = herm();
              return std::abs(r[2].A - r[1].A) / r[2].A;
            });

  s.at_most("gram_psd", "minimal eigenvalue of M* M is >= -1e-10 (reported negated)", 1e-10, [&] {
    double worst = -std::numeric_limits<double>::infinity();
    const std::vector<FrameSpec> specs = {FrameSpec{g, 0.5, 0.0, 32, 1e-12}, FrameSpec{g, 1.25, 0.3, 32, 1e-12},
                                          FrameSpec{Window::hermite(1), 0.4, 0.0, 32, 1e-12},
                                          FrameSpec{Window::hermite(2), 0.3, 0.6, 32, 1e-12}};
    for (const auto& sp : specs) worst = std::max(worst, -extremal_eigenvalues(analysis_matrix(sp).M).first);
    return worst;
  });

  s.at_most("rayleigh_sandwich", "A - 1e-9 <= <Sf, f>/<f, f> <= B + 1e-9 for 50 random f (excess reported)", 0.0,
            [&] {
              const FrameSpec fs{g, 0.5, 0.0, 32, 1e-12};
              const FrameBounds fb = frame_bounds(fs);
              Rng rng(41);
              double worst = -std::numeric_limits<double>::infinity();
              for (int i = 0; i < 50; ++i) {
                const QPSignal f = random_signal(rng, 0.0, 8);
                const double q = inner_product(frame_apply(fs, f), f).real() / f.norm_squared();
                worst = std::max({worst, (fb.A - 1e-9) - q, q - (fb.B + 1e-9)});
              }
              return worst;
            });

  const FrameSpec small{g, 0.5, 0.0, 16, 1e-12};
  Rng rng_s(42);
  const QPSignal f16 = random_signal(rng_s, 0.0, 16);
  s.at_most("walnut_consistency", "Walnut form of S agrees with M* M on a K = 16 signal", 1e-6, [&] {
    const QPSignal a = frame_apply(small, f16);
    return coeff_distance(a, walnut_apply(g, 0.5, f16, 8, 128, 24), 24) / std::sqrt(f16.norm_squared());
  });
  s.at_most("janssen_consistency", "Janssen form of S agrees with M* M on a K = 16 signal", 1e-6, [&] {
    const QPSignal a = frame_apply(small, f16);
    return coeff_distance(a, janssen_apply(g, 0.5, f16, 6, 4, 24), 24) / std::sqrt(f16.norm_squared());
  });

  s.at_most("reconstruction_roundtrip",
            "e_{0,nu} through analysis and synthesis with the computed dual (gaussian, beta = 1/2), relative error",
            1e-5, [&] {
              double worst = 0.0;
              const DualWindow d = dual_window(g, Rational{1, 2});
              for (double nu : {0.0, 0.3}) {
                const FrameSpec fs{g, 0.5, nu, 8, 1e-12};
                const QPSignal e = make_signal(nu, {{0, 1.0}});
                const QPSignal back = reconstruct(fs, frame_samples(fs, e), d.gamma);
                double err = 0.0;
                for (const auto& [k, v] : back.coeffs) err += std::norm(v - e.coeff(k));
                worst = std::max(worst, std::sqrt(err));
              }
              return worst;
            });

  s.at_most("analysis_identity", "<f, Sigma_nu(pi(z) g)> by quadrature over (0,1) equals V_g f(z)", 1e-7, [&] {
    Rng rng(43);
    double worst = 0.0;
    constexpr int nt = 256;
    for (int i = 0; i < 10; ++i) {
      const Window& gw = i % 2 ? g : Window::hermite(2);
      const double nu = 0.1 * i;
      const QPSignal f = random_signal(rng, nu, 4);
      const CylinderPoint z = random_point(rng, 3.0);
      cplx q = 0.0;
      for (int j = 0; j < nt; ++j) {
        const double t = double(j) / nt;
        q += eval_signal(f, t) * std::conj(periodize_shift(gw, z, nu, t));
      }
      q /= double(nt);
      worst = std::max(worst, std::abs(q - stft_eval(f, gw, z)) / std::sqrt(f.norm_squared()));
    }
    return worst;
  });

  s.at_most("predicate_verdicts", "gaussian 0.5 frame, gaussian 1.5 not_frame, h_2 0.5 unknown (mismatches)", 0.0,
            [&] {
              int bad = 0;
              bad += sufficient_frame_predicate(g, 0.5, true).verdict != Verdict::frame;
              bad += sufficient_frame_predicate(g, 1.5, true).verdict != Verdict::not_frame;
              bad += sufficient_frame_predicate(Window::hermite(2), 0.5, true).verdict != Verdict::unknown;
              bad += sufficient_frame_predicate(Window::hermite(1), 0.4, true).verdict != Verdict::frame;
              return double(bad);
            });
  return s.finish();
}

// ------------------------------------------------------------------ sampling

SuiteReport sampling_suite() {
  Suite s("sampling");

  s.at_most("lattice_density_exact", "exact D- = D+ = 1/beta on vertical lattices, beta in {0.2, 0.25, 0.5, 2}",
            1e-12, [&] {
              double worst = 0.0;
              for (double b : {0.2, 0.25, 0.5, 2.0}) {
                const DensityReport d = beurling_density(PointSet::vertical_lattice(b, 4), 10.0, 4);
                worst = std::max(worst, std::abs(*d.exact - 1.0 / b) * b);
              }
              return worst;
            });
  s.at_most("density_sweep", "sweep estimate at r_max = 200 within 5% of the exact density", 0.05, [&] {
    double worst = 0.0;
    for (double b : {0.2, 0.25, 0.5, 2.0}) {
      const DensityReport d = beurling_density(PointSet::vertical_lattice(b, 4), 200.0, 8);
      worst = std::max({worst, std::abs(d.lower - *d.exact) / *d.exact, std::abs(d.upper - *d.exact) / *d.exact});
    }
    const DensityReport p =
        beurling_density(PointSet::periodic(1.0, {{0.1, 0.05}, {0.5, 0.4}, {0.8, 0.7}}, 2), 200.0, 8);
    worst = std::max({worst, std::abs(*p.exact - 3.0), std::abs(p.lower - 3.0) / 3.0, std::abs(p.upper - 3.0) / 3.0});
    return worst;
  });

  s.at_most("separation_bruteforce", "sweep separation of 100 random points equals the quadratic scan", 0.0, [&] {
    Rng rng(51);
    std::uniform_real_distribution<double> ux(0.0, 1.0), uy(-5.0, 5.0);
    std::vector<CylinderPoint> pts;
    for (int i = 0; i < 100; ++i) pts.push_back({ux(rng), uy(rng)});
    double brute = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) brute = std::min(brute, cylinder_distance(pts[i], pts[j]));
    return std::abs(separation(PointSet::finite(pts)) - brute);
  });

  s.at_most("sampling_reconstruction",
            "analytic-kernel section from nodes i n/2, |n| <= 80: relative error at 20 probes with |Im z| <= 1", 1e-4,
            [&] {
              const PointSet nodes = PointSet::vertical_lattice(0.5, 80);
              Rng rng(52);
              double worst = 0.0;
              for (double nu : {0.0, 0.3}) {
                const cplx w0(0.3, 0.2);
                std::vector<cplx> v;
                for (const auto& p : nodes.points) v.push_back(fock_kernel_analytic(nu, p.z(), w0));
                for (int i = 0; i < 20; ++i) {
                  const cplx z = random_point(rng, 1.0).z();
                  const cplx want = fock_kernel_analytic(nu, z, w0);
                  worst = std::max(worst, std::abs(sample_reconstruct(nodes, v, z, nu).value - want) / std::abs(want));
                }
              }
              return worst;
            });

  s.at_most("sampling_truncation", "doubling the node range moves probe values by at most 10x the tail estimate",
            1.0, [&] {
              const PointSet n1 = PointSet::vertical_lattice(0.5, 40), n2 = PointSet::vertical_lattice(0.5, 80);
              const cplx w0(0.6, -0.3);
              auto vals = [&](const PointSet& n) {
                std::vector<cplx> v;
                for (const auto& p : n.points) v.push_back(fock_kernel_analytic(0.0, p.z(), w0));
                return v;
              };
              const auto v1 = vals(n1), v2 = vals(n2);
              Rng rng(53);
              double worst = 0.0;
              for (int i = 0; i < 20; ++i) {
                const cplx z = random_point(rng, 1.0).z();
                const SeriesValue a = sample_reconstruct(n1, v1, z), b = sample_reconstruct(n2, v2, z);
                const double floor = 1e-13 * std::abs(b.value);
                worst = std::max(worst, std::abs(a.value - b.value) / (10.0 * a.tail_estimate + floor));
              }
              return worst;
            });
  return s.finish();
}

// ------------------------------------------------------------------ interpolation

SuiteReport interpolation_suite() {
  Suite s("interpolation");
  const PointSet nodes = PointSet::vertical_lattice(3.0, 10);
  Rng rng(61);
  std::normal_distribution<double> nd;
  std::vector<cplx> a;
  for (std::size_t i = 0; i < nodes.size(); ++i) a.emplace_back(nd(rng), nd(rng));
  // Interpolation data live in the weighted space, so the bound is relative to the weighted data size.
  double amax = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    amax = std::max(amax, std::abs(a[i]) * std::exp(-pi * std::norm(nodes.points[i].z()) / 2.0));

  for (int r : {1, 0}) {
    s.at_most(r == 1 ? "node_exactness" : "node_exactness_r0",
              "interpolant of level " + std::to_string(r) + " on i 3Z, |n| <= 10, hits random data at every node", 1e-8,
              [&, r] {
                double worst = 0.0;
                for (std::size_t k = 0; k < nodes.size(); ++k)
                  worst = std::max(worst, std::abs(interpolate_true(r, nodes, a, nodes.points[k].z()) - a[k]));
                return worst;
              });
  }
  s.at_most("weighted_bound",
            "max of |F| e^{-pi |z|^2/2} over the probe grid [0,1] x [-33, 33], divided by max |a_n| e^{-pi |z_n|^2/2} (level 1)", 10.0,
            [&] {
              double worst = 0.0;
              for (int i = 0; i <= 4; ++i)
                for (int j = 0; j <= 132; ++j) {
                  const cplx z(0.25 * i, -33.0 + 0.5 * j);
                  worst = std::max(worst, std::abs(interpolate_true_weighted(1, nodes, a, z)));
                }
              return worst / amax;
            });
  s.at_most("zero_data", "zero data gives the zero function", 0.0, [&] {
    const std::vector<cplx> zero(nodes.size(), 0.0);
    return std::abs(interpolate_true(1, nodes, zero, {0.3, 1.7}));
  });
  s.at_least("density_precondition", "density 2/3 >= 1/2 is refused at level 1 (1 = refused)", 1.0, [&] {
    const PointSet dense = PointSet::vertical_lattice(1.5, 5);
    try {
      interpolate_true(1, dense, std::vector<cplx>(dense.size(), 1.0), {0.2, 0.1});
    } catch (const std::domain_error&) {
      return 1.0;
    }
    return 0.0;
  });
  return s.finish();
}

// ------------------------------------------------------------------ super

SuiteReport super_suite() {
  Suite s("super");
  const VectorWindow H2 = VectorWindow::hermite(2);

  std::vector<FrameBounds> runs;
  auto get = [&]() -> const std::vector<FrameBounds>& {
    if (runs.empty())
      for (int K : {32, 64, 128}) runs.push_back(super_frame_bounds(H2, 0.4, 0.0, K));
    return runs;
  };
  s.at_least("hermite2_superframe_ratio", "(h_0, h_1), beta = 0.4, K = 128: A/B", 1e-4, [&] {
    const auto& r = get();
    return r[2].A / r[2].B;
  });
  s.at_most("hermite2_superframe_stable", "(h_0, h_1), beta = 0.4: relative change of A at the last doubling", 1e-2,
            [&] {
              const auto& r = get();
              return std::abs(r[2].A - r[1].A) / r[2].A;
            });

  s.at_most("vector_moyal", "<V F1, V F2> = sum_i <f1_i, f2_i> for the hermite vector, 20 random pairs", 1e-12, [&] {
    Rng rng(71);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const VectorWindow& G = H2;
      VectorSignal F1{0.35, {random_signal(rng, 0.35, 3), random_signal(rng, 0.35, 3)}};
      VectorSignal F2{0.35, {random_signal(rng, 0.35, 3), random_signal(rng, 0.35, 3)}};
      const cplx want = inner_product(F1.channels[0], F2.channels[0]) + inner_product(F1.channels[1], F2.channels[1]);
      worst = std::max(worst, std::abs(vector_stft_inner_product(F1, F2, G) - want) /
                                  std::sqrt(F1.norm_squared() * F2.norm_squared()));
    }
    return worst;
  });

  s.at_most("scalar_reduction", "one gaussian channel reproduces the scalar frame bounds exactly", 0.0, [&] {
    const FrameBounds a = super_frame_bounds(VectorWindow::hermite(1), 0.5, 0.2, 32);
    const FrameBounds b = frame_bounds(FrameSpec{Window::gaussian(), 0.5, 0.2, 32, 1e-12});
    return std::abs(a.A - b.A) + std::abs(a.B - b.B);
  });

  s.at_most("bound_monotonicity",
            "beta = 0.3, N <= 3: B(N+1) >= B(N) and A(N+1) <= min_i A_i (largest violation reported)", 1e-9, [&] {
              std::vector<double> scalar_A;
              double worst = -std::numeric_limits<double>::infinity();
              double prev_B = 0.0;
              for (int N = 1; N <= 3; ++N) {
                const Window w = N == 1 ? Window::gaussian() : Window::hermite(N - 1);
                scalar_A.push_back(frame_bounds(FrameSpec{w, 0.3, 0.0, 32, 1e-12}).A);
                const FrameBounds fb = super_frame_bounds(VectorWindow::hermite(N), 0.3, 0.0, 32);
                worst = std::max(worst, prev_B - fb.B);
                worst = std::max(worst, fb.A - *std::min_element(scalar_A.begin(), scalar_A.end()));
                prev_B = fb.B;
              }
              return worst;
            });

  s.at_most("channel_diagonal_wexler_raz", "(h_0, h_1), beta = 2/5, scalar duals weighted 1/2: vector residual",
            1e-6, [&] { return super_wr_residual(H2, channel_diagonal_duals(H2, Rational{2, 5}), 0.4, {-3, 3}, {-3, 3}); });

  s.at_most("super_bargmann_isometry", "||B F||^2 under e^{-pi |z|^2} equals 2^{-1/2} ||F||^2 (N = 2)", 1e-6, [&] {
    Rng rng(72);
    VectorSignal F{0.1, {random_signal(rng, 0.1, 2), random_signal(rng, 0.1, 2)}};
    auto B = [&](cplx z) { return super_bargmann(F, z); };
    const cplx n2 = fock_inner_product(B, B, -9.0, 9.0, 16);
    return std::abs(n2 - std::sqrt(0.5) * F.norm_squared()) / F.norm_squared();
  });

  s.at_most("polyanalytic_order",
            "Fourier modes e^{-i m theta}, m >= N, of B F on circles vanish (N = 3), relative to the largest mode", 1e-9,
            [&] {
              Rng rng(73);
              VectorSignal F{0.0, {random_signal(rng, 0.0, 1), random_signal(rng, 0.0, 1), random_signal(rng, 0.0, 1)}};
              double worst = 0.0;
              constexpr int M = 64;
              for (int i = 0; i < 4; ++i) {
                const cplx c = random_point(rng, 1.0).z();
                std::vector<cplx> v(M);
                for (int j = 0; j < M; ++j) v[j] = super_bargmann(F, c + 0.3 * std::exp(2.0 * pi * I * double(j) / double(M)));
                double peak = 0.0, bad = 0.0;
                for (int m = -M / 2 + 1; m < M / 2; ++m) {
                  cplx mode = 0.0;
                  for (int j = 0; j < M; ++j) mode += v[j] * std::exp(-2.0 * pi * I * double(m * j) / double(M));
                  peak = std::max(peak, std::abs(mode));
                  if (m <= -3) bad = std::max(bad, std::abs(mode));
                }
                worst = std::max(worst, bad / peak);
              }
              return worst;
            });

  s.at_most("super_predicate_verdicts", "(2, 0.4) frame, (2, 0.6) unknown, (1, 0.9) frame (mismatches)", 0.0, [&] {
    int bad = 0;
    bad += super_sufficient_predicate(2, 0.4).verdict != Verdict::frame;
    bad += super_sufficient_predicate(2, 0.6).verdict != Verdict::unknown;
    bad += super_sufficient_predicate(1, 0.9).verdict != Verdict::frame;
    return double(bad);
  });
  return s.finish();
}

const std::map<std::string, std::function<SuiteReport()>>& registry() {
  static const std::map<std::string, std::function<SuiteReport()>> r = {
      {"moyal", moyal_suite},           {"kernels", kernels_suite},   {"vasilevski", vasilevski_suite},
      {"wexler_raz", wexler_raz_suite}, {"frames", frames_suite},     {"sampling", sampling_suite},
      {"interpolation", interpolation_suite}, {"super", super_suite}};
  return r;
}

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const Check* SuiteReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"moyal",  "kernels",  "vasilevski",    "wexler_raz",
                                                 "frames", "sampling", "interpolation", "super"};
  return names;
}

SuiteReport run_suite(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  return it->second();
}

std::vector<SuiteReport> run(const std::string& name) {
  if (name != "all") return {run_suite(name)};
  std::vector<SuiteReport> out;
  for (const auto& n : suite_names()) out.push_back(run_suite(n));
  return out;
}

std::string to_json(const std::vector<SuiteReport>& reports) {
  using nlohmann::ordered_json;
  ordered_json root;
  bool all = true;
  ordered_json suites = ordered_json::array();
  for (const auto& r : reports) {
    ordered_json s;
    s["suite"] = r.suite;
    s["passed"] = r.passed();
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
      ordered_json j;
      j["name"] = c.name;
      j["claim"] = c.claim;
      j["relation"] = c.relation;
      j["tolerance"] = c.tolerance;
      if (std::isfinite(c.measured))
        j["measured"] = c.measured;
      else
        j["measured"] = nullptr;
      j["passed"] = c.passed;
      checks.push_back(j);
    }
    s["checks"] = checks;
    suites.push_back(s);
    all = all && r.passed();
  }
  root["passed"] = all;
  root["suites"] = suites;
  return root.dump(2) + "\n";
}

}  // namespace cylgabor::verify

#include "cylgabor/fock.hpp"

#include <cmath>
#include <vector>

#include "cylgabor/quadrature.hpp"
#include "cylgabor/special_fn.hpp"
#include "series.hpp"

namespace cylgabor {

double FockDecay::operator()(cplx u) const {
  const double d = std::max(0.0, std::abs(u.imag()) - shift);
  return amp * std::exp(-rate * d * d);
}

cplx multiplier(cplx z) { return std::exp(cplx(pi * std::norm(z) / 2.0, -pi * z.real() * z.imag())); }

cplx bargmann_eval(const QPSignal& f, cplx z) {
  cplx v = 0.0;
  for (const auto& [k, a] : f.coeffs) {
    const double s = f.nu + k;
    v += a * std::exp(pi * z * z / 2.0 + 2.0 * pi * I * z * s - pi * s * s);
  }
  return v;
}

cplx true_bargmann_eval(int r, const QPSignal& f, cplx z) {
  if (r < 0 || r > 16) throw std::domain_error("true_bargmann_eval: order outside [0, 16]");
  const double x = z.real(), xi = z.imag();
  const cplx phase = std::pow(-I, r) * std::pow(2.0, -0.25);
  cplx v = 0.0;
  for (const auto& [k, a] : f.coeffs) {
    const double s = f.nu + k;
    const double u = -xi - s;
    const cplx e(pi * std::norm(z) / 2.0 - pi * u * u, -pi * x * xi + 2.0 * pi * x * (s + xi));
    v += a * std::exp(e) * hermite_fn_polypart(r, u);
  }
  return phase * v;
}

HoloFn bargmann_fn(const QPSignal& f) {
  HoloFn F;
  F.eval = [f](cplx z) { return bargmann_eval(f, z); };
  F.quasi_period = QuasiPeriod{QuasiPeriod::Lattice::unit, f.nu, 1.0};
  // |phi_k(z)| e^{-pi|z|^2/2} = e^{-pi (xi + nu + k)^2}
  double amp = 0.0, shift = 0.0;
  for (const auto& [k, a] : f.coeffs) {
    amp += std::abs(a);
    shift = std::max(shift, std::abs(f.nu + k));
  }
  F.decay = FockDecay{amp, pi, shift};
  return F;
}

cplx weyl_translate(const HoloFn& F, cplx w, cplx z) {
  if (F.quasi_period && F.quasi_period->lattice == QuasiPeriod::Lattice::unit &&
      std::abs(w.imag() - std::round(w.imag())) > 1e-12)
    throw std::domain_error("weyl_translate: Im w must be an integer for a quasi-periodic function");
  return std::exp(pi * z * std::conj(w) - pi * std::norm(w) / 2.0) * F(z - w);
}

cplx fock_kernel_analytic(double nu, cplx z, cplx w, const TruncationPolicy& pol) {
  return detail::poincare_series(z, w, nu, 0.0, 0, [](double) { return 1.0; }, pol, "fock_kernel_analytic");
}

cplx fock_kernel_analytic_theta(double nu, cplx z, cplx w, const TruncationPolicy& pol) {
  const cplx u = z - std::conj(w);
  const cplx pre = pi * (z * z + std::conj(w) * std::conj(w)) / 2.0;
  // Exponent real part -2 pi s^2 - 2 pi s Im u peaks at s = -Im u / 2.
  const long centre = std::lround(-u.imag() / 2.0 - nu);
  auto term = [&](long k) {
    const double s = double(k) + nu;
    return std::exp(pre - 2.0 * pi * s * s + 2.0 * pi * I * s * u);
  };
  return std::sqrt(2.0) * detail::centred_sum(centre, 2, term, pol, "fock_kernel_analytic_theta");
}

cplx fock_kernel_true(int r, double nu, cplx z, cplx w, const TruncationPolicy& pol) {
  if (r < 0 || r > kMaxLaguerreOrder) throw std::domain_error("fock_kernel_true: unsupported level");
  return detail::poincare_series(z, w, nu, 0.0, r, [r](double x) { return laguerre(r, 0.0, x); }, pol,
                                 "fock_kernel_true");
}

cplx fock_kernel_poly(int N, double nu, cplx z, cplx w, const TruncationPolicy& pol) {
  if (N < 1 || N > kMaxLaguerreOrder) throw std::domain_error("fock_kernel_poly: unsupported order");
  return detail::poincare_series(z, w, nu, 0.0, N - 1, [N](double x) { return laguerre(N - 1, 1.0, x); }, pol,
                                 "fock_kernel_poly");
}

cplx fock_kernel_poly_sum(int N, double nu, cplx z, cplx w, const TruncationPolicy& pol) {
  if (N < 1) throw std::domain_error("fock_kernel_poly_sum: order must be positive");
  cplx s = 0.0;
  for (int r = 0; r < N; ++r) s += fock_kernel_true(r, nu, z, w, pol);
  return s;
}

cplx complex_periodize(const HoloFn& F, double beta, int l, cplx z, const TruncationPolicy& pol) {
  if (!(beta > 0.0)) throw std::domain_error("complex_periodize: beta must be positive");
  if (!F.decay) throw std::domain_error("complex_periodize: F declares no decay bound");
  pol.validate();
  const FockDecay& d = *F.decay;
  // Trust the declared bound only after it holds on a probe ring.
  for (int j = 0; j < 16; ++j) {
    const cplx u = z + 2.0 * std::exp(cplx(0.0, 2.0 * pi * j / 16.0));
    const double weighted = std::abs(F(u)) * std::exp(-pi * std::norm(u) / 2.0);
    if (weighted > d(u) * (1.0 + 1e-9) + 1e-300)
      throw std::runtime_error("complex_periodize: declared decay bound fails at a probe point");
  }
  const double reach = d.shift + std::sqrt(std::log(1.0 / pol.abs_tol) / d.rate) + 1.0;
  const long lo = static_cast<long>(std::floor(beta * (-reach - z.imag())));
  const long hi = static_cast<long>(std::ceil(beta * (reach - z.imag())));
  if (hi - lo + 1 > pol.max_terms)
    throw ConvergenceError("complex_periodize: max_terms exceeded", d(z + cplx(0.0, double(hi) / beta)));
  cplx acc = 0.0;
  for (long n = lo; n <= hi; ++n) {
    const cplx gamma(0.0, double(n) / beta);
    const cplx chi = std::exp(cplx(0.0, 2.0 * pi * double(n) * l / beta));
    acc += chi * std::exp(-pi * z * std::conj(gamma) - pi * std::norm(gamma) / 2.0) * F(z + gamma);
  }
  return acc;
}

cplx cauchy_derivative(const std::function<cplx(cplx)>& F, cplx z, int order, double radius) {
  if (order < 0 || order > 12) throw std::domain_error("cauchy_derivative: order outside [0, 12]");
  if (!(radius > 0.0)) throw std::domain_error("cauchy_derivative: radius must be positive");
  if (order == 0) return F(z);
  const int m = 64 * (order + 1);
  cplx acc = 0.0;
  for (int j = 0; j < m; ++j) {
    const double th = 2.0 * pi * j / m;
    acc += F(z + radius * std::exp(cplx(0.0, th))) * std::exp(cplx(0.0, -order * th));
  }
  return std::tgamma(order + 1.0) * acc / (double(m) * std::pow(radius, order));
}

cplx raising_apply(const std::function<cplx(cplx)>& F, int r, cplx z, double radius) {
  if (r < 0 || r > 8) throw std::domain_error("raising_apply: order outside [0, 8]");
  const cplx c = -pi * std::conj(z);
  cplx acc = 0.0;
  double binom = 1.0;
  for (int j = 0; j <= r; ++j) {
    acc += binom * std::pow(c, r - j) * cauchy_derivative(F, z, j, radius);
    binom = binom * (r - j) / (j + 1);
  }
  return acc;
}

cplx fock_inner_product(const std::function<cplx(cplx)>& F, const std::function<cplx(cplx)>& G, double xi0,
                        double xi1, int nx) {
  if (nx < 2) throw std::domain_error("fock_inner_product: nx must be at least 2");
  cplx acc = 0.0;
  for (int i = 0; i < nx; ++i) {
    const double x = double(i) / nx;
    acc += integrate_panels(
        [&](double xi) {
          const cplx z(x, xi);
          return F(z) * std::conj(G(z)) * std::exp(-pi * std::norm(z));
        },
        xi0, xi1, 0.5);
  }
  return acc / double(nx);
}

}  // namespace cylgabor

#include "cylgabor/stft.hpp"

#include <cmath>

#include "cylgabor/quadrature.hpp"
#include "cylgabor/special_fn.hpp"
#include "series.hpp"

namespace cylgabor {

void GridSpec::validate() const {
  if (nx < 2 || nxi < 2) throw std::domain_error("GridSpec: need at least 2 points per axis");
  if (!(x1 > x0) || !(xi1 > xi0)) throw std::domain_error("GridSpec: empty range");
}

cplx stft_eval(const QPSignal& f, const Window& g, CylinderPoint p) {
  cplx v = 0.0;
  for (const auto& [k, a] : f.coeffs) {
    const double s = f.nu + k;
    v += a * std::exp(cplx(0.0, 2.0 * pi * p.x * (s - p.xi))) * g.ft_conj(p.xi - s);
  }
  return v;
}

Eigen::MatrixXcd stft_grid(const QPSignal& f, const Window& g, const GridSpec& grid) {
  grid.validate();
  Eigen::MatrixXcd out(grid.nxi, grid.nx);
  parallel_for(static_cast<std::size_t>(grid.nxi), [&](std::size_t j) {
    for (int i = 0; i < grid.nx; ++i) out(j, i) = stft_eval(f, g, {grid.x(i), grid.xi(int(j))});
  });
  return out;
}

cplx stft_inner_product(const QPSignal& f1, const Window& g1, const QPSignal& f2, const Window& g2) {
  const cplx coeff = inner_product(f1, f2);
  if (coeff == 0.0) return 0.0;
  double reach = 40.0;
  if (g1.has_decay() && g2.has_decay())
    reach = std::max(g1.freq_envelope().cutoff(1e-17), g2.freq_envelope().cutoff(1e-17));
  const cplx overlap = integrate_panels(
      [&](double u) { return g1.ft_conj(u) * std::conj(g2.ft_conj(u)); }, -reach, reach, 0.5);
  return coeff * overlap;
}

cplx gabor_kernel(const Window& g, double nu, CylinderPoint z, CylinderPoint w, const TruncationPolicy& pol) {
  pol.validate();
  const Envelope& env = g.freq_envelope();
  const double peak = std::max(env(0.0), 1e-300);
  const double reach = env.cutoff(pol.abs_tol / peak);
  const long lo = static_cast<long>(std::ceil(std::max(z.xi, w.xi) - nu - reach));
  const long hi = static_cast<long>(std::floor(std::min(z.xi, w.xi) - nu + reach));
  if (hi - lo + 1 > pol.max_terms) throw ConvergenceError("gabor_kernel: max_terms exceeded", peak);
  cplx acc = 0.0;
  for (long k = lo; k <= hi; ++k) {
    const double s = nu + double(k);
    const cplx a = std::exp(cplx(0.0, 2.0 * pi * z.x * (s - z.xi))) * g.ft_conj(z.xi - s);
    const cplx b = std::exp(cplx(0.0, 2.0 * pi * w.x * (s - w.xi))) * g.ft_conj(w.xi - s);
    acc += a * std::conj(b);
  }
  return acc;
}

namespace {

cplx closed_prefactor(CylinderPoint z, CylinderPoint w) {
  return cplx(-pi / 2.0 * (std::norm(z.z()) + std::norm(w.z())), pi * (z.x * z.xi - w.x * w.xi));
}

}  // namespace

cplx kernel_gaussian_closed(double nu, CylinderPoint z, CylinderPoint w, const TruncationPolicy& pol) {
  return detail::poincare_series(
      z.z(), w.z(), -nu, closed_prefactor(z, w), 0, [](double) { return 1.0; }, pol, "kernel_gaussian_closed");
}

cplx kernel_hermite_closed(int r, double nu, CylinderPoint z, CylinderPoint w, const TruncationPolicy& pol) {
  if (r < 0 || r > kMaxLaguerreOrder) throw std::domain_error("kernel_hermite_closed: unsupported order");
  return detail::poincare_series(
      z.z(), w.z(), -nu, closed_prefactor(z, w), r, [r](double x) { return laguerre(r, 0.0, x); }, pol,
      "kernel_hermite_closed");
}

}  // namespace cylgabor

#include "cylgabor/qp_signal.hpp"

#include <cmath>
#include <cstdlib>

namespace cylgabor {

int QPSignal::K() const {
  int k = 0;
  for (const auto& [idx, _] : coeffs) k = std::max(k, std::abs(idx));
  return k;
}

double QPSignal::norm_squared() const {
  double s = 0.0;
  for (const auto& [_, a] : coeffs) s += std::norm(a);
  return s;
}

cplx QPSignal::coeff(int k) const {
  auto it = coeffs.find(k);
  return it == coeffs.end() ? cplx(0.0, 0.0) : it->second;
}

QPSignal make_signal(double nu, const std::vector<std::pair<int, cplx>>& entries) {
  QPSignal f;
  f.nu = nu;
  for (const auto& [k, a] : entries) {
    if (!f.coeffs.emplace(k, a).second)
      throw std::domain_error("make_signal: duplicate coefficient index " + std::to_string(k));
  }
  return f;
}

cplx eval_signal(const QPSignal& f, double t) {
  cplx v = 0.0;
  for (const auto& [k, a] : f.coeffs) v += a * std::exp(cplx(0.0, 2.0 * pi * t * (f.nu + k)));
  return v;
}

cplx inner_product(const QPSignal& f1, const QPSignal& f2) {
  if (f1.nu != f2.nu) throw std::domain_error("inner_product: signals have different nu");
  cplx s = 0.0;
  for (const auto& [k, a] : f1.coeffs) {
    auto it = f2.coeffs.find(k);
    if (it != f2.coeffs.end()) s += a * std::conj(it->second);
  }
  return s;
}

cplx periodize_shift(const Window& g, CylinderPoint z, double nu, double t, const TruncationPolicy& pol) {
  pol.validate();
  const double reach = g.time_envelope().cutoff(pol.abs_tol);
  const double centre = t - z.x;
  const long lo = static_cast<long>(std::floor(centre - reach));
  const long hi = static_cast<long>(std::ceil(centre + reach));
  if (hi - lo + 1 > pol.max_terms)
    throw ConvergenceError("periodize_shift: window too wide for max_terms", g.time_envelope()(0.0));
  cplx acc = 0.0;
  for (long k = lo; k <= hi; ++k) {
    const double s = t - double(k);
    acc += std::exp(cplx(0.0, 2.0 * pi * (k * nu + z.xi * s))) * g.time(s - z.x);
  }
  return acc;
}

}  // namespace cylgabor

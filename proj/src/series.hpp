#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "cylgabor/common.hpp"

namespace cylgabor::detail {

// Sums term(k) outward from `centre` until both sides have been below the
// tolerance for two consecutive indices beyond `min_radius`. The tolerance is
// relative to the largest term once that exceeds one.
template <class Term>
cplx centred_sum(long centre, long min_radius, const Term& term, const TruncationPolicy& pol, const char* what) {
  pol.validate();
  cplx sum = term(centre);
  double scale = std::max(1.0, std::abs(sum));
  int used = 1;
  int quiet_left = 0, quiet_right = 0;
  for (long d = 1;; ++d) {
    const cplx right = term(centre + d);
    const cplx left = term(centre - d);
    sum += right + left;
    used += 2;
    scale = std::max({scale, std::abs(right), std::abs(left)});
    quiet_right = std::abs(right) < pol.abs_tol * scale ? quiet_right + 1 : 0;
    quiet_left = std::abs(left) < pol.abs_tol * scale ? quiet_left + 1 : 0;
    if (d >= min_radius && quiet_left >= 2 && quiet_right >= 2) break;
    if (used + 2 > pol.max_terms)
      throw ConvergenceError(std::string(what) + ": max_terms exceeded",
                             std::max(std::abs(left), std::abs(right)) / scale);
  }
  return sum;
}

// sum_k exp(log_prefactor + pi z conj(w) + 2 pi i k nu + pi (z - conj w) k - pi k^2 / 2) lag(pi |z - w - k|^2),
// the Poincare-type series shared by the Gabor and Fock kernels.
template <class Lag>
cplx poincare_series(cplx z, cplx w, double nu, cplx log_prefactor, int lag_degree, const Lag& lag,
                     const TruncationPolicy& pol, const char* what) {
  const cplx wb = std::conj(w);
  const double dx = z.real() - w.real();
  const long centre = std::lround(dx);
  const long reach = static_cast<long>(std::ceil(std::sqrt(double(lag_degree)))) + 2;
  const cplx base = log_prefactor + pi * z * wb;
  auto term = [&](long k) {
    const double kd = double(k);
    const cplx e = base + cplx(0.0, 2.0 * pi * kd * nu) + pi * (z - wb) * kd - pi * kd * kd / 2.0;
    return std::exp(e) * lag(pi * std::norm(z - w - kd));
  };
  return centred_sum(centre, reach, term, pol, what);
}

}  // namespace cylgabor::detail

#include "cylgabor/special_fn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "series.hpp"

namespace cylgabor {

namespace {

void check_hermite_order(int r) {
  if (r < 0 || r > kMaxHermiteOrder)
    throw std::domain_error("Hermite order " + std::to_string(r) + " outside [0, " +
                            std::to_string(kMaxHermiteOrder) + "]");
}

// Orthonormal recurrence p_{n+1} = sqrt(2/(n+1)) s p_n - sqrt(n/(n+1)) p_{n-1}.
double hermite_recurrence(int r, double s, double p0) {
  double prev = 0.0;
  double cur = p0;
  for (int n = 0; n < r; ++n) {
    double next = std::sqrt(2.0 / (n + 1)) * s * cur - std::sqrt(static_cast<double>(n) / (n + 1)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

double hermite_fn(int r, double t) {
  check_hermite_order(r);
  const double s = std::sqrt(2.0 * pi) * t;
  const double p0 = std::pow(2.0, 0.25) * std::exp(-pi * t * t);
  return hermite_recurrence(r, s, p0);
}

double hermite_fn_polypart(int r, double t) {
  check_hermite_order(r);
  return hermite_recurrence(r, std::sqrt(2.0 * pi) * t, std::pow(2.0, 0.25));
}

double hermite_poly(int r, double t) {
  check_hermite_order(r);
  return hermite_recurrence(r, t, std::pow(2.0, 0.25));
}

double laguerre(int k, double alpha, double x) {
  if (k < 0 || k > kMaxLaguerreOrder)
    throw std::domain_error("Laguerre order " + std::to_string(k) + " outside [0, " +
                            std::to_string(kMaxLaguerreOrder) + "]");
  if (k == 0) return 1.0;
  double prev = 1.0;
  double cur = 1.0 + alpha - x;
  for (int n = 1; n < k; ++n) {
    double next = ((2.0 * n + 1.0 + alpha - x) * cur - (n + alpha) * prev) / (n + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

cplx jacobi_theta(double a, double b, cplx z, const TruncationPolicy& pol) {
  const double eta = z.imag();
  if (std::abs(eta) > 50.0) throw std::domain_error("jacobi_theta: |Im z| > 50");
  const long centre = std::lround(-a - eta);
  auto term = [&](long k) {
    const double s = k + a;
    return std::exp(cplx(-pi * s * s, 0.0) + 2.0 * pi * I * s * (z + b));
  };
  return detail::centred_sum(centre, 2, term, pol, "jacobi_theta");
}

cplx hermite_theta(int r, double alpha, double beta, cplx z, const TruncationPolicy& pol) {
  check_hermite_order(r);
  const double eta = z.imag();
  if (std::abs(eta) > 50.0) throw std::domain_error("hermite_theta: |Im z| > 50");
  const long centre = std::lround(-alpha - eta);
  const long turning = static_cast<long>(std::ceil(std::sqrt((2.0 * r + 1.0) / (2.0 * pi)))) + 2;
  const double root = std::sqrt(2.0 * pi);
  auto term = [&](long k) {
    const double s = k + alpha;
    return std::exp(cplx(-pi * s * s, 0.0) + 2.0 * pi * I * (z - beta) * s) *
           hermite_poly(r, root * (s + eta));
  };
  return detail::centred_sum(centre, turning, term, pol, "hermite_theta");
}

cplx log_gbeta_dualgrid(double beta, cplx z, const TruncationPolicy& pol) {
  if (!(beta > 0.0)) throw std::domain_error("gbeta_dualgrid: beta must be positive");
  pol.validate();
  const double x = z.real();
  const double reach = std::log(1.0 / pol.abs_tol) / (2.0 * beta * pi);
  const long kmax = std::max(0L, static_cast<long>(std::ceil(x + reach)));
  const long kmin = std::min(0L, static_cast<long>(std::floor(x - reach)));
  if (kmax - kmin > pol.max_terms)
    throw std::domain_error("gbeta_dualgrid: Re z = " + std::to_string(x) +
                            " needs more than max_terms factors");
  const double nearest = std::round(x);
  if (nearest != 0.0 && std::abs(z - cplx(nearest, 0.0)) < 1e-12)
    return {-std::numeric_limits<double>::infinity(), 0.0};
  cplx acc = 0.0;
  for (long k = 1; k <= kmax; ++k) acc += std::log(1.0 - std::exp(2.0 * beta * pi * (z - double(k))));
  for (long k = -1; k >= kmin; --k) acc += std::log(1.0 - std::exp(2.0 * beta * pi * (double(k) - z)));
  return acc;
}

cplx gbeta_dualgrid(double beta, cplx z, const TruncationPolicy& pol) {
  cplx l = log_gbeta_dualgrid(beta, z, pol);
  if (std::isinf(l.real()) && l.real() < 0) return 0.0;
  return std::exp(l);
}

cplx hbeta(int r, double beta, cplx z, const TruncationPolicy& pol) {
  if (r < 0) throw std::domain_error("hbeta: negative order");
  cplx l = log_gbeta_dualgrid(beta, z, pol);
  if (std::isinf(l.real()) && l.real() < 0) return 0.0;
  return std::exp(-pi * z * z / 2.0 + double(r + 1) * l);
}

void TPFactorization::validate() const {
  if (!(c > 0.0)) throw std::domain_error("TPFactorization: c must be positive");
  if (!(gamma >= 0.0)) throw std::domain_error("TPFactorization: gamma must be nonnegative");
  double spread = gamma;
  for (double v : nu_j) {
    if (v == 0.0 || !std::isfinite(v)) throw std::domain_error("TPFactorization: nu_j must be nonzero and finite");
    spread += v * v;
  }
  if (!(spread > 0.0) || !std::isfinite(spread))
    throw std::domain_error("TPFactorization: gamma + sum nu_j^2 must be positive and finite");
}

cplx tp_window_ft(const TPFactorization& fac, double xi) {
  cplx v = fac.c * std::exp(cplx(-fac.gamma * xi * xi, 2.0 * pi * fac.nu_shift * xi));
  for (double nj : fac.nu_j) v *= std::exp(cplx(0.0, -2.0 * pi * nj * xi)) / (1.0 + 2.0 * pi * I * nj * xi);
  return v;
}

}  // namespace cylgabor

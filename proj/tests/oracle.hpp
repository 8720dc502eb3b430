#pragma once

// Reference evaluations for the unit tests. Each one follows its defining formula directly and
// shares no code with the library: explicit sums, long products and composite Simpson rules.

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double pi = std::numbers::pi;
inline const cplx I{0.0, 1.0};

template <class F>
auto simpson(F f, double a, double b, int n) -> decltype(f(a)) {
  if (n % 2) ++n;
  const double h = (b - a) / n;
  decltype(f(a)) acc = f(a) + f(b);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
  return acc * (h / 3.0);
}

// Physicists' Hermite polynomial from its explicit sum.
inline double hermite_phys(int n, double x) {
  double acc = 0.0;
  for (int m = 0; 2 * m <= n; ++m)
    acc += (m % 2 ? -1.0 : 1.0) * std::tgamma(n + 1.0) * std::pow(2.0 * x, n - 2 * m) /
           (std::tgamma(m + 1.0) * std::tgamma(n - 2 * m + 1.0));
  return acc;
}

inline double hermite_fn(int r, double t) {
  return std::pow(2.0, 0.25) / std::sqrt(std::pow(2.0, r) * std::tgamma(r + 1.0)) *
         hermite_phys(r, std::sqrt(2.0 * pi) * t) * std::exp(-pi * t * t);
}

// L_k^alpha(x) = sum_j (-1)^j binom(k + alpha, k - j) x^j / j!
inline double laguerre(int k, double alpha, double x) {
  double acc = 0.0;
  for (int j = 0; j <= k; ++j) {
    const double binom = std::tgamma(k + alpha + 1.0) / (std::tgamma(k - j + 1.0) * std::tgamma(alpha + j + 1.0));
    acc += (j % 2 ? -1.0 : 1.0) * binom * std::pow(x, j) / std::tgamma(j + 1.0);
  }
  return acc;
}

inline cplx theta(double a, double b, cplx z, int n = 40) {
  cplx acc = 0.0;
  for (int k = -n; k <= n; ++k) acc += std::exp(-pi * (k + a) * (k + a) + 2.0 * pi * I * (k + a) * (z + b));
  return acc;
}

// F(conj h_0)(xi) for the unit-norm Gaussian.
inline double gauss_ft(double xi) { return std::pow(2.0, 0.25) * std::exp(-pi * xi * xi); }

// Analytic Fock kernel of character nu from its theta series.
inline cplx fock_theta(double nu, cplx z, cplx w, int n = 40) {
  const cplx wb = std::conj(w);
  cplx acc = 0.0;
  for (int k = -n; k <= n; ++k)
    acc += std::exp(pi * (z * z + wb * wb) / 2.0 - 2.0 * pi * (k + nu) * (k + nu) + 2.0 * pi * I * (k + nu) * (z - wb));
  return std::sqrt(2.0) * acc;
}

// Holomorphic derivative by a five-point central difference along the real axis.
inline cplx derivative(const std::function<cplx(cplx)>& f, cplx z, double h = 1e-3) {
  return (-f(z + 2.0 * h) + 8.0 * f(z + h) - 8.0 * f(z - h) + f(z - 2.0 * h)) / (12.0 * h);
}

inline cplx random_cplx(std::mt19937_64& rng, double scale = 1.0) {
  std::normal_distribution<double> nd(0.0, scale);
  return {nd(rng), nd(rng)};
}

}  // namespace oracle

#pragma once

#include <vector>

#include "cylgabor/common.hpp"

namespace cylgabor {

inline constexpr int kMaxHermiteOrder = 64;
inline constexpr int kMaxLaguerreOrder = 128;

// L2-normalized Hermite function h_r(t) = 2^{1/4}/sqrt(2^r r!) H^phys_r(sqrt(2 pi) t) e^{-pi t^2}.
double hermite_fn(int r, double t);

// h_r(t) e^{pi t^2}; lets callers fold the Gaussian into a larger exponent.
double hermite_fn_polypart(int r, double t);

// H_r(t) = 2^{1/4}/sqrt(r!) (-1/sqrt 2)^r e^{t^2} d^r/dt^r e^{-t^2}.
double hermite_poly(int r, double t);

// Generalized Laguerre polynomial L_k^alpha(x).
double laguerre(int k, double alpha, double x);

// theta_{a,b}(z) = sum_k exp(-pi (k+a)^2 + 2 pi i (k+a)(z+b)), modulus tau = i.
// The index window is centred on the dominant term; when that term exceeds one
// the tolerance is read relative to it.
cplx jacobi_theta(double a, double b, cplx z, const TruncationPolicy& pol = {});

// sum_k exp(-pi (k+alpha)^2 + 2 pi i (z-beta)(k+alpha)) H_r(sqrt(2 pi)(k+alpha+Im z)).
cplx hermite_theta(int r, double alpha, double beta, cplx z, const TruncationPolicy& pol = {});

// prod_{k>0}(1 - e^{2 beta pi (z-k)}) prod_{k<0}(1 - e^{2 beta pi (k-z)}).
// Periodic under z -> z + i/beta and vanishing on the nonzero integers.
cplx gbeta_dualgrid(double beta, cplx z, const TruncationPolicy& pol = {});

// Logarithm of gbeta_dualgrid (any branch); -inf real part at its zeros.
cplx log_gbeta_dualgrid(double beta, cplx z, const TruncationPolicy& pol = {});

// e^{-pi z^2/2} gbeta_dualgrid(beta, z)^{r+1}, evaluated in log space.
cplx hbeta(int r, double beta, cplx z, const TruncationPolicy& pol = {});

// Schoenberg-type factorization of a totally positive window's Fourier transform.
struct TPFactorization {
  double c = 1.0;
  double gamma = 0.0;
  double nu_shift = 0.0;
  std::vector<double> nu_j;

  void validate() const;
};

// c e^{-gamma xi^2} e^{2 pi i nu_shift xi} prod_j (1 + 2 pi i nu_j xi)^{-1} e^{-2 pi i nu_j xi}.
cplx tp_window_ft(const TPFactorization& fac, double xi);

}  // namespace cylgabor

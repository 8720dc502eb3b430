#pragma once

#include <functional>
#include <optional>

#include "cylgabor/common.hpp"
#include "cylgabor/qp_signal.hpp"

namespace cylgabor {

// Automorphy F(z + gamma) = chi(gamma) e^{pi |gamma|^2/2 + pi z conj(gamma)} F(z) on a lattice.
struct QuasiPeriod {
  enum class Lattice { unit, dual };  // gamma = 1 (character e^{2 pi i nu}) or gamma = i/beta (chi_l)
  Lattice lattice = Lattice::unit;
  double character = 0.0;  // nu for the unit lattice, l for the dual one
  double beta = 1.0;
};

// |F(u)| e^{-pi |u|^2 / 2} <= amp * exp(-rate * max(0, |Im u| - shift)^2).
struct FockDecay {
  double amp = 1.0;
  double rate = pi;
  double shift = 0.0;

  double operator()(cplx u) const;
};

struct HoloFn {
  std::function<cplx(cplx)> eval;
  std::optional<QuasiPeriod> quasi_period;
  std::optional<FockDecay> decay;

  cplx operator()(cplx z) const { return eval(z); }
};

// M(z) = e^{-i pi x xi + pi |z|^2 / 2}.
cplx multiplier(cplx z);

// sum_k a_k e^{pi z^2/2 + 2 pi i z (nu+k) - pi (nu+k)^2}, which equals 2^{-1/4} M(z) V_{h0} f(x, -xi).
cplx bargmann_eval(const QPSignal& f, cplx z);

// 2^{-1/4} M(z) V_{h_r} f(x, -xi); equals (pi^r r!)^{-1/2} (d/dz - pi conj z)^r B f(z).
cplx true_bargmann_eval(int r, const QPSignal& f, cplx z);

// The Bargmann image as a HoloFn carrying its automorphy and decay data.
HoloFn bargmann_fn(const QPSignal& f);

// tau(w) F(z) = e^{pi z conj(w) - pi |w|^2 / 2} F(z - w).
cplx weyl_translate(const HoloFn& F, cplx w, cplx z);

// Reproducing kernel of the analytic space; Poincare form.
cplx fock_kernel_analytic(double nu, cplx z, cplx w, const TruncationPolicy& pol = {});

// sqrt 2 e^{pi (z^2 + conj(w)^2)/2} sum_k e^{-2 pi (k+nu)^2 + 2 pi i (k+nu)(z - conj w)}.
cplx fock_kernel_analytic_theta(double nu, cplx z, cplx w, const TruncationPolicy& pol = {});

// Kernel of the true polyanalytic space of level r.
cplx fock_kernel_true(int r, double nu, cplx z, cplx w, const TruncationPolicy& pol = {});

// Kernel of the polyanalytic space of order N (Laguerre L^1_{N-1} form).
cplx fock_kernel_poly(int N, double nu, cplx z, cplx w, const TruncationPolicy& pol = {});

// The same kernel as the sum of the true kernels of levels 0..N-1.
cplx fock_kernel_poly_sum(int N, double nu, cplx z, cplx w, const TruncationPolicy& pol = {});

// sum_{gamma in i Z / beta} chi_l(gamma) e^{-pi z conj(gamma) - pi |gamma|^2/2} F(z + gamma).
cplx complex_periodize(const HoloFn& F, double beta, int l, cplx z, const TruncationPolicy& pol = {});

// Trapezoid-rule Cauchy integral on a circle with 64 (order+1) nodes.
cplx cauchy_derivative(const std::function<cplx(cplx)>& F, cplx z, int order, double radius = 0.5);

// (d/dz - pi conj z)^r F at z for holomorphic F.
cplx raising_apply(const std::function<cplx(cplx)>& F, int r, cplx z, double radius = 0.5);

// int_0^1 int_{xi0}^{xi1} F conj(G) e^{-pi |z|^2} by trapezoid in x and Gauss panels in xi.
cplx fock_inner_product(const std::function<cplx(cplx)>& F, const std::function<cplx(cplx)>& G, double xi0,
                        double xi1, int nx = 64);

}  // namespace cylgabor

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cylgabor/common.hpp"
#include "cylgabor/window.hpp"

namespace cylgabor {

// f(t) = sum_k a_k e^{2 pi i t (nu + k)}, an element of L2_nu(0,1) with finitely many modes.
struct QPSignal {
  double nu = 0.0;
  std::map<int, cplx> coeffs;

  int K() const;
  double norm_squared() const;
  cplx coeff(int k) const;
};

QPSignal make_signal(double nu, const std::vector<std::pair<int, cplx>>& entries);

cplx eval_signal(const QPSignal& f, double t);

// sum_k a_k conj(b_k); both signals must share nu.
cplx inner_product(const QPSignal& f1, const QPSignal& f2);

// sum_k e^{2 pi i k nu} (M_xi T_x g)(t - k), truncated by the window's time envelope.
cplx periodize_shift(const Window& g, CylinderPoint z, double nu, double t, const TruncationPolicy& pol = {});

}  // namespace cylgabor

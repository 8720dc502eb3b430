#pragma once

#include <Eigen/Dense>

#include "cylgabor/common.hpp"
#include "cylgabor/qp_signal.hpp"
#include "cylgabor/window.hpp"

namespace cylgabor {

// Uniform grid over [x0, x1] x [xi0, xi1], endpoints included.
struct GridSpec {
  double x0 = 0.0, x1 = 1.0;
  int nx = 2;
  double xi0 = -1.0, xi1 = 1.0;
  int nxi = 2;

  void validate() const;
  double x(int i) const { return x0 + (x1 - x0) * i / (nx - 1); }
  double xi(int j) const { return xi0 + (xi1 - xi0) * j / (nxi - 1); }
};

// V_g f(x, xi) = sum_k a_k e^{2 pi i x (nu + k - xi)} F(conj g)(xi - nu - k).
cplx stft_eval(const QPSignal& f, const Window& g, CylinderPoint p);

// Rows follow xi, columns follow x.
Eigen::MatrixXcd stft_grid(const QPSignal& f, const Window& g, const GridSpec& grid);

// <V_{g1} f1, V_{g2} f2> over (0,1) x R, evaluated in coefficient space.
cplx stft_inner_product(const QPSignal& f1, const Window& g1, const QPSignal& f2, const Window& g2);

// Reproducing kernel sum_k V_g e_k(z) conj(V_g e_k(w)) of the Gabor space, so that
// V_g f(w) = <V_g f, K(., w)>.
cplx gabor_kernel(const Window& g, double nu, CylinderPoint z, CylinderPoint w, const TruncationPolicy& pol = {});

// Closed Poincare form for the Gaussian window. It equals gabor_kernel with the
// arguments exchanged, i.e. conj(gabor_kernel(z, w)).
cplx kernel_gaussian_closed(double nu, CylinderPoint z, CylinderPoint w, const TruncationPolicy& pol = {});

// Laguerre-weighted closed form for the Hermite window h_r, same convention as above.
cplx kernel_hermite_closed(int r, double nu, CylinderPoint z, CylinderPoint w, const TruncationPolicy& pol = {});

}  // namespace cylgabor

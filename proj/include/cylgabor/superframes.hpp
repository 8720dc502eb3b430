#pragma once

#include <vector>

#include "cylgabor/frames.hpp"
#include "cylgabor/qp_signal.hpp"
#include "cylgabor/stft.hpp"
#include "cylgabor/window.hpp"

namespace cylgabor {

struct VectorSignal {
  double nu = 0.0;
  std::vector<QPSignal> channels;

  void validate() const;
  std::size_t N() const { return channels.size(); }
  double norm_squared() const;
};

// Pairwise orthonormal analysis windows, one per channel.
class VectorWindow {
 public:
  explicit VectorWindow(std::vector<Window> windows, double ortho_tol = 1e-8);
  // (h_0, ..., h_{N-1})
  static VectorWindow hermite(int N);

  std::size_t N() const { return windows_.size(); }
  const Window& operator[](std::size_t i) const { return windows_[i]; }
  const std::vector<Window>& windows() const { return windows_; }

 private:
  std::vector<Window> windows_;
};

// sum_i V_{g_i} f_i(p)
cplx vector_stft(const VectorSignal& F, const VectorWindow& G, CylinderPoint p);

// <V_G F1, V_G F2> over the strip, in coefficient space.
cplx vector_stft_inner_product(const VectorSignal& F1, const VectorSignal& F2, const VectorWindow& G);

// Rows n in [-N, N]; column i (2K+1) + (k + K) holds F(conj g_i)(beta n - nu - k).
AnalysisMatrix super_analysis_matrix(const VectorWindow& G, double beta, double nu, int K, double tol = 1e-12);

FrameBounds super_frame_bounds(const VectorWindow& G, double beta, double nu, int K, double tol = 1e-12);

// Wexler-Raz table with the vector bracket <gamma, M_k T_{n/beta} g> = sum_i <gamma_i, M_k T_{n/beta} g_i>.
// Gamma needs no orthonormality, so it is passed as plain windows.
Eigen::MatrixXcd super_wr_table(const VectorWindow& G, const std::vector<Window>& Gamma, double beta,
                                IndexRange k_range, IndexRange l_range, int n_tail = -1, double tol = 1e-12);

double super_wr_residual(const VectorWindow& G, const std::vector<Window>& Gamma, double beta, IndexRange k_range,
                         IndexRange l_range, int n_tail = -1, double tol = 1e-12);

// Channel-diagonal candidate: scalar duals of each channel scaled by 1/N.
std::vector<Window> channel_diagonal_duals(const VectorWindow& G, Rational beta);

inline constexpr int kMaxSuperChannels = 16;

// sum_r B_r f_r(z), with B_r the true Bargmann transform of level r.
cplx super_bargmann(const VectorSignal& F, cplx z);

PredicateResult super_sufficient_predicate(int N, double beta);

}  // namespace cylgabor

#include "cylgabor/superframes.hpp"

#include <cmath>

#include "cylgabor/fock.hpp"

namespace cylgabor {

void VectorSignal::validate() const {
  if (channels.empty()) throw std::domain_error("VectorSignal: no channels");
  for (const auto& c : channels)
    if (c.nu != nu) throw std::domain_error("VectorSignal: channels must share nu");
}

double VectorSignal::norm_squared() const {
  double s = 0.0;
  for (const auto& c : channels) s += c.norm_squared();
  return s;
}

VectorWindow::VectorWindow(std::vector<Window> windows, double ortho_tol) : windows_(std::move(windows)) {
  if (windows_.empty()) throw std::domain_error("VectorWindow: no windows");
  for (std::size_t i = 0; i < windows_.size(); ++i)
    for (std::size_t j = i; j < windows_.size(); ++j) {
      const cplx ip = window_inner(windows_[i], windows_[j]);
      const double want = i == j ? 1.0 : 0.0;
      if (std::abs(ip - want) > ortho_tol)
        throw std::domain_error("VectorWindow: windows " + std::to_string(i) + " and " + std::to_string(j) +
                                " are not orthonormal (inner product " + std::to_string(std::abs(ip)) + ")");
    }
}

VectorWindow VectorWindow::hermite(int N) {
  if (N < 1 || N > kMaxSuperChannels) throw std::domain_error("VectorWindow::hermite: N must lie in [1, 16]");
  std::vector<Window> w;
  for (int r = 0; r < N; ++r) w.push_back(r == 0 ? Window::gaussian() : Window::hermite(r));
  return VectorWindow(std::move(w));
}

namespace {

void check_channels(const VectorSignal& F, const VectorWindow& G) {
  F.validate();
  if (F.N() != G.N())
    throw std::domain_error("channel count mismatch: " + std::to_string(F.N()) + " signals, " +
                            std::to_string(G.N()) + " windows");
}

}  // namespace

cplx vector_stft(const VectorSignal& F, const VectorWindow& G, CylinderPoint p) {
  check_channels(F, G);
  cplx acc = 0.0;
  for (std::size_t i = 0; i < F.N(); ++i) acc += stft_eval(F.channels[i], G[i], p);
  return acc;
}

cplx vector_stft_inner_product(const VectorSignal& F1, const VectorSignal& F2, const VectorWindow& G) {
  check_channels(F1, G);
  check_channels(F2, G);
  cplx acc = 0.0;
  for (std::size_t i = 0; i < G.N(); ++i)
    for (std::size_t j = 0; j < G.N(); ++j) acc += stft_inner_product(F1.channels[i], G[i], F2.channels[j], G[j]);
  return acc;
}

AnalysisMatrix super_analysis_matrix(const VectorWindow& G, double beta, double nu, int K, double tol) {
  std::vector<AnalysisMatrix> parts;
  int N = 0;
  for (const auto& g : G.windows()) {
    parts.push_back(analysis_matrix(FrameSpec{g, beta, nu, K, tol}));
    N = std::max(N, parts.back().N);
  }
  if (parts.size() == 1) return parts.front();
  AnalysisMatrix am;
  am.N = N;
  am.K = K;
  const int cols = 2 * K + 1;
  am.M = Eigen::MatrixXcd::Zero(2 * N + 1, cols * Eigen::Index(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int off = N - parts[i].N;
    am.M.block(off, Eigen::Index(i) * cols, parts[i].M.rows(), cols) = parts[i].M;
  }
  return am;
}

FrameBounds super_frame_bounds(const VectorWindow& G, double beta, double nu, int K, double tol) {
  if (K > 512) throw std::domain_error("super_frame_bounds: K above 512");
  const AnalysisMatrix am = super_analysis_matrix(G, beta, nu, K, tol);
  const auto [A, B] = extremal_eigenvalues(am.M);
  const auto [Ah, Bh] = extremal_eigenvalues(super_analysis_matrix(G, beta, nu, std::max(1, K / 2), tol).M);
  FrameBounds fb;
  fb.A = std::max(A, 0.0);
  fb.B = B;
  fb.K = am.K;
  fb.N = am.N;
  fb.convergence = std::abs(A - Ah) / std::max(std::abs(A), 1e-300);
  return fb;
}

Eigen::MatrixXcd super_wr_table(const VectorWindow& G, const std::vector<Window>& Gamma, double beta,
                                IndexRange k_range, IndexRange l_range, int n_tail, double tol) {
  if (Gamma.size() != G.N()) throw std::domain_error("super_wr_table: channel count mismatch");
  if (n_tail < 0) {
    double reach = 0.0;
    for (std::size_t i = 0; i < G.N(); ++i)
      reach = std::max(reach, G[i].time_envelope().cutoff(tol) + Gamma[i].time_envelope().cutoff(tol));
    n_tail = static_cast<int>(std::ceil(beta * reach));
  }
  // Each scalar table is the channel bracket sum minus delta_{k0}; add the deltas back
  // for all but one channel.
  Eigen::MatrixXcd table = wexler_raz_table(G[0], Gamma[0], beta, k_range, l_range, n_tail, tol);
  for (std::size_t i = 1; i < G.N(); ++i) {
    table += wexler_raz_table(G[i], Gamma[i], beta, k_range, l_range, n_tail, tol);
    if (k_range.lo <= 0 && 0 <= k_range.hi) table.row(-k_range.lo).array() += 1.0;
  }
  return table;
}

double super_wr_residual(const VectorWindow& G, const std::vector<Window>& Gamma, double beta, IndexRange k_range,
                         IndexRange l_range, int n_tail, double tol) {
  return super_wr_table(G, Gamma, beta, k_range, l_range, n_tail, tol).cwiseAbs().maxCoeff();
}

std::vector<Window> channel_diagonal_duals(const VectorWindow& G, Rational beta) {
  std::vector<Window> out;
  const double w = 1.0 / double(G.N());
  for (const auto& g : G.windows()) {
    SampledWindow s = *dual_window(g, beta).gamma.samples();
    for (auto& v : s.values) v *= w;
    out.push_back(Window::sampled(std::move(s)));
  }
  return out;
}

cplx super_bargmann(const VectorSignal& F, cplx z) {
  F.validate();
  if (F.N() > kMaxSuperChannels) throw std::domain_error("super_bargmann: more than 16 channels");
  cplx acc = 0.0;
  for (std::size_t r = 0; r < F.N(); ++r) acc += true_bargmann_eval(int(r), F.channels[r], z);
  return acc;
}

PredicateResult super_sufficient_predicate(int N, double beta) {
  if (N < 1) throw std::domain_error("super_sufficient_predicate: N must be positive");
  if (!(beta > 0.0)) throw std::domain_error("super_sufficient_predicate: beta must be positive");
  if (beta < 1.0 / N)
    return {Verdict::frame, "hermite vector of length " + std::to_string(N) + ": beta < 1/N"};
  if (N == 1) return {Verdict::not_frame, "gaussian window: no frame when 1/beta <= 1"};
  return {Verdict::unknown, "hermite vector of length " + std::to_string(N) + ": outside beta < 1/N"};
}

}  // namespace cylgabor

#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "cylgabor/common.hpp"
#include "cylgabor/qp_signal.hpp"
#include "cylgabor/window.hpp"

namespace cylgabor {

// beta = p/q in lowest terms.
struct Rational {
  long p = 1;
  long q = 1;

  double value() const { return double(p) / double(q); }
  // Accepts "p/q" or a decimal; decimals must match a fraction with denominator <= max_den.
  static Rational parse(const std::string& text, long max_den = 10000);
  static std::optional<Rational> from_double(double x, long max_den = 10000);
};

struct FrameSpec {
  Window window;
  double beta = 0.5;
  double nu = 0.0;
  int K = 32;
  double tol = 1e-12;

  void validate() const;
};

struct FrameBounds {
  double A = 0.0;
  double B = 0.0;
  int K = 0;
  int N = 0;
  double convergence = 0.0;  // relative change of A against the K/2 run
};

// Rows n in [-N, N], columns k in [-K, K], entries F(conj g)(beta n - nu - k).
struct AnalysisMatrix {
  Eigen::MatrixXcd M;
  int N = 0;
  int K = 0;
};

AnalysisMatrix analysis_matrix(const FrameSpec& fs);

// Extremal eigenvalues of M* M at K, with the K/2 run as convergence diagnostic.
FrameBounds frame_bounds(const FrameSpec& fs);

// Extremal eigenvalues of M* M, no diagnostic run.
std::pair<double, double> extremal_eigenvalues(const Eigen::MatrixXcd& M);

// Coefficients of S f = M* M a on a mode range wide enough to hold the image.
QPSignal frame_apply(const FrameSpec& fs, const QPSignal& f);

// G_n(x) = sum_k conj(g(x - n/beta - k)) gamma(x - k).
cplx correlation_fn(const Window& g, const Window& gamma, double beta, int n, double x,
                    const TruncationPolicy& pol = {});

// <gamma, M_k T_{n/beta} g> on L2(R).
cplx janssen_coeffs(const Window& g, const Window& gamma, double beta, int k, int n, double tol = 1e-12);

struct IndexRange {
  int lo = -3;
  int hi = 3;
};

// beta^{-1} sum_{|n| <= n_tail} <gamma, M_k T_{n/beta} g> e^{2 pi i n l / beta} - delta_{k0}.
// n_tail < 0 picks the tail from the time envelopes.
Eigen::MatrixXcd wexler_raz_table(const Window& g, const Window& gamma, double beta, IndexRange k_range,
                                  IndexRange l_range, int n_tail = -1, double tol = 1e-12);

double wexler_raz_residual(const Window& g, const Window& gamma, double beta, IndexRange k_range,
                           IndexRange l_range, int n_tail = -1, double tol = 1e-12);

class NotAFrame : public std::runtime_error {
 public:
  NotAFrame(const std::string& what, double singular_value)
      : std::runtime_error(what), singular_value_(singular_value) {}
  double singular_value() const noexcept { return singular_value_; }

 private:
  double singular_value_;
};

struct DualWindow {
  Window gamma;
  double min_singular = 0.0;  // square roots of the extremal frame-operator eigenvalues
  double max_singular = 0.0;
  double period = 0.0;        // length of the periodized problem
};

// Canonical dual of the L2(R) Gabor system with time step 1 and frequency step beta = p/q.
// The frame operator is periodized to length L (a multiple of q) and decouples into
// independent blocks along cosets of the shift q/p.
DualWindow dual_window(const Window& g, Rational beta, double grid_step = 1.0 / 32.0, double half_width = 8.0,
                       double tol = 1e-10);

// Coefficients of sum_n c_n Sigma_nu(M_{beta n} gamma) for n in [-(size-1)/2, (size-1)/2].
QPSignal reconstruct(const FrameSpec& fs, const std::vector<cplx>& samples, const Window& gamma);

// Samples V_g f(0, beta n) for |n| <= N with N taken from the analysis matrix.
std::vector<cplx> frame_samples(const FrameSpec& fs, const QPSignal& f);

enum class Verdict { frame, not_frame, unknown };

struct PredicateResult {
  Verdict verdict = Verdict::unknown;
  std::string certificate;
};

std::string to_string(Verdict v);

PredicateResult sufficient_frame_predicate(const Window& g, double beta, bool beta_rational);

}  // namespace cylgabor

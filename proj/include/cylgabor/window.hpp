#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cylgabor/common.hpp"
#include "cylgabor/special_fn.hpp"

namespace cylgabor {

// A bound |h(u)| <= bound(|u|) with bound nonincreasing on [0, inf).
class Envelope {
 public:
  explicit Envelope(std::function<double(double)> bound) : bound_(std::move(bound)) {}

  // amp * exp(-gauss u^2 - expo |u|)
  static Envelope decaying(double amp, double gauss, double expo);

  double operator()(double u) const { return bound_(std::abs(u)); }

  // Smallest radius (to within 1e-3) past which the bound stays below tol.
  double cutoff(double tol) const;

 private:
  std::function<double(double)> bound_;
};

// Uniform grid samples of a window on L2(R).
struct SampledWindow {
  double t0 = 0.0;
  double step = 0.0;
  std::vector<cplx> values;

  double t(std::size_t j) const { return t0 + step * double(j); }
  double t_end() const { return t(values.size() - 1); }
};

enum class WindowKind { gaussian, hermite, totally_positive, sampled, custom };

// Analysis window g in L2(R): time values g(t) and Fourier values F(conj g)(xi).
class Window {
 public:
  static Window gaussian();
  static Window hermite(int r);
  // Rescales c so the window has unit norm.
  static Window totally_positive(TPFactorization fac);
  // Cubic-spline interpolant of the samples; unit norm is not required.
  static Window sampled(SampledWindow samples);
  static Window custom(std::function<cplx(double)> time, std::function<cplx(double)> ft_conj,
                       std::optional<Envelope> time_env, std::optional<Envelope> freq_env,
                       std::string label = "custom");

  WindowKind kind() const { return kind_; }
  int order() const { return order_; }
  const TPFactorization& factorization() const { return tp_; }
  const std::string& label() const { return label_; }

  cplx time(double t) const { return time_(t); }
  cplx ft_conj(double xi) const { return ft_conj_(xi); }

  bool has_decay() const { return time_env_.has_value() && freq_env_.has_value(); }
  const Envelope& time_envelope() const;
  const Envelope& freq_envelope() const;

  // Present for sampled windows; quadratures then run on the sample grid.
  const SampledWindow* samples() const { return samples_.get(); }

 private:
  Window() = default;

  WindowKind kind_ = WindowKind::custom;
  int order_ = 0;
  TPFactorization tp_;
  std::string label_;
  std::function<cplx(double)> time_;
  std::function<cplx(double)> ft_conj_;
  std::optional<Envelope> time_env_;
  std::optional<Envelope> freq_env_;
  std::shared_ptr<const SampledWindow> samples_;
};

// <g1, g2> on L2(R). Uses the sample grid when either window is sampled.
cplx window_inner(const Window& g1, const Window& g2, double tol = 1e-14);

// L2(R) norm of the window computed by quadrature in the time domain.
double window_norm(const Window& g);

}  // namespace cylgabor

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cylgabor {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

// Cutoff control for every infinite series or product in the library.
struct TruncationPolicy {
  double abs_tol = 1e-12;
  int max_terms = 512;

  void validate() const {
    if (!(abs_tol > 0.0)) throw std::domain_error("TruncationPolicy: abs_tol must be positive");
    if (max_terms < 8) throw std::domain_error("TruncationPolicy: max_terms must be at least 8");
  }
  TruncationPolicy doubled() const { return {abs_tol, 2 * max_terms}; }
};

// Thrown when a truncated series cannot reach the requested tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double tail_estimate)
      : std::runtime_error(what + " (tail estimate " + std::to_string(tail_estimate) + ")"),
        tail_(tail_estimate) {}
  double tail_estimate() const noexcept { return tail_; }

 private:
  double tail_;
};

// A point z = x + i xi of the cylinder [0,1) x R.
struct CylinderPoint {
  double x = 0.0;
  double xi = 0.0;

  cplx z() const { return {x, xi}; }
  static CylinderPoint from(cplx z) { return {z.real(), z.imag()}; }
  CylinderPoint canonical() const;
};

// Number of worker threads, capped by CYLGABOR_THREADS when set.
unsigned worker_count();

// Runs body(i) for i in [0, n), split across worker_count() threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cylgabor

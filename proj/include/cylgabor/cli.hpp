#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "cylgabor/frames.hpp"
#include "cylgabor/sampling.hpp"
#include "cylgabor/stft.hpp"
#include "cylgabor/window.hpp"

namespace cylgabor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Bad flag values or input files. Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// gaussian | hermite:R | tp:FILE
Window parse_window(const std::string& text);

// x0,x1,nx,xi0,xi1,nxi
GridSpec parse_grid(const std::string& text);

// "x,xi"
CylinderPoint parse_point(const std::string& text);

struct Beta {
  double value = 0.0;
  bool rational = false;
  Rational exact;
};

// RAT | REAL; reals that match a small fraction count as rational.
Beta parse_beta(const std::string& text);

// Points of a file as a vertical lattice offset + i beta n, |n| <= n_max, when they are one,
// otherwise a finite set whose extent is the span of its heights.
PointSet detect_structure(std::vector<CylinderPoint> pts);

// Full driver. Reports go to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cylgabor::cli

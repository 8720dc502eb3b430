#pragma once

#include <optional>
#include <vector>

#include "cylgabor/common.hpp"

namespace cylgabor {

// A finite list of cylinder points together with the structure that generated it.
// Lattice and periodic sets store a finite window of their points; densities and
// separation use the structure where it is known exactly.
struct PointSet {
  enum class Structure { finite, vertical_lattice, periodic };

  Structure structure = Structure::finite;
  std::vector<CylinderPoint> points;

  // vertical_lattice: offset + i beta n
  double beta = 0.0;
  CylinderPoint offset;
  // periodic: base + i period m
  double period = 0.0;
  std::vector<CylinderPoint> base;
  // finite: vertical window outside which the set is known to be empty
  double extent_lo = 0.0;
  double extent_hi = 0.0;

  static PointSet finite(std::vector<CylinderPoint> pts);
  static PointSet finite(std::vector<CylinderPoint> pts, double extent_lo, double extent_hi);
  static PointSet vertical_lattice(double beta, int n_max, CylinderPoint offset = {});
  static PointSet periodic(double period, std::vector<CylinderPoint> base, int n_periods);

  void validate() const;
  std::size_t size() const { return points.size(); }
};

// Distance on the cylinder, x taken mod 1.
double cylinder_distance(CylinderPoint a, CylinderPoint b);

// Minimal pairwise distance; exactly beta for vertical lattices.
double separation(const PointSet& Z);

struct DensityStep {
  double r = 0.0;
  double lower = 0.0;
  double upper = 0.0;
};

struct DensityReport {
  double lower = 0.0;  // estimate at r_max
  double upper = 0.0;
  std::optional<double> exact;  // lattice and periodic sets
  bool window_limited = false;  // finite sets: only the declared extent is scanned
  std::vector<DensityStep> history;
};

// Counts in [0,1] x [w - r/2, w + r/2] divided by r, inf/sup over a w-grid of 64 points
// per unit length, for r growing geometrically from 1 to r_max.
DensityReport beurling_density(const PointSet& Z, double r_max, int r_steps);

// g(z) = e^{pi z^2/2} prod_{Im z_k >= 0} (1 - e^{2 pi i (z_k - z)}) prod_{Im z_k < 0} (1 - e^{2 pi i (z - z_k)})
// over the given nodes, which must be ordered by increasing Im. Unrelated to gbeta_dualgrid,
// which is the product over the dual grid i Z / beta.
cplx node_product_g(const PointSet& nodes, cplx z);

// log g(z) on some branch; real part -inf at a node.
cplx node_product_log(const PointSet& nodes, cplx z);

// log g'(z_k), with the vanishing factor differentiated analytically.
cplx node_product_logderiv(const PointSet& nodes, std::size_t k);

struct SeriesValue {
  cplx value;
  double tail_estimate = 0.0;  // size of the outermost terms
};

// 2 pi i sum_k f(z_k) e^{2 pi i nu (z - z_k)} g(z) / (g'(z_k) (1 - e^{2 pi i (z_k - z)})),
// exact for f in the analytic space of character nu when the nodes are the full set.
SeriesValue sample_reconstruct(const PointSet& nodes, const std::vector<cplx>& values, cplx z, double nu = 0.0);

inline constexpr int kMaxInterpolationOrder = 4;

// Function of the true polyanalytic space of level r taking the given values at the nodes.
// Requires D+ < 1/(r+1) whenever the set's density is known exactly. The result has character
// nu = 0: F(z + 1) = e^{pi/2 + pi z} F(z). Each term's Gaussian centre height is the integer that minimises the peak of
// its weighted envelope, so e^{-pi|z|^2/2}|F| stays bounded relative to the weighted data.
cplx interpolate_true(int r, const PointSet& nodes, const std::vector<cplx>& values, cplx z);

// interpolate_true(...) e^{-pi |z|^2 / 2}, with the weight applied in log space.
cplx interpolate_true_weighted(int r, const PointSet& nodes, const std::vector<cplx>& values, cplx z);

}  // namespace cylgabor

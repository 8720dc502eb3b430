#include "cylgabor/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "jet.hpp"

namespace cylgabor {

namespace {

constexpr double kNodeTol = 1e-13;

std::vector<double> sorted_imag(const std::vector<CylinderPoint>& pts) {
  std::vector<double> ys;
  ys.reserve(pts.size());
  for (const auto& p : pts) ys.push_back(p.xi);
  std::sort(ys.begin(), ys.end());
  return ys;
}

void check_ordered(const PointSet& nodes) {
  for (std::size_t k = 1; k < nodes.points.size(); ++k)
    if (!(nodes.points[k].xi > nodes.points[k - 1].xi))
      throw std::domain_error("node product: nodes must be ordered by strictly increasing Im");
}

// log of the factor attached to node c, evaluated at z.
cplx log_factor(cplx c, cplx z) {
  if (c.imag() >= 0.0) return detail::log1mexp(2.0 * pi * I * (c - z));
  return detail::log1mexp(2.0 * pi * I * (z - c));
}

bool same_point(cplx a, cplx b) { return std::abs(a - b) <= kNodeTol; }

// Nonzero integer m with z = c + m, if any.
std::optional<long> integer_offset(cplx z, cplx c) {
  const cplx d = z - c;
  const double m = std::round(d.real());
  if (std::abs(d.imag()) <= kNodeTol && std::abs(d.real() - m) <= kNodeTol) return static_cast<long>(m);
  return std::nullopt;
}

}  // namespace

PointSet PointSet::finite(std::vector<CylinderPoint> pts) {
  double lo = 0.0, hi = 0.0;
  if (!pts.empty()) {
    auto [mn, mx] = std::minmax_element(pts.begin(), pts.end(),
                                        [](const CylinderPoint& a, const CylinderPoint& b) { return a.xi < b.xi; });
    lo = mn->xi;
    hi = mx->xi;
  }
  return finite(std::move(pts), lo, hi);
}

PointSet PointSet::finite(std::vector<CylinderPoint> pts, double extent_lo, double extent_hi) {
  PointSet s;
  s.structure = Structure::finite;
  s.points = std::move(pts);
  s.extent_lo = extent_lo;
  s.extent_hi = extent_hi;
  s.validate();
  return s;
}

PointSet PointSet::vertical_lattice(double beta, int n_max, CylinderPoint offset) {
  if (!(beta > 0.0)) throw std::domain_error("vertical_lattice: beta must be positive");
  if (n_max < 0) throw std::domain_error("vertical_lattice: n_max must be nonnegative");
  PointSet s;
  s.structure = Structure::vertical_lattice;
  s.beta = beta;
  s.offset = offset;
  for (int n = -n_max; n <= n_max; ++n) s.points.push_back({offset.x, offset.xi + beta * n});
  s.validate();
  return s;
}

PointSet PointSet::periodic(double period, std::vector<CylinderPoint> base, int n_periods) {
  if (!(period > 0.0)) throw std::domain_error("periodic point set: period must be positive");
  if (base.empty()) throw std::domain_error("periodic point set: empty base");
  if (n_periods < 0) throw std::domain_error("periodic point set: n_periods must be nonnegative");
  PointSet s;
  s.structure = Structure::periodic;
  s.period = period;
  s.base = std::move(base);
  for (int m = -n_periods; m <= n_periods; ++m)
    for (const auto& b : s.base) s.points.push_back({b.x, b.xi + period * m});
  std::sort(s.points.begin(), s.points.end(),
            [](const CylinderPoint& a, const CylinderPoint& b) { return a.xi < b.xi || (a.xi == b.xi && a.x < b.x); });
  s.validate();
  return s;
}

void PointSet::validate() const {
  std::vector<CylinderPoint> c;
  c.reserve(points.size());
  for (const auto& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.xi)) throw std::domain_error("point set: non-finite point");
    c.push_back(p.canonical());
  }
  std::sort(c.begin(), c.end(),
            [](const CylinderPoint& a, const CylinderPoint& b) { return a.xi < b.xi || (a.xi == b.xi && a.x < b.x); });
  for (std::size_t i = 1; i < c.size(); ++i)
    if (c[i].xi == c[i - 1].xi && c[i].x == c[i - 1].x) throw std::domain_error("point set: repeated point");

  switch (structure) {
    case Structure::finite:
      if (extent_hi < extent_lo) throw std::domain_error("point set: empty extent");
      for (const auto& p : points)
        if (p.xi < extent_lo || p.xi > extent_hi) throw std::domain_error("point set: point outside declared extent");
      break;
    case Structure::vertical_lattice: {
      if (!(beta > 0.0)) throw std::domain_error("vertical lattice: beta must be positive");
      for (const auto& p : points) {
        const double n = (p.xi - offset.xi) / beta;
        if (std::abs(p.x - offset.x) > 1e-12 || std::abs(n - std::round(n)) > 1e-9)
          throw std::domain_error("vertical lattice: point does not lie on the lattice");
      }
      break;
    }
    case Structure::periodic: {
      if (!(period > 0.0)) throw std::domain_error("periodic point set: period must be positive");
      for (const auto& p : points) {
        bool ok = false;
        for (const auto& b : base) {
          const double m = (p.xi - b.xi) / period;
          if (std::abs(p.x - b.x) <= 1e-12 && std::abs(m - std::round(m)) <= 1e-9) ok = true;
        }
        if (!ok) throw std::domain_error("periodic point set: point is not a translate of a base point");
      }
      break;
    }
  }
}

double cylinder_distance(CylinderPoint a, CylinderPoint b) {
  double dx = std::fmod(std::abs(a.x - b.x), 1.0);
  dx = std::min(dx, 1.0 - dx);
  return std::hypot(dx, a.xi - b.xi);
}

namespace {

double sweep_separation(std::vector<CylinderPoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const CylinderPoint& a, const CylinderPoint& b) { return a.xi < b.xi; });
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size() && pts[j].xi - pts[i].xi < best; ++j)
      best = std::min(best, cylinder_distance(pts[i], pts[j]));
  return best;
}

}  // namespace

double separation(const PointSet& Z) {
  switch (Z.structure) {
    case PointSet::Structure::vertical_lattice:
      return Z.beta;
    case PointSet::Structure::periodic: {
      std::vector<CylinderPoint> pts;
      for (int m = -1; m <= 1; ++m)
        for (const auto& b : Z.base) pts.push_back({b.x, b.xi + Z.period * m});
      return std::min(sweep_separation(pts), Z.period);
    }
    case PointSet::Structure::finite:
      break;
  }
  if (Z.points.size() < 2) throw std::domain_error("separation: undefined for fewer than two points");
  return sweep_separation(Z.points);
}

DensityReport beurling_density(const PointSet& Z, double r_max, int r_steps) {
  if (!(r_max > 0.0)) throw std::domain_error("beurling_density: r_max must be positive");
  if (r_steps < 1) throw std::domain_error("beurling_density: r_steps must be positive");

  DensityReport rep;
  double w_lo = 0.0, w_hi = 0.0;
  std::vector<double> base_ys;
  double period = 0.0;
  switch (Z.structure) {
    case PointSet::Structure::vertical_lattice:
      period = Z.beta;
      base_ys = {Z.offset.xi};
      rep.exact = 1.0 / Z.beta;
      w_lo = Z.offset.xi;
      w_hi = Z.offset.xi + period;
      break;
    case PointSet::Structure::periodic:
      period = Z.period;
      for (const auto& b : Z.base) base_ys.push_back(b.xi);
      rep.exact = double(Z.base.size()) / Z.period;
      w_lo = 0.0;
      w_hi = period;
      break;
    case PointSet::Structure::finite:
      rep.window_limited = true;
      w_lo = Z.extent_lo;
      w_hi = Z.extent_hi;
      break;
  }

  std::vector<double> radii;
  const double r0 = std::min(1.0, r_max);
  for (int j = 0; j < r_steps; ++j)
    radii.push_back(r_steps == 1 ? r_max : r0 * std::pow(r_max / r0, double(j) / double(r_steps - 1)));

  // Im coordinates covering every window that is probed.
  std::vector<double> ys;
  if (period > 0.0) {
    const double lo = w_lo - r_max / 2.0 - period, hi = w_hi + r_max / 2.0 + period;
    for (double b : base_ys) {
      const long m0 = static_cast<long>(std::floor((lo - b) / period));
      const long m1 = static_cast<long>(std::ceil((hi - b) / period));
      for (long m = m0; m <= m1; ++m) ys.push_back(b + period * double(m));
    }
    std::sort(ys.begin(), ys.end());
  } else {
    ys = sorted_imag(Z.points);
  }

  const int nw = std::max(16, static_cast<int>(std::ceil(64.0 * (w_hi - w_lo))));
  for (double r : radii) {
    double lower = std::numeric_limits<double>::infinity(), upper = 0.0;
    for (int i = 0; i <= nw; ++i) {
      const double w = w_lo + (w_hi - w_lo) * double(i) / double(nw);
      const double a = w - r / 2.0, b = w + r / 2.0;
      const auto first = std::lower_bound(ys.begin(), ys.end(), a - 1e-12);
      const auto last = std::upper_bound(ys.begin(), ys.end(), b + 1e-12);
      const double density = double(last - first) / r;
      lower = std::min(lower, density);
      upper = std::max(upper, density);
    }
    rep.history.push_back({r, lower, upper});
  }
  rep.lower = rep.history.back().lower;
  rep.upper = rep.history.back().upper;
  return rep;
}

cplx node_product_log(const PointSet& nodes, cplx z) {
  check_ordered(nodes);
  cplx acc = pi * z * z / 2.0;
  for (const auto& p : nodes.points) acc += log_factor(p.z(), z);
  return acc;
}

cplx node_product_g(const PointSet& nodes, cplx z) {
  const cplx l = node_product_log(nodes, z);
  if (!std::isfinite(l.real())) return 0.0;
  return std::exp(l);
}

cplx node_product_logderiv(const PointSet& nodes, std::size_t k) {
  check_ordered(nodes);
  if (k >= nodes.points.size()) throw std::out_of_range("node_product_logderiv: node index out of range");
  const cplx zk = nodes.points[k].z();
  // d/dz (1 - e^{2 pi i (z_k - z)}) = 2 pi i and d/dz (1 - e^{2 pi i (z - z_k)}) = -2 pi i at z = z_k.
  cplx acc = pi * zk * zk / 2.0 + std::log(zk.imag() >= 0.0 ? 2.0 * pi * I : -2.0 * pi * I);
  for (std::size_t j = 0; j < nodes.points.size(); ++j)
    if (j != k) acc += log_factor(nodes.points[j].z(), zk);
  return acc;
}

SeriesValue sample_reconstruct(const PointSet& nodes, const std::vector<cplx>& values, cplx z, double nu) {
  if (values.size() != nodes.size()) throw std::domain_error("sample_reconstruct: one value per node required");
  check_ordered(nodes);
  const std::size_t n = nodes.size();
  if (n == 0) return {0.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    const cplx zk = nodes.points[k].z();
    if (same_point(z, zk)) return {values[k], 0.0};
    if (auto m = integer_offset(z, zk)) return {std::exp(2.0 * pi * I * nu * double(*m)) * values[k], 0.0};
  }
  const cplx lg = node_product_log(nodes, z);
  std::vector<cplx> terms(n);
  parallel_for(n, [&](std::size_t k) {
    if (values[k] == 0.0) return;
    const cplx zk = nodes.points[k].z();
    const cplx e = std::log(2.0 * pi * I) + 2.0 * pi * I * nu * (z - zk) + lg - node_product_logderiv(nodes, k) -
                   detail::log1mexp(2.0 * pi * I * (zk - z));
    terms[k] = values[k] * std::exp(e);
  });
  SeriesValue out{0.0, 0.0};
  for (const auto& t : terms) out.value += t;
  out.tail_estimate = std::abs(terms.front()) + std::abs(terms.back());
  if (n > 1) out.tail_estimate += std::abs(terms[1]) + std::abs(terms[n - 2]);
  return out;
}

namespace {

using J = detail::Jet<kMaxInterpolationOrder>;

double binomial(int n, int k) {
  double b = 1.0;
  for (int i = 1; i <= k; ++i) b = b * double(n - k + i) / double(i);
  return b;
}

// Jet of the factor attached to node c at z, either as a log (far) or directly (near).
struct FactorJet {
  bool near = false;
  J jet;
};

FactorJet factor_jet(cplx c, cplx z) {
  const bool upper = c.imag() >= 0.0;
  const cplx w0 = upper ? 2.0 * pi * I * (c - z) : 2.0 * pi * I * (z - c);
  const cplx s = upper ? -2.0 * pi * I : 2.0 * pi * I;
  const cplx f0 = 1.0 - std::exp(w0);
  if (w0.real() <= 1.0 && std::abs(f0) < 0.5) return {true, detail::one_minus_exp<kMaxInterpolationOrder>(w0, s)};
  return {false, detail::log_one_minus_exp<kMaxInterpolationOrder>(w0, s)};
}

}  // namespace

namespace {

// Peak over y of the weighted log-envelope of term n when its Gaussian sits at height m. Each factor
// |1 - e^w| is replaced by e^{max(0, Re w)}, which makes the envelope piecewise quadratic in y with
// breaks at the node heights; the peak is found by walking the pieces outward from y_n, where it is 0.
double envelope_peak(int r, const std::vector<double>& y, std::size_t n, long m) {
  const double yn = y[n];
  const std::size_t N = y.size();
  // y is strictly increasing.
  auto slope = [&](double a, double b) {
    // Linear coefficient of the envelope on (a, b), the -pi (y - y_n)^2 part excluded.
    double c = double(m) - yn + (a >= yn ? r : 0);
    const auto zero = std::lower_bound(y.begin(), y.end(), 0.0);
    if (a >= 0.0) {
      const auto upper = std::upper_bound(zero, y.end(), a) - zero - (yn >= 0.0 && yn <= a ? 1 : 0);
      c += double(r + 1) * double(upper);
    }
    if (b < 0.0) {
      const auto lower = zero - std::lower_bound(y.begin(), zero, b) - (yn < 0.0 && yn >= b ? 1 : 0);
      c -= double(r + 1) * double(lower);
    }
    return 2.0 * pi * c;
  };
  auto quad = [&](double t) { return -pi * (t - yn) * (t - yn); };
  double peak = 0.0;
  auto piece = [&](double a, double b, double from, double Fa, double L) {
    // Concave quadratic on [a, b] anchored at `from` (a or b) with value Fa.
    auto F = [&](double t) { return Fa + quad(t) - quad(from) + L * (t - from); };
    const double v = yn + L / (2.0 * pi);
    if (v > a && v < b) peak = std::max(peak, F(v));
    return F(from == a ? b : a);
  };
  const auto up = std::upper_bound(y.begin(), y.end(), yn) - y.begin();
  double F = 0.0, a = yn;
  for (std::size_t k = std::size_t(up); k <= N; ++k) {
    const double b = k < N ? y[k] : std::numeric_limits<double>::infinity();
    const double L = slope(a, b);
    if (k == N) {
      piece(a, b, a, F, L);
      break;
    }
    F = piece(a, b, a, F, L);
    peak = std::max(peak, F);
    a = b;
  }
  F = 0.0;
  double b = yn;
  for (std::ptrdiff_t k = std::ptrdiff_t(n) - 1; k >= -1; --k) {
    const double lo = k >= 0 ? y[std::size_t(k)] : -std::numeric_limits<double>::infinity();
    const double L = slope(lo, b);
    if (k < 0) {
      piece(lo, b, b, F, L);
      break;
    }
    F = piece(lo, b, b, F, L);
    peak = std::max(peak, F);
    b = lo;
  }
  return peak;
}

// Height of the Gaussian centre for term n. Any integer keeps the node values and the character,
// so take the one with the smallest envelope peak; the peak is convex in m.
long centre_height(int r, const std::vector<double>& y, std::size_t n) {
  long m = std::lround(y[n]);
  double here = envelope_peak(r, y, n, m);
  for (int dir : {-1, 1}) {
    for (;;) {
      const double next = envelope_peak(r, y, n, m + dir);
      if (!(next < here)) break;
      here = next;
      m += dir;
    }
  }
  return m;
}

// Sum of the interpolant's terms, each multiplied by e^{log_weight} before leaving log space.
cplx interpolate_impl(int r, const PointSet& nodes, const std::vector<cplx>& values, cplx z, double log_weight) {
  if (r < 0 || r > kMaxInterpolationOrder) throw std::domain_error("interpolate_true: r must lie in [0, 4]");
  if (values.size() != nodes.size()) throw std::domain_error("interpolate_true: one value per node required");
  check_ordered(nodes);
  if (nodes.structure != PointSet::Structure::finite) {
    const double density = *beurling_density(nodes, 1.0, 1).exact;
    if (!(density < 1.0 / (r + 1)))
      throw std::domain_error("interpolate_true: upper density " + std::to_string(density) +
                              " is not below 1/(r+1) = " + std::to_string(1.0 / (r + 1)));
  }
  const std::size_t N = nodes.size();

  // Factor jets at z are shared by all terms.
  std::vector<FactorJet> at_z(N);
  for (std::size_t k = 0; k < N; ++k) at_z[k] = factor_jet(nodes.points[k].z(), z);

  double fact_r = 1.0;
  for (int i = 2; i <= r; ++i) fact_r *= i;
  const cplx log_norm_const = std::log(fact_r) + double(r) * std::log(2.0 * pi * I);

  std::vector<double> heights(N);
  for (std::size_t k = 0; k < N; ++k) heights[k] = nodes.points[k].xi;
  std::vector<cplx> terms(N);
  parallel_for(N, [&](std::size_t n) {
    if (values[n] == 0.0) return;
    const cplx zn = nodes.points[n].z();
    const double m = double(centre_height(r, heights, n));
    const cplx wn(zn.real(), m);

    cplx log_gn_at_node = 0.0;
    for (std::size_t k = 0; k < N; ++k)
      if (k != n) log_gn_at_node += log_factor(nodes.points[k].z(), zn);

    // log H = E + r log(1 - e^{2 pi i (z_n - u)}) + (r+1) sum_{k != n} log factor_k, with
    // E(u) = pi u^2/2 - 2 pi i m u; near-zero factors are kept as plain jets.
    J logs;
    logs.c[0] = pi * z * z / 2.0 - 2.0 * pi * I * m * z;
    logs.c[1] = pi * z - 2.0 * pi * I * m;
    logs.c[2] = pi / 2.0;
    J plain = J::constant(1.0);
    auto absorb = [&](const FactorJet& f, int power) {
      if (f.near)
        plain = plain * detail::power(f.jet, power);
      else
        logs = logs + detail::scaled(f.jet, double(power));
    };
    {
      const cplx w0 = 2.0 * pi * I * (zn - z);
      const cplx f0 = 1.0 - std::exp(w0);
      const bool near = w0.real() <= 1.0 && std::abs(f0) < 0.5;
      absorb({near, near ? detail::one_minus_exp<kMaxInterpolationOrder>(w0, -2.0 * pi * I)
                         : detail::log_one_minus_exp<kMaxInterpolationOrder>(w0, -2.0 * pi * I)},
             r);
    }
    for (std::size_t k = 0; k < N; ++k)
      if (k != n) absorb(at_z[k], r + 1);

    // Taylor coefficients of H / e^{logs_0}.
    const J h = detail::exp_shifted(logs) * plain;
    cplx op = 0.0;
    double fact_i = 1.0;
    for (int i = 0; i <= r; ++i) {
      if (i > 0) fact_i *= i;
      op += binomial(r, i) * std::pow(-pi * std::conj(z), r - i) * fact_i * h.c[i];
    }
    if (op == 0.0) return;
    const cplx E_z = pi * z * z / 2.0 - 2.0 * pi * I * m * z;
    const cplx log_pre = pi * (z - zn) * std::conj(wn) + pi / 2.0 * ((z - wn) * (z - wn) - (zn - wn) * (zn - wn));
    const cplx e = log_pre - log_norm_const - double(r + 1) * log_gn_at_node - E_z + logs.c[0] + log_weight;
    terms[n] = values[n] * op * std::exp(e);
  });
  cplx acc = 0.0;
  for (const auto& t : terms) acc += t;
  return acc;
}

}  // namespace

cplx interpolate_true(int r, const PointSet& nodes, const std::vector<cplx>& values, cplx z) {
  return interpolate_impl(r, nodes, values, z, 0.0);
}

cplx interpolate_true_weighted(int r, const PointSet& nodes, const std::vector<cplx>& values, cplx z) {
  return interpolate_impl(r, nodes, values, z, -pi * std::norm(z) / 2.0);
}

}  // namespace cylgabor

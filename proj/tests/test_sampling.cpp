#include <doctest.h>

#include "cylgabor/fock.hpp"
#include "cylgabor/sampling.hpp"
#include "oracle.hpp"

using namespace cylgabor;

namespace {

cplx direct_product(const std::vector<CylinderPoint>& nodes, cplx z) {
  cplx acc = std::exp(pi * z * z / 2.0);
  for (const auto& p : nodes) {
    const cplx c = p.z();
    acc *= p.xi >= 0.0 ? 1.0 - std::exp(2.0 * pi * I * (c - z)) : 1.0 - std::exp(2.0 * pi * I * (z - c));
  }
  return acc;
}

// Trapezoid rule on a circle; spectrally accurate for holomorphic f.
cplx cauchy_first(const std::function<cplx(cplx)>& f, cplx c, double rho = 0.1, int n = 64) {
  cplx acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const cplx e = std::exp(2.0 * pi * I * double(j) / double(n));
    acc += f(c + rho * e) / e;
  }
  return acc / (double(n) * rho);
}

std::vector<CylinderPoint> perturbed_lattice(std::mt19937_64& rng, double beta, int n_max, double jitter) {
  std::uniform_real_distribution<double> u(-jitter, jitter);
  std::vector<CylinderPoint> pts;
  for (int n = -n_max; n <= n_max; ++n) pts.push_back({0.5 + u(rng), beta * n + u(rng)});
  return pts;
}

}  // namespace

TEST_SUITE("sampling") {

TEST_CASE("separation") {
  CHECK(separation(PointSet::vertical_lattice(0.5, 6)) == 0.5);
  CHECK(separation(PointSet::finite({{0.0, 0.0}, {0.0, 0.5}})) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(separation(PointSet::finite({{0.0, 0.0}, {0.5, 0.0}})) == doctest::Approx(0.5).epsilon(1e-15));
  // x is periodic: 0.05 and 0.95 sit 0.1 apart.
  CHECK(separation(PointSet::finite({{0.05, 0.0}, {0.95, 0.0}})) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK_THROWS_AS(separation(PointSet::finite({{0.0, 0.0}})), std::domain_error);

  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> ux(0.0, 1.0), uy(-5.0, 5.0);
  std::vector<CylinderPoint> pts;
  for (int i = 0; i < 100; ++i) pts.push_back({ux(rng), uy(rng)});
  double brute = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      double dx = std::abs(pts[i].x - pts[j].x);
      dx = std::min(dx, 1.0 - dx);
      brute = std::min(brute, std::hypot(dx, pts[i].xi - pts[j].xi));
    }
  CHECK(separation(PointSet::finite(pts)) == brute);
}

TEST_CASE("beurling densities") {
  for (double b : {0.2, 0.25, 0.5, 2.0}) {
    const DensityReport d = beurling_density(PointSet::vertical_lattice(b, 4), 50.0, 6);
    REQUIRE(d.exact.has_value());
    CHECK(*d.exact == doctest::Approx(1.0 / b).epsilon(1e-14));
  }
  const DensityReport q = beurling_density(PointSet::vertical_lattice(0.25, 4), 200.0, 8);
  CHECK(*q.exact == 4.0);
  CHECK(std::abs(q.lower - 4.0) < 0.05 * 4.0);
  CHECK(std::abs(q.upper - 4.0) < 0.05 * 4.0);
  CHECK(q.history.size() == 8);

  const DensityReport one = beurling_density(PointSet::finite({{0.3, 0.2}}, -5.0, 5.0), 8.0, 4);
  CHECK(one.window_limited);
  CHECK(one.lower == 0.0);
  CHECK_FALSE(one.exact.has_value());

  const DensityReport p = beurling_density(PointSet::periodic(1.0, {{0.1, 0.05}, {0.5, 0.4}, {0.8, 0.7}}, 2), 200.0, 8);
  REQUIRE(p.exact.has_value());
  CHECK(*p.exact == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(std::abs(p.lower - 3.0) < 0.05 * 3.0);
  CHECK(std::abs(p.upper - 3.0) < 0.05 * 3.0);
  CHECK_THROWS_AS(beurling_density(PointSet::vertical_lattice(0.5, 2), 0.0, 3), std::domain_error);
}

TEST_CASE("point set validation") {
  CHECK_THROWS_AS(PointSet::vertical_lattice(0.0, 3), std::domain_error);
  CHECK_THROWS_AS(PointSet::periodic(1.0, {}, 2), std::domain_error);
  CHECK_THROWS_AS(PointSet::finite({{0.1, 0.1}, {0.1, 0.1}}).validate(), std::domain_error);
  CHECK_THROWS_AS(PointSet::finite({{0.1, 9.0}}, -1.0, 1.0).validate(), std::domain_error);
}

TEST_CASE("node product vanishes at the nodes and nowhere else") {
  std::mt19937_64 rng(62);
  const std::vector<CylinderPoint> pts = perturbed_lattice(rng, 0.5, 12, 0.05);
  const PointSet nodes = PointSet::finite(pts);
  for (const cplx z : {cplx(0.1, 0.3), cplx(0.7, -1.2), cplx(0.45, 2.05)}) {
    const cplx want = direct_product(pts, z);
    CHECK(std::abs(node_product_g(nodes, z) - want) < 1e-12 * std::abs(want));
    CHECK(std::abs(std::exp(node_product_log(nodes, z)) - want) < 1e-12 * std::abs(want));
  }
  for (const auto& p : pts) {
    const double scale = std::abs(direct_product(pts, p.z() + 0.1));
    CHECK(std::abs(node_product_g(nodes, p.z())) < 1e-12 * scale);
  }

  // Moving one node moves exactly one zero.
  std::vector<CylinderPoint> moved = pts;
  const CylinderPoint old = moved[5];
  moved[5].x += 0.2;
  const PointSet shifted = PointSet::finite(moved);
  CHECK(std::abs(node_product_g(shifted, moved[5].z())) < 1e-12 * std::abs(direct_product(moved, moved[5].z() + 0.1)));
  CHECK(std::abs(node_product_g(shifted, old.z())) > 1e-3 * std::abs(direct_product(moved, old.z() + 0.1)));
  for (std::size_t k = 0; k < moved.size(); ++k)
    if (k != 5) CHECK(std::abs(node_product_g(shifted, moved[k].z())) < 1e-12 * std::abs(direct_product(moved, moved[k].z() + 0.1)));

  std::vector<CylinderPoint> unordered = pts;
  std::swap(unordered[2], unordered[3]);
  PointSet bad;
  bad.points = unordered;
  CHECK_THROWS_AS(node_product_g(bad, {0.2, 0.2}), std::domain_error);
}

TEST_CASE("node product derivative against a Cauchy integral") {
  std::mt19937_64 rng(63);
  const std::vector<CylinderPoint> pts = perturbed_lattice(rng, 0.5, 10, 0.05);
  const PointSet nodes = PointSet::finite(pts);
  for (std::size_t k = 0; k < pts.size(); k += 3) {
    const cplx want = cauchy_first([&](cplx u) { return direct_product(pts, u); }, pts[k].z());
    const cplx got = std::exp(node_product_logderiv(nodes, k));
    CHECK(std::abs(got - want) < 1e-8 * std::abs(want));
  }
  CHECK_THROWS_AS(node_product_logderiv(nodes, pts.size()), std::out_of_range);
}

TEST_CASE("sampling series reproduces an analytic kernel section") {
  const PointSet nodes = PointSet::vertical_lattice(0.5, 80);
  std::mt19937_64 rng(64);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (double nu : {0.0, 0.3}) {
    const cplx w0(0.3, 0.2);
    std::vector<cplx> v;
    for (const auto& p : nodes.points) v.push_back(oracle::fock_theta(nu, p.z(), w0));
    for (int i = 0; i < 20; ++i) {
      const cplx z(u(rng), 2.0 * u(rng) - 1.0);
      const cplx want = oracle::fock_theta(nu, z, w0);
      CHECK(std::abs(sample_reconstruct(nodes, v, z, nu).value - want) < 1e-4 * std::abs(want));
    }
    for (std::size_t k = 70; k < 90; ++k) CHECK(sample_reconstruct(nodes, v, nodes.points[k].z(), nu).value == v[k]);
  }
  const std::vector<cplx> zero(nodes.size(), 0.0);
  CHECK(sample_reconstruct(nodes, zero, {0.4, 0.3}).value == 0.0);
  CHECK_THROWS_AS(sample_reconstruct(nodes, std::vector<cplx>(3, 1.0), {0.4, 0.3}), std::domain_error);
}

TEST_CASE("sampling series tail estimate") {
  const PointSet n1 = PointSet::vertical_lattice(0.5, 6), n2 = PointSet::vertical_lattice(0.5, 12);
  const cplx w0(0.6, -0.3);
  auto vals = [&](const PointSet& n) {
    std::vector<cplx> v;
    for (const auto& p : n.points) v.push_back(fock_kernel_analytic(0.0, p.z(), w0));
    return v;
  };
  const auto v1 = vals(n1), v2 = vals(n2);
  for (const cplx z : {cplx(0.1, 0.4), cplx(0.8, -0.9), cplx(0.5, 0.0)}) {
    const SeriesValue a = sample_reconstruct(n1, v1, z), b = sample_reconstruct(n2, v2, z);
    CHECK(a.tail_estimate > 0.0);
    CHECK(std::abs(a.value - b.value) <= 10.0 * a.tail_estimate + 1e-13 * std::abs(b.value));
  }
}

TEST_CASE("true polyanalytic interpolation") {
  std::mt19937_64 rng(65);
  for (int n_max : {5, 10, 20}) {
    const PointSet nodes = PointSet::vertical_lattice(3.0, n_max);
    std::vector<cplx> a;
    for (std::size_t i = 0; i < nodes.size(); ++i) a.push_back(oracle::random_cplx(rng));
    double amax = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
      amax = std::max(amax, std::abs(a[i]) * std::exp(-pi * std::norm(nodes.points[i].z()) / 2.0));
    for (int r : {0, 1})
      for (std::size_t k = 0; k < nodes.size(); ++k)
        CHECK(std::abs(interpolate_true(r, nodes, a, nodes.points[k].z()) - a[k]) < 1e-8 * (1.0 + std::abs(a[k])));
    const PointSet sparse = PointSet::vertical_lattice(4.0, n_max);
    for (std::size_t k = 0; k < sparse.size(); ++k)
      CHECK(std::abs(interpolate_true(2, sparse, a, sparse.points[k].z()) - a[k]) < 1e-8 * (1.0 + std::abs(a[k])));
    // Weighted size on the probe grid stays comparable to the weighted data.
    double worst = 0.0;
    const double top = 3.0 * n_max + 3.0;
    for (int i = 0; i <= 4; ++i)
      for (double y = -top; y <= top; y += 0.5)
        worst = std::max(worst, std::abs(interpolate_true_weighted(1, nodes, a, {0.25 * i, y})));
    CHECK(worst < 10.0 * amax);
    // Character nu = 0.
    for (const cplx z : {cplx(0.2, 1.1), cplx(0.6, -4.0)}) {
      const cplx want = std::exp(pi / 2.0 + pi * z) * interpolate_true(1, nodes, a, z);
      CHECK(std::abs(interpolate_true(1, nodes, a, z + 1.0) - want) < 1e-10 * std::abs(want));
    }
  }
  const PointSet nodes = PointSet::vertical_lattice(4.0, 4);
  CHECK(interpolate_true(1, nodes, std::vector<cplx>(nodes.size(), 0.0), {0.3, 1.7}) == 0.0);
  const cplx z(0.4, 0.9);
  CHECK(std::abs(interpolate_true_weighted(2, nodes, std::vector<cplx>(nodes.size(), 1.0), z) -
                 interpolate_true(2, nodes, std::vector<cplx>(nodes.size(), 1.0), z) * std::exp(-pi * std::norm(z) / 2.0)) <
        1e-12);
}

TEST_CASE("interpolation refuses dense sets and bad levels") {
  const PointSet dense = PointSet::vertical_lattice(1.5, 5);
  const std::vector<cplx> ones(dense.size(), 1.0);
  CHECK_THROWS_AS(interpolate_true(1, dense, ones, {0.2, 0.1}), std::domain_error);
  CHECK_NOTHROW(interpolate_true(0, dense, ones, {0.2, 0.1}));
  CHECK_THROWS_AS(interpolate_true(kMaxInterpolationOrder + 1, PointSet::vertical_lattice(10.0, 2),
                                   std::vector<cplx>(5, 1.0), {0.2, 0.1}),
                  std::domain_error);
  CHECK_THROWS_AS(interpolate_true(0, dense, std::vector<cplx>(2, 1.0), {0.2, 0.1}), std::domain_error);
}

}

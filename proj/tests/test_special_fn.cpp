#include <doctest.h>

#include <cmath>

#include "cylgabor/special_fn.hpp"
#include "oracle.hpp"

using namespace cylgabor;

TEST_SUITE("special_fn") {

TEST_CASE("hermite functions at the origin") {
  CHECK(hermite_fn(0, 0.0) == doctest::Approx(1.18920712).epsilon(1e-8));
  CHECK(std::abs(hermite_fn(1, 0.0)) < 1e-15);
  CHECK(hermite_fn(0, 0.0) == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-15));
}

TEST_CASE("hermite functions match the explicit polynomial sum") {
  for (int r = 0; r <= 10; ++r)
    for (double t : {-1.3, -0.2, 0.0, 0.45, 1.1, 2.0}) {
      const double want = oracle::hermite_fn(r, t);
      CHECK(std::abs(hermite_fn(r, t) - want) <= 1e-11 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("hermite functions have unit norm") {
  const double n2 = oracle::simpson([](double t) { return std::pow(hermite_fn(2, t), 2); }, -8.0, 8.0, 4000);
  CHECK(std::abs(n2 - 1.0) < 1e-10);
  for (int r = 0; r <= 10; ++r) {
    const double v = oracle::simpson([r](double t) { return std::pow(hermite_fn(r, t), 2); }, -10.0, 10.0, 8000);
    CHECK(std::abs(v - 1.0) < 1e-9);
  }
}

TEST_CASE("hermite orders past the ceiling are refused") {
  CHECK_THROWS_AS(hermite_fn(kMaxHermiteOrder + 1, 0.3), std::domain_error);
  CHECK_THROWS_AS(hermite_fn(-1, 0.3), std::domain_error);
  CHECK_NOTHROW(hermite_fn(kMaxHermiteOrder, 0.3));
}

TEST_CASE("hermite polynomials") {
  CHECK(hermite_poly(0, 5.0) == doctest::Approx(std::pow(2.0, 0.25)).epsilon(1e-15));
  CHECK(hermite_poly(1, 1.0) == doctest::Approx(1.68179283).epsilon(1e-8));
  // d^3/dt^3 e^{-t^2} = (12 t - 8 t^3) e^{-t^2}; frozen from that closed form.
  const double t = 0.7;
  const double direct = std::pow(2.0, 0.25) / std::sqrt(6.0) * std::pow(-1.0 / std::sqrt(2.0), 3) * (12 * t - 8 * t * t * t);
  CHECK(hermite_poly(3, t) == doctest::Approx(-0.970836913828221502).epsilon(1e-13));
  CHECK(hermite_poly(3, t) == doctest::Approx(direct).epsilon(1e-13));
}

TEST_CASE("laguerre polynomials") {
  CHECK(laguerre(0, 0.0, 3.7) == 1.0);
  CHECK(laguerre(1, 0.0, 2.0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(laguerre(3, 1.0, 0.7) == doctest::Approx(0.7228333333333333).epsilon(1e-13));
  double sum = 0.0;
  for (int r = 0; r <= 3; ++r) sum += laguerre(r, 0.0, 0.7);
  CHECK(std::abs(laguerre(3, 1.0, 0.7) - sum) < 1e-12);
  for (int k = 0; k <= 12; ++k)
    for (double alpha : {0.0, 1.0, 2.5})
      for (double x : {0.0, 0.3, 1.0, 5.0}) {
        const double want = oracle::laguerre(k, alpha, x);
        CHECK(std::abs(laguerre(k, alpha, x) - want) <= 1e-9 * (1.0 + std::abs(want)));
      }
}

TEST_CASE("laguerre summation identity") {
  for (int n = 0; n <= 16; ++n)
    for (double x : {0.0, 0.3, 1.0, 5.0}) {
      double sum = 0.0;
      for (int r = 0; r <= n; ++r) sum += laguerre(r, 0.0, x);
      CHECK(std::abs(laguerre(n, 1.0, x) - sum) <= 1e-11 * (1.0 + std::abs(sum)));
    }
}

TEST_CASE("jacobi theta") {
  CHECK(std::abs(jacobi_theta(0, 0, 0.0) - 1.08643481121330801) < 1e-14);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const double a = std::uniform_real_distribution<double>(-1, 1)(rng);
    const double b = std::uniform_real_distribution<double>(-1, 1)(rng);
    const cplx z = oracle::random_cplx(rng);
    const cplx t = jacobi_theta(a, b, z);
    CHECK(std::abs(t - oracle::theta(a, b, z)) <= 1e-12 * (1.0 + std::abs(t)));
    CHECK(std::abs(jacobi_theta(a + 1.0, b, z) - t) <= 1e-12 * (1.0 + std::abs(t)));
    CHECK(std::abs(jacobi_theta(a, b, z + 1.0) - std::exp(2.0 * pi * I * a) * t) <= 1e-12 * (1.0 + std::abs(t)));
  }
}

TEST_CASE("hermite theta") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 10; ++i) {
    const double al = std::uniform_real_distribution<double>(-1, 1)(rng);
    const double be = std::uniform_real_distribution<double>(-1, 1)(rng);
    const cplx z = oracle::random_cplx(rng, 0.7);
    const cplx h0 = hermite_theta(0, al, be, z);
    CHECK(std::abs(h0 - std::pow(2.0, 0.25) * jacobi_theta(al, -be, z)) <= 1e-12 * (1.0 + std::abs(h0)));
    for (int r : {1, 3}) {
      const cplx h = hermite_theta(r, al, be, z);
      CHECK(std::abs(hermite_theta(r, al + 1.0, be, z) - h) <= 1e-12 * (1.0 + std::abs(h)));
    }
  }
  const cplx z(0.2, 0.1);
  const cplx a = hermite_theta(1, 0.3, 0.0, z);
  const cplx b = hermite_theta(1, 0.3, 0.0, z, TruncationPolicy{}.doubled());
  CHECK(std::abs(a - b) < 1e-12);
}

TEST_CASE("dual-grid canonical product") {
  for (double beta : {0.3, 0.5, 0.9})
    for (int k = -20; k <= 20; ++k)
      if (k != 0) CHECK(std::abs(gbeta_dualgrid(beta, double(k))) == 0.0);
  CHECK(std::abs(gbeta_dualgrid(0.5, 1.0)) == 0.0);
  // 2000-factor product, frozen.
  CHECK(std::abs(gbeta_dualgrid(0.5, 0.5) - 0.7773215016362035) < 1e-12);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    const cplx z(std::uniform_real_distribution<double>(-0.45, 0.45)(rng), std::normal_distribution<double>()(rng));
    const cplx g = gbeta_dualgrid(0.5, z);
    CHECK(std::abs(gbeta_dualgrid(0.5, z + I / 0.5) - g) <= 1e-10 * (1.0 + std::abs(g)));
    cplx prod = 1.0;
    for (int k = 1; k <= 2000; ++k)
      prod *= (1.0 - std::exp(2.0 * 0.5 * pi * (z - double(k)))) * (1.0 - std::exp(2.0 * 0.5 * pi * (-double(k) - z)));
    CHECK(std::abs(g - prod) <= 1e-12 * (1.0 + std::abs(g)));
  }
}

TEST_CASE("H_beta vanishing and automorphy") {
  CHECK(std::abs(hbeta(1, 0.4, 2.0)) == 0.0);
  const cplx h0 = hbeta(0, 0.4, 0.0);
  CHECK(std::abs(h0 - gbeta_dualgrid(0.4, 0.0)) < 1e-14);
  CHECK(std::abs(h0) > 0.1);
  const double beta = 0.4;
  const cplx z(0.3, 0.2);
  const cplx gamma = I / beta;
  const cplx lhs = hbeta(1, beta, z + gamma);
  const cplx rhs = std::exp(pi * std::norm(gamma) / 2.0 + pi * z * std::conj(gamma)) * hbeta(1, beta, z);
  CHECK(std::abs(lhs - rhs) <= 1e-9 * std::abs(rhs));
}

TEST_CASE("totally positive Fourier factors") {
  TPFactorization gauss{1.0, 1.0, 0.0, {}};
  CHECK(std::abs(tp_window_ft(gauss, 0.0) - 1.0) < 1e-15);
  TPFactorization sym{1.0, 0.3, 0.0, {0.5, -0.5, 0.2, -0.2}};
  double prev = std::abs(tp_window_ft(sym, 0.0));
  for (double xi = 0.05; xi < 3.0; xi += 0.05) {
    const double cur = std::abs(tp_window_ft(sym, xi));
    CHECK(cur <= prev + 1e-15);
    CHECK(std::abs(std::abs(tp_window_ft(sym, -xi)) - cur) < 1e-15);
    prev = cur;
  }
  CHECK_THROWS_AS((TPFactorization{1.0, 0.0, 0.0, {}}.validate()), std::domain_error);
  CHECK_THROWS_AS((TPFactorization{-1.0, 1.0, 0.0, {}}.validate()), std::domain_error);
  CHECK_THROWS_AS((TPFactorization{1.0, 1.0, 0.0, {0.0}}.validate()), std::domain_error);
}

TEST_CASE("hyperbolic secant from eight factors") {
  // 1/cosh(pi x) = prod_k (1 + x^2/(k - 1/2)^2)^{-1}. With 1/(e^{at} + e^{-at}) the transform is
  // proportional to 1/cosh(pi^2 xi / a); four +-nu_k pairs are kept and the tail goes into gamma.
  const double a = 2.0 * pi * pi;
  TPFactorization fac{1.0, 0.0, 0.0, {}};
  double tail = pi * pi / 2.0;
  for (int k = 1; k <= 4; ++k) {
    const double nu = 1.0 / (2.0 * a * (k - 0.5));
    fac.nu_j.push_back(nu);
    fac.nu_j.push_back(-nu);
    tail -= 1.0 / ((k - 0.5) * (k - 0.5));
  }
  fac.gamma = (pi / a) * (pi / a) * tail;
  auto g = [a](double t) { return 1.0 / (std::exp(a * t) + std::exp(-a * t)); };
  auto ft = [&](double xi) { return oracle::simpson([&](double t) { return std::cos(2 * pi * xi * t) * g(t); }, -3.0, 3.0, 6000); };
  const double ft0 = ft(0.0);
  const cplx tp0 = tp_window_ft(fac, 0.0);
  double worst = 0.0;
  for (double xi = -2.0; xi <= 2.0; xi += 0.25)
    worst = std::max(worst, std::abs(tp_window_ft(fac, xi) / tp0 - ft(xi) / ft0));
  CHECK(worst < 1e-3);
}

TEST_CASE("truncation policy") {
  CHECK_THROWS_AS((TruncationPolicy{0.0, 512}.validate()), std::domain_error);
  CHECK_THROWS_AS((TruncationPolicy{1e-12, 4}.validate()), std::domain_error);
  const cplx z(0.1, 0.4);
  const cplx a = jacobi_theta(0.2, 0.1, z);
  const cplx b = jacobi_theta(0.2, 0.1, z, TruncationPolicy{}.doubled());
  CHECK(std::abs(a - b) < 10 * 1e-12);
}

}

#include <doctest.h>

#include "cylgabor/qp_signal.hpp"
#include "cylgabor/special_fn.hpp"
#include "oracle.hpp"

using namespace cylgabor;

namespace {

QPSignal random_signal(std::mt19937_64& rng, double nu, int K) {
  std::vector<std::pair<int, cplx>> e;
  for (int k = -K; k <= K; ++k) e.emplace_back(k, oracle::random_cplx(rng));
  return make_signal(nu, e);
}

cplx direct_eval(const QPSignal& f, double t) {
  cplx acc = 0.0;
  for (const auto& [k, a] : f.coeffs) acc += a * std::exp(2.0 * pi * I * t * (f.nu + k));
  return acc;
}

}  // namespace

TEST_SUITE("qp_signal") {

TEST_CASE("construction and norms") {
  const QPSignal one = make_signal(0.0, {{0, 1.0}});
  CHECK(std::abs(eval_signal(one, 17.3) - 1.0) < 1e-12);
  const QPSignal zero = make_signal(0.3, {});
  CHECK(zero.norm_squared() == 0.0);
  CHECK(eval_signal(zero, 0.4) == 0.0);
  const QPSignal two = make_signal(0.3, {{-1, I}, {2, 1.0}});
  CHECK(two.norm_squared() == doctest::Approx(2.0));
  CHECK(std::abs(eval_signal(two, 0.0) - (I + 1.0)) < 1e-15);
  CHECK(two.K() == 2);
  CHECK(two.coeff(5) == 0.0);
}

TEST_CASE("evaluation matches the defining sum and is quasi-periodic") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const double nu = u(rng);
    const QPSignal f = random_signal(rng, nu, 5);
    const double t = 4.0 * u(rng) - 2.0;
    const cplx v = eval_signal(f, t);
    CHECK(std::abs(v - direct_eval(f, t)) < 1e-12 * (1.0 + std::abs(v)));
    for (int n = -3; n <= 3; ++n)
      CHECK(std::abs(eval_signal(f, t + n) - std::exp(2.0 * pi * I * double(n) * nu) * v) < 1e-12 * (1.0 + std::abs(v)));
  }
}

TEST_CASE("inner product agrees with quadrature over one period") {
  std::mt19937_64 rng(12);
  for (int K : {1, 8, 32}) {
    const QPSignal f1 = random_signal(rng, 0.27, K), f2 = random_signal(rng, 0.27, K);
    const cplx quad = oracle::simpson([&](double t) { return direct_eval(f1, t) * std::conj(direct_eval(f2, t)); },
                                      0.0, 1.0, 8 * K + 400);
    CHECK(std::abs(inner_product(f1, f2) - quad) < 1e-8 * (1.0 + std::abs(quad)));
  }
  const QPSignal e0 = make_signal(0.1, {{0, 1.0}}), e1 = make_signal(0.1, {{1, 1.0}});
  CHECK(inner_product(e0, e1) == 0.0);
  const QPSignal f = random_signal(rng, 0.1, 3);
  CHECK(std::abs(inner_product(f, f).imag()) < 1e-15);
  CHECK(inner_product(f, f).real() >= 0.0);
  CHECK_THROWS_AS(inner_product(e0, make_signal(0.2, {{0, 1.0}})), std::domain_error);
}

TEST_CASE("periodized Gaussian shifts") {
  const Window g = Window::gaussian();
  const double t = 0.5;
  cplx direct = 0.0;
  for (int k = -20; k <= 20; ++k) direct += std::pow(2.0, 0.25) * std::exp(-pi * (t - k) * (t - k));
  const cplx v = periodize_shift(g, {0.0, 0.0}, 0.0, t);
  CHECK(std::abs(v - direct) < 1e-13);
  // Frozen; equals theta_{0,0}(0) by the modular identity at tau = i.
  CHECK(std::abs(v - 1.08643481121330801) < 1e-13);
  for (double s : {-0.7, 0.0, 0.31, 0.9})
    CHECK(std::abs(periodize_shift(g, {0.0, 0.0}, 0.0, s) - std::pow(2.0, 0.25) * jacobi_theta(-s, 0.0, 0.0)) < 1e-13);
}

TEST_CASE("periodization is quasi-periodic and truncation-stable") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const Window& g : {Window::gaussian(), Window::hermite(2)})
    for (int i = 0; i < 10; ++i) {
      const CylinderPoint z{u(rng), 4.0 * u(rng) - 2.0};
      const double nu = u(rng), t = 2.0 * u(rng) - 1.0;
      const cplx v = periodize_shift(g, z, nu, t);
      CHECK(std::abs(periodize_shift(g, z, nu, t + 1.0) - std::exp(2.0 * pi * I * nu) * v) < 1e-12);
      CHECK(std::abs(periodize_shift(g, z, nu, t, TruncationPolicy{}.doubled()) - v) < 10 * 1e-12);
      cplx direct = 0.0;
      for (int k = -30; k <= 30; ++k)
        direct += std::exp(2.0 * pi * I * (k * nu + z.xi * (t - k))) * g.time(t - k - z.x);
      CHECK(std::abs(v - direct) < 1e-12);
    }
}

TEST_CASE("windows are unit norm and reject bad input") {
  CHECK(window_norm(Window::gaussian()) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(window_norm(Window::hermite(5)) == doctest::Approx(1.0).epsilon(1e-10));
  const Window tp = Window::totally_positive(TPFactorization{1.0, 0.5, 0.0, {0.3, -0.2}});
  CHECK(window_norm(tp) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK_THROWS_AS(Window::custom([](double) { return cplx(0.0); }, [](double) { return cplx(0.0); },
                                 Envelope::decaying(1, 1, 0), Envelope::decaying(1, 1, 0), "zero"),
                  std::domain_error);
  const Window blind = Window::custom([](double t) { return oracle::hermite_fn(0, t); },
                                      [](double xi) { return oracle::gauss_ft(xi); }, std::nullopt, std::nullopt);
  CHECK_THROWS_AS(periodize_shift(blind, {0.0, 0.0}, 0.0, 0.2), std::domain_error);
}

}

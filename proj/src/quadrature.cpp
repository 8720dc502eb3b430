#include "cylgabor/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>

namespace cylgabor {

namespace {

using Rule = boost::math::quadrature::gauss<double, 30>;

template <class Value, class F>
Value panels(const F& f, double a, double b, double width) {
  if (!(b > a)) return Value{};
  if (!(width > 0.0)) throw std::domain_error("integrate_panels: panel width must be positive");
  const long n = std::max(1L, static_cast<long>(std::ceil((b - a) / width)));
  const double h = (b - a) / double(n);
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  Value total{};
  for (long p = 0; p < n; ++p) {
    const double mid = a + (p + 0.5) * h;
    const double half = 0.5 * h;
    Value acc{};
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0.0) {
        acc += w[i] * f(mid);
      } else {
        acc += w[i] * (f(mid - half * x[i]) + f(mid + half * x[i]));
      }
    }
    total += half * acc;
  }
  return total;
}

}  // namespace

std::vector<std::pair<double, double>> panel_rule(double a, double b, double panel_width) {
  std::vector<std::pair<double, double>> nodes;
  if (!(b > a)) return nodes;
  if (!(panel_width > 0.0)) throw std::domain_error("panel_rule: panel width must be positive");
  const long n = std::max(1L, static_cast<long>(std::ceil((b - a) / panel_width)));
  const double half = 0.5 * (b - a) / double(n);
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  for (long p = 0; p < n; ++p) {
    const double mid = a + (2 * p + 1) * half;
    for (std::size_t i = 0; i < x.size(); ++i) {
      nodes.emplace_back(mid - half * x[i], half * w[i]);
      if (x[i] != 0.0) nodes.emplace_back(mid + half * x[i], half * w[i]);
    }
  }
  return nodes;
}

cplx integrate_panels(const std::function<cplx(double)>& f, double a, double b, double panel_width) {
  return panels<cplx>(f, a, b, panel_width);
}

double integrate_panels_real(const std::function<double(double)>& f, double a, double b, double panel_width) {
  return panels<double>(f, a, b, panel_width);
}

}  // namespace cylgabor

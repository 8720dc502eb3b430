#include "cylgabor/window.hpp"

#include <algorithm>
#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>

#include "cylgabor/quadrature.hpp"

namespace cylgabor {

Envelope Envelope::decaying(double amp, double gauss, double expo) {
  return Envelope([=](double u) { return amp * std::exp(-gauss * u * u - expo * u); });
}

double Envelope::cutoff(double tol) const {
  if ((*this)(0.0) <= tol) return 0.0;
  double hi = 1.0;
  while ((*this)(hi) > tol) {
    hi *= 2.0;
    if (hi > 1e6) throw std::runtime_error("Envelope::cutoff: bound does not reach tolerance");
  }
  double lo = hi / 2.0;
  if (hi == 1.0) lo = 0.0;
  while (hi - lo > 1e-3) {
    double mid = 0.5 * (lo + hi);
    ((*this)(mid) > tol ? lo : hi) = mid;
  }
  return hi;
}

const Envelope& Window::time_envelope() const {
  if (!time_env_) throw std::domain_error("window '" + label_ + "' declares no time decay bound");
  return *time_env_;
}

const Envelope& Window::freq_envelope() const {
  if (!freq_env_) throw std::domain_error("window '" + label_ + "' declares no frequency decay bound");
  return *freq_env_;
}

namespace {

double hermite_amplitude(int r) {
  // sup_t |h_r(t)| e^{pi t^2 / 2}, sampled past the last turning point.
  const double reach = std::sqrt((2.0 * r + 1.0) / pi) + 4.0;
  double amp = 0.0;
  for (double t = 0.0; t <= reach; t += 0.005)
    amp = std::max(amp, std::abs(hermite_fn_polypart(r, t)) * std::exp(-pi * t * t / 2.0));
  return 1.05 * amp;
}

}  // namespace

Window Window::gaussian() {
  Window w = hermite(0);
  w.kind_ = WindowKind::gaussian;
  w.label_ = "gaussian";
  return w;
}

Window Window::hermite(int r) {
  if (r < 0 || r > kMaxHermiteOrder) throw std::domain_error("hermite window: unsupported order");
  Window w;
  w.kind_ = WindowKind::hermite;
  w.order_ = r;
  w.label_ = "hermite:" + std::to_string(r);
  w.time_ = [r](double t) { return cplx(hermite_fn(r, t), 0.0); };
  // F(conj h_r) = (-i)^r h_r under the e^{-2 pi i xi t} transform.
  const cplx phase = std::pow(-I, r);
  w.ft_conj_ = [r, phase](double xi) { return phase * hermite_fn(r, xi); };
  const double amp = r == 0 ? std::pow(2.0, 0.25) : hermite_amplitude(r);
  const double rate = r == 0 ? pi : pi / 2.0;
  w.time_env_ = Envelope::decaying(amp, rate, 0.0);
  w.freq_env_ = Envelope::decaying(amp, rate, 0.0);
  return w;
}

Window Window::totally_positive(TPFactorization fac) {
  fac.validate();
  fac.c = 1.0;
  boost::math::quadrature::exp_sinh<double> integrator;
  const double energy =
      2.0 * integrator.integrate([&](double u) { return std::norm(tp_window_ft(fac, u)); });
  fac.c = 1.0 / std::sqrt(energy);

  Window w;
  w.kind_ = WindowKind::totally_positive;
  w.tp_ = fac;
  w.label_ = "tp";
  w.ft_conj_ = [fac](double xi) { return std::conj(tp_window_ft(fac, -xi)); };
  w.freq_env_ = Envelope([fac](double u) {
    double m = fac.c * std::exp(-fac.gamma * u * u);
    for (double nj : fac.nu_j) m /= std::sqrt(1.0 + std::pow(2.0 * pi * nj * u, 2));
    return m;
  });

  double widest = 0.0;
  for (double nj : fac.nu_j) widest = std::max(widest, std::abs(nj));
  bool distinct = true;
  for (std::size_t i = 0; i < fac.nu_j.size(); ++i)
    for (std::size_t j = i + 1; j < fac.nu_j.size(); ++j)
      if (fac.nu_j[i] == fac.nu_j[j]) distinct = false;

  if (fac.gamma > 0.0) {
    const double reach = w.freq_env_->cutoff(1e-16 * fac.c);
    w.time_ = [fac, reach](double t) {
      const double width = std::min(1.0, 2.0 / (1.0 + std::abs(t)));
      return integrate_panels(
          [&](double xi) { return tp_window_ft(fac, xi) * std::exp(cplx(0.0, 2.0 * pi * xi * t)); },
          -reach, reach, width);
    };
  } else if (distinct) {
    // Partial fractions: each factor inverts to a one-sided exponential.
    double shift = fac.nu_shift;
    for (double nj : fac.nu_j) shift -= nj;
    std::vector<double> weight(fac.nu_j.size(), 1.0);
    for (std::size_t j = 0; j < fac.nu_j.size(); ++j)
      for (std::size_t m = 0; m < fac.nu_j.size(); ++m)
        if (m != j) weight[j] /= 1.0 - fac.nu_j[m] / fac.nu_j[j];
    w.time_ = [fac, shift, weight](double t) {
      const double s = t + shift;
      double v = 0.0;
      for (std::size_t j = 0; j < fac.nu_j.size(); ++j) {
        const double nj = fac.nu_j[j];
        if ((nj > 0 && s >= 0) || (nj < 0 && s <= 0)) v += weight[j] * std::exp(-s / nj) / std::abs(nj);
      }
      return cplx(fac.c * v, 0.0);
    };
  } else {
    w.time_ = [](double) -> cplx {
      throw std::domain_error("tp window: time values need gamma > 0 or distinct nu_j");
    };
    return w;
  }

  // Declared time envelope, fitted on a probe grid with a slower rate than the true tail.
  double shift = std::abs(fac.nu_shift);
  for (double nj : fac.nu_j) shift += std::abs(nj);
  const double expo = widest > 0.0 ? 1.0 / (1.5 * widest) : 0.0;
  const double gauss = widest > 0.0 ? 0.0 : 0.8 * pi * pi / fac.gamma;
  const double reach = 8.0 * widest + 4.0 * std::sqrt(fac.gamma) + shift + 1.0;
  double amp = 0.0;
  for (double t = -reach; t <= reach; t += reach / 400.0)
    amp = std::max(amp, std::abs(w.time_(t)) * std::exp(gauss * t * t + expo * std::abs(t)));
  w.time_env_ = Envelope::decaying(2.0 * amp, gauss, expo);
  return w;
}

Window Window::sampled(SampledWindow samples) {
  if (samples.values.size() < 4 || !(samples.step > 0.0))
    throw std::domain_error("sampled window: need at least 4 samples and a positive step");
  auto data = std::make_shared<const SampledWindow>(std::move(samples));
  std::vector<double> re, im;
  for (const cplx& v : data->values) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  using Spline = boost::math::interpolators::cardinal_cubic_b_spline<double>;
  auto sre = std::make_shared<Spline>(re.begin(), re.end(), data->t0, data->step);
  auto sim = std::make_shared<Spline>(im.begin(), im.end(), data->t0, data->step);

  Window w;
  w.kind_ = WindowKind::sampled;
  w.label_ = "sampled";
  w.samples_ = data;
  w.time_ = [data, sre, sim](double t) {
    if (t < data->t0 || t > data->t_end()) return cplx(0.0, 0.0);
    return cplx((*sre)(t), (*sim)(t));
  };
  w.ft_conj_ = [data](double xi) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < data->values.size(); ++j)
      acc += std::conj(data->values[j]) * std::exp(cplx(0.0, -2.0 * pi * xi * data->t(j)));
    return data->step * acc;
  };

  // Tail maxima of the samples and of the grid spectrum up to Nyquist.
  std::vector<std::pair<double, double>> tails;
  for (std::size_t j = 0; j < data->values.size(); ++j)
    tails.emplace_back(std::abs(data->t(j)), std::abs(data->values[j]));
  std::sort(tails.begin(), tails.end());
  for (std::size_t j = tails.size() - 1; j-- > 0;) tails[j].second = std::max(tails[j].second, tails[j + 1].second);
  w.time_env_ = Envelope([tails](double u) {
    auto it = std::lower_bound(tails.begin(), tails.end(), std::make_pair(u, -1.0));
    return it == tails.end() ? 0.0 : it->second;
  });

  const double nyquist = 0.5 / data->step;
  const double dxi = 1.0 / (8.0 * (data->t_end() - data->t0));
  std::vector<double> fs;
  for (double xi = 0.0; xi <= nyquist; xi += dxi)
    fs.push_back(std::max(std::abs(w.ft_conj_(xi)), std::abs(w.ft_conj_(-xi))));
  for (std::size_t j = fs.size() - 1; j-- > 0;) fs[j] = std::max(fs[j], fs[j + 1]);
  w.freq_env_ = Envelope([fs, dxi](double u) {
    // The bin containing u also covers the stretch between grid points below it.
    auto j = static_cast<std::size_t>(std::floor(u / dxi));
    if (j >= fs.size()) return 0.0;
    return 1.5 * fs[j];
  });
  return w;
}

Window Window::custom(std::function<cplx(double)> time, std::function<cplx(double)> ft_conj,
                      std::optional<Envelope> time_env, std::optional<Envelope> freq_env, std::string label) {
  Window w;
  w.kind_ = WindowKind::custom;
  w.label_ = std::move(label);
  w.time_ = std::move(time);
  w.ft_conj_ = std::move(ft_conj);
  w.time_env_ = std::move(time_env);
  w.freq_env_ = std::move(freq_env);
  const double n = window_norm(w);
  if (std::abs(n - 1.0) > 1e-8)
    throw std::domain_error("custom window '" + w.label_ + "' has norm " + std::to_string(n) + ", expected 1");
  return w;
}

cplx window_inner(const Window& g1, const Window& g2, double tol) {
  const SampledWindow* grid = g1.samples() ? g1.samples() : g2.samples();
  if (grid) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < grid->values.size(); ++j) {
      const double t = grid->t(j);
      const cplx a = g1.samples() == grid ? grid->values[j] : g1.time(t);
      const cplx b = g2.samples() == grid ? grid->values[j] : g2.time(t);
      acc += a * std::conj(b);
    }
    return grid->step * acc;
  }
  double reach = 30.0;
  try {
    reach = std::max(g1.time_envelope().cutoff(tol), g2.time_envelope().cutoff(tol));
  } catch (const std::domain_error&) {
  }
  return integrate_panels([&](double t) { return g1.time(t) * std::conj(g2.time(t)); }, -reach, reach, 0.5);
}

double window_norm(const Window& g) { return std::sqrt(std::abs(window_inner(g, g).real())); }

}  // namespace cylgabor

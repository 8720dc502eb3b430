#include "cylgabor/frames.hpp"

#include <cmath>
#include <numeric>

#include "cylgabor/quadrature.hpp"
#include "cylgabor/stft.hpp"

namespace cylgabor {

Rational Rational::parse(const std::string& text, long max_den) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    std::size_t used_p = 0, used_q = 0;
    long p = 0, q = 0;
    try {
      p = std::stol(text.substr(0, slash), &used_p);
      q = std::stol(text.substr(slash + 1), &used_q);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a rational number: '" + text + "'");
    }
    if (used_p != slash || used_q != text.size() - slash - 1 || p <= 0 || q <= 0)
      throw std::invalid_argument("not a positive rational number: '" + text + "'");
    const long g = std::gcd(p, q);
    return {p / g, q / g};
  }
  double x = 0.0;
  try {
    std::size_t used = 0;
    x = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  auto r = from_double(x, max_den);
  if (!r) throw std::invalid_argument("'" + text + "' is not a rational with denominator <= " + std::to_string(max_den));
  return *r;
}

std::optional<Rational> Rational::from_double(double x, long max_den) {
  if (!(x > 0.0) || !std::isfinite(x)) return std::nullopt;
  // Continued-fraction convergents.
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double rest = x;
  for (int it = 0; it < 64; ++it) {
    const double a = std::floor(rest);
    const long p2 = static_cast<long>(a) * p1 + p0;
    const long q2 = static_cast<long>(a) * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    if (std::abs(x - double(p1) / double(q1)) <= 1e-12 * std::max(1.0, x)) return Rational{p1, q1};
    const double frac = rest - a;
    if (frac < 1e-15) break;
    rest = 1.0 / frac;
  }
  return std::nullopt;
}

void FrameSpec::validate() const {
  if (!(beta > 0.0)) throw std::domain_error("FrameSpec: beta must be positive");
  if (K < 1) throw std::domain_error("FrameSpec: K must be at least 1");
  if (!(tol > 0.0)) throw std::domain_error("FrameSpec: tol must be positive");
}

AnalysisMatrix analysis_matrix(const FrameSpec& fs) {
  fs.validate();
  const Envelope& env = fs.window.freq_envelope();
  const double reach = env.cutoff(fs.tol);
  AnalysisMatrix am;
  am.K = fs.K;
  am.N = static_cast<int>(std::ceil((fs.K + std::abs(fs.nu) + reach) / fs.beta));
  const int rows = 2 * am.N + 1, cols = 2 * am.K + 1;
  am.M.resize(rows, cols);
  parallel_for(static_cast<std::size_t>(rows), [&](std::size_t i) {
    const double at = fs.beta * (double(i) - am.N) - fs.nu;
    for (int c = 0; c < cols; ++c) {
      const double u = at - double(c - am.K);
      am.M(Eigen::Index(i), c) = std::abs(u) > reach ? cplx(0.0, 0.0) : fs.window.ft_conj(u);
    }
  });
  return am;
}

std::pair<double, double> extremal_eigenvalues(const Eigen::MatrixXcd& M) {
  const Eigen::MatrixXcd gram = M.adjoint() * M;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("frame_bounds: eigensolver failed");
  return {es.eigenvalues().minCoeff(), es.eigenvalues().maxCoeff()};
}

FrameBounds frame_bounds(const FrameSpec& fs) {
  if (fs.K > 512) throw std::domain_error("frame_bounds: K above 512");
  const AnalysisMatrix am = analysis_matrix(fs);
  const auto [A, B] = extremal_eigenvalues(am.M);
  FrameSpec half = fs;
  half.K = std::max(1, fs.K / 2);
  const auto [Ah, Bh] = extremal_eigenvalues(analysis_matrix(half).M);
  FrameBounds fb;
  fb.A = std::max(A, 0.0);
  fb.B = B;
  fb.K = am.K;
  fb.N = am.N;
  fb.convergence = std::abs(A - Ah) / std::max(std::abs(A), 1e-300);
  return fb;
}

QPSignal frame_apply(const FrameSpec& fs, const QPSignal& f) {
  if (f.nu != fs.nu) throw std::domain_error("frame_apply: signal nu differs from the frame's nu");
  const double reach = fs.window.freq_envelope().cutoff(fs.tol);
  FrameSpec wide = fs;
  wide.K = std::max(fs.K, f.K() + static_cast<int>(std::ceil(2.0 * reach)) + 2);
  const AnalysisMatrix am = analysis_matrix(wide);
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(2 * am.K + 1);
  for (const auto& [k, v] : f.coeffs) a(k + am.K) = v;
  const Eigen::VectorXcd out = am.M.adjoint() * (am.M * a);
  QPSignal s;
  s.nu = f.nu;
  for (int k = -am.K; k <= am.K; ++k) s.coeffs[k] = out(k + am.K);
  return s;
}

cplx correlation_fn(const Window& g, const Window& gamma, double beta, int n, double x, const TruncationPolicy& pol) {
  pol.validate();
  const double tg = g.time_envelope().cutoff(pol.abs_tol / std::max(gamma.time_envelope()(0.0), 1e-300));
  const double tgam = gamma.time_envelope().cutoff(pol.abs_tol / std::max(g.time_envelope()(0.0), 1e-300));
  const double shift = double(n) / beta;
  const long lo = static_cast<long>(std::ceil(std::max(x - tgam, x - shift - tg)));
  const long hi = static_cast<long>(std::floor(std::min(x + tgam, x - shift + tg)));
  cplx acc = 0.0;
  for (long k = lo; k <= hi; ++k) acc += std::conj(g.time(x - shift - double(k))) * gamma.time(x - double(k));
  return acc;
}

cplx janssen_coeffs(const Window& g, const Window& gamma, double beta, int k, int n, double tol) {
  const double shift = double(n) / beta;
  auto integrand = [&](double t) {
    return gamma.time(t) * std::conj(g.time(t - shift)) * std::exp(cplx(0.0, -2.0 * pi * k * t));
  };
  if (const SampledWindow* s = gamma.samples()) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < s->values.size(); ++j) {
      const double t = s->t(j);
      acc += s->values[j] * std::conj(g.time(t - shift)) * std::exp(cplx(0.0, -2.0 * pi * k * t));
    }
    return s->step * acc;
  }
  if (g.samples()) {
    const SampledWindow* s = g.samples();
    cplx acc = 0.0;
    for (std::size_t j = 0; j < s->values.size(); ++j) {
      const double t = s->t(j) + shift;
      acc += gamma.time(t) * std::conj(s->values[j]) * std::exp(cplx(0.0, -2.0 * pi * k * t));
    }
    return s->step * acc;
  }
  const double tg = g.time_envelope().cutoff(tol);
  const double tgam = gamma.time_envelope().cutoff(tol);
  const double a = std::max(-tgam, shift - tg), b = std::min(tgam, shift + tg);
  if (!(b > a)) return 0.0;
  return integrate_panels(integrand, a, b, 0.25);
}

Eigen::MatrixXcd wexler_raz_table(const Window& g, const Window& gamma, double beta, IndexRange k_range,
                                  IndexRange l_range, int n_tail, double tol) {
  if (k_range.hi < k_range.lo || l_range.hi < l_range.lo) throw std::domain_error("wexler_raz: empty index range");
  if (n_tail < 0) {
    const double reach = g.time_envelope().cutoff(tol) + gamma.time_envelope().cutoff(tol);
    n_tail = static_cast<int>(std::ceil(beta * reach));
  }
  const int nk = k_range.hi - k_range.lo + 1, nl = l_range.hi - l_range.lo + 1;
  Eigen::MatrixXcd coeff(nk, 2 * n_tail + 1);
  parallel_for(static_cast<std::size_t>(nk * (2 * n_tail + 1)), [&](std::size_t idx) {
    const int i = int(idx) / (2 * n_tail + 1), j = int(idx) % (2 * n_tail + 1);
    coeff(i, j) = janssen_coeffs(g, gamma, beta, k_range.lo + i, j - n_tail, tol);
  });
  Eigen::MatrixXcd table(nk, nl);
  for (int i = 0; i < nk; ++i) {
    for (int m = 0; m < nl; ++m) {
      const int l = l_range.lo + m;
      cplx s = 0.0;
      for (int j = 0; j <= 2 * n_tail; ++j) {
        const int n = j - n_tail;
        s += coeff(i, j) * std::exp(cplx(0.0, 2.0 * pi * double(n) * l / beta));
      }
      table(i, m) = s / beta - (k_range.lo + i == 0 ? 1.0 : 0.0);
    }
  }
  return table;
}

double wexler_raz_residual(const Window& g, const Window& gamma, double beta, IndexRange k_range, IndexRange l_range,
                           int n_tail, double tol) {
  return wexler_raz_table(g, gamma, beta, k_range, l_range, n_tail, tol).cwiseAbs().maxCoeff();
}

DualWindow dual_window(const Window& g, Rational beta, double grid_step, double half_width, double tol) {
  if (beta.p < 1 || beta.q < 1) throw std::domain_error("dual_window: beta must be a positive rational");
  if (!(grid_step > 0.0) || !(half_width > 0.0)) throw std::domain_error("dual_window: bad grid parameters");
  const long g0 = std::gcd(beta.p, beta.q);
  const long p = beta.p / g0, q = beta.q / g0;
  const double b = double(p) / double(q);

  const long R = std::max(1L, std::lround(1.0 / (double(p) * grid_step)));
  const double delta = 1.0 / double(p * R);
  const double tg = g.time_envelope().cutoff(1e-16);
  const long n_max = static_cast<long>(std::ceil(b * (2.0 * tg + 1.0)));
  const double need = std::max(2.0 * half_width + 2.0, double(2 * n_max + 1) / b + 1.0);
  const long L = q * static_cast<long>(std::ceil(need / double(q)));
  const long M = L * p / q;          // members per coset
  const long C = q * R;              // cosets of the shift 1/beta
  const long N = M * C;              // samples on [−L/2, L/2)
  const long per = p * R;            // samples per unit period

  auto wrap = [&](long j) { return j >= (N + 1) / 2 ? j - N : j; };

  // G_n on one period of the grid.
  std::vector<std::vector<cplx>> G(static_cast<std::size_t>(2 * n_max + 1), std::vector<cplx>(per));
  TruncationPolicy pol{1e-16, 1 << 20};
  parallel_for(static_cast<std::size_t>((2 * n_max + 1) * per), [&](std::size_t idx) {
    const long n = long(idx) / per - n_max, rho = long(idx) % per;
    G[n + n_max][rho] = correlation_fn(g, g, b, int(n), double(rho) * delta, pol);
  });

  std::vector<cplx> gamma(static_cast<std::size_t>(N));
  std::vector<double> lowest(static_cast<std::size_t>(C)), highest(static_cast<std::size_t>(C));
  parallel_for(static_cast<std::size_t>(C), [&](std::size_t c) {
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(M, M);
    Eigen::VectorXcd rhs(M);
    for (long m = 0; m < M; ++m) {
      const long j = long(c) + m * C;
      const long rho = ((j % per) + per) % per;
      for (long n = -n_max; n <= n_max; ++n) A(m, ((m - n) % M + M) % M) += G[n + n_max][rho] / b;
      rhs(m) = g.time(double(wrap(j)) * delta);
    }
    const Eigen::MatrixXcd H = 0.5 * (A + A.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    lowest[c] = es.eigenvalues().minCoeff();
    highest[c] = es.eigenvalues().maxCoeff();
    const Eigen::VectorXcd sol =
        es.eigenvectors() * (es.eigenvalues().cwiseMax(1e-300).cwiseInverse().asDiagonal() *
                             (es.eigenvectors().adjoint() * rhs));
    for (long m = 0; m < M; ++m) gamma[std::size_t(long(c) + m * C)] = sol(m);
  });

  const double lo = *std::min_element(lowest.begin(), lowest.end());
  const double hi = *std::max_element(highest.begin(), highest.end());
  if (lo < tol)
    throw NotAFrame("dual_window: minimal frame-operator singular value " + std::to_string(std::sqrt(std::max(lo, 0.0))) +
                        " below tolerance",
                    std::sqrt(std::max(lo, 0.0)));

  const long H = static_cast<long>(std::floor(half_width / delta + 1e-9));
  SampledWindow s;
  s.t0 = -double(H) * delta;
  s.step = delta;
  for (long i = -H; i <= H; ++i) s.values.push_back(gamma[std::size_t((i % N + N) % N)]);

  DualWindow d{Window::sampled(std::move(s)), std::sqrt(lo), std::sqrt(hi), double(L)};
  return d;
}

std::vector<cplx> frame_samples(const FrameSpec& fs, const QPSignal& f) {
  if (f.nu != fs.nu) throw std::domain_error("frame_samples: signal nu differs from the frame's nu");
  FrameSpec wide = fs;
  wide.K = std::max(fs.K, f.K());
  const AnalysisMatrix am = analysis_matrix(wide);
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(2 * am.K + 1);
  for (const auto& [k, v] : f.coeffs) a(k + am.K) = v;
  const Eigen::VectorXcd c = am.M * a;
  return {c.data(), c.data() + c.size()};
}

QPSignal reconstruct(const FrameSpec& fs, const std::vector<cplx>& samples, const Window& gamma) {
  fs.validate();
  if (samples.size() % 2 == 0) throw std::domain_error("reconstruct: need an odd number of samples centred at n = 0");
  const long N = long(samples.size() / 2);
  QPSignal out;
  out.nu = fs.nu;
  std::vector<cplx> coeffs(static_cast<std::size_t>(2 * fs.K + 1));
  parallel_for(coeffs.size(), [&](std::size_t idx) {
    const int k = int(idx) - fs.K;
    cplx acc = 0.0;
    for (long n = -N; n <= N; ++n) {
      const cplx c = samples[std::size_t(n + N)];
      if (c == 0.0) continue;
      // gamma-hat(xi) = conj(F(conj gamma)(-xi))
      acc += c * std::conj(gamma.ft_conj(-(fs.nu + k - fs.beta * double(n))));
    }
    coeffs[idx] = acc;
  });
  for (int k = -fs.K; k <= fs.K; ++k) out.coeffs[k] = coeffs[std::size_t(k + fs.K)];
  return out;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::frame: return "frame";
    case Verdict::not_frame: return "not_frame";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

PredicateResult sufficient_frame_predicate(const Window& g, double beta, bool beta_rational) {
  if (!(beta > 0.0)) throw std::domain_error("sufficient_frame_predicate: beta must be positive");
  const bool gaussian = g.kind() == WindowKind::gaussian || (g.kind() == WindowKind::hermite && g.order() == 0);
  if (gaussian) {
    if (beta < 1.0) return {Verdict::frame, "gaussian window: frame exactly when 1/beta > 1"};
    return {Verdict::not_frame, "gaussian window: no frame when 1/beta <= 1"};
  }
  if (g.kind() == WindowKind::hermite) {
    const int r = g.order();
    if (beta < 1.0 / (r + 1)) return {Verdict::frame, "hermite window h_" + std::to_string(r) + ": beta < 1/(r+1)"};
    return {Verdict::unknown, "hermite window h_" + std::to_string(r) + ": outside beta < 1/(r+1)"};
  }
  if (g.kind() == WindowKind::totally_positive) {
    if (beta_rational && beta < 1.0) return {Verdict::frame, "totally positive window: rational beta < 1"};
    return {Verdict::unknown, "totally positive window: needs rational beta < 1"};
  }
  return {Verdict::unknown, "no sufficient condition for this window"};
}

}  // namespace cylgabor

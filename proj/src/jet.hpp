#pragma once

#include <array>
#include <cmath>

#include "cylgabor/common.hpp"

namespace cylgabor::detail {

// Truncated Taylor series c_0 + c_1 h + ... + c_R h^R.
template <int R>
struct Jet {
  std::array<cplx, R + 1> c{};

  static Jet constant(cplx v) {
    Jet j;
    j.c[0] = v;
    return j;
  }
};

template <int R>
Jet<R> operator*(const Jet<R>& a, const Jet<R>& b) {
  Jet<R> out;
  for (int i = 0; i <= R; ++i)
    for (int j = 0; i + j <= R; ++j) out.c[i + j] += a.c[i] * b.c[j];
  return out;
}

template <int R>
Jet<R> operator+(Jet<R> a, const Jet<R>& b) {
  for (int i = 0; i <= R; ++i) a.c[i] += b.c[i];
  return a;
}

template <int R>
Jet<R> scaled(Jet<R> a, cplx s) {
  for (auto& v : a.c) v *= s;
  return a;
}

// exp(a - a_0), so the caller keeps exp(a_0) in log form.
template <int R>
Jet<R> exp_shifted(const Jet<R>& a) {
  Jet<R> e;
  e.c[0] = 1.0;
  for (int n = 1; n <= R; ++n) {
    cplx s = 0.0;
    for (int k = 1; k <= n; ++k) s += double(k) * a.c[k] * e.c[n - k];
    e.c[n] = s / double(n);
  }
  return e;
}

template <int R>
Jet<R> power(const Jet<R>& a, int p) {
  Jet<R> out = Jet<R>::constant(1.0);
  for (int i = 0; i < p; ++i) out = out * a;
  return out;
}

// log(1 - e^w) for complex w, stable when Re w is large.
inline cplx log1mexp(cplx w) {
  if (w.real() > 0.0) return w + std::log(std::exp(-w) - 1.0);
  return std::log(1.0 - std::exp(w));
}

// Jet at h = 0 of 1 - e^{w0 + s h}.
template <int R>
Jet<R> one_minus_exp(cplx w0, cplx s) {
  Jet<R> j;
  const cplx q0 = std::exp(w0);
  cplx term = q0;
  j.c[0] = 1.0 - q0;
  for (int n = 1; n <= R; ++n) {
    term *= s / double(n);
    j.c[n] = -term;
  }
  return j;
}

// Jet at h = 0 of log(1 - e^{w0 + s h}), using rho = q/(1-q), rho' = s rho (1 + rho).
template <int R>
Jet<R> log_one_minus_exp(cplx w0, cplx s) {
  Jet<R> rho;
  rho.c[0] = w0.real() > 0.0 ? 1.0 / (std::exp(-w0) - 1.0) : std::exp(w0) / (1.0 - std::exp(w0));
  for (int n = 0; n < R; ++n) {
    cplx sq = 0.0;
    for (int k = 0; k <= n; ++k) sq += rho.c[k] * rho.c[n - k];
    rho.c[n + 1] = s * (rho.c[n] + sq) / double(n + 1);
  }
  Jet<R> out;
  out.c[0] = log1mexp(w0);
  for (int n = 0; n < R; ++n) out.c[n + 1] = -s * rho.c[n] / double(n + 1);
  return out;
}

}  // namespace cylgabor::detail

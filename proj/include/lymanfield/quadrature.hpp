#pragma once
// Small quadrature toolkit shared by the solver, field and oracle code.
// Node tables come from Boost.Math; the drivers are templated on the value
// type so complex and vector-valued integrands go through one code path.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace lymanfield {

/// Thrown when a quadrature misses its tolerance. Carries the best value
/// reached (real part / first component) and the achieved error estimate.
class QuadratureError : public std::runtime_error {
public:
  QuadratureError(const std::string &what, double partial, double estimate)
      : std::runtime_error(what), partial_value(partial), error_estimate(estimate) {}
  double partial_value;
  double error_estimate;
};

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double> &v) { return std::abs(v); }
template <std::size_t N>
double magnitude(const std::array<std::complex<double>, N> &v) {
  double m = 0.0;
  for (const auto &x : v)
    m = std::max(m, std::abs(x));
  return m;
}

template <std::size_t N>
std::array<std::complex<double>, N> &operator+=(std::array<std::complex<double>, N> &a,
                                                const std::array<std::complex<double>, N> &b) {
  for (std::size_t i = 0; i < N; ++i)
    a[i] += b[i];
  return a;
}
template <std::size_t N>
std::array<std::complex<double>, N> operator+(std::array<std::complex<double>, N> a,
                                              const std::array<std::complex<double>, N> &b) {
  return a += b;
}
template <std::size_t N>
std::array<std::complex<double>, N> operator-(std::array<std::complex<double>, N> a,
                                              const std::array<std::complex<double>, N> &b) {
  for (std::size_t i = 0; i < N; ++i)
    a[i] -= b[i];
  return a;
}
template <std::size_t N>
std::array<std::complex<double>, N> operator*(double s, std::array<std::complex<double>, N> a) {
  for (auto &x : a)
    x *= s;
  return a;
}

template <class V> V zero_like() {
  if constexpr (std::is_arithmetic_v<V>)
    return V(0);
  else
    return V{};
}

/// Fixed 15-point Gauss-Legendre rule on [a, b].
template <class F> auto gauss_legendre15(F &&f, double a, double b) {
  using V = std::decay_t<decltype(f(a))>;
  const auto &x = boost::math::quadrature::gauss<double, 15>::abscissa();
  const auto &w = boost::math::quadrature::gauss<double, 15>::weights();
  const double h = 0.5 * (b - a), m = 0.5 * (a + b);
  V sum = w[0] * f(m);
  for (std::size_t i = 1; i < x.size(); ++i)
    sum += w[i] * (f(m - h * x[i]) + f(m + h * x[i]));
  return h * sum;
}

template <class V> struct QuadResult {
  V value;
  double error;
};

/// Gauss-Kronrod 7/15 on [a, b] with the |K15 - G7| error estimate.
template <class F> auto gauss_kronrod15(F &&f, double a, double b) {
  using V = std::decay_t<decltype(f(a))>;
  const auto &xk = boost::math::quadrature::gauss_kronrod<double, 15>::abscissa();
  const auto &wk = boost::math::quadrature::gauss_kronrod<double, 15>::weights();
  const auto &wg = boost::math::quadrature::gauss<double, 7>::weights();
  const double h = 0.5 * (b - a), m = 0.5 * (a + b);
  const V f0 = f(m);
  V kron = wk[0] * f0;
  V gauss = wg[0] * f0;
  for (std::size_t i = 1; i < xk.size(); ++i) {
    const V pair = f(m - h * xk[i]) + f(m + h * xk[i]);
    kron += wk[i] * pair;
    if (i % 2 == 0)
      gauss += wg[i / 2] * pair;
  }
  kron = h * kron;
  gauss = h * gauss;
  return QuadResult<V>{kron, magnitude(kron - gauss)};
}

/// Globally adaptive Gauss-Kronrod on [a, b] (bisect the worst interval).
/// `breaks` are optional interior points the initial partition must contain.
template <class F>
auto adaptive_integrate(F &&f, double a, double b, double abs_tol, double rel_tol,
                        std::vector<double> breaks = {}, int max_intervals = 4000) {
  using V = std::decay_t<decltype(f(a))>;
  struct Piece {
    double a, b;
    QuadResult<V> r;
    bool operator<(const Piece &o) const { return r.error < o.r.error; }
  };
  std::vector<double> edges{a};
  std::sort(breaks.begin(), breaks.end());
  for (double x : breaks)
    if (x > a && x < b)
      edges.push_back(x);
  edges.push_back(b);

  std::priority_queue<Piece> heap;
  V total = zero_like<V>();
  double err = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    auto r = gauss_kronrod15(f, edges[i], edges[i + 1]);
    total += r.value;
    err += r.error;
    heap.push({edges[i], edges[i + 1], r});
  }
  int count = static_cast<int>(heap.size());
  while (err > std::max(abs_tol, rel_tol * magnitude(total))) {
    if (count >= max_intervals)
      throw QuadratureError("adaptive_integrate: interval budget exhausted",
                            0.0, err);
    Piece worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // interval cannot be split further in double precision
      heap.push(worst);
      break;
    }
    auto left = gauss_kronrod15(f, worst.a, mid);
    auto right = gauss_kronrod15(f, mid, worst.b);
    total = total - worst.r.value + left.value + right.value;
    err += left.error + right.error - worst.r.error;
    heap.push({worst.a, mid, left});
    heap.push({mid, worst.b, right});
    ++count;
  }
  // re-sum to shed the drift of the running updates
  V fresh = zero_like<V>();
  double fresh_err = 0.0;
  while (!heap.empty()) {
    fresh += heap.top().r.value;
    fresh_err += heap.top().r.error;
    heap.pop();
  }
  return QuadResult<V>{fresh, fresh_err};
}

/// Composite 15-point Gauss-Legendre over consecutive panels. The value uses
/// each panel halved; the error is |halved - whole| summed over panels.
/// Panels may run in parallel; the sum is always taken in panel order.
template <class F>
auto panel_sum_gl15(F &&f, const std::vector<double> &edges, bool parallel) {
  using V = std::decay_t<decltype(f(edges.front()))>;
  const long n = static_cast<long>(edges.size()) - 1;
  std::vector<QuadResult<V>> parts(static_cast<std::size_t>(n > 0 ? n : 0));
  auto one = [&](long i) {
    const double a = edges[i], b = edges[i + 1], m = 0.5 * (a + b);
    const V whole = gauss_legendre15(f, a, b);
    const V fine = gauss_legendre15(f, a, m) + gauss_legendre15(f, m, b);
    parts[i] = {fine, magnitude(fine - whole)};
  };
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i)
      one(i);
  } else {
    for (long i = 0; i < n; ++i)
      one(i);
  }
  QuadResult<V> out{zero_like<V>(), 0.0};
  for (const auto &p : parts) {
    out.value += p.value;
    out.error += p.error;
  }
  return out;
}

/// Adaptive integration over [a, inf) through q = a + s/(1 - s).
template <class F>
auto adaptive_integrate_to_infinity(F &&f, double a, double abs_tol, double rel_tol,
                                    int max_intervals = 4000) {
  auto mapped = [&](double s) {
    const double one_minus = 1.0 - s;
    const double q = a + s / one_minus;
    return (1.0 / (one_minus * one_minus)) * f(q);
  };
  return adaptive_integrate(mapped, 0.0, 1.0, abs_tol, rel_tol, {}, max_intervals);
}

} // namespace lymanfield

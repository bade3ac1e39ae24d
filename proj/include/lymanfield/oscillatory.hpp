#pragma once
// Semi-infinite Fourier integrals  int_a^inf S(q) e^{i w q} dq.
//
// Half-period panels (length pi/|w|) are integrated with 15-point
// Gauss-Legendre; the alternating sequence of tail partial sums is
// accelerated with Wynn's epsilon algorithm. Panel values may be computed in
// parallel but are always combined in a fixed order, so the result does not
// depend on the thread count.

#include "lymanfield/quadrature.hpp"
#include "lymanfield/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

namespace lymanfield {

struct FourierOptions {
  double lower = 0.0;           ///< lower integration limit a
  double abs_tol = 1e-13;
  double rel_tol = 1e-11;
  /// Panels on [a, structure_end] are summed directly, never extrapolated.
  double structure_end = 0.0;
  /// When resonance_width > 0, panels are graded around resonance_center:
  /// width min(pi/|w|, width/4) inside |q - center| < 10 width, growing
  /// geometrically outside.
  double resonance_center = 0.0;
  double resonance_width = 0.0;
  int panel_cap = 200000; ///< tail panels before giving up
  int min_tail_terms = 8;
  bool parallel = true;
};

template <std::size_t N> struct OscillatoryResultN {
  std::array<cplx, N> value{};
  double error_estimate = 0.0;          ///< max over components
  std::array<double, N> component_error{};
  int panels_used = 0;
};

struct OscillatoryResult {
  cplx value;
  double error_estimate = 0.0;
  int panels_used = 0;
};

/// Thrown when the tail sequence fails to converge within the panel cap.
class OscillatoryError : public QuadratureError {
public:
  using QuadratureError::QuadratureError;
};

/// Below this |w| the head [a, a + max(20, 4 pi/|w|)] is integrated
/// adaptively and half-period extrapolation starts after it.
inline constexpr double kLowFrequency = 2.0;
/// Below this |w| the phase is not resolved at all and the whole range is
/// mapped onto a finite interval.
inline constexpr double kStaticFrequency = 1e-6;

/// e^{i w q} with the rounding of the product w q compensated, so the phase
/// stays accurate when |w q| is large.
inline cplx accurate_phase(double w, double q) {
  const double x = w * q;
  const double lo = std::fma(w, q, -x);
  const double c = std::cos(x), s = std::sin(x);
  return {c - s * lo, s + c * lo};
}

namespace detail {

/// Wynn epsilon extrapolation of partial sums s[0..m). Returns the deepest
/// even-column entry that could be formed.
cplx wynn_epsilon(const cplx *s, std::size_t m);

/// Sorted breakpoints covering [a, end]: uniform spacing h merged with the
/// graded resonance grid when width > 0.
std::vector<double> structure_breakpoints(double a, double end, double h, double center,
                                          double width);

template <std::size_t N, class F>
void evaluate_panels(F &S, double omega, const std::vector<double> &edges,
                     std::vector<std::array<cplx, N>> &out, bool parallel) {
  const std::size_t n = edges.size() - 1;
  out.assign(n, std::array<cplx, N>{});
  auto panel = [&](std::size_t i) {
    auto g = [&](double q) {
      std::array<cplx, N> v = S(q);
      const cplx ph = accurate_phase(omega, q);
      for (auto &x : v)
        x *= ph;
      return v;
    };
    out[i] = gauss_legendre15(g, edges[i], edges[i + 1]);
  };
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < static_cast<long>(n); ++i)
      panel(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i)
      panel(i);
  }
}

template <std::size_t N>
void add_magnitudes(const std::vector<std::array<cplx, N>> &v, std::array<double, N> &acc) {
  for (const auto &a : v)
    for (std::size_t c = 0; c < N; ++c)
      acc[c] += std::abs(a[c]);
}

} // namespace detail

/// int_a^inf S(q) e^{i w q} dq for N integrands sharing one set of nodes.
/// S must be callable concurrently from several threads when parallel.
template <std::size_t N, class F>
OscillatoryResultN<N> fourier_integral_n(F &&S, double omega, const FourierOptions &opt) {
  using Vec = std::array<cplx, N>;
  const double a = opt.lower;
  const bool resonance = opt.resonance_width > 0.0;
  double struct_end = std::max(opt.structure_end, a);
  if (resonance)
    struct_end = std::max(struct_end, opt.resonance_center + 10.0 * opt.resonance_width);
  OscillatoryResultN<N> res;

  Vec head{};
  std::array<double, N> abs_sum{};
  double head_err = 0.0;
  int panels = 0;
  double h = 0.0, q_tail = 0.0;

  if (std::abs(omega) < kLowFrequency) {
    auto g = [&](double q) {
      Vec v = S(q);
      const cplx ph = accurate_phase(omega, q);
      for (auto &x : v)
        x *= ph;
      return v;
    };
    // below kStaticFrequency the phase is treated as slowly varying all the way out
    const bool oscillating = std::abs(omega) >= kStaticFrequency;
    h = oscillating ? std::numbers::pi / std::abs(omega) : 0.0;
    const double mid = std::max({struct_end, a + 20.0, a + 4.0 * h});
    std::vector<double> breaks;
    if (resonance)
      breaks = detail::structure_breakpoints(a, mid, mid - a, opt.resonance_center,
                                             opt.resonance_width);
    else if (oscillating)
      breaks = detail::structure_breakpoints(a, mid, h, 0.0, 0.0);
    const auto hd = adaptive_integrate(g, a, mid, opt.abs_tol, opt.rel_tol, breaks);
    if (!oscillating) {
      auto tail = adaptive_integrate_to_infinity(g, mid, opt.abs_tol, opt.rel_tol);
      res.value = hd.value + tail.value;
      res.error_estimate = hd.error + tail.error;
      res.component_error.fill(res.error_estimate);
      return res;
    }
    head = hd.value;
    head_err = hd.error;
    for (std::size_t c = 0; c < N; ++c)
      abs_sum[c] = std::abs(head[c]);
    q_tail = mid;
  } else {
    h = std::numbers::pi / std::abs(omega);
    // structure region, rounded up to whole half-periods
    const double n_struct = std::ceil((struct_end - a) / h);
    q_tail = a + n_struct * h;
    if (n_struct > 0) {
      const auto edges = detail::structure_breakpoints(
          a, q_tail, h, opt.resonance_center, resonance ? opt.resonance_width : 0.0);
      std::vector<Vec> vals;
      detail::evaluate_panels<N>(S, omega, edges, vals, opt.parallel);
      for (const auto &v : vals)
        head += v;
      detail::add_magnitudes(vals, abs_sum);
      panels += static_cast<int>(vals.size());
    }
  }

  // tail: one half-period per term, extrapolated per component
  constexpr std::size_t chunk = 16;
  constexpr std::size_t window = 40;
  std::array<std::vector<cplx>, N> partial;
  Vec running{};
  Vec prev_est{}, est{};
  bool have_prev = false;
  std::size_t n_terms = 0;
  double last_diff = 0.0;
  int agreements = 0;
  std::vector<double> edges(chunk + 1);
  std::vector<Vec> vals;
  while (true) {
    for (std::size_t j = 0; j <= chunk; ++j)
      edges[j] = q_tail + static_cast<double>(n_terms + j) * h;
    detail::evaluate_panels<N>(S, omega, edges, vals, opt.parallel);
    detail::add_magnitudes(vals, abs_sum);
    for (std::size_t j = 0; j < chunk; ++j) {
      running += vals[j];
      ++n_terms;
      for (std::size_t c = 0; c < N; ++c) {
        partial[c].push_back(running[c]);
        const std::size_t m = partial[c].size();
        const std::size_t w = std::min(m, window);
        est[c] = detail::wynn_epsilon(partial[c].data() + (m - w), w);
      }
      if (have_prev && n_terms >= static_cast<std::size_t>(opt.min_tail_terms)) {
        // every component must meet its own tolerance
        constexpr double eps = std::numeric_limits<double>::epsilon();
        double diff = 0.0;
        bool converged = true;
        for (std::size_t c = 0; c < N; ++c) {
          const double d = std::abs(est[c] - prev_est[c]);
          diff = std::max(diff, d);
          const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(head[c] + est[c]));
          converged = converged && d <= std::max(tol, 50.0 * eps * abs_sum[c]);
          res.component_error[c] = d + head_err + 50.0 * eps * abs_sum[c];
        }
        agreements = converged ? agreements + 1 : 0;
        if (agreements >= 2) {
          res.error_estimate = 0.0;
          for (std::size_t c = 0; c < N; ++c) {
            res.value[c] = head[c] + est[c];
            res.error_estimate = std::max(res.error_estimate, res.component_error[c]);
          }
          res.panels_used = panels + static_cast<int>(n_terms);
          return res;
        }
        last_diff = diff;
      }
      prev_est = est;
      have_prev = true;
    }
    if (n_terms >= static_cast<std::size_t>(opt.panel_cap))
      throw OscillatoryError("fourier_integral: tail did not converge within panel cap",
                             (head[0] + est[0]).real(), last_diff);
  }
}

/// Scalar convenience form of fourier_integral_n.
OscillatoryResult fourier_integral(const std::function<cplx(double)> &S, double omega,
                                   const FourierOptions &opt = {});

/// int_a^inf S(q) sin(w q) dq and the cosine analogue, by linearity.
OscillatoryResult fourier_sin(const std::function<cplx(double)> &S, double omega,
                              const FourierOptions &opt = {});
OscillatoryResult fourier_cos(const std::function<cplx(double)> &S, double omega,
                              const FourierOptions &opt = {});

enum class Parity { Sine, Cosine };

/// Derivatives d^n R/dq^n at q = 0, n = 0..size-1.
struct EndpointData {
  std::vector<cplx> derivatives;
  Parity parity = Parity::Sine;
};

struct AsymptoticTerm {
  cplx value;
  int power; ///< the term scales as r'^{power}
};

/// Thrown when every supplied endpoint derivative of the relevant parity is
/// zero, i.e. the integral decays faster than the data can resolve.
class FasterDecayError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Leading integration-by-parts term of int_0^inf R(q) sin(q r') dq (uses
/// even derivatives: (-1)^{j/2} R^{(j)}(0)/r'^{j+1}) or of the cosine
/// integral (odd derivatives: (-1)^{(j+1)/2} R^{(j)}(0)/r'^{j+1}).
AsymptoticTerm ibp_asymptotic(const EndpointData &endpoint, double r_prime);

} // namespace lymanfield

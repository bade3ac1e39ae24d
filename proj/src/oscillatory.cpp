#include "lymanfield/oscillatory.hpp"

#include <algorithm>
#include <stdexcept>

namespace lymanfield {

namespace detail {

cplx wynn_epsilon(const cplx *s, std::size_t m) {
  if (m == 0)
    return 0.0;
  if (m < 3)
    return s[m - 1];
  std::vector<cplx> prev(m + 1, cplx(0.0)); // eps_{-1}
  std::vector<cplx> cur(s, s + m);          // eps_0
  cplx best = s[m - 1];
  for (int k = 0; cur.size() >= 2; ++k) {
    std::vector<cplx> next(cur.size() - 1);
    for (std::size_t n = 0; n + 1 < cur.size(); ++n) {
      const cplx d = cur[n + 1] - cur[n];
      const bool even = (k % 2 == 0);
      // an even column that has stopped moving is the answer already
      if (d == cplx(0.0) ||
          (even && std::abs(d) <= 1e-15 * std::max(std::abs(cur[n]), std::abs(cur[n + 1]))))
        return best;
      next[n] = prev[n + 1] + 1.0 / d;
    }
    if (k % 2 == 1)
      best = next.back();
    prev = std::move(cur);
    cur = std::move(next);
  }
  return best;
}

std::vector<double> structure_breakpoints(double a, double end, double h, double center,
                                          double width) {
  std::vector<double> pts;
  const long n = static_cast<long>(std::ceil((end - a) / h - 1e-9));
  for (long j = 0; j <= n; ++j)
    pts.push_back(std::min(a + static_cast<double>(j) * h, end));
  pts.push_back(end);
  if (width > 0.0) {
    const double fine = width / 4.0;
    for (int k = -40; k <= 40; ++k)
      pts.push_back(center + k * fine);
    double x = center + 10.0 * width, step = fine;
    while (step < h && x < end) {
      step *= 1.5;
      x += step;
      pts.push_back(x);
      pts.push_back(2.0 * center - x);
    }
  }
  std::vector<double> out;
  std::sort(pts.begin(), pts.end());
  for (double x : pts) {
    if (x < a || x > end)
      continue;
    if (!out.empty() && x - out.back() <= 1e-13 * std::max(1.0, std::abs(x)))
      continue;
    out.push_back(x);
  }
  if (out.back() < end)
    out.back() = end;
  return out;
}

} // namespace detail

OscillatoryResult fourier_integral(const std::function<cplx(double)> &S, double omega,
                                   const FourierOptions &opt) {
  auto wrapped = [&](double q) { return std::array<cplx, 1>{S(q)}; };
  const auto r = fourier_integral_n<1>(wrapped, omega, opt);
  return {r.value[0], r.error_estimate, r.panels_used};
}

OscillatoryResult fourier_sin(const std::function<cplx(double)> &S, double omega,
                              const FourierOptions &opt) {
  const auto p = fourier_integral(S, omega, opt);
  const auto m = fourier_integral(S, -omega, opt);
  return {(p.value - m.value) / cplx(0.0, 2.0), 0.5 * (p.error_estimate + m.error_estimate),
          p.panels_used + m.panels_used};
}

OscillatoryResult fourier_cos(const std::function<cplx(double)> &S, double omega,
                              const FourierOptions &opt) {
  const auto p = fourier_integral(S, omega, opt);
  const auto m = fourier_integral(S, -omega, opt);
  return {0.5 * (p.value + m.value), 0.5 * (p.error_estimate + m.error_estimate),
          p.panels_used + m.panels_used};
}

AsymptoticTerm ibp_asymptotic(const EndpointData &endpoint, double r_prime) {
  if (!(r_prime > 0.0))
    throw std::invalid_argument("ibp_asymptotic: r' must be positive");
  if (endpoint.derivatives.empty())
    throw std::invalid_argument("ibp_asymptotic: no endpoint derivatives supplied");
  const std::size_t first = endpoint.parity == Parity::Sine ? 0 : 1;
  for (std::size_t j = first; j < endpoint.derivatives.size(); j += 2) {
    const cplx d = endpoint.derivatives[j];
    if (d == cplx(0.0))
      continue;
    const int half = endpoint.parity == Parity::Sine ? static_cast<int>(j / 2)
                                                     : static_cast<int>((j + 1) / 2);
    const double sign = (half % 2) ? -1.0 : 1.0;
    const int power = -static_cast<int>(j) - 1;
    return {sign * d * std::pow(r_prime, power), power};
  }
  throw FasterDecayError("ibp_asymptotic: all supplied derivatives vanish; the integral "
                         "decays faster than the highest supplied order");
}

} // namespace lymanfield

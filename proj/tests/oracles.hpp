// Test-side oracles, deliberately independent of the library's evaluation
// paths: direct quadrature for Gamma, Euler-transformed alternating series
// for eta/zeta, and plain partial sums. Slow and simple on purpose.
#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace oracles {

using Complex = std::complex<double>;

// Gamma(z) for Re z > 0 as series (lower part) + composite Simpson (upper):
//   int_0^1 t^(z-1) e^-t dt = sum_k (-1)^k / (k! (z+k))
//   int_1^T t^(z-1) e^-t dt by Simpson, T large enough that the tail is dust.
inline Complex gamma_quadrature(const Complex& z) {
  Complex lower(0.0, 0.0);
  double kfact = 1.0;
  double sign = 1.0;
  for (int k = 0; k < 48; ++k) {
    if (k > 0) kfact *= k;
    lower += sign / (kfact * (z + static_cast<double>(k)));
    sign = -sign;
  }

  const double t_hi = 48.0;
  const int panels = 1 << 17;  // even
  const double h = (t_hi - 1.0) / panels;
  auto f = [&](double t) { return std::exp((z - 1.0) * std::log(t) - t); };
  Complex acc = f(1.0) + f(t_hi);
  for (int i = 1; i < panels; ++i)
    acc += f(1.0 + i * h) * ((i & 1) ? 4.0 : 2.0);
  return lower + acc * (h / 3.0);
}

// Euler/van Wijngaarden transform of sum_{n>=0} (-1)^n a(n): iterated
// averaging of partial sums. Geometric convergence for smooth decreasing
// terms, which covers n^(-s) at moderate |Im s|.
template <typename TermFn>
Complex alternating_sum(TermFn a, int n_terms) {
  std::vector<Complex> s(static_cast<size_t>(n_terms));
  Complex partial(0.0, 0.0);
  double sign = 1.0;
  for (int n = 0; n < n_terms; ++n) {
    partial += sign * a(n);
    s[static_cast<size_t>(n)] = partial;
    sign = -sign;
  }
  for (size_t len = s.size(); len > 1; --len)
    for (size_t i = 0; i + 1 < len; ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
  return s[0];
}

// eta(s) = sum (-1)^(n-1) n^(-s), Re s > 0.
inline Complex eta_euler(const Complex& s, int n_terms = 72) {
  return alternating_sum(
      [&](int n) { return std::exp(-s * std::log(static_cast<double>(n + 1))); },
      n_terms);
}

// zeta via the eta route, usable for Re s > 0 away from s = 1.
inline Complex zeta_from_eta(const Complex& s, int n_terms = 72) {
  const Complex denom = 1.0 - std::exp((1.0 - s) * std::log(2.0));
  return eta_euler(s, n_terms) / denom;
}

// Plain partial sum of n^(-s) with its integral tail bound; Re s > 1.
inline Complex zeta_partial_sum(const Complex& s, long long N) {
  Complex acc(0.0, 0.0);
  for (long long n = N; n >= 1; --n)
    acc += std::exp(-s * std::log(static_cast<double>(n)));
  return acc;
}

inline double zeta_tail_bound(double sigma, long long N) {
  // |sum_{n>N} n^-s| <= int_N^inf x^-sigma dx
  return std::pow(static_cast<double>(N), 1.0 - sigma) / (sigma - 1.0);
}

}  // namespace oracles

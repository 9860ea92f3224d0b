#include "zetascope/zfn.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace zetascope {

void EvalConfig::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1.0))
    throw DomainError("rel_tol must lie in (0, 1)");
  if (!(pole_radius > 0.0)) throw DomainError("pole_radius must be positive");
  if (series_terms < 8) throw DomainError("series_terms must be >= 8");
}

std::string PoleError::describe(Which which, const Complex& at) {
  const char* name = which == Which::Gamma  ? "Gamma"
                     : which == Which::Zeta ? "zeta"
                                            : "Z";
  return std::string("pole of ") + name + " at s = (" +
         std::to_string(at.real()) + ", " + std::to_string(at.imag()) + ")";
}

namespace detail {

Complex expm1c(const Complex& z) {
  // exp(x+iy)-1 = expm1(x)*cos(y) - 2*sin^2(y/2) + i*exp(x)*sin(y)
  const double x = z.real(), y = z.imag();
  if (std::abs(x) > 0.5 || std::abs(y) > 0.5) return std::exp(z) - 1.0;
  const double sy2 = std::sin(0.5 * y);
  return Complex(std::expm1(x) * std::cos(y) - 2.0 * sy2 * sy2,
                 std::exp(x) * std::sin(y));
}

Complex sin_pi(const Complex& z) {
  const double n = std::nearbyint(z.real());
  const Complex f(z.real() - n, z.imag());  // |Re f| <= 1/2, reduced exactly
  const Complex s = std::sin(kPi * f);
  // sin(pi*(n+f)) = (-1)^n sin(pi*f)
  return (std::fmod(n, 2.0) == 0.0) ? s : -s;
}

Complex log_sin_pi(const Complex& z) {
  const double y = z.imag();
  if (std::abs(y) < 1.0) {
    return std::log(sin_pi(z));
  }
  if (y > 0.0) {
    // sin(w) = (i/2) e^{-iw} (1 - e^{2iw}), |e^{2iw}| = e^{-2 Im w} small.
    const Complex w = kPi * z;
    return Complex(0.0, 0.5 * kPi) - std::log(Complex(2.0, 0.0)) -
           Complex(0.0, 1.0) * w + std::log(1.0 - std::exp(Complex(0.0, 2.0) * w));
  }
  return std::conj(log_sin_pi(std::conj(z)));
}

int borwein_terms(double digits, double abs_im_s, int floor_terms) {
  // n * ln(3+sqrt(8)) >= digits*ln(10) + pi*|t|/2 + margin
  const int n = static_cast<int>(std::ceil(1.31 * digits + 0.9 * abs_im_s)) + 16;
  return std::clamp(std::max(n, floor_terms), 8, 256);
}

namespace {

// Lanczos g = 7, 9-term coefficients (double-precision set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

constexpr double kHalfLn2Pi = 0.91893853320467274178032973640562;

// log Gamma on Re s >= 1/2 only; reflection is handled by the caller.
Complex log_gamma_lanczos(const Complex& s) {
  const Complex z = s - 1.0;
  Complex acc(kLanczos[0], 0.0);
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return kHalfLn2Pi + (z + 0.5) * std::log(t) - t + std::log(acc);
}

Complex log_gamma_c(const Complex& s) {
  if (s.real() >= 0.5) return log_gamma_lanczos(s);
  // Gamma(s) Gamma(1-s) = pi / sin(pi s)
  return Complex(kLnPi, 0.0) - detail::log_sin_pi(s) - log_gamma_lanczos(1.0 - s);
}

double pole_distance_gamma(const Complex& s) {
  if (s.real() > 0.5) return 1.0;
  const double n = std::nearbyint(s.real());
  if (n > 0.0) return 1.0;
  return std::abs(s - Complex(n, 0.0));
}

}  // namespace
}  // namespace detail

LogComplex log_gamma(const Complex& s) {
  require_finite(s, "log_gamma");
  if (detail::pole_distance_gamma(s) < 1e-12)
    throw PoleError(PoleError::Which::Gamma, s);
  const Complex lg = detail::log_gamma_c(s);
  return LogComplex{lg.real(), normalize_phase(lg.imag())};
}

Complex recip_gamma(const Complex& s) {
  require_finite(s, "recip_gamma");
  if (s.real() >= 0.5) return std::exp(-detail::log_gamma_c(s));
  // 1/Gamma(s) = sin(pi s) Gamma(1-s) / pi, entire; sin_pi is exactly zero
  // at the nonpositive integers so the trivial zeros come out exact.
  const Complex sp = detail::sin_pi(s);
  if (sp == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
  return sp * std::exp(detail::log_gamma_c(1.0 - s) - kLnPi);
}

namespace {

// Borwein's algorithm 2: d_k weights for the accelerated eta series.
std::vector<double> borwein_d(int n) {
  std::vector<double> d(static_cast<size_t>(n) + 1);
  double term = 1.0 / n;  // (n+j-1)! 4^j / ((n-j)! (2j)!) at j = 0
  double sum = term;
  d[0] = n * sum;
  for (int j = 1; j <= n; ++j) {
    term *= 4.0 * (n + j - 1) * (n - j + 1) / (2.0 * j * (2.0 * j - 1));
    sum += term;
    d[static_cast<size_t>(j)] = n * sum;
  }
  return d;
}

Complex zeta_borwein(const Complex& s, int n) {
  const std::vector<double> d = borwein_d(n);
  const double dn = d[static_cast<size_t>(n)];
  Complex acc(0.0, 0.0);
  double sign = 1.0;
  for (int k = 0; k < n; ++k) {
    // (k+1)^(-s) = exp(-s ln(k+1))
    acc += sign * (d[static_cast<size_t>(k)] - dn) *
           std::exp(-s * std::log(static_cast<double>(k + 1)));
    sign = -sign;
  }
  // 1 - 2^(1-s) without cancellation near s = 1.
  const Complex denom = -detail::expm1c((1.0 - s) * kLn2);
  return -acc / (dn * denom);
}

}  // namespace

Complex zeta_right(const Complex& s, const EvalConfig& cfg) {
  require_finite(s, "zeta_right");
  cfg.validate();
  if (s.real() < 0.5)
    throw DomainError("zeta_right requires Re s >= 1/2");
  if (std::abs(s - Complex(1.0, 0.0)) < cfg.pole_radius)
    throw PoleError(PoleError::Which::Zeta, s);

  const double digits = -std::log10(cfg.rel_tol);
  const int n = detail::borwein_terms(digits, std::abs(s.imag()), cfg.series_terms);

  // The eta denominator (1 - 2^(1-s)) also vanishes at s = 1 + 2*pi*i*k/ln 2
  // for k != 0, where zeta itself is regular. Evaluate at s +/- h along the
  // real direction and average; accuracy degrades to ~1e-6 in those disks.
  const Complex denom = -detail::expm1c((1.0 - s) * kLn2);
  if (std::abs(denom) < 1e-3 && std::abs(s - Complex(1.0, 0.0)) > 0.5) {
    const double h = 1e-4;
    return 0.5 * (zeta_borwein(s + h, n) + zeta_borwein(s - h, n));
  }
  return zeta_borwein(s, n);
}

Complex zeta(const Complex& s, const EvalConfig& cfg) {
  require_finite(s, "zeta");
  cfg.validate();
  if (s.real() >= 0.5) return zeta_right(s, cfg);
  // Two leading terms of the reflected product's limit at s = 0, where the
  // zeta(1-s) pole cancels the 1/Gamma(s/2) zero.
  if (std::abs(s) <= 1e-8) return Complex(-0.5, 0.0) - 0.5 * (kLn2 + kLnPi) * s;

  // zeta(s) = pi^(s-1/2) Gamma((1-s)/2) * zeta(1-s) / Gamma(s/2). Written
  // with recip_gamma so the trivial zeros at -2, -4, ... are exact zeros.
  EvalConfig right = cfg;
  right.pole_radius = std::min(cfg.pole_radius, 1e-12);
  const Complex rg = recip_gamma(0.5 * s);
  if (rg == Complex(0.0, 0.0)) return Complex(0.0, 0.0);
  const Complex lg = detail::log_gamma_c(0.5 * (1.0 - s));
  return std::exp((s - 0.5) * kLnPi + lg) * zeta_right(1.0 - s, right) * rg;
}

namespace {

LogComplex log_completed_zeta_right(const Complex& s, const EvalConfig& cfg) {
  const Complex zv = zeta_right(s, cfg);
  if (zv == Complex(0.0, 0.0)) throw ZeroOfZError(s);
  const Complex lg = detail::log_gamma_c(0.5 * s);
  const Complex logz = -0.5 * s * kLnPi + lg + std::log(zv);
  return LogComplex{logz.real(), normalize_phase(logz.imag())};
}

}  // namespace

LogComplex log_completed_zeta(const Complex& s, const EvalConfig& cfg) {
  require_finite(s, "log_completed_zeta");
  cfg.validate();
  if (std::abs(s) < cfg.pole_radius ||
      std::abs(s - Complex(1.0, 0.0)) < cfg.pole_radius)
    throw PoleError(PoleError::Which::Z, s);
  // Everything left of the critical line reflects through Z(s) = Z(1-s).
  if (s.real() >= 0.5) return log_completed_zeta_right(s, cfg);
  return log_completed_zeta_right(1.0 - s, cfg);
}

Complex completed_zeta(const Complex& s, const EvalConfig& cfg) {
  return log_completed_zeta(s, cfg).to_complex();
}

Complex zeta_series_oracle(const Complex& s, long long n_terms) {
  require_finite(s, "zeta_series_oracle");
  if (s.real() <= 1.0)
    throw DomainError("zeta_series_oracle requires Re s > 1");
  if (n_terms < 1) throw DomainError("n_terms must be >= 1");
  Complex acc(0.0, 0.0);
  for (long long n = n_terms; n >= 1; --n)  // small terms first
    acc += std::exp(-s * std::log(static_cast<double>(n)));
  return acc;
}

Complex euler_product_oracle(const Complex& s, long long prime_bound) {
  require_finite(s, "euler_product_oracle");
  if (s.real() <= 1.0)
    throw DomainError("euler_product_oracle requires Re s > 1");
  if (prime_bound < 2) throw DomainError("prime_bound must be >= 2");
  // Sieve of Eratosthenes up to prime_bound.
  std::vector<bool> composite(static_cast<size_t>(prime_bound) + 1, false);
  Complex prod(1.0, 0.0);
  for (long long p = 2; p <= prime_bound; ++p) {
    if (composite[static_cast<size_t>(p)]) continue;
    for (long long q = p * p; q <= prime_bound; q += p)
      composite[static_cast<size_t>(q)] = true;
    prod *= 1.0 / (1.0 - std::exp(-s * std::log(static_cast<double>(p))));
  }
  return prod;
}

}  // namespace zetascope

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace zetascope {

using Complex = std::complex<double>;

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kLnPi = 1.14472988584940017414342735135306;
constexpr double kLn2 = 0.69314718055994530941723212145818;

/// Maps any angle to the canonical range (-pi, pi]; -pi folds to +pi.
inline double normalize_phase(double p) {
  double r = std::remainder(p, kTwoPi);
  if (r <= -kPi) r = kPi;
  return r;
}

/// A nonzero complex value kept as (log-modulus, phase) so that values far
/// outside the double range still carry a usable sign/argument.
struct LogComplex {
  double log_modulus = 0.0;
  double phase = 0.0;  // always in (-pi, pi]

  static LogComplex from_complex(const Complex& w) {
    return LogComplex{std::log(std::abs(w)), normalize_phase(std::arg(w))};
  }

  Complex to_complex() const {
    const double m = std::exp(log_modulus);
    return Complex(m * std::cos(phase), m * std::sin(phase));
  }

  /// Log-domain product: add log-moduli, renormalize the phase sum.
  LogComplex operator*(const LogComplex& o) const {
    return LogComplex{log_modulus + o.log_modulus,
                      normalize_phase(phase + o.phase)};
  }
};

struct EvalConfig {
  int series_terms = 32;      // baseline alternating-series depth
  double rel_tol = 1e-12;     // target relative accuracy
  double pole_radius = 0.05;  // exclusion radius around s = 0 and s = 1

  void validate() const;
};

/// Rectangle in the s-plane plus sampling resolution. nx counts samples
/// along t, ny along sigma; both grids include their endpoints.
struct Window {
  double sigma_min = -6.0;
  double sigma_max = 7.0;
  double t_min = -45.0;
  double t_max = 45.0;
  int nx = 2;
  int ny = 2;

  void validate() const;

  double sigma_at(int row) const {
    if (ny == 1) return sigma_min;
    return sigma_min + row * (sigma_max - sigma_min) / (ny - 1);
  }
  double t_at(int col) const {
    if (nx == 1) return t_min;
    return t_min + col * (t_max - t_min) / (nx - 1);
  }
  double sigma_step() const {
    return ny > 1 ? (sigma_max - sigma_min) / (ny - 1) : 0.0;
  }
  double t_step() const { return nx > 1 ? (t_max - t_min) / (nx - 1) : 0.0; }
  double cell_diagonal() const {
    return std::hypot(sigma_step(), t_step());
  }

  bool operator==(const Window& o) const = default;
};

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class NonFiniteError : public Error {
 public:
  explicit NonFiniteError(const std::string& what_input)
      : Error("non-finite value in " + what_input) {}
};

/// Thrown when an evaluation point is (too close to) a pole. `which` names
/// the offending factor so CLI messages can say which pole was hit.
class PoleError : public Error {
 public:
  enum class Which { Gamma, Zeta, Z };
  PoleError(Which which, const Complex& at)
      : Error(describe(which, at)), which_(which), at_(at) {}
  Which which() const { return which_; }
  Complex at() const { return at_; }

 private:
  static std::string describe(Which which, const Complex& at);
  Which which_;
  Complex at_;
};

class ZeroOfZError : public Error {
 public:
  explicit ZeroOfZError(const Complex& at)
      : Error("Z evaluates to floating-point zero; log form undefined"),
        at_(at) {}
  Complex at() const { return at_; }

 private:
  Complex at_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

class RealityViolation : public Error {
 public:
  explicit RealityViolation(const std::string& msg) : Error(msg) {}
};

class EmptyFieldError : public Error {
 public:
  EmptyFieldError() : Error("phase field has no fully valid 2x2 block") {}
};

class WrongColorError : public Error {
 public:
  explicit WrongColorError(const std::string& msg) : Error(msg) {}
};

class SelfComparisonError : public Error {
 public:
  SelfComparisonError()
      : Error("curve_pair_intersections called with a curve against itself") {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& msg) : Error(msg) {}
};

inline void require_finite(const Complex& s, const char* where) {
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw NonFiniteError(where);
}

}  // namespace zetascope

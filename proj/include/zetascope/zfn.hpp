#pragma once

#include "zetascope/types.hpp"

namespace zetascope {

/// log Gamma(s) for any s away from the poles {0, -1, -2, ...}.
/// Lanczos approximation on Re s >= 1/2, reflection formula elsewhere.
/// The returned phase is a representative of arg Gamma(s) mod 2*pi,
/// renormalized to (-pi, pi].
LogComplex log_gamma(const Complex& s);

/// 1/Gamma(s), entire; exactly 0.0 at the nonpositive integers.
Complex recip_gamma(const Complex& s);

/// zeta(s) on Re s >= 1/2 via the Borwein-accelerated alternating series
/// eta(s) = sum (-1)^(n-1) n^(-s) and zeta = eta / (1 - 2^(1-s)).
/// The working depth grows with |Im s| so the documented accuracy holds up
/// to |Im s| ~ 100 regardless of cfg.series_terms (which acts as a floor).
Complex zeta_right(const Complex& s, const EvalConfig& cfg = {});

/// zeta(s) anywhere except s = 1: delegates to zeta_right on Re s >= 1/2 and
/// reflects through Z(s) = Z(1-s) otherwise. The reflected product is
/// evaluated in a pole-cancelling form so values like zeta(0) and the trivial
/// zeros at -2, -4, ... come out exactly.
Complex zeta(const Complex& s, const EvalConfig& cfg = {});

/// Z(s) = pi^(-s/2) Gamma(s/2) zeta(s) in linear representation. May
/// underflow to 0 for large |Im s|; sign-sensitive callers should use
/// log_completed_zeta.
Complex completed_zeta(const Complex& s, const EvalConfig& cfg = {});

/// log Z(s) as (log|Z|, arg Z) with the phase in (-pi, pi]. This is the
/// primitive the field sampler consumes; the phase keeps the correct sign of
/// sin/cos everywhere |Z| is representable in log domain.
LogComplex log_completed_zeta(const Complex& s, const EvalConfig& cfg = {});

/// Partial sum of sum_{n<=N} n^(-s). Test oracle; requires Re s > 1.
Complex zeta_series_oracle(const Complex& s, long long n_terms);

/// Truncated Euler product over primes p <= prime_bound. Test oracle;
/// requires Re s > 1.
Complex euler_product_oracle(const Complex& s, long long prime_bound);

namespace detail {

/// exp(z) - 1 without cancellation for small |z|.
Complex expm1c(const Complex& z);

/// sin(pi*z) with the integer part of Re z reduced exactly, so the result is
/// exactly 0 at real integers and accurate near them.
Complex sin_pi(const Complex& z);

/// log(sin(pi*z)) mod 2*pi*i, stable for large |Im z| where sin overflows.
Complex log_sin_pi(const Complex& z);

/// Borwein series depth for a digits target at height t.
int borwein_terms(double digits, double abs_im_s, int floor_terms);

}  // namespace detail

}  // namespace zetascope

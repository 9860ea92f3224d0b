#pragma once

#include <string>
#include <vector>

#include "zetascope/contour.hpp"
#include "zetascope/types.hpp"

namespace zetascope {

struct ZeroRecord {
  double t = 0.0;            // ordinate of the zero on the critical line
  double refined_tol = 0.0;  // final bisection width
  bool simple = true;        // sign change with a nonvanishing slope estimate
};

struct Violation {
  int curve_id = 0;  // index into TopologyReport green curve order
  int crossing_count = 0;
  std::string reason;
};

struct TopologyReport {
  Window window;
  std::vector<ZeroRecord> zeros;  // scanned zeros with 0 < t <= |t| range
  int green_noneyes_curves = 0;
  int curves_with_one_crossing = 0;  // NonEyes curves with exactly one
  int eyes_curves = 0;
  int boundary_curves = 0;
  std::vector<Violation> violations;
  int zeros_in_window = 0;    // expected crossing sites (t and -t count once each)
  int crossings_total = 0;    // critical-line crossings over all green curves
  int crossings_matched = 0;
  bool bijection_ok = false;
  std::string summary;

  bool claims_hold() const { return violations.empty() && bijection_ok; }
};

/// The real value r with Z(1/2+it) = r e^{i theta}, theta in {0, pi}. The
/// sign survives underflow of exp (signed zero). Raises RealityViolation if
/// the phase strays from {0, pi} by more than 1e-6 — that would be an
/// evaluator bug, not mathematics.
double hardy_real(double t, const EvalConfig& cfg = {});

/// Sign-change scan of hardy_real on [step, t_max], each change refined by
/// bisection to width <= 1e-8. The simplicity flag thresholds the slope of
/// the gamma-factor-normalized value (see NOTES in scan_zeros) at 1e-3 over
/// a centered width of 1e-4.
std::vector<ZeroRecord> scan_zeros(double t_max, double step,
                                   const EvalConfig& cfg = {}, int threads = 0);

/// Riemann-von Mangoldt main term (T/2pi) ln(T/2pi) - T/2pi + 7/8.
/// Requires T > 2 pi e.
double zero_count_estimate(double T);

/// Field -> contour pipeline plus the desk-scale audit of the claim that
/// every non-eyes green curve crosses the critical line once and meets no
/// other blue curve. Boundary-classified curves are reported, never counted
/// as violations. Each crossing is cross-referenced against the zero scan.
TopologyReport topology_report(const Window& window, const EvalConfig& cfg = {},
                               int threads = 0);

std::string zeros_to_csv(const std::vector<ZeroRecord>& zeros);
std::string report_to_json(const TopologyReport& report);

}  // namespace zetascope

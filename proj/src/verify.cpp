#include "zetascope/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "detail/parallel.hpp"
#include "zetascope/field.hpp"
#include "zetascope/zfn.hpp"

namespace zetascope {

namespace {

LogComplex log_z_on_line(double t, const EvalConfig& cfg) {
  return log_completed_zeta(Complex(0.5, t), cfg);
}

double signed_value(const LogComplex& lz) {
  const double sign = std::cos(lz.phase) >= 0.0 ? 1.0 : -1.0;
  return sign * std::exp(lz.log_modulus);  // may underflow to a signed zero
}

// Re log of the pi^(-s/2) Gamma(s/2) factor on the critical line. The raw
// Hardy value decays like exp(-pi t / 4); dividing it out leaves +-|zeta|,
// whose slope at a simple zero is |zeta'| = O(1), so a fixed slope threshold
// becomes meaningful at every height.
double gamma_envelope(double t) {
  const Complex s(0.5, t);
  return (-0.5 * s * kLnPi).real() + log_gamma(0.5 * s).log_modulus;
}

double normalized_hardy(double t, const EvalConfig& cfg) {
  const LogComplex lz = log_z_on_line(t, cfg);
  const double sign = std::cos(lz.phase) >= 0.0 ? 1.0 : -1.0;
  return sign * std::exp(lz.log_modulus - gamma_envelope(t));
}

// Sign of Z(1/2+it) without the reality gate: arbitrarily close to a zero
// the computed phase carries noise ~ (eval error)/|Z|, which is expected
// there, not an evaluator bug. Bisection only consumes the sign.
bool hardy_negative(double t, const EvalConfig& cfg) {
  return std::cos(log_z_on_line(t, cfg).phase) < 0.0;
}

}  // namespace

double hardy_real(double t, const EvalConfig& cfg) {
  if (!(t >= 0.0)) throw DomainError("hardy_real requires t >= 0");
  const LogComplex lz = log_z_on_line(t, cfg);
  const double off = std::abs(std::sin(lz.phase));
  if (off > 1e-6) {
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "Z(1/2 + %.9g i) phase %.6g is neither 0 nor pi", t, lz.phase);
    throw RealityViolation(buf);
  }
  return signed_value(lz);
}

std::vector<ZeroRecord> scan_zeros(double t_max, double step,
                                   const EvalConfig& cfg, int threads) {
  if (!(step > 0.0 && step <= 0.25))
    throw DomainError("scan step must lie in (0, 0.25]");
  if (!(t_max > 0.0 && t_max <= 100.0))
    throw DomainError("scan supports t_max in (0, 100]");
  cfg.validate();

  const int n = static_cast<int>(std::floor(t_max / step + 1e-9));
  if (n < 2) return {};

  // Sample values once; a sign change between samples k and k+1 belongs to
  // the chunk owning k, so the merged result is independent of threading.
  std::vector<double> value(static_cast<size_t>(n));
  detail::parallel_chunks(n, threads, [&](int k0, int k1) {
    for (int k = k0; k < k1; ++k)
      value[static_cast<size_t>(k)] = hardy_real((k + 1) * step, cfg);
  });

  std::vector<ZeroRecord> zeros;
  for (int k = 0; k + 1 < n; ++k) {
    const double a = value[static_cast<size_t>(k)];
    const double b = value[static_cast<size_t>(k) + 1];
    if (std::signbit(a) == std::signbit(b)) continue;
    double lo = (k + 1) * step, hi = (k + 2) * step;
    bool lo_neg = std::signbit(a);
    while (hi - lo > 1e-8) {
      const double mid = 0.5 * (lo + hi);
      if (hardy_negative(mid, cfg) == lo_neg)
        lo = mid;
      else
        hi = mid;
    }
    ZeroRecord z;
    z.t = 0.5 * (lo + hi);
    z.refined_tol = hi - lo;
    const double slope =
        (normalized_hardy(z.t + 5e-5, cfg) - normalized_hardy(z.t - 5e-5, cfg)) /
        1e-4;
    z.simple = std::abs(slope) > 1e-3;
    zeros.push_back(z);
  }
  return zeros;
}

double zero_count_estimate(double T) {
  constexpr double kTwoPiE = 17.079468445347132;
  if (!(T > kTwoPiE))
    throw DomainError("zero_count_estimate requires T > 2*pi*e");
  const double x = T / kTwoPi;
  return x * std::log(x) - x + 0.875;
}

namespace {

bool is_critical_line_curve(const Curve& c, const Window& w) {
  if (c.points.empty()) return false;
  const double tol = 2.0 * std::max(w.sigma_step(), 1e-12);
  size_t close = 0;
  for (const auto& p : c.points)
    if (std::abs(p[0] - 0.5) <= tol) ++close;
  return close >= c.points.size() * 95 / 100 && close > 0;
}

}  // namespace

TopologyReport topology_report(const Window& window, const EvalConfig& cfg,
                               int threads) {
  window.validate();
  cfg.validate();

  TopologyReport report;
  report.window = window;

  const PhaseField field = sample_phase_field(window, cfg, threads);
  const CurveSet curves = extract_curve_set(field, cfg);
  const double cell = window.cell_diagonal();

  // Zero scan covering the window's |t| range (supported up to 100).
  const double t_reach =
      std::min(100.0, std::max(std::abs(window.t_min), std::abs(window.t_max)));
  if (t_reach > 0.05) report.zeros = scan_zeros(t_reach, 0.05, cfg, threads);

  // Expected crossing ordinates inside the window: +t and -t per zero.
  std::vector<double> expected;
  for (const ZeroRecord& z : report.zeros) {
    if (z.t >= window.t_min - cell && z.t <= window.t_max + cell)
      expected.push_back(z.t);
    if (-z.t >= window.t_min - cell && -z.t <= window.t_max + cell)
      expected.push_back(-z.t);
  }
  std::sort(expected.begin(), expected.end());
  report.zeros_in_window = static_cast<int>(expected.size());

  std::vector<const Curve*> other_blue;
  std::vector<const Curve*> line_blue;
  for (const Curve& c : curves.blue)
    (is_critical_line_curve(c, window) ? line_blue : other_blue).push_back(&c);

  std::vector<double> crossing_ts;
  auto near_pole = [&](const std::array<double, 2>& p) {
    return std::hypot(p[0], p[1]) <= 2.0 * cfg.pole_radius ||
           std::hypot(p[0] - 1.0, p[1]) <= 2.0 * cfg.pole_radius;
  };

  for (int gi = 0; gi < static_cast<int>(curves.green.size()); ++gi) {
    const Curve& g = curves.green[gi];
    const int n_cross = count_critical_line_crossings(g);
    for (const auto& p : critical_line_crossing_points(g))
      crossing_ts.push_back(p[1]);

    switch (g.classification) {
      case CurveClass::Eyes: ++report.eyes_curves; break;
      case CurveClass::Boundary: ++report.boundary_curves; break;
      default: {
        ++report.green_noneyes_curves;
        if (n_cross == 1) ++report.curves_with_one_crossing;
        if (n_cross != 1)
          report.violations.push_back(
              {gi, n_cross, "non-eyes curve must cross the critical line once"});
        // A non-eyes curve must stay clear of every blue curve except the
        // critical line itself (pole skirts excepted).
        for (const Curve* b : other_blue) {
          for (const auto& p : curve_pair_intersections(g, *b, cell)) {
            if (near_pole(p)) continue;
            report.violations.push_back(
                {gi, n_cross, "non-eyes curve meets a blue curve off the line"});
            break;
          }
        }
        break;
      }
    }
  }

  // Greedy one-to-one matching of crossings to expected zero ordinates
  // within two cell diagonals.
  std::sort(crossing_ts.begin(), crossing_ts.end());
  report.crossings_total = static_cast<int>(crossing_ts.size());
  std::vector<bool> used(crossing_ts.size(), false);
  int matched = 0;
  for (double tz : expected) {
    int best = -1;
    double best_d = 2.0 * cell;
    for (size_t i = 0; i < crossing_ts.size(); ++i) {
      if (used[i]) continue;
      const double d = std::abs(crossing_ts[i] - tz);
      if (d <= best_d) {
        best_d = d;
        best = static_cast<int>(i);
      }
    }
    if (best >= 0) {
      used[static_cast<size_t>(best)] = true;
      ++matched;
    }
  }
  report.crossings_matched = matched;
  report.bijection_ok = matched == report.zeros_in_window &&
                        report.crossings_total == report.zeros_in_window;

  report.summary =
      report.claims_hold()
          ? "in-window curve topology is consistent with the conditional claim "
            "(one critical-line crossing per non-eyes green curve; crossings "
            "match scanned zeros); this is numerical evidence, not a proof"
          : "in-window curve topology shows deviations; see violations and "
            "crossing counts (a coarse grid can split or merge curves - try a "
            "finer resolution)";
  return report;
}

namespace {

void append_num(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  out += buf;
}

}  // namespace

std::string zeros_to_csv(const std::vector<ZeroRecord>& zeros) {
  std::string out = "index,t,tol,simple\n";
  for (size_t i = 0; i < zeros.size(); ++i) {
    out += std::to_string(i + 1) + ",";
    append_num(out, zeros[i].t);
    out += ",";
    append_num(out, zeros[i].refined_tol);
    out += ",";
    out += zeros[i].simple ? "1" : "0";
    out += "\n";
  }
  return out;
}

std::string report_to_json(const TopologyReport& r) {
  std::string out = "{\"window\":{\"sigma_min\":";
  append_num(out, r.window.sigma_min);
  out += ",\"sigma_max\":";
  append_num(out, r.window.sigma_max);
  out += ",\"t_min\":";
  append_num(out, r.window.t_min);
  out += ",\"t_max\":";
  append_num(out, r.window.t_max);
  out += ",\"nx\":" + std::to_string(r.window.nx);
  out += ",\"ny\":" + std::to_string(r.window.ny) + "}";
  out += ",\"zeros\":[";
  for (size_t i = 0; i < r.zeros.size(); ++i) {
    if (i) out += ",";
    out += "{\"index\":" + std::to_string(i + 1) + ",\"t\":";
    append_num(out, r.zeros[i].t);
    out += ",\"tol\":";
    append_num(out, r.zeros[i].refined_tol);
    out += ",\"simple\":";
    out += r.zeros[i].simple ? "true" : "false";
    out += "}";
  }
  out += "],\"green_noneyes_curves\":" + std::to_string(r.green_noneyes_curves);
  out += ",\"curves_with_one_crossing\":" +
         std::to_string(r.curves_with_one_crossing);
  out += ",\"eyes_curves\":" + std::to_string(r.eyes_curves);
  out += ",\"boundary_curves\":" + std::to_string(r.boundary_curves);
  out += ",\"violations\":[";
  for (size_t i = 0; i < r.violations.size(); ++i) {
    if (i) out += ",";
    out += "{\"curve_id\":" + std::to_string(r.violations[i].curve_id);
    out += ",\"crossing_count\":" + std::to_string(r.violations[i].crossing_count);
    out += ",\"reason\":\"" + r.violations[i].reason + "\"}";
  }
  out += "],\"zeros_in_window\":" + std::to_string(r.zeros_in_window);
  out += ",\"crossings_total\":" + std::to_string(r.crossings_total);
  out += ",\"crossings_matched\":" + std::to_string(r.crossings_matched);
  out += ",\"bijection_ok\":";
  out += r.bijection_ok ? "true" : "false";
  out += ",\"summary\":\"" + r.summary + "\"}";
  return out;
}

}  // namespace zetascope

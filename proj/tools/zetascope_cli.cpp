// Command-line front end: eval / render / zeros / verify.
//
// Exit codes are a stable contract for scripting:
//   0 success (and, for verify, claims hold)   1 verify found violations
//   2 usage or argument validation             3 domain error (pole)
//   4 I/O failure

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <string>

#include "zetascope/contour.hpp"
#include "zetascope/field.hpp"
#include "zetascope/parse.hpp"
#include "zetascope/render.hpp"
#include "zetascope/verify.hpp"
#include "zetascope/zfn.hpp"

namespace zs = zetascope;

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

struct RunConfig {
  zs::Window window;
  zs::EvalConfig eval;
  zs::RenderStyle style;
  int threads = 0;
  bool svg = false;
  std::string out;
  std::string cache;
  double zeros_t_max = 50.0;
  double zeros_step = 0.05;
};

// ---------------------------------------------------------------------------
// Flat key=value config file; '#' starts a comment. CLI flags override.

zs::Rgb parse_color(const std::string& s) {
  unsigned r = 0, g = 0, b = 0;
  if (s.size() != 7 || s[0] != '#' ||
      std::sscanf(s.c_str() + 1, "%02x%02x%02x", &r, &g, &b) != 3)
    throw zs::DomainError("colors must look like #rrggbb: " + s);
  return zs::Rgb{static_cast<uint8_t>(r), static_cast<uint8_t>(g),
                 static_cast<uint8_t>(b)};
}

double parse_double(const std::string& key, const std::string& s) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v))
    throw zs::DomainError("bad numeric value for " + key + ": " + s);
  return v;
}

int parse_int(const std::string& key, const std::string& s) {
  const double v = parse_double(key, s);
  if (v != static_cast<int>(v))
    throw zs::DomainError("value for " + key + " must be an integer: " + s);
  return static_cast<int>(v);
}

void apply_config_entry(RunConfig& rc, const std::string& key,
                        const std::string& value) {
  if (key == "sigma_min") rc.window.sigma_min = parse_double(key, value);
  else if (key == "sigma_max") rc.window.sigma_max = parse_double(key, value);
  else if (key == "t_min") rc.window.t_min = parse_double(key, value);
  else if (key == "t_max") rc.window.t_max = parse_double(key, value);
  else if (key == "width") { rc.window.nx = parse_int(key, value); rc.style.width = rc.window.nx; }
  else if (key == "height") { rc.window.ny = parse_int(key, value); rc.style.height = rc.window.ny; }
  else if (key == "tol") rc.eval.rel_tol = parse_double(key, value);
  else if (key == "terms") rc.eval.series_terms = parse_int(key, value);
  else if (key == "pole_radius") rc.eval.pole_radius = parse_double(key, value);
  else if (key == "threads") rc.threads = parse_int(key, value);
  else if (key == "out") rc.out = value;
  else if (key == "cache") rc.cache = value;
  else if (key == "svg") rc.svg = parse_int(key, value) != 0;
  else if (key == "line_px") rc.style.line_px = parse_int(key, value);
  else if (key == "background") rc.style.background = parse_color(value);
  else if (key == "blue") rc.style.blue = parse_color(value);
  else if (key == "green") rc.style.green = parse_color(value);
  else if (key == "draw_order") {
    if (value == "green_over_blue") rc.style.draw_order = zs::DrawOrder::GreenOverBlue;
    else if (value == "blue_over_green") rc.style.draw_order = zs::DrawOrder::BlueOverGreen;
    else throw zs::DomainError("draw_order must be green_over_blue or blue_over_green");
  }
  else if (key == "zeros_t_max") rc.zeros_t_max = parse_double(key, value);
  else if (key == "zeros_step") rc.zeros_step = parse_double(key, value);
  else throw zs::DomainError("unknown config key: " + key);
}

std::string trim(const std::string& s) {
  const size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

void load_config_file(RunConfig& rc, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw zs::IoError("cannot read config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw zs::DomainError(path + ":" + std::to_string(lineno) +
                            ": expected key = value");
    apply_config_entry(rc, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

// ---------------------------------------------------------------------------

void parse_window_flag(RunConfig& rc, const std::string& spec) {
  double v[4];
  size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    const size_t comma = i < 3 ? spec.find(',', pos) : spec.size();
    if (comma == std::string::npos)
      throw zs::DomainError("--window expects sigma_min,sigma_max,t_min,t_max");
    v[i] = parse_double("--window", spec.substr(pos, comma - pos));
    pos = comma + 1;
  }
  rc.window.sigma_min = v[0];
  rc.window.sigma_max = v[1];
  rc.window.t_min = v[2];
  rc.window.t_max = v[3];
}

void parse_size_flag(RunConfig& rc, const std::string& spec) {
  const size_t x = spec.find('x');
  if (x == std::string::npos) throw zs::DomainError("--size expects WxH");
  rc.window.nx = parse_int("--size", spec.substr(0, x));
  rc.window.ny = parse_int("--size", spec.substr(x + 1));
  rc.style.width = rc.window.nx;
  rc.style.height = rc.window.ny;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw zs::IoError("cannot open " + path + " for writing");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw zs::IoError("short write to " + path);
}

void write_file(const std::string& path, const std::vector<uint8_t>& bytes) {
  write_file(path,
             std::string(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

zs::PhaseField sample_with_cache(const RunConfig& rc) {
  if (!rc.cache.empty()) {
    try {
      zs::PhaseField f = zs::load_phase_field(rc.cache);
      if (f.window == rc.window) return f;
    } catch (const zs::IoError&) {
      // missing or stale cache: fall through and resample
    }
    zs::PhaseField f = zs::sample_phase_field(rc.window, rc.eval, rc.threads);
    zs::save_phase_field(f, rc.cache);
    return f;
  }
  return zs::sample_phase_field(rc.window, rc.eval, rc.threads);
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_eval(const RunConfig& rc, const std::string& s_text) {
  const auto s = zs::parse_complex(s_text);
  if (!s) {
    std::fprintf(stderr, "error: cannot parse \"%s\" as a+bi\n", s_text.c_str());
    return 2;
  }
  const zs::Complex zeta_v = zs::zeta(*s, rc.eval);
  const zs::LogComplex logz = zs::log_completed_zeta(*s, rc.eval);
  const zs::Complex z_v = logz.to_complex();

  const bool blue = std::abs(std::sin(logz.phase)) <= 1e-8;
  const bool green = std::abs(std::cos(logz.phase)) <= 1e-8;
  // A zero announces itself by |Z| collapsing relative to nearby values.
  double ref = 0.0;
  for (const zs::Complex d : {zs::Complex(0.01, 0), zs::Complex(-0.01, 0),
                              zs::Complex(0, 0.01), zs::Complex(0, -0.01)}) {
    try {
      ref = std::max(ref, std::exp(zs::log_completed_zeta(*s + d, rc.eval).log_modulus));
    } catch (const zs::Error&) {
    }
  }
  const bool zero = ref > 0.0 && std::exp(logz.log_modulus) < 1e-4 * ref;
  const char* predicate = zero    ? "zero (blue\\u2229green)"
                          : blue  ? "blue"
                          : green ? "green"
                                  : "neither";

  std::string json = "{\"s\":[" + fmt(s->real()) + "," + fmt(s->imag()) + "]";
  json += ",\"zeta\":[" + fmt(zeta_v.real()) + "," + fmt(zeta_v.imag()) + "]";
  json += ",\"Z\":[" + fmt(z_v.real()) + "," + fmt(z_v.imag()) + "]";
  json += ",\"log_abs_Z\":" + fmt(logz.log_modulus);
  json += ",\"arg_Z\":" + fmt(logz.phase);
  json += ",\"predicate\":\"" + std::string(predicate) + "\"}";
  std::printf("%s\n", json.c_str());
  return 0;
}

int cmd_render(const RunConfig& rc) {
  rc.window.validate();
  rc.style.validate();
  const zs::PhaseField field = sample_with_cache(rc);
  const zs::CurveSet curves = zs::extract_curve_set(field, rc.eval);
  const zs::Image img = zs::render_raster(field, rc.style, rc.threads);
  const std::string meta =
      zs::render_metadata_text(rc.window, rc.style.width, rc.style.height);

  const std::string out = rc.out.empty() ? "zeta.png" : rc.out;
  write_file(out, zs::encode_png(img, meta));
  std::string svg_note;
  if (rc.svg) {
    const size_t dot = out.rfind('.');
    const std::string svg_path =
        (dot == std::string::npos ? out : out.substr(0, dot)) + ".svg";
    write_file(svg_path, zs::render_vector(curves, rc.style));
    svg_note = " + " + svg_path;
  }

  int eyes = 0, noneyes = 0, boundary = 0;
  for (const zs::Curve& c : curves.green) {
    if (c.classification == zs::CurveClass::Eyes) ++eyes;
    else if (c.classification == zs::CurveClass::NonEyes) ++noneyes;
    else ++boundary;
  }
  std::printf(
      "wrote %s%s (%dx%d); curves: %zu blue, %zu green (%d eyes, %d non-eyes, "
      "%d boundary)\n",
      out.c_str(), svg_note.c_str(), rc.style.width, rc.style.height,
      curves.blue.size(), curves.green.size(), eyes, noneyes, boundary);
  return 0;
}

int cmd_zeros(const RunConfig& rc) {
  const auto zeros = zs::scan_zeros(rc.zeros_t_max, rc.zeros_step, rc.eval,
                                    rc.threads);
  const std::string out = rc.out.empty() ? "zeros.csv" : rc.out;
  write_file(out, zs::zeros_to_csv(zeros));

  std::string estimate = "null";
  std::string difference = "null";
  try {
    const double est = zs::zero_count_estimate(rc.zeros_t_max);
    estimate = fmt(est);
    difference = fmt(static_cast<double>(zeros.size()) - est);
  } catch (const zs::DomainError&) {
    // t_max at or below 2*pi*e: the estimate is undefined there
  }
  std::printf("{\"count\":%zu,\"estimate\":%s,\"difference\":%s,\"out\":\"%s\"}\n",
              zeros.size(), estimate.c_str(), difference.c_str(), out.c_str());
  return 0;
}

int cmd_verify(const RunConfig& rc) {
  const zs::TopologyReport report =
      zs::topology_report(rc.window, rc.eval, rc.threads);
  const std::string out = rc.out.empty() ? "report.json" : rc.out;
  write_file(out, zs::report_to_json(report));
  std::printf(
      "wrote %s; %d non-eyes (%d with one crossing), %d eyes, %d boundary, "
      "%zu violations, %d/%d crossings matched to zeros\n",
      out.c_str(), report.green_noneyes_curves, report.curves_with_one_crossing,
      report.eyes_curves, report.boundary_curves, report.violations.size(),
      report.crossings_matched, report.zeros_in_window);
  if (report.claims_hold()) return 0;
  std::printf("note: results depend on resolution; rerun with a finer --size "
              "before reading much into violations\n");
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Level-curve explorer for the completed zeta function "
               "Z(s) = pi^(-s/2) Gamma(s/2) zeta(s)"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path,
                 "flat key=value config file (env ZETA_CONFIG)");

  std::string window_spec, size_spec, out_path, cache_path, s_text;
  double tol = 0, pole_radius = 0, t_max = 0, step = 0;
  int terms = 0, threads = 0, line_px = 0;
  bool svg = false;

  auto add_eval_opts = [&](CLI::App* sub) {
    sub->add_option("--tol", tol, "target relative accuracy");
    sub->add_option("--terms", terms, "alternating-series depth floor");
    sub->add_option("--pole-radius", pole_radius, "exclusion radius at 0 and 1");
    sub->add_option("--threads", threads, "worker cap, 0 = auto");
  };
  auto add_window_opts = [&](CLI::App* sub) {
    sub->add_option("--window", window_spec, "sigma_min,sigma_max,t_min,t_max");
    sub->add_option("--size", size_spec, "WxH samples/pixels");
    sub->add_option("--out", out_path, "output path");
  };

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate zeta and Z at s");
  eval_cmd->add_option("s", s_text, "point, e.g. 0.5+14.134725i")->required();
  add_eval_opts(eval_cmd);

  CLI::App* render_cmd = app.add_subcommand("render", "write the PNG picture");
  add_window_opts(render_cmd);
  add_eval_opts(render_cmd);
  render_cmd->add_flag("--svg", svg, "also write a vector version");
  render_cmd->add_option("--line-px", line_px, "stroke half-width in pixels");
  render_cmd->add_option("--cache", cache_path, "ZPHF phase-field cache path");

  CLI::App* zeros_cmd = app.add_subcommand("zeros", "scan critical-line zeros");
  zeros_cmd->add_option("t_max", t_max, "scan ceiling (<= 100)");
  zeros_cmd->add_option("step", step, "scan step (<= 0.25)");
  zeros_cmd->add_option("--out", out_path, "CSV path");
  add_eval_opts(zeros_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "audit curve topology");
  add_window_opts(verify_cmd);
  add_eval_opts(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    RunConfig rc;
    const bool is_render = render_cmd->parsed();
    const bool is_verify = verify_cmd->parsed();
    if (is_render) {
      rc.window = zs::Window{-6.0, 7.0, -45.0, 45.0, 1600, 1000};
    } else if (is_verify) {
      rc.window = zs::Window{-6.0, 7.0, 2.0, 50.0, 1600, 900};
    }
    rc.style.width = rc.window.nx;
    rc.style.height = rc.window.ny;

    if (config_path.empty()) {
      if (const char* env = std::getenv("ZETA_CONFIG")) config_path = env;
    }
    if (!config_path.empty()) load_config_file(rc, config_path);

    CLI::App* sub = app.get_subcommands().front();
    auto set_by_flag = [&](const std::string& name) {
      const CLI::Option* o = sub->get_option_no_throw(name);
      return o && o->count() > 0;
    };
    if (set_by_flag("--window")) parse_window_flag(rc, window_spec);
    if (set_by_flag("--size")) parse_size_flag(rc, size_spec);
    if (set_by_flag("--tol")) rc.eval.rel_tol = tol;
    if (set_by_flag("--terms")) rc.eval.series_terms = terms;
    if (set_by_flag("--pole-radius")) rc.eval.pole_radius = pole_radius;
    if (set_by_flag("--threads")) rc.threads = threads;
    if (set_by_flag("--out")) rc.out = out_path;
    if (is_render) {
      if (render_cmd->count("--svg")) rc.svg = svg;
      if (render_cmd->count("--line-px")) rc.style.line_px = line_px;
      if (render_cmd->count("--cache")) rc.cache = cache_path;
    }
    if (zeros_cmd->parsed()) {
      if (zeros_cmd->count("t_max")) rc.zeros_t_max = t_max;
      if (zeros_cmd->count("step")) rc.zeros_step = step;
    }
    rc.eval.validate();

    if (eval_cmd->parsed()) return cmd_eval(rc, s_text);
    if (is_render) return cmd_render(rc);
    if (zeros_cmd->parsed()) return cmd_zeros(rc);
    return cmd_verify(rc);
  } catch (const zs::PoleError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const zs::RealityViolation& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const zs::ZeroOfZError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const zs::IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  } catch (const zs::DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const zs::NonFiniteError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 4;
  }
}

#include "zetascope/contour.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <unordered_map>

#include "zetascope/zfn.hpp"

namespace zetascope {

namespace {

using Point = std::array<double, 2>;

// ---------------------------------------------------------------------------
// Marching squares.
//
// Cell (r, c) spans rows r..r+1 and columns c..c+1. Edges are identified by
// dense ids: "t-edges" run along t between (r,c)-(r,c+1); "s-edges" along
// sigma between (r,c)-(r+1,c). Both cells adjacent to an edge interpolate the
// crossing from the same ordered endpoint pair, so the position is
// bit-identical no matter which cell computes it first.

struct Node {
  Point at;
  int64_t nbr[2] = {-1, -1};
  uint8_t degree = 0;
  bool visited = false;
};

class SegmentGraph {
 public:
  void link(int64_t e1, const Point& p1, int64_t e2, const Point& p2) {
    attach(node(e1, p1), e2);
    attach(node(e2, p2), e1);
  }

  std::vector<Curve> walk(CurveColor color) {
    std::vector<int64_t> ids;
    ids.reserve(nodes_.size());
    for (auto& [id, n] : nodes_) ids.push_back(id);
    std::sort(ids.begin(), ids.end());

    std::vector<Curve> curves;
    for (int64_t id : ids) {  // open paths first
      Node& n = nodes_[id];
      if (n.visited || n.degree != 1) continue;
      curves.push_back(trace(id, color, false));
    }
    for (int64_t id : ids) {  // remaining components are cycles
      Node& n = nodes_[id];
      if (n.visited) continue;
      curves.push_back(trace(id, color, true));
    }
    return curves;
  }

 private:
  Node& node(int64_t id, const Point& p) {
    auto [it, inserted] = nodes_.try_emplace(id);
    if (inserted) it->second.at = p;
    return it->second;
  }

  static void attach(Node& n, int64_t other) {
    if (n.degree < 2) n.nbr[n.degree] = other;
    ++n.degree;
  }

  Curve trace(int64_t start, CurveColor color, bool closed) {
    Curve curve;
    curve.color = color;
    curve.closed = closed;
    int64_t prev = -1;
    int64_t cur = start;
    while (true) {
      Node& n = nodes_[cur];
      n.visited = true;
      curve.points.push_back(n.at);
      int64_t next = -1;
      for (int k = 0; k < std::min<int>(n.degree, 2); ++k)
        if (n.nbr[k] != prev) {
          next = n.nbr[k];
          break;
        }
      if (next == -1) break;                  // open end
      if (closed && next == start) break;     // cycle complete
      if (nodes_[next].visited && !closed) break;
      prev = cur;
      cur = next;
    }
    return curve;
  }

  std::unordered_map<int64_t, Node> nodes_;
};

struct Extractor {
  const PhaseField& field;
  CurveColor color;
  const LevelSampler& center_level;

  const Window& w;
  int nx, ny;
  std::vector<double> g;  // level values, NaN where invalid
  SegmentGraph graph;
  bool any_cell = false;

  Extractor(const PhaseField& f, CurveColor col, const LevelSampler& lvl)
      : field(f), color(col), center_level(lvl), w(f.window), nx(w.nx), ny(w.ny) {
    g.resize(static_cast<size_t>(nx) * ny);
    for (int r = 0; r < ny; ++r)
      for (int c = 0; c < nx; ++c) {
        const size_t i = field.index(r, c);
        if (!field.valid[i]) {
          g[i] = std::numeric_limits<double>::quiet_NaN();
        } else {
          g[i] = color == CurveColor::Blue ? std::sin(field.phase[i])
                                           : std::cos(field.phase[i]);
        }
      }
  }

  static bool spos(double v) { return v > 0.0; }

  int64_t t_edge(int r, int c) const {
    return static_cast<int64_t>(r) * (nx - 1) + c;
  }
  int64_t s_edge(int r, int c) const {
    return static_cast<int64_t>(ny) * (nx - 1) +
           static_cast<int64_t>(r) * nx + c;
  }

  Point t_edge_point(int r, int c) const {
    const double g0 = g[field.index(r, c)];
    const double g1 = g[field.index(r, c + 1)];
    const double a = g0 / (g0 - g1);
    return {w.sigma_at(r), w.t_at(c) + a * w.t_step()};
  }
  Point s_edge_point(int r, int c) const {
    const double g0 = g[field.index(r, c)];
    const double g1 = g[field.index(r + 1, c)];
    const double a = g0 / (g0 - g1);
    return {w.sigma_at(r) + a * w.sigma_step(), w.t_at(c)};
  }

  std::vector<Curve> run() {
    for (int r = 0; r + 1 < ny; ++r)
      for (int c = 0; c + 1 < nx; ++c) cell(r, c);
    if (!any_cell) throw EmptyFieldError();
    return graph.walk(color);
  }

  void cell(int r, int c) {
    const double ga = g[field.index(r, c)];
    const double gb = g[field.index(r, c + 1)];
    const double gc = g[field.index(r + 1, c + 1)];
    const double gd = g[field.index(r + 1, c)];
    if (std::isnan(ga) || std::isnan(gb) || std::isnan(gc) || std::isnan(gd))
      return;
    any_cell = true;

    const int mask = (spos(ga) ? 1 : 0) | (spos(gb) ? 2 : 0) |
                     (spos(gc) ? 4 : 0) | (spos(gd) ? 8 : 0);
    if (mask == 0 || mask == 15) return;

    // Local edge handles: bottom/top run along t, left/right along sigma.
    const int64_t eb = t_edge(r, c), et = t_edge(r + 1, c);
    const int64_t el = s_edge(r, c), er = s_edge(r, c + 1);
    auto pb = [&] { return t_edge_point(r, c); };
    auto pt = [&] { return t_edge_point(r + 1, c); };
    auto pl = [&] { return s_edge_point(r, c); };
    auto pr = [&] { return s_edge_point(r, c + 1); };

    auto seg = [&](int64_t e1, const Point& p1, int64_t e2, const Point& p2) {
      graph.link(e1, p1, e2, p2);
    };

    switch (mask) {
      case 1: case 14: seg(el, pl(), eb, pb()); break;
      case 2: case 13: seg(eb, pb(), er, pr()); break;
      case 4: case 11: seg(er, pr(), et, pt()); break;
      case 8: case 7:  seg(et, pt(), el, pl()); break;
      case 3: case 12: seg(el, pl(), er, pr()); break;
      case 6: case 9:  seg(eb, pb(), et, pt()); break;
      case 5: case 10: {
        // Saddle: resolve by the level sign at the cell center. If the
        // evaluator cannot be called there (pole skirt), fall back to the
        // mean of the corners.
        const Complex center(w.sigma_at(r) + 0.5 * w.sigma_step(),
                             w.t_at(c) + 0.5 * w.t_step());
        double gm;
        try {
          gm = center_level(center);
        } catch (const Error&) {
          gm = 0.25 * (ga + gb + gc + gd);
        }
        const bool center_pos = spos(gm);
        const bool a_pos = (mask == 5);  // A,C positive; else B,D positive
        if (center_pos == a_pos) {
          // positive diagonal connected through the center
          seg(eb, pb(), er, pr());
          seg(et, pt(), el, pl());
        } else {
          seg(el, pl(), eb, pb());
          seg(er, pr(), et, pt());
        }
        break;
      }
      default: break;
    }
  }
};

}  // namespace

std::vector<Curve> extract_level_curves(const PhaseField& field,
                                        CurveColor color,
                                        const LevelSampler& center_level) {
  Extractor ex(field, color, center_level);
  return ex.run();
}

std::vector<Curve> extract_level_curves(const PhaseField& field,
                                        CurveColor color,
                                        const EvalConfig& cfg) {
  LevelSampler level = [color, cfg](const Complex& s) {
    const double phase = log_completed_zeta(s, cfg).phase;
    return color == CurveColor::Blue ? std::sin(phase) : std::cos(phase);
  };
  return extract_level_curves(field, color, level);
}

namespace {

bool on_window_boundary(const Point& p, const Window& w) {
  const double ts = w.t_step() > 0 ? 0.25 * w.t_step() : 1e-9;
  const double ss = w.sigma_step() > 0 ? 0.25 * w.sigma_step() : 1e-9;
  return std::abs(p[0] - w.sigma_min) <= ss ||
         std::abs(p[0] - w.sigma_max) <= ss ||
         std::abs(p[1] - w.t_min) <= ts || std::abs(p[1] - w.t_max) <= ts;
}

}  // namespace

CurveClass classify_green_curve(const Curve& curve, const Window& window,
                                double pole_radius) {
  if (curve.color != CurveColor::Green)
    throw WrongColorError("classify_green_curve applied to a blue curve");
  if (curve.points.size() < 2) throw DomainError("curve has fewer than 2 points");
  if (curve.closed) return CurveClass::NonEyes;

  auto near_pole = [&](const Point& p) {
    return std::hypot(p[0], p[1]) <= 2.0 * pole_radius ||
           std::hypot(p[0] - 1.0, p[1]) <= 2.0 * pole_radius;
  };
  const Point& a = curve.points.front();
  const Point& b = curve.points.back();
  if (near_pole(a) && near_pole(b)) return CurveClass::Eyes;
  if (on_window_boundary(a, window) || on_window_boundary(b, window))
    return CurveClass::Boundary;
  return CurveClass::NonEyes;
}

namespace {

constexpr double kOnLineEps = 1e-12;

int line_side(double sigma) {
  const double d = sigma - 0.5;
  if (std::abs(d) < kOnLineEps) return 0;
  return d > 0 ? 1 : -1;
}

// Visits the vertex sequence, cyclically for closed curves, starting from an
// off-line vertex when one exists so on-line runs never wrap the seam.
template <typename Fn>
void visit_sides(const Curve& curve, Fn&& fn) {
  const size_t n = curve.points.size();
  size_t start = 0;
  if (curve.closed) {
    for (size_t i = 0; i < n; ++i)
      if (line_side(curve.points[i][0]) != 0) {
        start = i;
        break;
      }
  }
  const size_t total = curve.closed ? n + 1 : n;
  for (size_t k = 0; k < total; ++k) {
    const size_t i = (start + k) % n;
    fn(curve.points[i], line_side(curve.points[i][0]));
  }
}

}  // namespace

int count_critical_line_crossings(const Curve& curve) {
  int crossings = 0;
  int prev_side = 2;  // sentinel
  bool in_run = false;
  visit_sides(curve, [&](const Point&, int side) {
    if (side == 0) {
      if (!in_run) {
        ++crossings;  // each maximal on-line run counts once
        in_run = true;
      }
    } else {
      // Segments touching an on-line vertex do not straddle strictly.
      if (!in_run && prev_side != 2 && side != prev_side) ++crossings;
      prev_side = side;
      in_run = false;
    }
  });
  return crossings;
}

std::vector<std::array<double, 2>> critical_line_crossing_points(
    const Curve& curve) {
  std::vector<Point> out;
  Point prev_pt{};
  int prev_side = 2;
  bool in_run = false;
  Point run_first{};
  visit_sides(curve, [&](const Point& p, int side) {
    if (side == 0) {
      if (!in_run) {
        run_first = p;
        in_run = true;
      }
      prev_pt = p;
    } else {
      if (in_run) {
        out.push_back({0.5, 0.5 * (run_first[1] + prev_pt[1])});
        in_run = false;
      } else if (prev_side != 2 && prev_side != 0 && side != prev_side) {
        const double a = (0.5 - prev_pt[0]) / (p[0] - prev_pt[0]);
        out.push_back({0.5, prev_pt[1] + a * (p[1] - prev_pt[1])});
      }
      prev_side = side;
      prev_pt = p;
    }
  });
  if (in_run) out.push_back({0.5, 0.5 * (run_first[1] + prev_pt[1])});
  return out;
}

namespace {

// Closest approach of two segments (Ericson, Real-Time Collision Detection).
double segment_distance(const Point& p1, const Point& p2, const Point& q1,
                        const Point& q2, Point* closest) {
  const double d1s = p2[0] - p1[0], d1t = p2[1] - p1[1];
  const double d2s = q2[0] - q1[0], d2t = q2[1] - q1[1];
  const double rs = p1[0] - q1[0], rt = p1[1] - q1[1];
  const double a = d1s * d1s + d1t * d1t;
  const double e = d2s * d2s + d2t * d2t;
  const double f = d2s * rs + d2t * rt;
  double s = 0.0, t = 0.0;
  if (a <= 1e-300 && e <= 1e-300) {
    // both degenerate
  } else if (a <= 1e-300) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    const double c = d1s * rs + d1t * rt;
    if (e <= 1e-300) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      const double b = d1s * d2s + d1t * d2t;
      const double denom = a * e - b * b;
      s = denom > 0.0 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  const double cps = p1[0] + s * d1s, cpt = p1[1] + s * d1t;
  const double cqs = q1[0] + t * d2s, cqt = q1[1] + t * d2t;
  if (closest) *closest = {0.5 * (cps + cqs), 0.5 * (cpt + cqt)};
  return std::hypot(cps - cqs, cpt - cqt);
}

template <typename Fn>
void for_each_segment(const Curve& c, Fn&& fn) {
  const size_t n = c.points.size();
  for (size_t i = 0; i + 1 < n; ++i) fn(c.points[i], c.points[i + 1]);
  if (c.closed && n > 2) fn(c.points[n - 1], c.points[0]);
}

int64_t grid_key(int gx, int gy) {
  return (static_cast<int64_t>(gx) << 32) ^ (static_cast<uint32_t>(gy));
}

}  // namespace

std::vector<std::array<double, 2>> curve_pair_intersections(const Curve& a,
                                                            const Curve& b,
                                                            double tol) {
  if (&a == &b || (a.color == b.color && a.points == b.points))
    throw SelfComparisonError();
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");

  // Hash b's segments into a uniform grid with cell size >= tol so a query
  // only touches the 3x3 neighborhood.
  struct Seg {
    Point p, q;
  };
  std::vector<Seg> bsegs;
  for_each_segment(b, [&](const Point& p, const Point& q) {
    bsegs.push_back({p, q});
  });
  double h = tol;
  for (const Seg& s : bsegs)
    h = std::max({h, std::abs(s.q[0] - s.p[0]), std::abs(s.q[1] - s.p[1])});

  std::unordered_map<int64_t, std::vector<int>> grid;
  auto cell_of = [&](double x, double y) {
    return std::pair<int, int>(static_cast<int>(std::floor(x / h)),
                               static_cast<int>(std::floor(y / h)));
  };
  for (int i = 0; i < static_cast<int>(bsegs.size()); ++i) {
    auto [gx0, gy0] = cell_of(std::min(bsegs[i].p[0], bsegs[i].q[0]),
                              std::min(bsegs[i].p[1], bsegs[i].q[1]));
    auto [gx1, gy1] = cell_of(std::max(bsegs[i].p[0], bsegs[i].q[0]),
                              std::max(bsegs[i].p[1], bsegs[i].q[1]));
    for (int gx = gx0; gx <= gx1; ++gx)
      for (int gy = gy0; gy <= gy1; ++gy) grid[grid_key(gx, gy)].push_back(i);
  }

  std::vector<Point> hits;
  std::vector<char> seen(bsegs.size(), 0);
  for_each_segment(a, [&](const Point& p, const Point& q) {
    auto [gx0, gy0] = cell_of(std::min(p[0], q[0]), std::min(p[1], q[1]));
    auto [gx1, gy1] = cell_of(std::max(p[0], q[0]), std::max(p[1], q[1]));
    std::vector<int> candidates;
    for (int gx = gx0 - 1; gx <= gx1 + 1; ++gx)
      for (int gy = gy0 - 1; gy <= gy1 + 1; ++gy) {
        auto it = grid.find(grid_key(gx, gy));
        if (it == grid.end()) continue;
        for (int i : it->second)
          if (!seen[i]) {
            seen[i] = 1;
            candidates.push_back(i);
          }
      }
    for (int i : candidates) {
      seen[i] = 0;
      Point cp;
      if (segment_distance(p, q, bsegs[i].p, bsegs[i].q, &cp) <= tol)
        hits.push_back(cp);
    }
  });

  // Greedy dedup within tol.
  std::sort(hits.begin(), hits.end());
  std::vector<Point> out;
  for (const Point& p : hits) {
    bool dup = false;
    for (const Point& o : out)
      if (std::hypot(p[0] - o[0], p[1] - o[1]) <= tol) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(p);
  }
  return out;
}

CurveSet extract_curve_set(const PhaseField& field, const EvalConfig& cfg) {
  CurveSet set;
  set.window = field.window;
  set.blue = extract_level_curves(field, CurveColor::Blue, cfg);
  set.green = extract_level_curves(field, CurveColor::Green, cfg);
  for (Curve& c : set.green)
    c.classification = classify_green_curve(c, set.window, cfg.pole_radius);
  return set;
}

namespace {

void append_num(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  out += buf;
}

const char* class_name(CurveClass c) {
  switch (c) {
    case CurveClass::Eyes: return "eyes";
    case CurveClass::NonEyes: return "non_eyes";
    case CurveClass::Boundary: return "boundary";
    default: return "none";
  }
}

void append_window_json(std::string& out, const Window& w) {
  out += "{\"sigma_min\":";
  append_num(out, w.sigma_min);
  out += ",\"sigma_max\":";
  append_num(out, w.sigma_max);
  out += ",\"t_min\":";
  append_num(out, w.t_min);
  out += ",\"t_max\":";
  append_num(out, w.t_max);
  out += ",\"nx\":" + std::to_string(w.nx);
  out += ",\"ny\":" + std::to_string(w.ny) + "}";
}

void append_curve_json(std::string& out, const Curve& c) {
  out += "{\"color\":\"";
  out += c.color == CurveColor::Blue ? "blue" : "green";
  out += "\",\"classification\":\"";
  out += class_name(c.classification);
  out += "\",\"closed\":";
  out += c.closed ? "true" : "false";
  out += ",\"points\":[";
  for (size_t i = 0; i < c.points.size(); ++i) {
    if (i) out += ",";
    out += "[";
    append_num(out, c.points[i][0]);
    out += ",";
    append_num(out, c.points[i][1]);
    out += "]";
  }
  out += "]}";
}

}  // namespace

std::string curve_set_to_json(const CurveSet& set) {
  std::string out = "{\"window\":";
  append_window_json(out, set.window);
  out += ",\"curves\":[";
  bool first = true;
  for (const Curve& c : set.blue) {
    if (!first) out += ",";
    first = false;
    append_curve_json(out, c);
  }
  for (const Curve& c : set.green) {
    if (!first) out += ",";
    first = false;
    append_curve_json(out, c);
  }
  out += "]}";
  return out;
}

}  // namespace zetascope

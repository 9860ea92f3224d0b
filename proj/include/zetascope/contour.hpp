#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "zetascope/field.hpp"
#include "zetascope/types.hpp"

namespace zetascope {

enum class CurveColor { Blue, Green };
enum class CurveClass { None, Eyes, NonEyes, Boundary };

/// A linked polyline in (sigma, t) coordinates. Blue curves trace Im Z = 0,
/// green curves Re Z = 0. Closed curves do not repeat their first point; the
/// flag implies the wrap segment.
struct Curve {
  CurveColor color = CurveColor::Blue;
  std::vector<std::array<double, 2>> points;  // (sigma, t)
  bool closed = false;
  CurveClass classification = CurveClass::None;
};

struct CurveSet {
  Window window;
  std::vector<Curve> blue;
  std::vector<Curve> green;
};

/// Level function sampled at an arbitrary point, used only to disambiguate
/// marching-squares saddle cells.
using LevelSampler = std::function<double(const Complex&)>;

/// Marching squares on g = sin(phase) for Blue or g = cos(phase) for Green.
/// Cells touching invalid samples are skipped, so curves terminate at the
/// pole mask or the window boundary. Saddle cells are resolved by evaluating
/// the level function at the cell center.
std::vector<Curve> extract_level_curves(const PhaseField& field,
                                        CurveColor color,
                                        const LevelSampler& center_level);

/// Same, with the center sampler built from log_completed_zeta(cfg).
std::vector<Curve> extract_level_curves(const PhaseField& field,
                                        CurveColor color,
                                        const EvalConfig& cfg = {});

/// Eyes: both endpoints terminate within 2*pole_radius of the pole points
/// 0 and 1 (one each, or both at the same pole). Boundary: any endpoint on
/// the window boundary. NonEyes otherwise, including closed curves.
CurveClass classify_green_curve(const Curve& curve, const Window& window,
                                double pole_radius);

/// Segments strictly straddling sigma = 1/2 plus maximal runs of vertices
/// exactly on the line (each run counts once).
int count_critical_line_crossings(const Curve& curve);

/// Points where the curve meets sigma = 1/2, interpolated along straddling
/// segments; on-line vertex runs contribute their midpoint.
std::vector<std::array<double, 2>> critical_line_crossing_points(
    const Curve& curve);

/// All points where segments of a and b pass within tol of each other,
/// deduplicated within tol. Comparing a curve against itself is an error.
std::vector<std::array<double, 2>> curve_pair_intersections(const Curve& a,
                                                            const Curve& b,
                                                            double tol);

/// Extracts both colors and classifies the green curves.
CurveSet extract_curve_set(const PhaseField& field, const EvalConfig& cfg = {});

/// {"window": {...}, "curves": [{color, classification, closed, points}]}
std::string curve_set_to_json(const CurveSet& set);

}  // namespace zetascope

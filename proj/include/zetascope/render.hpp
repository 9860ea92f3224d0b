#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetascope/contour.hpp"
#include "zetascope/field.hpp"
#include "zetascope/types.hpp"

namespace zetascope {

inline constexpr const char* kVersionString = "zetascope-0.1.0";

struct Rgb {
  uint8_t r = 0, g = 0, b = 0;
  bool operator==(const Rgb&) const = default;
};

enum class DrawOrder { GreenOverBlue, BlueOverGreen };

struct RenderStyle {
  int width = 1600;
  int height = 1000;
  Rgb background{255, 255, 255};
  Rgb blue{0, 0, 255};
  Rgb green{0, 160, 0};
  int line_px = 1;  // stroke half-width; 1 leaves the raw sign-change pixels
  DrawOrder draw_order = DrawOrder::GreenOverBlue;

  void validate() const;
};

struct Image {
  int width = 0;
  int height = 0;
  std::vector<uint8_t> rgb;  // 3 * width * height, row-major from the top

  Rgb at(int x, int y) const {
    const size_t i = 3 * (static_cast<size_t>(y) * width + x);
    return Rgb{rgb[i], rgb[i + 1], rgb[i + 2]};
  }
  void set(int x, int y, Rgb c) {
    const size_t i = 3 * (static_cast<size_t>(y) * width + x);
    rgb[i] = c.r;
    rgb[i + 1] = c.g;
    rgb[i + 2] = c.b;
  }
};

/// Axis-reversed mapping: pixel x runs along t, pixel y along sigma with
/// sigma increasing upward.
struct AxisMap {
  Window window;
  int width, height;

  double t_of_x(double x) const {
    return width > 1
               ? window.t_min + x * (window.t_max - window.t_min) / (width - 1)
               : window.t_min;
  }
  double sigma_of_y(double y) const {
    return height > 1 ? window.sigma_max -
                            y * (window.sigma_max - window.sigma_min) /
                                (height - 1)
                      : window.sigma_min;
  }
  double x_of_t(double t) const {
    return width > 1
               ? (t - window.t_min) * (width - 1) / (window.t_max - window.t_min)
               : 0.0;
  }
  double y_of_sigma(double sigma) const {
    return height > 1 ? (window.sigma_max - sigma) * (height - 1) /
                            (window.sigma_max - window.sigma_min)
                      : 0.0;
  }
};

/// Per-pixel curve layers from the sign-change test: a pixel is flagged blue
/// when sin(phase) changes sign toward its right or down neighbor, green when
/// cos(phase) does. Pixels on or next to masked samples are never flagged.
struct PixelMasks {
  int width = 0, height = 0;
  std::vector<uint8_t> blue;    // width*height, 1 = curve pixel
  std::vector<uint8_t> green;
  std::vector<uint8_t> masked;  // 1 = sample invalid
};

PixelMasks paint_masks(const PhaseField& field, int threads = 0);

/// Rasterizes the field at its own resolution (field.nx must equal
/// style.width and field.ny style.height). Overlaps between the blue and
/// green layers resolve by style.draw_order; masked pixels take background.
Image render_raster(const PhaseField& field, const RenderStyle& style,
                    int threads = 0);

/// PNG, 8-bit RGB, fixed encoder settings; the metadata text lands in a tEXt
/// chunk so identical inputs always give identical bytes.
std::vector<uint8_t> encode_png(const Image& image,
                                const std::string& metadata);

/// Standalone SVG with one path per curve, same axis mapping as the raster.
std::string render_vector(const CurveSet& curves, const RenderStyle& style);

std::string render_metadata_text(const Window& window, int width, int height);

}  // namespace zetascope

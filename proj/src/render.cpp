#include "zetascope/render.hpp"

#include <zlib.h>

#include <cmath>
#include <cstdio>
#include <cstring>

#include "detail/parallel.hpp"

namespace zetascope {

void RenderStyle::validate() const {
  if (width < 1 || height < 1) throw DomainError("image size must be positive");
  if (static_cast<long long>(width) * height > 100'000'000LL)
    throw DomainError("image exceeds the 10^8 pixel limit");
  if (line_px < 1 || line_px > 8) throw DomainError("line_px must be in 1..8");
}

PixelMasks paint_masks(const PhaseField& field, int threads) {
  const Window& w = field.window;
  const int width = w.nx, height = w.ny;
  PixelMasks m;
  m.width = width;
  m.height = height;
  m.blue.assign(static_cast<size_t>(width) * height, 0);
  m.green.assign(m.blue.size(), 0);
  m.masked.assign(m.blue.size(), 0);

  // Pixel y counts down from sigma_max; field row r counts up from
  // sigma_min. Precompute sin/cos per sample in pixel layout.
  std::vector<float> sv(m.blue.size()), cv(m.blue.size());
  detail::parallel_chunks(height, threads, [&](int y0, int y1) {
    for (int y = y0; y < y1; ++y) {
      const int r = height - 1 - y;
      for (int x = 0; x < width; ++x) {
        const size_t pi = static_cast<size_t>(y) * width + x;
        if (!field.valid_at(r, x)) {
          m.masked[pi] = 1;
          continue;
        }
        const double p = field.phase_at(r, x);
        sv[pi] = static_cast<float>(std::sin(p));
        cv[pi] = static_cast<float>(std::cos(p));
      }
    }
  });

  auto sign_change = [](float a, float b) {
    return (a > 0.0f) != (b > 0.0f);
  };
  detail::parallel_chunks(height, threads, [&](int y0, int y1) {
    for (int y = y0; y < y1; ++y)
      for (int x = 0; x < width; ++x) {
        const size_t pi = static_cast<size_t>(y) * width + x;
        if (m.masked[pi]) continue;
        if (x + 1 < width && !m.masked[pi + 1]) {
          if (sign_change(sv[pi], sv[pi + 1])) m.blue[pi] = 1;
          if (sign_change(cv[pi], cv[pi + 1])) m.green[pi] = 1;
        }
        if (y + 1 < height && !m.masked[pi + width]) {
          if (sign_change(sv[pi], sv[pi + width])) m.blue[pi] = 1;
          if (sign_change(cv[pi], cv[pi + width])) m.green[pi] = 1;
        }
      }
  });
  return m;
}

namespace {

// Chebyshev-disk dilation by radius, two separable passes.
void dilate(std::vector<uint8_t>& mask, int width, int height, int radius) {
  if (radius <= 0) return;
  std::vector<uint8_t> tmp(mask.size(), 0);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      if (!mask[static_cast<size_t>(y) * width + x]) continue;
      for (int dx = -radius; dx <= radius; ++dx) {
        const int nx = x + dx;
        if (nx >= 0 && nx < width) tmp[static_cast<size_t>(y) * width + nx] = 1;
      }
    }
  std::fill(mask.begin(), mask.end(), 0);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x) {
      if (!tmp[static_cast<size_t>(y) * width + x]) continue;
      for (int dy = -radius; dy <= radius; ++dy) {
        const int ny = y + dy;
        if (ny >= 0 && ny < height) mask[static_cast<size_t>(ny) * width + x] = 1;
      }
    }
}

}  // namespace

Image render_raster(const PhaseField& field, const RenderStyle& style,
                    int threads) {
  style.validate();
  if (field.window.nx != style.width || field.window.ny != style.height)
    throw DomainError("render_raster needs a field sampled at pixel resolution");

  PixelMasks m = paint_masks(field, threads);
  dilate(m.blue, m.width, m.height, style.line_px - 1);
  dilate(m.green, m.width, m.height, style.line_px - 1);

  Image img;
  img.width = m.width;
  img.height = m.height;
  img.rgb.assign(3 * m.blue.size(), 0);
  for (int y = 0; y < m.height; ++y)
    for (int x = 0; x < m.width; ++x) {
      const size_t pi = static_cast<size_t>(y) * m.width + x;
      Rgb c = style.background;
      if (style.draw_order == DrawOrder::GreenOverBlue) {
        if (m.blue[pi]) c = style.blue;
        if (m.green[pi]) c = style.green;
      } else {
        if (m.green[pi]) c = style.green;
        if (m.blue[pi]) c = style.blue;
      }
      if (m.masked[pi]) c = style.background;
      img.set(x, y, c);
    }
  return img;
}

// ---------------------------------------------------------------------------
// PNG writer: IHDR + tEXt + IDAT (zlib level 6, filter 0) + IEND.

namespace {

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  out.push_back(static_cast<uint8_t>(v >> 24));
  out.push_back(static_cast<uint8_t>(v >> 16));
  out.push_back(static_cast<uint8_t>(v >> 8));
  out.push_back(static_cast<uint8_t>(v));
}

void put_chunk(std::vector<uint8_t>& out, const char type[4],
               const std::vector<uint8_t>& payload) {
  put_u32(out, static_cast<uint32_t>(payload.size()));
  const size_t crc_start = out.size();
  out.insert(out.end(), type, type + 4);
  out.insert(out.end(), payload.begin(), payload.end());
  const uLong crc =
      crc32(0L, out.data() + crc_start, static_cast<uInt>(out.size() - crc_start));
  put_u32(out, static_cast<uint32_t>(crc));
}

}  // namespace

std::vector<uint8_t> encode_png(const Image& image, const std::string& metadata) {
  if (image.width < 1 || image.height < 1)
    throw DomainError("cannot encode an empty image");

  std::vector<uint8_t> out = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};

  std::vector<uint8_t> ihdr;
  put_u32(ihdr, static_cast<uint32_t>(image.width));
  put_u32(ihdr, static_cast<uint32_t>(image.height));
  ihdr.push_back(8);  // bit depth
  ihdr.push_back(2);  // color type: truecolor
  ihdr.push_back(0);  // deflate
  ihdr.push_back(0);  // filter method
  ihdr.push_back(0);  // no interlace
  put_chunk(out, "IHDR", ihdr);

  if (!metadata.empty()) {
    std::vector<uint8_t> text;
    const char* keyword = "Comment";
    text.insert(text.end(), keyword, keyword + 7);
    text.push_back(0);
    text.insert(text.end(), metadata.begin(), metadata.end());
    put_chunk(out, "tEXt", text);
  }

  // Scanlines with filter byte 0.
  const size_t stride = 3 * static_cast<size_t>(image.width);
  std::vector<uint8_t> raw((stride + 1) * image.height);
  for (int y = 0; y < image.height; ++y) {
    raw[(stride + 1) * y] = 0;
    std::memcpy(raw.data() + (stride + 1) * y + 1, image.rgb.data() + stride * y,
                stride);
  }
  uLongf bound = compressBound(static_cast<uLong>(raw.size()));
  std::vector<uint8_t> idat(bound);
  if (compress2(idat.data(), &bound, raw.data(), static_cast<uLong>(raw.size()),
                6) != Z_OK)
    throw IoError("zlib compression failed");
  idat.resize(bound);
  put_chunk(out, "IDAT", idat);
  put_chunk(out, "IEND", {});
  return out;
}

namespace {

void append_num(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  out += buf;
}

std::string rgb_css(Rgb c) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

}  // namespace

std::string render_metadata_text(const Window& window, int width, int height) {
  std::string s = "window=[";
  append_num(s, window.sigma_min);
  s += ",";
  append_num(s, window.sigma_max);
  s += "]x[";
  append_num(s, window.t_min);
  s += ",";
  append_num(s, window.t_max);
  s += "] size=" + std::to_string(width) + "x" + std::to_string(height);
  s += " orientation=sigma-up version=";
  s += kVersionString;
  return s;
}

std::string render_vector(const CurveSet& curves, const RenderStyle& style) {
  style.validate();
  const AxisMap map{curves.window, style.width, style.height};

  std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(style.width) + "\" height=\"" +
         std::to_string(style.height) + "\" viewBox=\"0 0 " +
         std::to_string(style.width) + " " + std::to_string(style.height) +
         "\">\n";
  svg += "<desc>" + render_metadata_text(curves.window, style.width, style.height) +
         "</desc>\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"" +
         rgb_css(style.background) + "\"/>\n";

  auto emit = [&](const Curve& c, Rgb color) {
    if (c.points.size() < 2) return;
    svg += "<path fill=\"none\" stroke=\"" + rgb_css(color) +
           "\" stroke-width=\"" + std::to_string(style.line_px) + "\" d=\"";
    for (size_t i = 0; i < c.points.size(); ++i) {
      svg += i == 0 ? "M" : " L";
      append_num(svg, map.x_of_t(c.points[i][1]));
      svg += " ";
      append_num(svg, map.y_of_sigma(c.points[i][0]));
    }
    if (c.closed) svg += " Z";
    svg += "\"/>\n";
  };

  if (style.draw_order == DrawOrder::GreenOverBlue) {
    for (const Curve& c : curves.blue) emit(c, style.blue);
    for (const Curve& c : curves.green) emit(c, style.green);
  } else {
    for (const Curve& c : curves.green) emit(c, style.green);
    for (const Curve& c : curves.blue) emit(c, style.blue);
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace zetascope

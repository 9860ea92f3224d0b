#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetascope/types.hpp"

namespace zetascope {

/// Grid of arg Z samples over a Window plus a validity mask. Row r indexes
/// sigma (sigma_min at r = 0), column c indexes t. Invalid samples are those
/// within pole_radius of s = 0 or s = 1 or where evaluation failed.
struct PhaseField {
  Window window;
  std::vector<double> phase;   // ny * nx, row-major
  std::vector<uint8_t> valid;  // ny * nx, 1 = valid

  size_t index(int row, int col) const {
    return static_cast<size_t>(row) * window.nx + col;
  }
  double phase_at(int row, int col) const { return phase[index(row, col)]; }
  bool valid_at(int row, int col) const { return valid[index(row, col)] != 0; }
};

/// Samples arg Z over the window. Parallel over rows; identical inputs give
/// bit-identical output for any thread count. Failures never throw, they
/// clear the validity mask.
PhaseField sample_phase_field(const Window& window, const EvalConfig& cfg = {},
                              int threads = 0);

/// Binary cache format "ZPHF": little-endian header (magic, u32 nx, u32 ny,
/// f64 sigma_min, sigma_max, t_min, t_max), then ny*nx f64 phases row-major,
/// then ny*nx mask bytes.
void save_phase_field(const PhaseField& field, const std::string& path);
PhaseField load_phase_field(const std::string& path);

}  // namespace zetascope

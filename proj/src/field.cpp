#include "zetascope/field.hpp"

#include <bit>
#include <cstdio>
#include <cstring>
#include <memory>

#include "detail/parallel.hpp"
#include "zetascope/zfn.hpp"

static_assert(std::endian::native == std::endian::little,
              "ZPHF I/O assumes a little-endian host");

namespace zetascope {

void Window::validate() const {
  if (!std::isfinite(sigma_min) || !std::isfinite(sigma_max) ||
      !std::isfinite(t_min) || !std::isfinite(t_max))
    throw NonFiniteError("window bounds");
  if (nx < 1 || ny < 1) throw DomainError("window needs nx >= 1 and ny >= 1");
  if (nx > 1 && !(t_min < t_max))
    throw DomainError("window needs t_min < t_max when nx > 1");
  if (ny > 1 && !(sigma_min < sigma_max))
    throw DomainError("window needs sigma_min < sigma_max when ny > 1");
  if (!(t_min <= t_max) || !(sigma_min <= sigma_max))
    throw DomainError("window bounds out of order");
  if (static_cast<long long>(nx) * ny > 200'000'000LL)
    throw DomainError("window resolution too large");
}

PhaseField sample_phase_field(const Window& window, const EvalConfig& cfg,
                              int threads) {
  window.validate();
  cfg.validate();
  PhaseField field;
  field.window = window;
  const size_t total = static_cast<size_t>(window.nx) * window.ny;
  field.phase.assign(total, 0.0);
  field.valid.assign(total, 0);

  detail::parallel_chunks(window.ny, threads, [&](int row_begin, int row_end) {
    for (int r = row_begin; r < row_end; ++r) {
      const double sigma = window.sigma_at(r);
      for (int c = 0; c < window.nx; ++c) {
        const Complex s(sigma, window.t_at(c));
        const size_t i = field.index(r, c);
        if (std::abs(s) < cfg.pole_radius ||
            std::abs(s - Complex(1.0, 0.0)) < cfg.pole_radius)
          continue;  // pole mask, never evaluated
        try {
          field.phase[i] = log_completed_zeta(s, cfg).phase;
          field.valid[i] = 1;
        } catch (const Error&) {
          // failure recorded in the mask, not thrown
        }
      }
    }
  });
  return field;
}

namespace {

constexpr char kMagic[4] = {'Z', 'P', 'H', 'F'};

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

void write_all(std::FILE* f, const void* data, size_t bytes,
               const std::string& path) {
  if (std::fwrite(data, 1, bytes, f) != bytes)
    throw IoError("short write to " + path);
}

void read_all(std::FILE* f, void* data, size_t bytes, const std::string& path) {
  if (std::fread(data, 1, bytes, f) != bytes)
    throw IoError("short read from " + path);
}

}  // namespace

void save_phase_field(const PhaseField& field, const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "wb"));
  if (!f) throw IoError("cannot open " + path + " for writing");
  const uint32_t nx = static_cast<uint32_t>(field.window.nx);
  const uint32_t ny = static_cast<uint32_t>(field.window.ny);
  const double bounds[4] = {field.window.sigma_min, field.window.sigma_max,
                            field.window.t_min, field.window.t_max};
  write_all(f.get(), kMagic, 4, path);
  write_all(f.get(), &nx, sizeof nx, path);
  write_all(f.get(), &ny, sizeof ny, path);
  write_all(f.get(), bounds, sizeof bounds, path);
  write_all(f.get(), field.phase.data(), field.phase.size() * sizeof(double),
            path);
  write_all(f.get(), field.valid.data(), field.valid.size(), path);
}

PhaseField load_phase_field(const std::string& path) {
  FilePtr f(std::fopen(path.c_str(), "rb"));
  if (!f) throw IoError("cannot open " + path);
  char magic[4];
  read_all(f.get(), magic, 4, path);
  if (std::memcmp(magic, kMagic, 4) != 0)
    throw IoError(path + " is not a ZPHF phase-field dump");
  uint32_t nx = 0, ny = 0;
  double bounds[4];
  read_all(f.get(), &nx, sizeof nx, path);
  read_all(f.get(), &ny, sizeof ny, path);
  read_all(f.get(), bounds, sizeof bounds, path);
  PhaseField field;
  field.window = Window{bounds[0], bounds[1], bounds[2], bounds[3],
                        static_cast<int>(nx), static_cast<int>(ny)};
  field.window.validate();
  const size_t total = static_cast<size_t>(nx) * ny;
  field.phase.resize(total);
  field.valid.resize(total);
  read_all(f.get(), field.phase.data(), total * sizeof(double), path);
  read_all(f.get(), field.valid.data(), total, path);
  return field;
}

}  // namespace zetascope

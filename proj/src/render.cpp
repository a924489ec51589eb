#include "mazemap/render.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mazemap/error.hpp"

namespace mazemap {

Raster Raster::gray(int width, int height) {
  Raster r;
  r.width = width;
  r.height = height;
  r.channels = 1;
  r.pixels.assign(static_cast<std::size_t>(width) * height, 0);
  return r;
}

Raster Raster::rgb(int width, int height) {
  Raster r;
  r.width = width;
  r.height = height;
  r.channels = 3;
  r.pixels.assign(static_cast<std::size_t>(width) * height * 3, 0);
  return r;
}

void Raster::set_gray(int x, int y, std::uint8_t v) {
  pixels[static_cast<std::size_t>(y) * width + x] = v;
}

void Raster::set_rgb(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  const std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
  pixels[i] = r;
  pixels[i + 1] = g;
  pixels[i + 2] = b;
}

namespace {

std::string netpbm_header(const char* magic, const Raster& raster) {
  return std::string(magic) + "\n" + std::to_string(raster.width) + " " +
         std::to_string(raster.height) + "\n255\n";
}

// floor(v*255) with v clamped to [0,1]
std::uint8_t quantize(double v) {
  v = std::clamp(v, 0.0, 1.0);
  return static_cast<std::uint8_t>(std::min(255.0, std::floor(v * 255.0)));
}

struct Normalizer {
  double lo = 0.0;
  double span = 0.0;  // zero for constant or empty fields

  explicit Normalizer(const ScalarField& field, const MazeGrid& grid) {
    if (field.values.size() != grid.cells.size()) return;
    double mn = no_value;
    double mx = -no_value;
    for (int y = 0; y < grid.height; ++y) {
      for (int x = 0; x < grid.width; ++x) {
        const Coord c{x, y};
        if (!grid.is_corridor(c)) continue;
        const double v = field.at(c);
        if (!std::isfinite(v)) continue;
        mn = std::min(mn, v);
        mx = std::max(mx, v);
      }
    }
    if (mx > mn) {
      lo = mn;
      span = mx - mn;
    }
  }

  std::uint8_t gray(double v) const {
    if (!std::isfinite(v) || span == 0.0) return 0;
    return quantize((v - lo) / span);
  }
};

}  // namespace

std::string encode_pgm(const Raster& raster) {
  if (raster.channels != 1) throw std::invalid_argument("PGM needs a gray raster");
  std::string out = netpbm_header("P5", raster);
  out.append(reinterpret_cast<const char*>(raster.pixels.data()), raster.pixels.size());
  return out;
}

std::string encode_ppm(const Raster& raster) {
  if (raster.channels != 3) throw std::invalid_argument("PPM needs an RGB raster");
  std::string out = netpbm_header("P6", raster);
  out.append(reinterpret_cast<const char*>(raster.pixels.data()), raster.pixels.size());
  return out;
}

std::string render_scalar_pgm(const ScalarField& field, const MazeGrid& grid, int scale) {
  if (!field.same_shape(grid))
    throw error(errc::dimension_mismatch, "field shape does not match the grid");
  if (scale < 1) throw std::invalid_argument("scale must be >= 1");

  const Normalizer norm(field, grid);
  Raster raster = Raster::gray(grid.width * scale, grid.height * scale);
  for (int y = 0; y < grid.height; ++y) {
    for (int x = 0; x < grid.width; ++x) {
      const Coord c{x, y};
      const std::uint8_t g = grid.is_corridor(c) ? norm.gray(field.at(c)) : 0;
      for (int py = y * scale; py < (y + 1) * scale; ++py)
        for (int px = x * scale; px < (x + 1) * scale; ++px) raster.set_gray(px, py, g);
    }
  }
  return encode_pgm(raster);
}

std::string render_overlay_ppm(const MazeGrid& grid, const PathTrace* path,
                               const ScalarField* field, int scale) {
  if (field && !field->same_shape(grid))
    throw error(errc::dimension_mismatch, "field shape does not match the grid");
  if (scale < 1) throw std::invalid_argument("scale must be >= 1");
  if (path) {
    for (const Coord& c : *path) {
      if (!grid.is_corridor(c))
        throw error(errc::path_off_grid, "path cell (" + std::to_string(c.x) + "," +
                                             std::to_string(c.y) + ") is not a corridor cell");
    }
  }

  std::vector<char> on_path(grid.cells.size(), 0);
  if (path)
    for (const Coord& c : *path) on_path[grid.index(c)] = 1;

  const Normalizer norm = field ? Normalizer(*field, grid) : Normalizer(ScalarField{}, grid);
  Raster raster = Raster::rgb(grid.width * scale, grid.height * scale);
  for (int y = 0; y < grid.height; ++y) {
    for (int x = 0; x < grid.width; ++x) {
      const Coord c{x, y};
      std::uint8_t r = 0, g = 0, b = 0;
      if (grid.is_corridor(c)) {
        if (field) {
          r = g = b = norm.gray(field->at(c));
        } else {
          r = g = b = 255;
        }
        if (on_path[grid.index(c)]) {
          r = 255;
          g = b = 0;
        }
        if (c == grid.source) {
          r = b = 0;
          g = 255;
        } else if (c == grid.destination) {
          r = g = 0;
          b = 255;
        }
      }
      for (int py = y * scale; py < (y + 1) * scale; ++py)
        for (int px = x * scale; px < (x + 1) * scale; ++px) raster.set_rgb(px, py, r, g, b);
    }
  }
  return encode_ppm(raster);
}

}  // namespace mazemap

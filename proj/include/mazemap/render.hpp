#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mazemap/field.hpp"
#include "mazemap/maze.hpp"

namespace mazemap {

struct Raster {
  int width = 0;
  int height = 0;
  int channels = 1;  // 1 gray, 3 RGB
  std::vector<std::uint8_t> pixels;

  static Raster gray(int width, int height);
  static Raster rgb(int width, int height);
  void set_gray(int x, int y, std::uint8_t v);
  void set_rgb(int x, int y, std::uint8_t r, std::uint8_t g, std::uint8_t b);
};

// Binary netpbm encodings: "P5\n{w} {h}\n255\n" / "P6\n{w} {h}\n255\n"
// followed by the raw payload.
std::string encode_pgm(const Raster& raster);
std::string encode_ppm(const Raster& raster);

// Grayscale heatmap: corridor values min-max normalized then floor(v*255);
// constant fields, walls and sentinel cells render 0. Each cell becomes a
// scale x scale pixel block.
std::string render_scalar_pgm(const ScalarField& field, const MazeGrid& grid, int scale = 1);

// Color overlay: walls black, corridors white or field-gray, path red,
// source green, destination blue; markers override path, path overrides gray.
// path and field may be null.
std::string render_overlay_ppm(const MazeGrid& grid, const PathTrace* path,
                               const ScalarField* field, int scale = 1);

}  // namespace mazemap

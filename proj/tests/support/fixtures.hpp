#pragma once

#include <vector>

#include "mazemap/maze.hpp"

namespace fixtures {

// Two channels joining the same inlet/outlet: a straight 4-cell run on top
// and an 8-cell U-shaped run below (plus its two corner cells). Hop
// resistances source-to-destination are 5 and 11.
inline const char* two_branch_text =
    "S....D\n"
    ".####.\n"
    ".####.\n"
    "......\n";

inline std::vector<mazemap::Coord> short_branch() {
  return {{1, 0}, {2, 0}, {3, 0}, {4, 0}};
}

// The straight cells of the long run; the two turning cells (0,3) and (5,3)
// are excluded since a 90-degree turn inflates the cell-center gradient
// magnitude by sqrt(2).
inline std::vector<mazemap::Coord> long_branch() {
  return {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 3}, {4, 3}, {5, 2}, {5, 1}};
}

// A straight channel with a two-cell dead-end stub hanging off it.
inline const char* stub_channel_text =
    "S.....D\n"
    "##.####\n"
    "##.####\n";

inline std::vector<mazemap::Coord> stub_cells() { return {{2, 1}, {2, 2}}; }

// 1xN straight corridor "S....D".
inline std::string straight_corridor_text(int n) {
  std::string row(n, '.');
  row.front() = 'S';
  row.back() = 'D';
  return row + "\n";
}

}  // namespace fixtures

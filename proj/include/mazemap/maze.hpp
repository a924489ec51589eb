#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace mazemap {

struct Coord {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Coord&, const Coord&) = default;
};

enum class CellKind : std::uint8_t { wall, corridor };

// Fixed neighbor enumeration order used by every tracer and tie-break:
// N, E, S, W with y growing downward (row order of the ASCII format).
inline constexpr std::array<Coord, 4> neighbor_order{{{0, -1}, {1, 0}, {0, 1}, {-1, 0}}};

inline Coord step(Coord c, Coord d) { return {c.x + d.x, c.y + d.y}; }

struct MazeGrid {
  int width = 0;
  int height = 0;
  std::vector<CellKind> cells;  // row-major, width*height
  Coord source;
  Coord destination;

  std::size_t index(Coord c) const {
    return static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width) + c.x;
  }
  bool in_bounds(Coord c) const { return c.x >= 0 && c.x < width && c.y >= 0 && c.y < height; }
  CellKind at(Coord c) const { return cells[index(c)]; }
  bool is_corridor(Coord c) const { return in_bounds(c) && at(c) == CellKind::corridor; }
  int corridor_count() const;
  // number of 4-neighbors of c that are corridor cells
  int corridor_degree(Coord c) const;

  friend bool operator==(const MazeGrid&, const MazeGrid&) = default;
};

// Ordered source-to-destination cell sequence; consecutive cells are
// 4-neighbors and every cell is a corridor cell.
using PathTrace = std::vector<Coord>;

struct GenConfig {
  int width = 0;   // odd, >= 3
  int height = 0;  // odd, >= 3
  std::uint64_t seed = 0;
  double braid_fraction = 0.0;  // fraction of dead ends opened into loops
};

// Exact hop counts used as the ground-truth oracle for every mapper.
// Walls and unreachable cells hold `unreached`.
struct IntLabelField {
  static constexpr int unreached = std::numeric_limits<int>::max();

  int width = 0;
  int height = 0;
  std::vector<int> labels;

  int at(Coord c) const {
    return labels[static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width) + c.x];
  }
  int& at(Coord c) {
    return labels[static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width) + c.x];
  }
};

// '#' wall, '.' corridor, 'S' source, 'D' destination; rows newline-terminated.
MazeGrid parse_ascii(const std::string& text);
std::string serialize_ascii(const MazeGrid& grid);

// Deterministic in config.seed: recursive-backtracker spanning tree over
// odd-coordinate rooms (splitmix64 PRNG), then braid_fraction of the dead
// ends get one extra wall opened. Source is the top-left room, destination
// the bottom-right room.
MazeGrid generate(const GenConfig& config);

IntLabelField bfs_distances(const MazeGrid& grid, Coord from);

// Shortest source-to-destination path via BFS parent pointers, ties broken
// by the fixed neighbor order.
PathTrace oracle_path(const MazeGrid& grid);

}  // namespace mazemap

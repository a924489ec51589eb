#include "mazemap/maze.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "mazemap/error.hpp"

namespace mazemap {
namespace {

// splitmix64; chosen for portability, the generated maze for a given seed is
// part of the public contract and must match across platforms.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // modulo bias is irrelevant at maze scales
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }
};

}  // namespace

int MazeGrid::corridor_count() const {
  return static_cast<int>(std::count(cells.begin(), cells.end(), CellKind::corridor));
}

int MazeGrid::corridor_degree(Coord c) const {
  int deg = 0;
  for (const Coord& d : neighbor_order) {
    if (is_corridor(step(c, d))) deg++;
  }
  return deg;
}

MazeGrid parse_ascii(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) lines.push_back(current);  // final newline is optional

  if (lines.empty() || lines.front().empty())
    throw error(errc::missing_marker, "maze text has no cells");

  const std::size_t width = lines.front().size();
  for (std::size_t y = 1; y < lines.size(); ++y) {
    if (lines[y].size() != width)
      throw error(errc::ragged_rows, "row " + std::to_string(y) + " has length " +
                                         std::to_string(lines[y].size()) + ", expected " +
                                         std::to_string(width));
  }

  MazeGrid grid;
  grid.width = static_cast<int>(width);
  grid.height = static_cast<int>(lines.size());
  grid.cells.assign(width * lines.size(), CellKind::wall);

  int sources = 0;
  int destinations = 0;
  for (int y = 0; y < grid.height; ++y) {
    for (int x = 0; x < grid.width; ++x) {
      const char ch = lines[y][x];
      const Coord c{x, y};
      switch (ch) {
        case '#':
          break;
        case '.':
          grid.cells[grid.index(c)] = CellKind::corridor;
          break;
        case 'S':
          grid.cells[grid.index(c)] = CellKind::corridor;
          grid.source = c;
          sources++;
          break;
        case 'D':
          grid.cells[grid.index(c)] = CellKind::corridor;
          grid.destination = c;
          destinations++;
          break;
        default:
          throw error(errc::bad_char, std::string("unexpected character '") + ch + "' at (" +
                                          std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }
  }
  if (sources > 1 || destinations > 1)
    throw error(errc::duplicate_marker, "more than one S or D marker");
  if (sources == 0 || destinations == 0) throw error(errc::missing_marker, "need one S and one D");
  return grid;
}

std::string serialize_ascii(const MazeGrid& grid) {
  std::string out;
  out.reserve(static_cast<std::size_t>(grid.height) * (grid.width + 1));
  for (int y = 0; y < grid.height; ++y) {
    for (int x = 0; x < grid.width; ++x) {
      const Coord c{x, y};
      char ch = grid.at(c) == CellKind::wall ? '#' : '.';
      if (c == grid.source) ch = 'S';
      if (c == grid.destination) ch = 'D';
      out.push_back(ch);
    }
    out.push_back('\n');
  }
  return out;
}

MazeGrid generate(const GenConfig& config) {
  if (config.width < 3 || config.height < 3 || config.width % 2 == 0 || config.height % 2 == 0)
    throw error(errc::bad_dims, "maze dimensions must be odd and >= 3");
  if (config.width == 3 && config.height == 3)
    throw error(errc::bad_dims, "3x3 holds a single room; source and destination must differ");
  if (config.braid_fraction < 0.0 || config.braid_fraction > 1.0)
    throw std::invalid_argument("braid_fraction must be in [0,1]");

  SplitMix64 rng(config.seed);
  MazeGrid grid;
  grid.width = config.width;
  grid.height = config.height;
  grid.cells.assign(static_cast<std::size_t>(config.width) * config.height, CellKind::wall);

  auto carve = [&grid](Coord c) { grid.cells[grid.index(c)] = CellKind::corridor; };

  // Iterative backtracker over the odd-coordinate rooms.
  std::vector<Coord> stack{{1, 1}};
  std::vector<char> visited(grid.cells.size(), 0);
  visited[grid.index({1, 1})] = 1;
  carve({1, 1});
  while (!stack.empty()) {
    const Coord at = stack.back();
    Coord options[4];
    std::size_t count = 0;
    for (const Coord& d : neighbor_order) {
      const Coord room{at.x + 2 * d.x, at.y + 2 * d.y};
      if (grid.in_bounds(room) && !visited[grid.index(room)]) options[count++] = d;
    }
    if (count == 0) {
      stack.pop_back();
      continue;
    }
    const Coord d = options[rng.below(count)];
    carve({at.x + d.x, at.y + d.y});
    const Coord room{at.x + 2 * d.x, at.y + 2 * d.y};
    carve(room);
    visited[grid.index(room)] = 1;
    stack.push_back(room);
  }

  if (config.braid_fraction > 0.0) {
    // Dead ends in row-major scan order; each opened toward a random
    // neighboring corridor two cells away.
    std::vector<Coord> dead_ends;
    for (int y = 0; y < grid.height; ++y)
      for (int x = 0; x < grid.width; ++x)
        if (grid.is_corridor({x, y}) && grid.corridor_degree({x, y}) == 1)
          dead_ends.push_back({x, y});

    const long target = std::lround(config.braid_fraction * static_cast<double>(dead_ends.size()));
    long opened = 0;
    for (const Coord& de : dead_ends) {
      if (opened >= target) break;
      if (grid.corridor_degree(de) != 1) continue;  // a neighbor's braid already joined here
      Coord options[4];
      std::size_t count = 0;
      for (const Coord& d : neighbor_order) {
        const Coord wall{de.x + d.x, de.y + d.y};
        const Coord beyond{de.x + 2 * d.x, de.y + 2 * d.y};
        if (grid.in_bounds(wall) && grid.at(wall) == CellKind::wall && grid.is_corridor(beyond))
          options[count++] = d;
      }
      if (count == 0) continue;
      const Coord d = options[rng.below(count)];
      carve({de.x + d.x, de.y + d.y});
      opened++;
    }
  }

  grid.source = {1, 1};
  grid.destination = {grid.width - 2, grid.height - 2};
  return grid;
}

IntLabelField bfs_distances(const MazeGrid& grid, Coord from) {
  if (!grid.is_corridor(from)) throw error(errc::from_is_wall, "BFS start must be a corridor cell");

  IntLabelField field;
  field.width = grid.width;
  field.height = grid.height;
  field.labels.assign(grid.cells.size(), IntLabelField::unreached);
  field.at(from) = 0;

  std::queue<Coord> queue;
  queue.push(from);
  while (!queue.empty()) {
    const Coord at = queue.front();
    queue.pop();
    const int next = field.at(at) + 1;
    for (const Coord& d : neighbor_order) {
      const Coord nb = step(at, d);
      if (grid.is_corridor(nb) && field.at(nb) == IntLabelField::unreached) {
        field.at(nb) = next;
        queue.push(nb);
      }
    }
  }
  return field;
}

PathTrace oracle_path(const MazeGrid& grid) {
  // BFS from the source; first-set parent pointers realize the N,E,S,W
  // tie-break.
  std::vector<int> parent(grid.cells.size(), -1);
  std::vector<char> seen(grid.cells.size(), 0);
  std::queue<Coord> queue;
  seen[grid.index(grid.source)] = 1;
  queue.push(grid.source);
  bool found = false;
  while (!queue.empty() && !found) {
    const Coord at = queue.front();
    queue.pop();
    for (const Coord& d : neighbor_order) {
      const Coord nb = step(at, d);
      if (!grid.is_corridor(nb) || seen[grid.index(nb)]) continue;
      seen[grid.index(nb)] = 1;
      parent[grid.index(nb)] = static_cast<int>(grid.index(at));
      if (nb == grid.destination) {
        found = true;
        break;
      }
      queue.push(nb);
    }
  }
  if (!seen[grid.index(grid.destination)])
    throw error(errc::no_path, "destination unreachable from source");

  PathTrace path;
  for (int at = static_cast<int>(grid.index(grid.destination)); at >= 0;
       at = parent[static_cast<std::size_t>(at)]) {
    path.push_back({at % grid.width, at / grid.width});
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace mazemap

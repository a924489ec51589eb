#include "mazemap/lee.hpp"

#include <cmath>
#include <vector>

#include "mazemap/error.hpp"

namespace mazemap {

ScalarField lee_map(const MazeGrid& grid) {
  ScalarField labels = ScalarField::filled(grid.width, grid.height, no_value);
  labels.at(grid.destination) = 0.0;

  // Frontier-by-frontier wavefront expansion from the destination.
  std::vector<Coord> frontier{grid.destination};
  std::vector<Coord> next;
  double depth = 0.0;
  while (!frontier.empty()) {
    depth += 1.0;
    for (const Coord& at : frontier) {
      for (const Coord& d : neighbor_order) {
        const Coord nb = step(at, d);
        if (grid.is_corridor(nb) && !std::isfinite(labels.at(nb))) {
          labels.at(nb) = depth;
          next.push_back(nb);
        }
      }
    }
    frontier.swap(next);
    next.clear();
  }
  return labels;
}

PathTrace lee_trace(const ScalarField& labels, const MazeGrid& grid, Coord source) {
  if (!grid.is_corridor(source)) throw error(errc::unreachable, "source is not a corridor cell");
  if (!std::isfinite(labels.at(source)))
    throw error(errc::unreachable, "source carries the unreached sentinel");
  return greedy_trace(labels, grid, source, grid.destination, TraceMode::descend);
}

}  // namespace mazemap

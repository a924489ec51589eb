#pragma once

#include "mazemap/field.hpp"
#include "mazemap/maze.hpp"

namespace mazemap {

// Wavefront labeling: destination gets 0, every reachable corridor cell gets
// min neighbor label + 1. Unreachable cells hold no_value.
ScalarField lee_map(const MazeGrid& grid);

// Backtrace from source along labels decreasing by exactly 1 per step.
PathTrace lee_trace(const ScalarField& labels, const MazeGrid& grid, Coord source);

}  // namespace mazemap

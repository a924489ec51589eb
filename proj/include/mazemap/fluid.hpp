#pragma once

#include <vector>

#include "mazemap/field.hpp"
#include "mazemap/maze.hpp"

namespace mazemap {

// Hele-Shaw/Darcy pressure field: inlet (maze source) pinned to 1, outlet
// (maze destination) pinned to 0; velocity = -grad p, zero on walls.
struct FluidMap {
  ScalarField pressure;
  VectorField velocity;
  SolveReport report;
};

struct DyeState {
  ScalarField concentration;
  long time = 0;  // steps advanced so far
};

FluidMap map_pressure(const MazeGrid& grid, const SolverConfig& config = {});

// Mean speed |v| over the corridor cells of each branch.
std::vector<double> branch_speeds(const FluidMap& fmap, const MazeGrid& grid,
                                  const std::vector<std::vector<Coord>>& branches);

// One conservative first-order upwind step: face velocity is the mean of the
// two cell velocities, mass moves from the upwind cell. Walls pass no flux.
ScalarField upwind_advect(const ScalarField& concentration, const MazeGrid& grid,
                          const VectorField& velocity, double dt);

// Per step: upwind advection, then diffusion, then inlet clamped to 1 and
// outlet drained to 0. Requires max|v|*dt <= 1 and D*dt <= 0.25.
DyeState advect_dye(const MazeGrid& grid, const FluidMap& fmap, DyeState init, double diffusivity,
                    double dt, int steps);

// Steepest pressure descent from inlet to outlet, the cell-discrete
// streamline through the maze.
PathTrace trace_streamline(const FluidMap& fmap, const MazeGrid& grid);

}  // namespace mazemap

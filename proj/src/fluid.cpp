#include "mazemap/fluid.hpp"

#include <algorithm>
#include <cmath>

#include "mazemap/error.hpp"

namespace mazemap {

FluidMap map_pressure(const MazeGrid& grid, const SolverConfig& config) {
  auto [pressure, report] =
      solve_laplace(grid, {{grid.source, 1.0}, {grid.destination, 0.0}}, config);
  VectorField velocity = gradient(pressure, grid);
  for (double& v : velocity.vx) v = -v;
  for (double& v : velocity.vy) v = -v;
  return {std::move(pressure), std::move(velocity), report};
}

std::vector<double> branch_speeds(const FluidMap& fmap, const MazeGrid& grid,
                                  const std::vector<std::vector<Coord>>& branches) {
  std::vector<double> speeds;
  speeds.reserve(branches.size());
  for (const std::vector<Coord>& branch : branches) {
    double sum = 0.0;
    int count = 0;
    for (const Coord& c : branch) {
      if (!grid.is_corridor(c)) continue;
      sum += fmap.velocity.magnitude(c);
      count++;
    }
    if (count == 0) throw error(errc::empty_branch, "branch holds no corridor cells");
    speeds.push_back(sum / count);
  }
  return speeds;
}

ScalarField upwind_advect(const ScalarField& concentration, const MazeGrid& grid,
                          const VectorField& velocity, double dt) {
  if (!concentration.same_shape(grid) || velocity.width != grid.width ||
      velocity.height != grid.height)
    throw error(errc::dimension_mismatch, "advection inputs must match the grid shape");
  ScalarField out = concentration;
  // Each interior face once (east and south of every cell); mass leaves the
  // upwind cell, so total mass is conserved exactly.
  for (int y = 0; y < grid.height; ++y) {
    for (int x = 0; x < grid.width; ++x) {
      const Coord c{x, y};
      if (!grid.is_corridor(c)) continue;
      const std::size_t ci = velocity.index(c);
      const Coord east{x + 1, y};
      if (grid.is_corridor(east)) {
        const double face = 0.5 * (velocity.vx[ci] + velocity.vx[velocity.index(east)]);
        const double flux = dt * (face > 0.0 ? face * concentration.at(c)
                                             : face * concentration.at(east));
        out.at(c) -= flux;
        out.at(east) += flux;
      }
      const Coord south{x, y + 1};
      if (grid.is_corridor(south)) {
        const double face = 0.5 * (velocity.vy[ci] + velocity.vy[velocity.index(south)]);
        const double flux = dt * (face > 0.0 ? face * concentration.at(c)
                                             : face * concentration.at(south));
        out.at(c) -= flux;
        out.at(south) += flux;
      }
    }
  }
  return out;
}

DyeState advect_dye(const MazeGrid& grid, const FluidMap& fmap, DyeState init, double diffusivity,
                    double dt, int steps) {
  double vmax = 0.0;
  for (int y = 0; y < grid.height; ++y)
    for (int x = 0; x < grid.width; ++x)
      if (grid.is_corridor({x, y})) vmax = std::max(vmax, fmap.velocity.magnitude({x, y}));
  if (vmax * dt > 1.0)
    throw error(errc::cfl_violation,
                "max|v|*dt = " + std::to_string(vmax * dt) + " exceeds 1");
  if (diffusivity * dt > 0.25)
    throw error(errc::unstable_step,
                "D*dt = " + std::to_string(diffusivity * dt) + " exceeds the 0.25 stability bound");

  DyeState state = std::move(init);
  for (int i = 0; i < steps; ++i) {
    state.concentration = upwind_advect(state.concentration, grid, fmap.velocity, dt);
    if (diffusivity > 0.0)
      state.concentration = diffuse_step(state.concentration, grid, diffusivity, dt);
    state.concentration.at(grid.source) = 1.0;       // continuous dye feed
    state.concentration.at(grid.destination) = 0.0;  // open outlet
    state.time++;
  }
  return state;
}

PathTrace trace_streamline(const FluidMap& fmap, const MazeGrid& grid) {
  return greedy_trace(fmap.pressure, grid, grid.source, grid.destination, TraceMode::descend);
}

}  // namespace mazemap

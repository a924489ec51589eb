#include "mazemap/electrical.hpp"

#include <algorithm>

#include "mazemap/error.hpp"

namespace mazemap {

ElectricalMap map_potential(const MazeGrid& grid, const SolverConfig& config) {
  auto [phi, report] =
      solve_laplace(grid, {{grid.destination, 1.0}, {grid.source, 0.0}}, config);
  const VectorField grad = gradient(phi, grid);
  ScalarField current = ScalarField::zeros(grid.width, grid.height);
  for (int y = 0; y < grid.height; ++y)
    for (int x = 0; x < grid.width; ++x)
      if (grid.is_corridor({x, y})) current.at({x, y}) = grad.magnitude({x, y});
  return {std::move(phi), std::move(current), report};
}

PathTrace trace_voltage_ascent(const ElectricalMap& emap, const MazeGrid& grid) {
  return greedy_trace(emap.potential, grid, grid.source, grid.destination, TraceMode::ascend);
}

ScalarField thermal_map(const ElectricalMap& emap) {
  const double peak = *std::max_element(emap.current.values.begin(), emap.current.values.end());
  // With disconnected pins each component flattens to a constant, leaving
  // only sub-residual noise as "current".
  if (peak <= 10.0 * emap.report.final_residual)
    throw error(errc::degenerate_field, "no current flows; pins are disconnected");
  ScalarField out = emap.current;
  for (double& v : out.values) v /= peak;
  return out;
}

}  // namespace mazemap

#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "mazemap/maze.hpp"

namespace mazemap {

// Sentinel for cells that carry no defined value (unreached labels, arrival
// times of cells a front never crossed). Non-finite by construction so a
// descending trace can never be attracted to it.
inline constexpr double no_value = std::numeric_limits<double>::infinity();

struct ScalarField {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  static ScalarField zeros(int width, int height);
  static ScalarField filled(int width, int height, double value);

  double at(Coord c) const {
    return values[static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width) + c.x];
  }
  double& at(Coord c) {
    return values[static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width) + c.x];
  }
  bool same_shape(const MazeGrid& grid) const {
    return width == grid.width && height == grid.height;
  }
};

// Per-cell 2-vector in field units per cell width; zero on walls.
struct VectorField {
  int width = 0;
  int height = 0;
  std::vector<double> vx;
  std::vector<double> vy;

  std::size_t index(Coord c) const {
    return static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width) + c.x;
  }
  double magnitude(Coord c) const;
};

struct SolverConfig {
  double tolerance = 1e-10;  // max absolute single-cell update per sweep
  int max_iters = 200000;
  double omega = 1.8;  // SOR over-relaxation factor, in (0,2)
};

struct SolveReport {
  int iterations = 0;
  double final_residual = 0.0;
  bool converged = false;
};

struct Pin {
  Coord cell;
  double value = 0.0;
};

struct Clamp {
  Coord cell;
  double value = 0.0;
};

// Discrete Laplace solve on corridor cells with reflecting walls: every
// unpinned corridor cell converges to the arithmetic mean of its corridor
// neighbors, pinned cells hold their value exactly. Gauss-Seidel/SOR sweeps
// in row-major order; residual is the max absolute single-cell update of a
// sweep. On non-convergence the field is still returned with
// report.converged == false.
std::pair<ScalarField, SolveReport> solve_laplace(const MazeGrid& grid,
                                                  const std::vector<Pin>& pins,
                                                  const SolverConfig& config = {});

// One forward-time centered-space step c += D*dt*sum(c_n - c) over corridor
// neighbors (walls are zero-flux), then clamped cells reset to their value.
// Requires D*dt <= 0.25.
ScalarField diffuse_step(const ScalarField& field, const MazeGrid& grid, double diffusivity,
                         double dt, const std::vector<Clamp>& clamps = {});

// Central differences where both lateral neighbors are corridor, one-sided
// against a wall, zero when walled in on both sides.
VectorField gradient(const ScalarField& field, const MazeGrid& grid);

enum class TraceMode { ascend, descend };

// From start, repeatedly move to the strictly best 4-neighbor corridor cell
// (max value for ascend, min for descend), ties broken by neighbor_order,
// until goal. Throws plateau when no neighbor strictly improves.
PathTrace greedy_trace(const ScalarField& field, const MazeGrid& grid, Coord start, Coord goal,
                       TraceMode mode);

// Hop labels as a ScalarField; `unreached` maps to no_value.
ScalarField to_scalar(const IntLabelField& labels);

}  // namespace mazemap

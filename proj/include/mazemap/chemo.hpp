#pragma once

#include <functional>
#include <vector>

#include "mazemap/field.hpp"
#include "mazemap/maze.hpp"

namespace mazemap {

struct ChemoConfig {
  double diffusivity = 1.0;  // cell^2 per step
  double dt = 0.2;           // diffusivity*dt must stay <= 0.25
  double threshold = 0.05;   // front-detection level, in (0, clamp_value)
  int max_steps = 200000;
  double clamp_value = 1.0;  // concentration held at the diffusion source
};

// First diffusion step at which each cell crossed the detection threshold;
// cells the front never reached hold `never` (== no_value).
struct ArrivalField {
  static constexpr double never = no_value;
  ScalarField times;
};

// Observer for periodic field dumps; step 0 is the initial clamped state.
using SnapshotFn = std::function<void(long step, const ScalarField& field)>;

// Clamp the destination at clamp_value and diffuse until the source cell
// exceeds the threshold or max_steps ran; returns the final concentration.
ScalarField map_chemoattractant(const MazeGrid& grid, const ChemoConfig& config);

// Gradient ascent on a concentration field from maze source to destination.
// Throws plateau while the front has not yet reached the source.
PathTrace chemotactic_trace(const ScalarField& concentration, const MazeGrid& grid);

// Clamped diffusion from the destination with per-cell first-crossing
// bookkeeping; stops once the source has crossed (throws front_never_arrives
// if it never does within max_steps).
ArrivalField arrival_time_map(const MazeGrid& grid, const ChemoConfig& config,
                              long snapshot_every = 0, const SnapshotFn& snapshot = {});

// Descend arrival times from the maze source to the destination.
PathTrace arrival_descent_trace(const ArrivalField& arrivals, const MazeGrid& grid);

// Two-variable excitable-medium model integrated on an upscaled lattice
// (each maze cell becomes upscale x upscale simulation cells, spaced dx
// apart). Defaults are classical excitable-regime constants, not values
// taken from any particular experiment.
struct OregonatorParams {
  double eps = 0.02;
  double f = 1.4;
  double q = 0.002;
  double du = 1.0;   // activator diffusion coefficient
  double dt = 1e-3;
  double dx = 0.25;  // simulation lattice spacing
};

struct OregonatorRun {
  ArrivalField arrivals;  // per maze cell, in simulation steps
  PathTrace path;
  long steps = 0;  // steps actually integrated
};

// Launch an excitation (u = 1) in the destination block, integrate with
// zero-flux walls, record per maze cell the first step at which the mean
// activator level over its block reaches 0.9, then trace the arrival
// descent from the source.
OregonatorRun run_oregonator(const MazeGrid& grid, int upscale, const OregonatorParams& params = {},
                             long max_steps = 400000, long snapshot_every = 0,
                             const SnapshotFn& snapshot = {});

struct VoronoiResult {
  int width = 0;
  int height = 0;
  std::vector<int> labels;     // winning seed index per cell, -1 if no front arrived
  std::vector<Coord> boundary; // cells whose two earliest arrivals differ by <= 1 step

  int label_at(Coord c) const {
    return labels[static_cast<std::size_t>(c.y) * static_cast<std::size_t>(width) + c.x];
  }
};

// One clamped diffusion per seed; each cell is labeled by the seed whose
// front arrived first.
VoronoiResult voronoi_from_seeds(const MazeGrid& arena, const std::vector<Coord>& seeds,
                                 const ChemoConfig& config);

}  // namespace mazemap

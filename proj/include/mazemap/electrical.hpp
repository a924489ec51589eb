#pragma once

#include "mazemap/field.hpp"
#include "mazemap/maze.hpp"

namespace mazemap {

// Harmonic potential on unit resistors: destination pinned to 1 (the current
// source), source pinned to 0, walls insulate. `current` holds |grad phi|
// per corridor cell.
struct ElectricalMap {
  ScalarField potential;
  ScalarField current;
  SolveReport report;
};

ElectricalMap map_potential(const MazeGrid& grid, const SolverConfig& config = {});

// Voltage ascent from source: always ends at the destination pin on a
// converged map since a discrete harmonic field has no interior maximum.
PathTrace trace_voltage_ascent(const ElectricalMap& emap, const MazeGrid& grid);

// Current magnitude max-normalized to [0,1]; throws degenerate_field when no
// current flows (pins in disconnected components).
ScalarField thermal_map(const ElectricalMap& emap);

}  // namespace mazemap

#include "mazemap/field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mazemap/error.hpp"

namespace mazemap {

ScalarField ScalarField::zeros(int width, int height) { return filled(width, height, 0.0); }

ScalarField ScalarField::filled(int width, int height, double value) {
  ScalarField f;
  f.width = width;
  f.height = height;
  f.values.assign(static_cast<std::size_t>(width) * height, value);
  return f;
}

double VectorField::magnitude(Coord c) const {
  const std::size_t i = index(c);
  return std::hypot(vx[i], vy[i]);
}

namespace {

void require_shape(const ScalarField& field, const MazeGrid& grid) {
  if (!field.same_shape(grid))
    throw error(errc::dimension_mismatch, "field is " + std::to_string(field.width) + "x" +
                                              std::to_string(field.height) + ", grid is " +
                                              std::to_string(grid.width) + "x" +
                                              std::to_string(grid.height));
}

}  // namespace

std::pair<ScalarField, SolveReport> solve_laplace(const MazeGrid& grid,
                                                  const std::vector<Pin>& pins,
                                                  const SolverConfig& config) {
  if (pins.empty()) throw error(errc::no_pins, "at least one pin required");
  for (const Pin& pin : pins) {
    if (!grid.is_corridor(pin.cell))
      throw error(errc::pin_on_wall, "pin at (" + std::to_string(pin.cell.x) + "," +
                                         std::to_string(pin.cell.y) + ") is not a corridor cell");
  }
  if (!(config.tolerance > 0.0) || config.max_iters <= 0 || !(config.omega > 0.0) ||
      !(config.omega < 2.0))
    throw std::invalid_argument("solver config out of range");

  // Unpinned cells start at the pin mean. Besides converging faster than a
  // zero start, this keeps value-flipped pin sets on mirrored trajectories,
  // so dual solves agree to roundoff rather than to solver tolerance.
  double pin_mean = 0.0;
  for (const Pin& pin : pins) pin_mean += pin.value;
  pin_mean /= static_cast<double>(pins.size());

  ScalarField phi = ScalarField::filled(grid.width, grid.height, 0.0);
  std::vector<char> pinned(phi.values.size(), 0);
  for (int y = 0; y < grid.height; ++y)
    for (int x = 0; x < grid.width; ++x)
      if (grid.is_corridor({x, y})) phi.at({x, y}) = pin_mean;
  for (const Pin& pin : pins) {
    phi.at(pin.cell) = pin.value;
    pinned[grid.index(pin.cell)] = 1;
  }

  // Flattened sweep plan: for each unpinned corridor cell its index and the
  // indices of its corridor neighbors.
  struct SweepCell {
    std::uint32_t cell;
    std::uint32_t nbr[4];
    std::uint32_t count;
  };
  std::vector<SweepCell> plan;
  for (int y = 0; y < grid.height; ++y) {
    for (int x = 0; x < grid.width; ++x) {
      const Coord c{x, y};
      if (!grid.is_corridor(c) || pinned[grid.index(c)]) continue;
      SweepCell sc{static_cast<std::uint32_t>(grid.index(c)), {0, 0, 0, 0}, 0};
      for (const Coord& d : neighbor_order) {
        const Coord nb = step(c, d);
        if (grid.is_corridor(nb)) sc.nbr[sc.count++] = static_cast<std::uint32_t>(grid.index(nb));
      }
      if (sc.count > 0) plan.push_back(sc);
    }
  }

  // Stop once the max update is below tolerance AND the geometric trend of
  // recent sweeps says the remaining error is below tolerance too; the raw
  // update criterion alone can leave an error of update/(1-rho) on slowly
  // converging (long, thin) corridor graphs.
  constexpr int kTrendWindow = 8;
  double history[kTrendWindow] = {0};
  SolveReport report;
  double* values = phi.values.data();
  for (int iter = 1; iter <= config.max_iters; ++iter) {
    double max_update = 0.0;
    for (const SweepCell& sc : plan) {
      double sum = 0.0;
      for (std::uint32_t i = 0; i < sc.count; ++i) sum += values[sc.nbr[i]];
      const double delta = config.omega * (sum / sc.count - values[sc.cell]);
      values[sc.cell] += delta;
      max_update = std::max(max_update, std::abs(delta));
    }
    report.iterations = iter;
    report.final_residual = max_update;
    if (max_update <= config.tolerance) {
      if (max_update == 0.0) {
        report.converged = true;
        break;
      }
      if (iter > kTrendWindow) {
        const double past = history[iter % kTrendWindow];
        if (past > 0.0) {
          const double rho = std::pow(max_update / past, 1.0 / kTrendWindow);
          if (rho < 1.0 && max_update * rho / (1.0 - rho) <= config.tolerance) {
            report.converged = true;
            break;
          }
        }
      }
    }
    history[iter % kTrendWindow] = max_update;
  }
  return {std::move(phi), report};
}

ScalarField diffuse_step(const ScalarField& field, const MazeGrid& grid, double diffusivity,
                         double dt, const std::vector<Clamp>& clamps) {
  require_shape(field, grid);
  if (diffusivity < 0.0 || !(dt > 0.0)) throw std::invalid_argument("need D >= 0 and dt > 0");
  if (diffusivity * dt > 0.25)
    throw error(errc::unstable_step,
                "D*dt = " + std::to_string(diffusivity * dt) + " exceeds the 0.25 stability bound");
  for (const Clamp& clamp : clamps) {
    if (!grid.is_corridor(clamp.cell))
      throw error(errc::clamp_on_wall, "clamp at (" + std::to_string(clamp.cell.x) + "," +
                                           std::to_string(clamp.cell.y) + ") is not a corridor");
  }

  ScalarField out = field;
  const double a = diffusivity * dt;
  for (int y = 0; y < grid.height; ++y) {
    for (int x = 0; x < grid.width; ++x) {
      const Coord c{x, y};
      if (!grid.is_corridor(c)) continue;
      const double here = field.at(c);
      double lap = 0.0;
      for (const Coord& d : neighbor_order) {
        const Coord nb = step(c, d);
        if (grid.is_corridor(nb)) lap += field.at(nb) - here;
      }
      out.at(c) = here + a * lap;
    }
  }
  for (const Clamp& clamp : clamps) out.at(clamp.cell) = clamp.value;
  return out;
}

VectorField gradient(const ScalarField& field, const MazeGrid& grid) {
  require_shape(field, grid);
  VectorField vf;
  vf.width = grid.width;
  vf.height = grid.height;
  vf.vx.assign(field.values.size(), 0.0);
  vf.vy.assign(field.values.size(), 0.0);
  for (int y = 0; y < grid.height; ++y) {
    for (int x = 0; x < grid.width; ++x) {
      const Coord c{x, y};
      if (!grid.is_corridor(c)) continue;
      const bool left = grid.is_corridor({x - 1, y});
      const bool right = grid.is_corridor({x + 1, y});
      const bool up = grid.is_corridor({x, y - 1});
      const bool down = grid.is_corridor({x, y + 1});
      double dx = 0.0;
      if (left && right)
        dx = (field.at({x + 1, y}) - field.at({x - 1, y})) / 2.0;
      else if (right)
        dx = field.at({x + 1, y}) - field.at(c);
      else if (left)
        dx = field.at(c) - field.at({x - 1, y});
      double dy = 0.0;
      if (up && down)
        dy = (field.at({x, y + 1}) - field.at({x, y - 1})) / 2.0;
      else if (down)
        dy = field.at({x, y + 1}) - field.at(c);
      else if (up)
        dy = field.at(c) - field.at({x, y - 1});
      vf.vx[vf.index(c)] = dx;
      vf.vy[vf.index(c)] = dy;
    }
  }
  return vf;
}

PathTrace greedy_trace(const ScalarField& field, const MazeGrid& grid, Coord start, Coord goal,
                       TraceMode mode) {
  require_shape(field, grid);
  if (!grid.is_corridor(start) || !grid.is_corridor(goal))
    throw std::invalid_argument("trace endpoints must be corridor cells");

  const std::size_t bound = static_cast<std::size_t>(grid.corridor_count());
  PathTrace path{start};
  Coord at = start;
  while (!(at == goal)) {
    bool found = false;
    Coord best{};
    double best_value = field.at(at);
    for (const Coord& d : neighbor_order) {
      const Coord nb = step(at, d);
      if (!grid.is_corridor(nb)) continue;
      const double v = field.at(nb);
      if (!std::isfinite(v)) continue;  // sentinel cells carry no value
      const bool better = mode == TraceMode::ascend ? v > best_value : v < best_value;
      if (better) {
        best_value = v;
        best = nb;
        found = true;
      }
    }
    if (!found)
      throw error(errc::plateau, "no strictly " +
                                     std::string(mode == TraceMode::ascend ? "greater" : "smaller") +
                                     " neighbor at (" + std::to_string(at.x) + "," +
                                     std::to_string(at.y) + ")");
    at = best;
    path.push_back(at);
    if (path.size() > bound)
      throw error(errc::cycle, "trace exceeded the corridor cell count");
  }
  return path;
}

ScalarField to_scalar(const IntLabelField& labels) {
  ScalarField f;
  f.width = labels.width;
  f.height = labels.height;
  f.values.resize(labels.labels.size());
  for (std::size_t i = 0; i < labels.labels.size(); ++i)
    f.values[i] =
        labels.labels[i] == IntLabelField::unreached ? no_value : static_cast<double>(labels.labels[i]);
  return f;
}

}  // namespace mazemap

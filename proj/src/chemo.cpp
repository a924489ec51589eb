#include "mazemap/chemo.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "mazemap/error.hpp"

namespace mazemap {
namespace {

void require_config(const ChemoConfig& config) {
  if (config.diffusivity * config.dt > 0.25)
    throw error(errc::unstable_step, "D*dt = " + std::to_string(config.diffusivity * config.dt) +
                                         " exceeds the 0.25 stability bound");
  if (!(config.threshold > 0.0) || !(config.threshold < config.clamp_value))
    throw std::invalid_argument("threshold must lie in (0, clamp_value)");
  if (config.max_steps < 0) throw std::invalid_argument("max_steps must be non-negative");
}

// Clamped diffusion from `origin` with first-crossing bookkeeping. Runs until
// `stop_cell` (if any) crossed the threshold, or every corridor cell did, or
// max_steps. Returns the arrival times and leaves the final concentration in
// `conc`.
ScalarField arrival_run(const MazeGrid& grid, const ChemoConfig& config, Coord origin,
                        const Coord* stop_cell, ScalarField& conc, long& steps_run,
                        long snapshot_every, const SnapshotFn& snapshot) {
  ScalarField times = ScalarField::filled(grid.width, grid.height, ArrivalField::never);
  conc = ScalarField::zeros(grid.width, grid.height);
  conc.at(origin) = config.clamp_value;
  const std::vector<Clamp> clamps{{origin, config.clamp_value}};

  const int corridor_cells = grid.corridor_count();
  int marked = 0;
  auto mark_crossings = [&](long step) {
    for (int y = 0; y < grid.height; ++y) {
      for (int x = 0; x < grid.width; ++x) {
        const Coord c{x, y};
        if (!grid.is_corridor(c) || std::isfinite(times.at(c))) continue;
        if (conc.at(c) >= config.threshold) {
          times.at(c) = static_cast<double>(step);
          marked++;
        }
      }
    }
  };

  mark_crossings(0);
  if (snapshot && snapshot_every > 0) snapshot(0, conc);
  long step = 0;
  while (step < config.max_steps && marked < corridor_cells &&
         !(stop_cell && std::isfinite(times.at(*stop_cell)))) {
    conc = diffuse_step(conc, grid, config.diffusivity, config.dt, clamps);
    step++;
    mark_crossings(step);
    if (snapshot && snapshot_every > 0 && step % snapshot_every == 0) snapshot(step, conc);
  }
  steps_run = step;
  return times;
}

}  // namespace

ScalarField map_chemoattractant(const MazeGrid& grid, const ChemoConfig& config) {
  require_config(config);
  ScalarField conc = ScalarField::zeros(grid.width, grid.height);
  conc.at(grid.destination) = config.clamp_value;
  const std::vector<Clamp> clamps{{grid.destination, config.clamp_value}};
  for (int step = 0; step < config.max_steps && conc.at(grid.source) <= config.threshold; ++step)
    conc = diffuse_step(conc, grid, config.diffusivity, config.dt, clamps);
  return conc;
}

PathTrace chemotactic_trace(const ScalarField& concentration, const MazeGrid& grid) {
  return greedy_trace(concentration, grid, grid.source, grid.destination, TraceMode::ascend);
}

ArrivalField arrival_time_map(const MazeGrid& grid, const ChemoConfig& config, long snapshot_every,
                              const SnapshotFn& snapshot) {
  require_config(config);
  ScalarField conc;
  long steps = 0;
  ArrivalField arrivals{arrival_run(grid, config, grid.destination, &grid.source, conc, steps,
                                    snapshot_every, snapshot)};
  if (!std::isfinite(arrivals.times.at(grid.source)))
    throw error(errc::front_never_arrives,
                "source still below threshold after " + std::to_string(steps) + " steps");
  return arrivals;
}

PathTrace arrival_descent_trace(const ArrivalField& arrivals, const MazeGrid& grid) {
  if (!std::isfinite(arrivals.times.at(grid.source)))
    throw error(errc::plateau, "front never reached the source");
  return greedy_trace(arrivals.times, grid, grid.source, grid.destination, TraceMode::descend);
}

OregonatorRun run_oregonator(const MazeGrid& grid, int upscale, const OregonatorParams& params,
                             long max_steps, long snapshot_every, const SnapshotFn& snapshot) {
  if (upscale < 4) throw std::invalid_argument("upscale must be >= 4");
  if (!(params.dt > 0.0) || !(params.dx > 0.0) || !(params.eps > 0.0))
    throw std::invalid_argument("dt, dx and eps must be positive");

  const int k = upscale;
  const int simw = grid.width * k;
  const int simh = grid.height * k;
  const std::size_t n = static_cast<std::size_t>(simw) * simh;

  // Excitable cells in a flat plan: the update loop touches corridor blocks
  // only, walls stay u = v = 0 forever.
  std::vector<std::int32_t> maze_cell_of(n, -1);
  struct SimCell {
    std::uint32_t idx;
    std::int32_t nbr[4];  // -1 where the neighbor is non-excitable
  };
  std::vector<SimCell> plan;
  plan.reserve(n);
  for (int sy = 0; sy < simh; ++sy) {
    for (int sx = 0; sx < simw; ++sx) {
      const Coord mc{sx / k, sy / k};
      if (grid.is_corridor(mc))
        maze_cell_of[static_cast<std::size_t>(sy) * simw + sx] =
            static_cast<std::int32_t>(grid.index(mc));
    }
  }
  for (int sy = 0; sy < simh; ++sy) {
    for (int sx = 0; sx < simw; ++sx) {
      const std::size_t i = static_cast<std::size_t>(sy) * simw + sx;
      if (maze_cell_of[i] < 0) continue;
      SimCell sc{static_cast<std::uint32_t>(i), {-1, -1, -1, -1}};
      const int nx[4] = {sx, sx + 1, sx, sx - 1};
      const int ny[4] = {sy - 1, sy, sy + 1, sy};
      for (int d = 0; d < 4; ++d) {
        if (nx[d] < 0 || nx[d] >= simw || ny[d] < 0 || ny[d] >= simh) continue;
        const std::size_t j = static_cast<std::size_t>(ny[d]) * simw + nx[d];
        if (maze_cell_of[j] >= 0) sc.nbr[d] = static_cast<std::int32_t>(j);
      }
      plan.push_back(sc);
    }
  }

  std::vector<double> u(n, 0.0), u_next(n, 0.0), v(n, 0.0);
  // Stimulate the destination block.
  for (int sy = grid.destination.y * k; sy < (grid.destination.y + 1) * k; ++sy)
    for (int sx = grid.destination.x * k; sx < (grid.destination.x + 1) * k; ++sx) {
      const std::size_t i = static_cast<std::size_t>(sy) * simw + sx;
      if (maze_cell_of[i] >= 0) u[i] = 1.0;
    }

  OregonatorRun run;
  run.arrivals.times = ScalarField::filled(grid.width, grid.height, ArrivalField::never);
  const double block_cells = static_cast<double>(k) * k;
  std::vector<double> block_sum(grid.cells.size(), 0.0);

  auto emit_snapshot = [&](long step) {
    if (!snapshot || snapshot_every <= 0 || step % snapshot_every != 0) return;
    ScalarField field;
    field.width = simw;
    field.height = simh;
    field.values = u;
    snapshot(step, field);
  };

  auto record_arrivals = [&](long step) {
    std::fill(block_sum.begin(), block_sum.end(), 0.0);
    for (const SimCell& sc : plan) block_sum[maze_cell_of[sc.idx]] += u[sc.idx];
    for (int y = 0; y < grid.height; ++y) {
      for (int x = 0; x < grid.width; ++x) {
        const Coord c{x, y};
        if (!grid.is_corridor(c) || std::isfinite(run.arrivals.times.at(c))) continue;
        if (block_sum[grid.index(c)] / block_cells >= 0.9)
          run.arrivals.times.at(c) = static_cast<double>(step);
      }
    }
  };

  record_arrivals(0);
  emit_snapshot(0);

  const double inv_eps = 1.0 / params.eps;
  const double diff = params.du * params.dt / (params.dx * params.dx);
  for (long step = 1; step <= max_steps; ++step) {
    double max_u = 0.0;
    for (const SimCell& sc : plan) {
      const double ui = u[sc.idx];
      const double vi = v[sc.idx];
      double lap = 0.0;
      for (int d = 0; d < 4; ++d)
        if (sc.nbr[d] >= 0) lap += u[sc.nbr[d]] - ui;
      const double reaction = inv_eps * (ui - ui * ui - params.f * vi * (ui - params.q) / (ui + params.q));
      const double next = ui + params.dt * reaction + diff * lap;
      u_next[sc.idx] = next;
      v[sc.idx] = vi + params.dt * (ui - vi);
      max_u = std::max(max_u, next);
    }
    u.swap(u_next);
    run.steps = step;

    if (!std::isfinite(max_u) || max_u > 1e6)
      throw error(errc::numerical_blowup, "activator left the finite range at step " +
                                              std::to_string(step));
    record_arrivals(step);
    emit_snapshot(step);
    if (std::isfinite(run.arrivals.times.at(grid.source))) break;
    if (max_u < 0.1)
      throw error(errc::wave_died, "activator collapsed below 0.1 everywhere at step " +
                                       std::to_string(step));
  }

  if (!std::isfinite(run.arrivals.times.at(grid.source)))
    throw error(errc::wave_died,
                "wave never reached the source within " + std::to_string(max_steps) + " steps");
  run.path = arrival_descent_trace(run.arrivals, grid);
  return run;
}

VoronoiResult voronoi_from_seeds(const MazeGrid& arena, const std::vector<Coord>& seeds,
                                 const ChemoConfig& config) {
  require_config(config);
  std::set<Coord> distinct(seeds.begin(), seeds.end());
  if (distinct.size() < 2) throw error(errc::too_few_seeds, "need at least two distinct seeds");
  for (const Coord& s : seeds) {
    if (!arena.is_corridor(s))
      throw error(errc::seed_on_wall,
                  "seed (" + std::to_string(s.x) + "," + std::to_string(s.y) + ") is not corridor");
  }

  std::vector<ScalarField> arrivals;
  arrivals.reserve(seeds.size());
  for (const Coord& seed : seeds) {
    ScalarField conc;
    long steps = 0;
    arrivals.push_back(arrival_run(arena, config, seed, nullptr, conc, steps, 0, {}));
  }

  VoronoiResult result;
  result.width = arena.width;
  result.height = arena.height;
  result.labels.assign(arena.cells.size(), -1);
  for (int y = 0; y < arena.height; ++y) {
    for (int x = 0; x < arena.width; ++x) {
      const Coord c{x, y};
      if (!arena.is_corridor(c)) continue;
      double best = ArrivalField::never;
      double second = ArrivalField::never;
      int winner = -1;
      for (std::size_t i = 0; i < arrivals.size(); ++i) {
        const double t = arrivals[i].at(c);
        if (t < best) {
          second = best;
          best = t;
          winner = static_cast<int>(i);
        } else if (t < second) {
          second = t;
        }
      }
      result.labels[arena.index(c)] = winner;
      if (winner >= 0 && std::isfinite(second) && second - best <= 1.0)
        result.boundary.push_back(c);
    }
  }
  return result;
}

}  // namespace mazemap

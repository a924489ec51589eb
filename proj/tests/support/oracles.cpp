#include "support/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace oracles {

using mazemap::CellKind;
using mazemap::Coord;
using mazemap::MazeGrid;
using mazemap::PathTrace;
using mazemap::Pin;
using mazemap::ScalarField;

ScalarField dense_laplace(const MazeGrid& grid, const std::vector<Pin>& pins) {
  // Unknowns are the corridor cells in row-major order.
  std::map<std::size_t, int> unknown_of;
  std::vector<std::size_t> cell_of;
  for (int y = 0; y < grid.height; ++y) {
    for (int x = 0; x < grid.width; ++x) {
      if (!grid.is_corridor({x, y})) continue;
      unknown_of[grid.index({x, y})] = static_cast<int>(cell_of.size());
      cell_of.push_back(grid.index({x, y}));
    }
  }
  const int n = static_cast<int>(cell_of.size());
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  std::vector<double> b(n, 0.0);
  auto at = [&](int r, int c) -> double& { return a[static_cast<std::size_t>(r) * n + c]; };

  std::vector<char> pinned(grid.cells.size(), 0);
  std::vector<double> pin_value(grid.cells.size(), 0.0);
  for (const Pin& pin : pins) {
    pinned[grid.index(pin.cell)] = 1;
    pin_value[grid.index(pin.cell)] = pin.value;
  }

  for (int r = 0; r < n; ++r) {
    const std::size_t cell = cell_of[r];
    const Coord c{static_cast<int>(cell) % grid.width, static_cast<int>(cell) / grid.width};
    if (pinned[cell]) {
      at(r, r) = 1.0;
      b[r] = pin_value[cell];
      continue;
    }
    int degree = 0;
    for (const Coord& d : mazemap::neighbor_order) {
      const Coord nb = mazemap::step(c, d);
      if (!grid.is_corridor(nb)) continue;
      degree++;
      at(r, unknown_of.at(grid.index(nb))) = -1.0;
    }
    if (degree == 0) {
      at(r, r) = 1.0;  // isolated cell, value unconstrained; match solver's init
      b[r] = 0.0;
      for (const Pin& pin : pins) b[r] += pin.value;
      b[r] /= static_cast<double>(pins.size());
      continue;
    }
    at(r, r) = static_cast<double>(degree);
    b[r] = 0.0;
  }

  // Gaussian elimination with partial pivoting.
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(at(r, col)) > std::abs(at(pivot, col))) pivot = r;
    if (std::abs(at(pivot, col)) < 1e-14) throw std::runtime_error("singular Laplace system");
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(at(pivot, c), at(col, c));
      std::swap(b[pivot], b[col]);
    }
    for (int r = col + 1; r < n; ++r) {
      const double factor = at(r, col) / at(col, col);
      if (factor == 0.0) continue;
      for (int c = col; c < n; ++c) at(r, c) -= factor * at(col, c);
      b[r] -= factor * b[col];
    }
  }
  std::vector<double> x(n, 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double sum = b[r];
    for (int c = r + 1; c < n; ++c) sum -= at(r, c) * x[c];
    x[r] = sum / at(r, r);
  }

  ScalarField out = ScalarField::zeros(grid.width, grid.height);
  for (int r = 0; r < n; ++r) out.values[cell_of[r]] = x[r];
  return out;
}

int corridor_edge_count(const MazeGrid& grid) {
  int twice_edges = 0;
  for (int y = 0; y < grid.height; ++y)
    for (int x = 0; x < grid.width; ++x)
      if (grid.is_corridor({x, y})) twice_edges += grid.corridor_degree({x, y});
  return twice_edges / 2;
}

namespace {

void dfs_paths(const MazeGrid& grid, Coord at, std::vector<char>& visited, PathTrace& current,
               std::vector<PathTrace>& out) {
  if (at == grid.destination) {
    out.push_back(current);
    return;
  }
  for (const Coord& d : mazemap::neighbor_order) {
    const Coord nb = mazemap::step(at, d);
    if (!grid.is_corridor(nb) || visited[grid.index(nb)]) continue;
    visited[grid.index(nb)] = 1;
    current.push_back(nb);
    dfs_paths(grid, nb, visited, current, out);
    current.pop_back();
    visited[grid.index(nb)] = 0;
  }
}

}  // namespace

std::vector<PathTrace> all_simple_paths(const MazeGrid& grid) {
  std::vector<PathTrace> out;
  std::vector<char> visited(grid.cells.size(), 0);
  PathTrace current{grid.source};
  visited[grid.index(grid.source)] = 1;
  dfs_paths(grid, grid.source, visited, current, out);
  return out;
}

bool on_some_shortest_path(const MazeGrid& grid, Coord cell) {
  const mazemap::IntLabelField from_source = mazemap::bfs_distances(grid, grid.source);
  const mazemap::IntLabelField from_destination = mazemap::bfs_distances(grid, grid.destination);
  const int total = from_source.at(grid.destination);
  if (total == mazemap::IntLabelField::unreached) return false;
  if (from_source.at(cell) == mazemap::IntLabelField::unreached ||
      from_destination.at(cell) == mazemap::IntLabelField::unreached)
    return false;
  return from_source.at(cell) + from_destination.at(cell) == total;
}

double corridor_mass(const ScalarField& field, const MazeGrid& grid) {
  double sum = 0.0;
  for (int y = 0; y < grid.height; ++y)
    for (int x = 0; x < grid.width; ++x)
      if (grid.is_corridor({x, y})) sum += field.at({x, y});
  return sum;
}

bool valid_path(const MazeGrid& grid, const PathTrace& path) {
  if (path.empty() || !(path.front() == grid.source) || !(path.back() == grid.destination))
    return false;
  std::vector<char> seen(grid.cells.size(), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!grid.is_corridor(path[i])) return false;
    if (seen[grid.index(path[i])]) return false;
    seen[grid.index(path[i])] = 1;
    if (i > 0 && std::abs(path[i].x - path[i - 1].x) + std::abs(path[i].y - path[i - 1].y) != 1)
      return false;
  }
  return true;
}

MazeGrid corpus_maze(int size, std::uint64_t seed, double braid) {
  return mazemap::generate({size, size, seed, braid});
}

MazeGrid open_arena(int width, int height) {
  MazeGrid arena;
  arena.width = width;
  arena.height = height;
  arena.cells.assign(static_cast<std::size_t>(width) * height, CellKind::corridor);
  arena.source = {0, 0};
  arena.destination = {width - 1, height - 1};
  return arena;
}

}  // namespace oracles

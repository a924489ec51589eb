#pragma once

#include <string>
#include <vector>

#include "mazemap/field.hpp"
#include "mazemap/maze.hpp"

// Test-only reference implementations. Everything here is deliberately
// independent of the solver paths it checks: the Laplace oracle is a dense
// direct solve, path optimality is checked against plain BFS hop counts.
namespace oracles {

// Assemble the corridor-cell Laplace system (pinned cells fixed, unpinned
// cells equal to the mean of their corridor neighbors) and solve it by
// Gaussian elimination with partial pivoting.
mazemap::ScalarField dense_laplace(const mazemap::MazeGrid& grid,
                                   const std::vector<mazemap::Pin>& pins);

// Number of corridor adjacencies (edges of the corridor graph).
int corridor_edge_count(const mazemap::MazeGrid& grid);

// All simple source-to-destination paths, found by exhaustive DFS. Only
// sensible on small or tree-like corridor graphs.
std::vector<mazemap::PathTrace> all_simple_paths(const mazemap::MazeGrid& grid);

// True when cell sits on at least one BFS-shortest source-destination path.
bool on_some_shortest_path(const mazemap::MazeGrid& grid, mazemap::Coord cell);

// Sum of field values over corridor cells.
double corridor_mass(const mazemap::ScalarField& field, const mazemap::MazeGrid& grid);

// A path is valid when it runs source to destination over corridor cells in
// unit steps without repeats; returns false otherwise.
bool valid_path(const mazemap::MazeGrid& grid, const mazemap::PathTrace& path);

// Deterministic test corpus maze.
mazemap::MazeGrid corpus_maze(int size, std::uint64_t seed, double braid);

// All-corridor arena with dummy source/destination markers.
mazemap::MazeGrid open_arena(int width, int height);

}  // namespace oracles

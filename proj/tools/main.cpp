#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mazemap/chemo.hpp"
#include "mazemap/electrical.hpp"
#include "mazemap/error.hpp"
#include "mazemap/field.hpp"
#include "mazemap/fluid.hpp"
#include "mazemap/lee.hpp"
#include "mazemap/maze.hpp"
#include "mazemap/render.hpp"

namespace {

using nlohmann::json;

constexpr int kExitNoPath = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitSolverFailure = 3;

struct PipelineConfig {
  mazemap::SolverConfig solver;
  mazemap::ChemoConfig chemo;
  mazemap::ChemoConfig voronoi = voronoi_arena_defaults();
  mazemap::OregonatorParams oregonator;
  int upscale = 8;
  long oregonator_max_steps = 400000;

  // Open arenas want the front detected far out in the lattice tail, where
  // arrival order follows hop distance rather than straight-line distance.
  static mazemap::ChemoConfig voronoi_arena_defaults() {
    mazemap::ChemoConfig cfg;
    cfg.diffusivity = 1.0;
    cfg.dt = 0.05;
    cfg.threshold = 1e-4;
    cfg.max_steps = 500000;
    return cfg;
  }
};

PipelineConfig load_config(const std::string& path) {
  PipelineConfig cfg;
  if (path.empty()) return cfg;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  const json j = json::parse(in);
  if (auto it = j.find("solver"); it != j.end()) {
    cfg.solver.tolerance = it->value("tolerance", cfg.solver.tolerance);
    cfg.solver.max_iters = it->value("max_iters", cfg.solver.max_iters);
    cfg.solver.omega = it->value("omega", cfg.solver.omega);
  }
  auto chemo_section = [&](const char* name, mazemap::ChemoConfig& out) {
    if (auto it = j.find(name); it != j.end()) {
      out.diffusivity = it->value("diffusivity", out.diffusivity);
      out.dt = it->value("dt", out.dt);
      out.threshold = it->value("threshold", out.threshold);
      out.max_steps = it->value("max_steps", out.max_steps);
      out.clamp_value = it->value("clamp_value", out.clamp_value);
    }
  };
  chemo_section("chemo", cfg.chemo);
  chemo_section("voronoi", cfg.voronoi);
  if (auto it = j.find("oregonator"); it != j.end()) {
    cfg.oregonator.eps = it->value("eps", cfg.oregonator.eps);
    cfg.oregonator.f = it->value("f", cfg.oregonator.f);
    cfg.oregonator.q = it->value("q", cfg.oregonator.q);
    cfg.oregonator.du = it->value("du", cfg.oregonator.du);
    cfg.oregonator.dt = it->value("dt", cfg.oregonator.dt);
    cfg.oregonator.dx = it->value("dx", cfg.oregonator.dx);
    cfg.upscale = it->value("upscale", cfg.upscale);
    cfg.oregonator_max_steps = it->value("max_steps", cfg.oregonator_max_steps);
  }
  return cfg;
}

mazemap::MazeGrid load_maze(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open maze file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return mazemap::parse_ascii(text.str());
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

struct MapperResult {
  bool converged = false;
  long iterations = 0;
  mazemap::PathTrace path;
  mazemap::ScalarField field;  // what the mapper developed, for rendering
};

// A maze cell grid blown up to the simulation lattice, for snapshot renders.
mazemap::MazeGrid upscale_grid(const mazemap::MazeGrid& grid, int k) {
  mazemap::MazeGrid up;
  up.width = grid.width * k;
  up.height = grid.height * k;
  up.cells.assign(static_cast<std::size_t>(up.width) * up.height, mazemap::CellKind::wall);
  for (int y = 0; y < up.height; ++y)
    for (int x = 0; x < up.width; ++x)
      if (grid.is_corridor({x / k, y / k}))
        up.cells[up.index({x, y})] = mazemap::CellKind::corridor;
  up.source = {grid.source.x * k, grid.source.y * k};
  up.destination = {grid.destination.x * k, grid.destination.y * k};
  return up;
}

MapperResult run_mapper(const std::string& name, const mazemap::MazeGrid& grid,
                        const PipelineConfig& cfg, const std::string& render_dir, long snap_every,
                        int scale) {
  MapperResult result;
  const bool rendering = !render_dir.empty();
  if (name == "lee") {
    result.field = mazemap::lee_map(grid);
    result.path = mazemap::lee_trace(result.field, grid, grid.source);
    result.iterations = static_cast<long>(result.field.at(grid.source));
    result.converged = true;
  } else if (name == "electrical") {
    const mazemap::ElectricalMap emap = mazemap::map_potential(grid, cfg.solver);
    result.iterations = emap.report.iterations;
    result.converged = emap.report.converged;
    result.field = emap.potential;
    if (result.converged) {
      result.path = mazemap::trace_voltage_ascent(emap, grid);
      if (rendering)
        write_file(std::filesystem::path(render_dir) / "electrical_thermal.pgm",
                   mazemap::render_scalar_pgm(mazemap::thermal_map(emap), grid, scale));
    }
  } else if (name == "fluid") {
    const mazemap::FluidMap fmap = mazemap::map_pressure(grid, cfg.solver);
    result.iterations = fmap.report.iterations;
    result.converged = fmap.report.converged;
    result.field = fmap.pressure;
    if (result.converged) result.path = mazemap::trace_streamline(fmap, grid);
  } else if (name == "chemo") {
    mazemap::SnapshotFn snapshot;
    if (rendering && snap_every > 0) {
      snapshot = [&](long step, const mazemap::ScalarField& conc) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "chemo_%08ld.pgm", step);
        write_file(std::filesystem::path(render_dir) / buf,
                   mazemap::render_scalar_pgm(conc, grid, scale));
      };
    }
    const mazemap::ArrivalField arrivals =
        mazemap::arrival_time_map(grid, cfg.chemo, snap_every, snapshot);
    result.path = mazemap::arrival_descent_trace(arrivals, grid);
    result.iterations = static_cast<long>(arrivals.times.at(grid.source));
    result.converged = true;
    result.field = arrivals.times;
  } else if (name == "oregonator") {
    mazemap::SnapshotFn snapshot;
    mazemap::MazeGrid up;
    if (rendering && snap_every > 0) {
      up = upscale_grid(grid, cfg.upscale);
      snapshot = [&](long step, const mazemap::ScalarField& u) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "activator_%08ld.pgm", step);
        write_file(std::filesystem::path(render_dir) / buf, mazemap::render_scalar_pgm(u, up, 1));
      };
    }
    const mazemap::OregonatorRun run = mazemap::run_oregonator(
        grid, cfg.upscale, cfg.oregonator, cfg.oregonator_max_steps, snap_every, snapshot);
    result.path = run.path;
    result.iterations = run.steps;
    result.converged = true;
    result.field = run.arrivals.times;
  } else {
    throw std::runtime_error("unknown mapper " + name);
  }
  return result;
}

json make_report(const std::string& mapper, const MapperResult& result, std::size_t oracle_length,
                 double wall_ms) {
  json report;
  report["mapper"] = mapper;
  report["converged"] = result.converged;
  report["iterations"] = result.iterations;
  report["path_length"] = result.path.size();
  report["oracle_length"] = oracle_length;
  report["length_ratio"] =
      static_cast<double>(result.path.size()) / static_cast<double>(oracle_length);
  report["wall_ms"] = wall_ms;
  return report;
}

json failure_report(const std::string& mapper, std::size_t oracle_length, double wall_ms) {
  json report;
  report["mapper"] = mapper;
  report["converged"] = false;
  report["iterations"] = 0;
  report["path_length"] = nullptr;
  report["oracle_length"] = oracle_length;
  report["length_ratio"] = nullptr;
  report["wall_ms"] = wall_ms;
  return report;
}

void render_pipeline_outputs(const std::string& render_dir, const std::string& mapper,
                             const mazemap::MazeGrid& grid, const MapperResult& result,
                             int scale) {
  if (render_dir.empty()) return;
  std::filesystem::create_directories(render_dir);
  write_file(std::filesystem::path(render_dir) / (mapper + "_field.pgm"),
             mazemap::render_scalar_pgm(result.field, grid, scale));
  write_file(std::filesystem::path(render_dir) / (mapper + "_path.ppm"),
             mazemap::render_overlay_ppm(grid, &result.path, &result.field, scale));
}

int cmd_generate(int width, int height, std::uint64_t seed, double braid,
                 const std::string& out_path) {
  try {
    const mazemap::MazeGrid grid = mazemap::generate({width, height, seed, braid});
    write_file(out_path, mazemap::serialize_ascii(grid));
    return 0;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  }
}

int solver_failure_exit(const mazemap::error& e) {
  switch (e.code()) {
    case mazemap::errc::plateau:
    case mazemap::errc::cycle:
    case mazemap::errc::front_never_arrives:
    case mazemap::errc::wave_died:
    case mazemap::errc::numerical_blowup:
    case mazemap::errc::degenerate_field:
      return kExitSolverFailure;
    default:
      return kExitBadInput;
  }
}

int cmd_solve(const std::string& maze_path, const std::string& mapper,
              const std::string& config_path, const std::string& render_dir,
              const std::string& report_path, long snap_every, int scale) {
  mazemap::MazeGrid grid;
  PipelineConfig cfg;
  try {
    grid = load_maze(maze_path);
    cfg = load_config(config_path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  }

  std::size_t oracle_length = 0;
  try {
    oracle_length = mazemap::oracle_path(grid).size();
  } catch (const mazemap::error& e) {
    std::cerr << e.what() << "\n";
    return kExitNoPath;
  }

  try {
    if (!render_dir.empty()) std::filesystem::create_directories(render_dir);
    const auto start = std::chrono::steady_clock::now();
    const MapperResult result = run_mapper(mapper, grid, cfg, render_dir, snap_every, scale);
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    if (!result.converged) {
      std::cerr << mapper << " did not converge within the iteration budget\n";
      return kExitSolverFailure;
    }
    render_pipeline_outputs(render_dir, mapper, grid, result, scale);
    const json report = make_report(mapper, result, oracle_length, wall_ms);
    std::cout << report.dump() << "\n";
    if (!report_path.empty()) write_file(report_path, report.dump() + "\n");
    return 0;
  } catch (const mazemap::error& e) {
    std::cerr << e.what() << "\n";
    return solver_failure_exit(e);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  }
}

int cmd_compare(const std::string& maze_path, std::vector<std::string> mappers,
                const std::string& config_path, const std::string& report_path) {
  mazemap::MazeGrid grid;
  PipelineConfig cfg;
  try {
    grid = load_maze(maze_path);
    cfg = load_config(config_path);
    if (mappers.empty()) mappers = {"chemo", "electrical", "fluid", "lee", "oregonator"};
    std::sort(mappers.begin(), mappers.end());
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  }

  std::size_t oracle_length = 0;
  try {
    oracle_length = mazemap::oracle_path(grid).size();
  } catch (const mazemap::error& e) {
    std::cerr << e.what() << "\n";
    return kExitNoPath;
  }

  json reports = json::array();
  int succeeded = 0;
  for (const std::string& mapper : mappers) {
    const auto start = std::chrono::steady_clock::now();
    try {
      const MapperResult result = run_mapper(mapper, grid, cfg, "", 0, 1);
      const double wall_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      if (result.converged) {
        reports.push_back(make_report(mapper, result, oracle_length, wall_ms));
        succeeded++;
      } else {
        std::cerr << mapper << ": did not converge within the iteration budget\n";
        reports.push_back(failure_report(mapper, oracle_length, wall_ms));
      }
    } catch (const mazemap::error& e) {
      const double wall_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      std::cerr << mapper << ": " << e.what() << "\n";
      reports.push_back(failure_report(mapper, oracle_length, wall_ms));
    } catch (const std::exception& e) {
      std::cerr << mapper << ": " << e.what() << "\n";
      return kExitBadInput;
    }
  }
  std::cout << reports.dump() << "\n";
  if (!report_path.empty()) write_file(report_path, reports.dump() + "\n");
  return succeeded > 0 ? 0 : kExitSolverFailure;
}

std::vector<mazemap::Coord> parse_seed_list(const std::string& text) {
  std::vector<mazemap::Coord> seeds;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ';')) {
    if (item.empty()) continue;
    const std::size_t comma = item.find(',');
    if (comma == std::string::npos) throw std::runtime_error("seed '" + item + "' is not x,y");
    seeds.push_back({std::stoi(item.substr(0, comma)), std::stoi(item.substr(comma + 1))});
  }
  return seeds;
}

int cmd_voronoi(int width, int height, const std::string& seed_text,
                const std::string& config_path, const std::string& render_dir, int scale) {
  try {
    const PipelineConfig cfg = load_config(config_path);
    if (width < 1 || height < 1) throw std::runtime_error("arena dimensions must be positive");
    mazemap::MazeGrid arena;
    arena.width = width;
    arena.height = height;
    arena.cells.assign(static_cast<std::size_t>(width) * height, mazemap::CellKind::corridor);
    arena.source = {0, 0};
    arena.destination = {width - 1, height - 1};

    const std::vector<mazemap::Coord> seeds = parse_seed_list(seed_text);
    for (const mazemap::Coord& s : seeds)
      if (!arena.in_bounds(s)) throw std::runtime_error("seed out of bounds");

    const mazemap::VoronoiResult voronoi = mazemap::voronoi_from_seeds(arena, seeds, cfg.voronoi);

    if (!render_dir.empty()) {
      // fixed 12-color palette; boundary and unlabeled cells stay black
      static constexpr std::uint8_t palette[12][3] = {
          {230, 25, 75},  {60, 180, 75},   {255, 225, 25}, {0, 130, 200},
          {245, 130, 48}, {145, 30, 180},  {70, 240, 240}, {240, 50, 230},
          {210, 245, 60}, {250, 190, 212}, {0, 128, 128},  {220, 190, 255}};
      std::vector<char> on_boundary(arena.cells.size(), 0);
      for (const mazemap::Coord& c : voronoi.boundary) on_boundary[arena.index(c)] = 1;
      mazemap::Raster raster = mazemap::Raster::rgb(width * scale, height * scale);
      for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
          std::uint8_t r = 0, g = 0, b = 0;
          const int label = voronoi.label_at({x, y});
          if (!on_boundary[arena.index({x, y})] && label >= 0) {
            r = palette[label % 12][0];
            g = palette[label % 12][1];
            b = palette[label % 12][2];
          }
          for (int py = y * scale; py < (y + 1) * scale; ++py)
            for (int px = x * scale; px < (x + 1) * scale; ++px)
              raster.set_rgb(px, py, r, g, b);
        }
      }
      std::filesystem::create_directories(render_dir);
      write_file(std::filesystem::path(render_dir) / "voronoi.ppm", mazemap::encode_ppm(raster));
    }

    json summary;
    summary["width"] = width;
    summary["height"] = height;
    summary["seeds"] = seeds.size();
    summary["boundary_cells"] = voronoi.boundary.size();
    std::cout << summary.dump() << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"physical maze mappers: develop a field over the maze, then trace its gradient"};
  app.require_subcommand(1);

  int width = 31, height = 31;
  std::uint64_t seed = 0;
  double braid = 0.0;
  std::string out_path, maze_path, mapper, config_path, render_dir, report_path, seed_text;
  long snap_every = 0;
  int scale = 8;

  CLI::App* generate = app.add_subcommand("generate", "generate a maze file");
  generate->add_option("--width", width)->required();
  generate->add_option("--height", height)->required();
  generate->add_option("--seed", seed)->required();
  generate->add_option("--braid", braid)->check(CLI::Range(0.0, 1.0));
  generate->add_option("--out", out_path)->required();

  CLI::App* solve = app.add_subcommand("solve", "run one mapper pipeline on a maze");
  solve->add_option("--maze", maze_path)->required();
  solve->add_option("--mapper", mapper)
      ->required()
      ->check(CLI::IsMember({"lee", "electrical", "fluid", "chemo", "oregonator"}));
  solve->add_option("--config", config_path);
  solve->add_option("--render", render_dir);
  solve->add_option("--report", report_path);
  solve->add_option("--snap", snap_every, "dump a field snapshot every N steps (needs --render)");
  solve->add_option("--scale", scale, "pixels per maze cell in renders");

  CLI::App* compare = app.add_subcommand("compare", "run several mappers against the oracle");
  std::vector<std::string> mappers;
  compare->add_option("--maze", maze_path)->required();
  compare->add_option("--mappers", mappers)->delimiter(',');
  compare->add_option("--config", config_path);
  compare->add_option("--report", report_path);

  CLI::App* voronoi = app.add_subcommand("voronoi", "diffusion Voronoi partition of an open arena");
  voronoi->add_option("--width", width)->required();
  voronoi->add_option("--height", height)->required();
  voronoi->add_option("--seeds", seed_text, "semicolon-separated x,y pairs")->required();
  voronoi->add_option("--config", config_path);
  voronoi->add_option("--render", render_dir);
  voronoi->add_option("--scale", scale);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kExitBadInput;
  }

  if (generate->parsed()) return cmd_generate(width, height, seed, braid, out_path);
  if (solve->parsed())
    return cmd_solve(maze_path, mapper, config_path, render_dir, report_path, snap_every, scale);
  if (compare->parsed()) return cmd_compare(maze_path, mappers, config_path, report_path);
  if (voronoi->parsed())
    return cmd_voronoi(width, height, seed_text, config_path, render_dir, scale);
  return kExitBadInput;
}

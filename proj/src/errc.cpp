#include "mazemap/error.hpp"

namespace mazemap {

const char* errc_name(errc code) {
  switch (code) {
    case errc::ragged_rows: return "RaggedRows";
    case errc::missing_marker: return "MissingMarker";
    case errc::duplicate_marker: return "DuplicateMarker";
    case errc::bad_char: return "BadChar";
    case errc::bad_dims: return "BadDims";
    case errc::from_is_wall: return "FromIsWall";
    case errc::no_path: return "NoPath";
    case errc::pin_on_wall: return "PinOnWall";
    case errc::no_pins: return "NoPins";
    case errc::unstable_step: return "UnstableStep";
    case errc::clamp_on_wall: return "ClampOnWall";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::plateau: return "Plateau";
    case errc::cycle: return "Cycle";
    case errc::unreachable: return "Unreachable";
    case errc::degenerate_field: return "DegenerateField";
    case errc::empty_branch: return "EmptyBranch";
    case errc::cfl_violation: return "CFLViolation";
    case errc::front_never_arrives: return "FrontNeverArrives";
    case errc::wave_died: return "WaveDied";
    case errc::numerical_blowup: return "NumericalBlowup";
    case errc::seed_on_wall: return "SeedOnWall";
    case errc::too_few_seeds: return "TooFewSeeds";
    case errc::path_off_grid: return "PathOffGrid";
  }
  return "UnknownError";
}

}  // namespace mazemap

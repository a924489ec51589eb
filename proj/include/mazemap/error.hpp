#pragma once

#include <stdexcept>
#include <string>

namespace mazemap {

enum class errc {
  // maze
  ragged_rows,
  missing_marker,
  duplicate_marker,
  bad_char,
  bad_dims,
  from_is_wall,
  no_path,
  // field
  pin_on_wall,
  no_pins,
  unstable_step,
  clamp_on_wall,
  dimension_mismatch,
  plateau,
  cycle,
  // lee
  unreachable,
  // electrical
  degenerate_field,
  // fluid
  empty_branch,
  cfl_violation,
  // chemo
  front_never_arrives,
  wave_died,
  numerical_blowup,
  seed_on_wall,
  too_few_seeds,
  // render
  path_off_grid,
};

const char* errc_name(errc code);

// All recoverable failures are reported through this one exception type so
// callers can branch on code() without string matching.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

}  // namespace mazemap

#pragma once

#include <functional>
#include <stdexcept>

#include "mazemap/error.hpp"

namespace checks {

// Runs fn and returns the mazemap error code it throws; fails the test via
// exception if nothing (or something else) was thrown.
inline mazemap::errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const mazemap::error& e) {
    return e.code();
  }
  throw std::runtime_error("expected a mazemap::error, none was thrown");
}

}  // namespace checks

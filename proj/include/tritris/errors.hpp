#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tritris {

// Library code throws; the CLI maps exception types to exit codes
// (validation -> 2, budget -> 3, internal -> 4).

// Bad user input: malformed config, unknown piece label, column out of range.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A configured cap was hit (state cap, element cap, holonomy search budget).
// `reached` is how far the computation got before giving up.
struct BudgetError : std::runtime_error {
  std::size_t reached;
  BudgetError(const std::string& what, std::size_t reached_count)
      : std::runtime_error(what), reached(reached_count) {}
};

// An internal invariant failed; always a bug.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tritris

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tritris/game.hpp"

namespace tritris {

// Reachable states plus the right action of every generator, as index
// tables.  Index 0 is the empty state; the rest follow discovery order.
struct StateSpace {
  GameConfig config;
  std::vector<BoardState> states;
  std::vector<Event> generators;
  std::vector<std::vector<std::uint32_t>> tables;  // tables[g][i] = i . g
  std::optional<std::uint32_t> end_index;          // absorbing state, if reachable

  std::uint32_t size() const { return static_cast<std::uint32_t>(states.size()); }
};

struct EnumerateOptions {
  std::size_t max_states = 1'000'000;
};

// Breadth-first closure from the empty state under all_events(config).
// Deterministic: identical configs give identical spaces.  Throws
// BudgetError when the state cap is exceeded.
StateSpace enumerate_state_space(const GameConfig& config,
                                 const EnumerateOptions& opts = {});

// A finite set acted on by labeled transformations.  This is all the
// algebra layers need to know; a StateSpace is one source, hand-built
// fixtures are another.
struct ActionTable {
  std::uint32_t num_states = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint32_t>> tables;
};

ActionTable action_table(const StateSpace& space);

// Two resets and the identity acting on two points.
ActionTable flip_flop();

}  // namespace tritris

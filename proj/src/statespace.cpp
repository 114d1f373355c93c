#include "tritris/statespace.hpp"

#include <unordered_map>

#include "tritris/errors.hpp"

namespace tritris {

namespace {

std::string encode_state(const BoardState& s) {
  if (s.is_end) return std::string(1, '\x01');
  std::string key(1, '\x00');
  for (const Cell& c : s.filled) {
    key.push_back(static_cast<char>(c.col));
    key.push_back(static_cast<char>(c.row));
  }
  return key;
}

}  // namespace

StateSpace enumerate_state_space(const GameConfig& config,
                                 const EnumerateOptions& opts) {
  validate_config(config);
  if (config.n > 255 || config.k > 255) {
    throw ValidationError("board too large to enumerate (max 255x255)");
  }

  StateSpace space;
  space.config = config;
  space.generators = all_events(config);

  std::unordered_map<std::string, std::uint32_t> index;
  auto intern = [&](const BoardState& s) {
    auto [it, inserted] = index.try_emplace(encode_state(s), space.states.size());
    if (inserted) {
      if (space.states.size() >= opts.max_states) {
        throw BudgetError("state cap exceeded", opts.max_states);
      }
      space.states.push_back(s);
      if (s.is_end) space.end_index = it->second;
    }
    return it->second;
  };

  intern(empty_state());
  space.tables.assign(space.generators.size(), {});

  for (std::uint32_t i = 0; i < space.states.size(); ++i) {
    // states grows during the loop; copy, apply_event may reallocate it.
    const BoardState state = space.states[i];
    for (std::size_t g = 0; g < space.generators.size(); ++g) {
      const std::uint32_t next = intern(apply_event(state, space.generators[g], config));
      space.tables[g].push_back(next);
      if (space.tables[g].size() != i + 1) {
        throw InternalError("table fill out of step");
      }
    }
  }
  return space;
}

ActionTable action_table(const StateSpace& space) {
  ActionTable t;
  t.num_states = space.size();
  t.labels.reserve(space.generators.size());
  for (const Event& e : space.generators) t.labels.push_back(event_label(e));
  t.tables = space.tables;
  return t;
}

ActionTable flip_flop() {
  ActionTable t;
  t.num_states = 2;
  t.labels = {"A", "B", "I"};
  t.tables = {{0, 0}, {1, 1}, {0, 1}};
  return t;
}

}  // namespace tritris

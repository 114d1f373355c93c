#pragma once

#include <string>
#include <vector>

#include "tritris/pieces.hpp"

namespace tritris {

enum class Variant { Standard, Periodic };

// Whether a placement that sticks out above the board is tested before or
// after full rows are cleared.  Under PreClear (the default) a piece that
// comes to rest above the top row ends the game even when the rows it
// completes would otherwise clear; PostClear lets clearing rescue it.
enum class OverflowPolicy { PostClear, PreClear };

struct GameConfig {
  int n = 3;  // columns
  int k = 3;  // rows
  Variant variant = Variant::Standard;
  OverflowPolicy overflow = OverflowPolicy::PreClear;
  std::vector<PieceShape> pieces;  // order fixes generator order
};

// Throws ValidationError: n,k >= 1, pieces non-empty, every width <= n.
void validate_config(const GameConfig& config);

// Post-clearing normal form: no full row, every cell inside the board.
// is_end marks the absorbing game-over state (Standard variant only) and
// implies filled is empty.
struct BoardState {
  std::vector<Cell> filled;  // sorted ascending
  bool is_end = false;

  bool operator==(const BoardState&) const = default;
};

BoardState empty_state();
BoardState end_state();

// Basic event: drop piece `piece` with its leftmost column at `column`.
struct Event {
  std::string piece;
  int column = 0;

  bool operator==(const Event&) const = default;
};

// "V_0", "LUS_2", ...
std::string event_label(const Event& e);

// All valid events, pieces in config order, columns ascending.
std::vector<Event> all_events(const GameConfig& config);

// Vertical drop distance to first contact.  The piece descends as a rigid
// unit; overhangs are supported (contact in any column stops the piece).
// Requires !board.is_end and a valid column.
int resting_offset(const BoardState& board, const Event& event,
                   const GameConfig& config);

// Drop, clear full rows (rigid shift down), test overflow per policy.
// End state is absorbing.  Throws ValidationError on an invalid column or
// unknown piece label.
BoardState apply_event(const BoardState& board, const Event& event,
                       const GameConfig& config);

// ASCII picture, top row first: '#' filled, '.' empty; end state renders
// as the single line "E".
std::string render_board(const BoardState& board, const GameConfig& config);

}  // namespace tritris

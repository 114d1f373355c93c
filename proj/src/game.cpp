#include "tritris/game.hpp"

#include <algorithm>

#include "tritris/errors.hpp"

namespace tritris {

void validate_config(const GameConfig& config) {
  if (config.n < 1 || config.k < 1) {
    throw ValidationError("board must be at least 1x1");
  }
  if (config.pieces.empty()) {
    throw ValidationError("piece set must be non-empty");
  }
  for (const PieceShape& p : config.pieces) {
    if (p.width() > config.n) {
      throw ValidationError("piece '" + p.label + "' is wider than the board");
    }
    if (find_piece(config.pieces, p.label) != &p) {
      throw ValidationError("duplicate piece label '" + p.label + "'");
    }
  }
}

BoardState empty_state() { return BoardState{}; }

BoardState end_state() { return BoardState{{}, true}; }

std::string event_label(const Event& e) {
  return e.piece + "_" + std::to_string(e.column);
}

std::vector<Event> all_events(const GameConfig& config) {
  std::vector<Event> out;
  for (const PieceShape& p : config.pieces) {
    for (int col = 0; col + p.width() <= config.n; ++col) {
      out.push_back(Event{p.label, col});
    }
  }
  return out;
}

namespace {

const PieceShape& resolve_piece(const Event& event, const GameConfig& config) {
  const PieceShape* p = find_piece(config.pieces, event.piece);
  if (!p) throw ValidationError("event piece '" + event.piece + "' not in config");
  return *p;
}

void check_column(const Event& event, const PieceShape& piece,
                  const GameConfig& config) {
  if (event.column < 0 || event.column + piece.width() > config.n) {
    throw ValidationError("placement out of bounds: " + event_label(event) +
                          " on width " + std::to_string(config.n));
  }
}

int drop_offset(const BoardState& board, const PieceShape& piece, int column,
                const GameConfig& config) {
  // h(col) = 1 + highest filled row, 0 when empty.
  std::vector<int> h(config.n, 0);
  for (const Cell& c : board.filled) h[c.col] = std::max(h[c.col], c.row + 1);
  int v = 0;
  for (const Cell& c : piece.cells) v = std::max(v, h[column + c.col] - c.row);
  return v;
}

}  // namespace

int resting_offset(const BoardState& board, const Event& event,
                   const GameConfig& config) {
  if (board.is_end) throw ValidationError("cannot drop onto the end state");
  const PieceShape& piece = resolve_piece(event, config);
  check_column(event, piece, config);
  return drop_offset(board, piece, event.column, config);
}

BoardState apply_event(const BoardState& board, const Event& event,
                       const GameConfig& config) {
  const PieceShape& piece = resolve_piece(event, config);
  check_column(event, piece, config);
  if (board.is_end) return end_state();

  const int v = drop_offset(board, piece, event.column, config);

  // Work grid tall enough for any placement: resting row <= k + height - 1.
  const int rows = config.k + piece.height();
  std::vector<std::vector<bool>> grid(rows, std::vector<bool>(config.n, false));
  for (const Cell& c : board.filled) grid[c.row][c.col] = true;
  for (const Cell& c : piece.cells) grid[v + c.row][event.column + c.col] = true;

  auto overflowed = [&](const std::vector<std::vector<bool>>& g) {
    for (int r = config.k; r < static_cast<int>(g.size()); ++r) {
      for (bool cell : g[r]) {
        if (cell) return true;
      }
    }
    return false;
  };
  auto terminal = [&]() {
    return config.variant == Variant::Standard ? end_state() : empty_state();
  };

  if (config.overflow == OverflowPolicy::PreClear && overflowed(grid)) {
    return terminal();
  }

  // Rows shift down rigidly, so a surviving row keeps its pattern and the
  // iterated clear equals a single filter pass.
  std::vector<std::vector<bool>> kept;
  for (const auto& row : grid) {
    if (std::find(row.begin(), row.end(), false) != row.end()) {
      kept.push_back(row);
    }
  }

  if (config.overflow == OverflowPolicy::PostClear && overflowed(kept)) {
    return terminal();
  }

  BoardState out;
  for (int r = 0; r < static_cast<int>(kept.size()); ++r) {
    for (int c = 0; c < config.n; ++c) {
      if (kept[r][c]) out.filled.push_back({c, r});
    }
  }
  std::sort(out.filled.begin(), out.filled.end());
  return out;
}

std::string render_board(const BoardState& board, const GameConfig& config) {
  if (board.is_end) return "E\n";
  std::vector<std::string> rows(config.k, std::string(config.n, '.'));
  for (const Cell& c : board.filled) rows[c.row][c.col] = '#';
  std::string out;
  for (int r = config.k - 1; r >= 0; --r) {
    out += rows[r];
    out += '\n';
  }
  return out;
}

}  // namespace tritris

#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace tritris {

// Grid cell, column-major comparison.  Rows count upward: row 0 is the
// bottom of the board (or of a piece's bounding box).
struct Cell {
  int col = 0;
  int row = 0;
  auto operator<=>(const Cell&) const = default;
};

struct PieceShape {
  std::string label;
  std::vector<Cell> cells;  // normalized: min col = min row = 0, sorted ascending

  int width() const;   // number of distinct column offsets
  int height() const;  // number of distinct row offsets
};

// Normalizes offsets, sorts cells, and validates: non-empty, no duplicates,
// edge-connected, label non-empty and free of whitespace/'_'.  Throws
// ValidationError on violation.
PieceShape make_piece(std::string label, std::vector<Cell> cells);

// The six fixed-orientation triominoes: LS, RS, LUS, RUS, V, H.
const std::vector<PieceShape>& triomino_catalog();

// The seven one-sided tetrominoes: I, O, T, S, Z, J, L.
const std::vector<PieceShape>& tetromino_catalog();

// nullptr when absent.
const PieceShape* find_piece(const std::vector<PieceShape>& catalog,
                             std::string_view label);

// Resolves labels against a catalog, preserving order.  Throws
// ValidationError on an unknown label or duplicate.
std::vector<PieceShape> pieces_by_labels(const std::vector<PieceShape>& catalog,
                                         const std::vector<std::string>& labels);

// Catalog file format: one piece per line, "LABEL c,r c,r ...";
// '#' starts a comment, blank lines ignored.
std::vector<PieceShape> parse_piece_catalog(std::istream& in);
std::vector<PieceShape> parse_piece_catalog(const std::string& text);
std::string render_piece_catalog(const std::vector<PieceShape>& pieces);

}  // namespace tritris

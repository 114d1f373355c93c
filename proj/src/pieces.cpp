#include "tritris/pieces.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <sstream>

#include "tritris/errors.hpp"

namespace tritris {

int PieceShape::width() const {
  int w = 0;
  for (const Cell& c : cells) w = std::max(w, c.col + 1);
  return w;
}

int PieceShape::height() const {
  int h = 0;
  for (const Cell& c : cells) h = std::max(h, c.row + 1);
  return h;
}

PieceShape make_piece(std::string label, std::vector<Cell> cells) {
  if (label.empty()) throw ValidationError("piece label must be non-empty");
  for (char ch : label) {
    if (ch == '_' || std::isspace(static_cast<unsigned char>(ch))) {
      throw ValidationError("piece label '" + label +
                            "' may not contain '_' or whitespace");
    }
  }
  if (cells.empty()) {
    throw ValidationError("piece '" + label + "' has no cells");
  }
  int min_col = cells.front().col, min_row = cells.front().row;
  for (const Cell& c : cells) {
    min_col = std::min(min_col, c.col);
    min_row = std::min(min_row, c.row);
  }
  for (Cell& c : cells) {
    c.col -= min_col;
    c.row -= min_row;
  }
  std::sort(cells.begin(), cells.end());
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end()) {
    throw ValidationError("piece '" + label + "' has duplicate cells");
  }

  // Edge connectivity: flood fill with 4-neighborhood.
  std::set<Cell> todo(cells.begin() + 1, cells.end());
  std::vector<Cell> frontier{cells.front()};
  while (!frontier.empty()) {
    Cell c = frontier.back();
    frontier.pop_back();
    const Cell nbrs[4] = {{c.col - 1, c.row}, {c.col + 1, c.row},
                          {c.col, c.row - 1}, {c.col, c.row + 1}};
    for (const Cell& nb : nbrs) {
      auto it = todo.find(nb);
      if (it != todo.end()) {
        frontier.push_back(*it);
        todo.erase(it);
      }
    }
  }
  if (!todo.empty()) {
    throw ValidationError("piece '" + label + "' is not edge-connected");
  }
  return PieceShape{std::move(label), std::move(cells)};
}

// The four bent triominoes, named by which way the step turns.  Drawn with
// row 0 at the bottom:
//   LS  X .    RS  . X    LUS  X X    RUS  X X
//       X X        X X         X .        . X
const std::vector<PieceShape>& triomino_catalog() {
  static const std::vector<PieceShape> catalog = {
      make_piece("LS", {{0, 0}, {1, 0}, {0, 1}}),
      make_piece("RS", {{0, 0}, {1, 0}, {1, 1}}),
      make_piece("LUS", {{0, 0}, {0, 1}, {1, 1}}),
      make_piece("RUS", {{1, 0}, {0, 1}, {1, 1}}),
      make_piece("V", {{0, 0}, {0, 1}, {0, 2}}),
      make_piece("H", {{0, 0}, {1, 0}, {2, 0}}),
  };
  return catalog;
}

const std::vector<PieceShape>& tetromino_catalog() {
  static const std::vector<PieceShape> catalog = {
      make_piece("I", {{0, 0}, {1, 0}, {2, 0}, {3, 0}}),
      make_piece("O", {{0, 0}, {1, 0}, {0, 1}, {1, 1}}),
      make_piece("T", {{0, 0}, {1, 0}, {2, 0}, {1, 1}}),
      make_piece("S", {{0, 0}, {1, 0}, {1, 1}, {2, 1}}),
      make_piece("Z", {{1, 0}, {2, 0}, {0, 1}, {1, 1}}),
      make_piece("J", {{0, 0}, {1, 0}, {2, 0}, {0, 1}}),
      make_piece("L", {{0, 0}, {1, 0}, {2, 0}, {2, 1}}),
  };
  return catalog;
}

const PieceShape* find_piece(const std::vector<PieceShape>& catalog,
                             std::string_view label) {
  for (const PieceShape& p : catalog) {
    if (p.label == label) return &p;
  }
  return nullptr;
}

std::vector<PieceShape> pieces_by_labels(const std::vector<PieceShape>& catalog,
                                         const std::vector<std::string>& labels) {
  std::vector<PieceShape> out;
  out.reserve(labels.size());
  for (const std::string& label : labels) {
    const PieceShape* p = find_piece(catalog, label);
    if (!p) throw ValidationError("unknown piece label '" + label + "'");
    if (find_piece(out, label)) {
      throw ValidationError("duplicate piece label '" + label + "'");
    }
    out.push_back(*p);
  }
  return out;
}

std::vector<PieceShape> parse_piece_catalog(std::istream& in) {
  std::vector<PieceShape> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream ls(line);
    std::string label;
    if (!(ls >> label)) continue;
    std::vector<Cell> cells;
    std::string tok;
    while (ls >> tok) {
      int c = 0, r = 0;
      char comma = 0;
      std::istringstream ts(tok);
      if (!(ts >> c >> comma >> r) || comma != ',' || ts.peek() != EOF ||
          c < 0 || r < 0) {
        throw ValidationError("piece catalog line " + std::to_string(lineno) +
                              ": bad cell '" + tok + "' (want col,row)");
      }
      cells.push_back({c, r});
    }
    if (find_piece(out, label)) {
      throw ValidationError("piece catalog line " + std::to_string(lineno) +
                            ": duplicate label '" + label + "'");
    }
    out.push_back(make_piece(std::move(label), std::move(cells)));
  }
  return out;
}

std::vector<PieceShape> parse_piece_catalog(const std::string& text) {
  std::istringstream in(text);
  return parse_piece_catalog(in);
}

std::string render_piece_catalog(const std::vector<PieceShape>& pieces) {
  std::ostringstream out;
  for (const PieceShape& p : pieces) {
    out << p.label;
    for (const Cell& c : p.cells) out << ' ' << c.col << ',' << c.row;
    out << '\n';
  }
  return out.str();
}

}  // namespace tritris

#include "tritris/words.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>

#include "tritris/errors.hpp"
#include "tritris/kernels.hpp"

namespace tritris {

EventWord parse_word(const std::string& text, const GameConfig& config) {
  // Longest label first so e.g. "LUS" is never read as "LS" plus junk.
  std::vector<const PieceShape*> by_length;
  for (const PieceShape& p : config.pieces) by_length.push_back(&p);
  std::sort(by_length.begin(), by_length.end(),
            [](const PieceShape* a, const PieceShape* b) {
              if (a->label.size() != b->label.size()) {
                return a->label.size() > b->label.size();
              }
              return a->label < b->label;
            });

  EventWord word;
  word.source_text = text;
  std::size_t at = 0;
  while (at < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[at]))) {
      ++at;
      continue;
    }
    const PieceShape* piece = nullptr;
    for (const PieceShape* p : by_length) {
      if (text.compare(at, p->label.size(), p->label) == 0) {
        piece = p;
        break;
      }
    }
    if (!piece) {
      throw ValidationError("unknown label at '" + text.substr(at, 8) + "'");
    }
    at += piece->label.size();
    if (at >= text.size() || text[at] != '_') {
      throw ValidationError("expected '_' after label '" + piece->label + "'");
    }
    ++at;
    if (at >= text.size() || !std::isdigit(static_cast<unsigned char>(text[at]))) {
      throw ValidationError("expected column number after '" + piece->label + "_'");
    }
    int column = 0;
    while (at < text.size() && std::isdigit(static_cast<unsigned char>(text[at]))) {
      column = column * 10 + (text[at] - '0');
      if (column > config.n) break;
      ++at;
    }
    if (column < 0 || column + piece->width() > config.n) {
      throw ValidationError("column " + std::to_string(column) +
                            " out of range for piece '" + piece->label + "'");
    }
    word.tokens.push_back(Event{piece->label, column});
  }
  if (word.tokens.empty()) throw ValidationError("empty word");
  return word;
}

std::string render_word(const EventWord& word) {
  std::string out;
  for (const Event& e : word.tokens) {
    if (!out.empty()) out += ' ';
    out += event_label(e);
  }
  return out;
}

Transformation evaluate_word(const EventWord& word, const StateSpace& space) {
  std::map<std::string, std::uint32_t> gen_index;
  for (std::uint32_t g = 0; g < space.generators.size(); ++g) {
    gen_index[event_label(space.generators[g])] = g;
  }
  Transformation result = identity_transformation(space.size());
  Transformation scratch;
  scratch.map.resize(space.size());
  for (const Event& e : word.tokens) {
    auto it = gen_index.find(event_label(e));
    if (it == gen_index.end()) {
      throw ValidationError("word uses generator '" + event_label(e) +
                            "' absent from the state space");
    }
    kernels::apply_table(scratch.map.data(), result.map.data(),
                         space.tables[it->second].data(), space.size());
    std::swap(result.map, scratch.map);
  }
  return result;
}

TileAction induced_tile_action(const EventWord& word,
                               const HolonomyComponent& component,
                               const StateSpace& space) {
  const Transformation t = evaluate_word(word, space);
  std::map<ImageSet, std::uint32_t> tile_index;
  for (std::size_t i = 0; i < component.tiles.size(); ++i) {
    tile_index[component.tiles[i]] = static_cast<std::uint32_t>(i);
  }

  TileAction out;
  Perm p(component.tiles.size());
  std::vector<bool> hit(component.tiles.size(), false);
  for (std::size_t i = 0; i < component.tiles.size(); ++i) {
    ImageSet image;
    for (std::uint32_t s : component.tiles[i]) image.push_back(t.map[s]);
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    auto it = tile_index.find(image);
    if (it == tile_index.end() || hit[it->second]) {
      out.problem = "tile " + std::to_string(i) +
                    (it == tile_index.end() ? " maps outside the tile family"
                                            : " collides with another tile image");
      return out;
    }
    hit[it->second] = true;
    p[i] = it->second;
  }
  out.perm = std::move(p);
  return out;
}

std::vector<EventWord> parse_word_file(std::istream& in, const GameConfig& config) {
  std::vector<EventWord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    bool blank = std::all_of(line.begin(), line.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c));
    });
    if (blank) continue;
    try {
      out.push_back(parse_word(line, config));
    } catch (const ValidationError& e) {
      throw ValidationError("word file line " + std::to_string(lineno) + ": " +
                            e.what());
    }
  }
  return out;
}

}  // namespace tritris

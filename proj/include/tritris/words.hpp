#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tritris/holonomy.hpp"
#include "tritris/statespace.hpp"
#include "tritris/transformation.hpp"

namespace tritris {

// Token sequence like "V_0 LS_1 V_2".  Grammar: token := LABEL '_' NAT;
// whitespace between tokens is optional when label boundaries stay
// unambiguous (labels are matched longest-first).
struct EventWord {
  std::vector<Event> tokens;
  std::string source_text;
};

// Throws ValidationError: empty input, unknown label, column out of range.
EventWord parse_word(const std::string& text, const GameConfig& config);

// Normalized text, single spaces.  parse(render(w)) round-trips.
std::string render_word(const EventWord& word);

// Left-to-right composition of the generator tables; the empty word gives
// the identity.
Transformation evaluate_word(const EventWord& word, const StateSpace& space);

struct TileAction {
  std::optional<Perm> perm;  // set iff the word permutes the tile family
  std::string problem;       // offending tile and image otherwise
};

// Image of every tile under the word's transformation, matched back
// against the component's tile family.
TileAction induced_tile_action(const EventWord& word,
                               const HolonomyComponent& component,
                               const StateSpace& space);

// One word per line; '#' starts a comment; blank lines skipped.
std::vector<EventWord> parse_word_file(std::istream& in, const GameConfig& config);

}  // namespace tritris

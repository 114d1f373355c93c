#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tritris/detail/row_dedup.hpp"
#include "tritris/statespace.hpp"

namespace tritris {

// Sorted state indices; the external face of a skeleton node.
using ImageSet = std::vector<std::uint32_t>;

// The node set Q: every image of the full state set under a generator
// word, the full set itself, and every singleton.  Nodes are bitsets over
// state indices, deduplicated; node 0 is the full set.  Generator edges
// give the set action; words back to the full set come from the BFS tree.
struct Skeleton {
  static constexpr std::uint32_t kNone = 0xffffffffu;

  std::uint32_t num_states = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<std::uint32_t>> gen_tables;
  std::size_t words_per_set = 0;
  detail::RowDedup<std::uint64_t> node_sets{0};
  std::vector<std::uint32_t> sizes;                // member count per node
  std::vector<std::vector<std::uint32_t>> edges;   // edges[g][node]
  std::vector<std::uint32_t> in_parent;            // BFS tree; kNone at roots
  std::vector<std::uint32_t> in_gen;

  std::uint32_t num_nodes() const { return static_cast<std::uint32_t>(node_sets.size()); }
  const std::uint64_t* bits(std::uint32_t node) const { return node_sets.row(node); }
  bool subset(std::uint32_t a, std::uint32_t b) const;  // as sets

  // Word from the full set to this node; nullopt for singletons never hit
  // by the image BFS.  Node 0 gets the empty word.
  std::optional<std::vector<std::uint32_t>> in_word(std::uint32_t node) const;

  ImageSet members(std::uint32_t node) const;
  std::optional<std::uint32_t> find_node(const ImageSet& set) const;
  std::uint32_t singleton_node(std::uint32_t state) const;  // always exists
};

// Throws BudgetError past node_cap.
Skeleton build_skeleton(const ActionTable& act, std::size_t node_cap = 5'000'000);

// a ≤ b: a is a subset of b or of some set reachable from b by generator
// edges.  Node-id interface; the set interface resolves through find_node.
bool subduction_leq(std::uint32_t a, std::uint32_t b, const Skeleton& skel);
bool subduction_leq(const ImageSet& a, const ImageSet& b, const Skeleton& skel);

// Strongly connected components of the generator-edge graph: node -> class
// id, plus the class count.  The classes of classify, without the heights.
std::pair<std::vector<std::uint32_t>, std::uint32_t> generator_scc(const Skeleton& skel);

// Two disciplines for the level number of a class: count strict subduction
// steps with singleton classes pinned to 0, or count chain nodes (one
// more).
enum class HeightConvention { StrictSteps, NodeCount };

struct EquivClassification {
  HeightConvention convention = HeightConvention::StrictSteps;
  std::vector<std::uint32_t> class_of;             // node -> class id
  std::vector<std::uint32_t> representative;       // class id -> least node id
  std::vector<std::vector<std::uint32_t>> class_members;
  std::vector<std::uint32_t> heights;              // class id -> height
  std::uint32_t num_classes() const { return static_cast<std::uint32_t>(representative.size()); }
  std::uint32_t height_of(std::uint32_t node) const { return heights[class_of[node]]; }
  std::uint32_t height_of_x() const { return height_of(0); }
};

// Classes are the strongly connected components of the generator-edge
// graph (mutually subducible sets have equal size, so the subset arcs
// never merge components).  Heights are longest chains in the class order.
EquivClassification classify(const Skeleton& skel,
                             HeightConvention convention = HeightConvention::StrictSteps);

enum class TileMode {
  Maximal,  // inclusion-maximal strict subsets of rep within Q
  Strict,   // no Z in Q strictly between, measured by subduction
};

// Tile node ids in ascending node order.  rep must have at least 2
// members.  Strict mode precomputes all-pairs reachability and is only
// intended for small skeletons.
std::vector<std::uint32_t> tiles(std::uint32_t rep, const Skeleton& skel,
                                 TileMode mode = TileMode::Maximal);

}  // namespace tritris

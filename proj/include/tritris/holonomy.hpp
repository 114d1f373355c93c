#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tritris/group_id.hpp"
#include "tritris/perm.hpp"
#include "tritris/skeleton.hpp"

namespace tritris {

struct HolonomyOptions {
  std::size_t search_budget = 10'000'000;  // tuple states per component
  std::size_t memory_budget_bytes = std::size_t(2) << 30;
  TileMode tile_mode = TileMode::Maximal;
};

// The permutations of one representative's tiles induced by generator
// words that map the representative set exactly to itself.  Perms and
// witness words are parallel, discovery order, identity (empty word)
// first.  complete=false marks a budget-stopped search: group_perms is
// then only a lower bound and identified is a placeholder.
struct HolonomyComponent {
  std::uint32_t rep_node = 0;
  ImageSet representative;
  std::vector<std::uint32_t> tile_nodes;
  std::vector<ImageSet> tiles;
  std::vector<Perm> group_perms;
  std::vector<std::vector<std::uint32_t>> witness_words;
  GroupFingerprint identified;
  std::uint32_t height = 0;
  bool complete = true;
  std::size_t states_searched = 0;
};

HolonomyComponent holonomy_group(std::uint32_t rep_node, const Skeleton& skel,
                                 const EquivClassification& cls,
                                 const HolonomyOptions& opts = {});

struct ReportOptions {
  HeightConvention convention = HeightConvention::StrictSteps;
  HolonomyOptions holonomy;
  std::size_t node_cap = 5'000'000;
};

// One component per non-singleton class, height ascending then node id.
struct DecompositionReport {
  std::uint32_t num_states = 0;
  std::uint32_t num_generators = 0;
  std::uint32_t height_x = 0;
  HeightConvention convention = HeightConvention::StrictSteps;
  std::optional<std::size_t> semigroup_size;  // filled by callers that have it
  std::vector<HolonomyComponent> components;
  bool complete = true;

  // Deduplicated (degree, group name) pairs of the nontrivial components,
  // sorted by degree then name.
  std::vector<std::pair<std::uint32_t, std::string>> nontrivial_summary() const;
};

DecompositionReport decomposition_report(const ActionTable& act,
                                         const ReportOptions& opts = {});

// Same report over an already-built skeleton; skips the rebuild.
DecompositionReport decomposition_report(const Skeleton& skel,
                                         const EquivClassification& cls,
                                         const HolonomyOptions& opts = {});

// True iff every holonomy group is trivial.  Throws BudgetError when the
// report contains budget-stopped components.
bool aperiodic_via_holonomy(const DecompositionReport& report);
bool aperiodic_via_holonomy(const ActionTable& act, const ReportOptions& opts = {});

// Same decision straight from the skeleton.  Every holonomy permutation is
// induced by a word mapping a node set onto itself, and a word that moves
// a member of a set it stabilizes has powers that never become idempotent.
// So all groups are trivial exactly when every in-class generator arc
// carries members consistently with the class BFS tree (all Schreier loop
// generators are identities).  Needs no tiles, heights, or per-component
// searches, so it reaches skeletons far beyond decomposition_report.
bool aperiodic_via_holonomy(const Skeleton& skel);

// DOT digraph of the class condensation: one node per class, annotated
// with height, set size, and group name where nontrivial.
std::string dot_condensation(const Skeleton& skel, const EquivClassification& cls,
                             const DecompositionReport& report);

// CSV rows "height,degree,order,group,representative_size,complete".
std::string csv_components(const DecompositionReport& report);

// Versioned structured report, schema "tritris.holonomy-report/1".
std::string report_json(const DecompositionReport& report, const Skeleton& skel);

}  // namespace tritris

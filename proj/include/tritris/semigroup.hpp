#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tritris/detail/row_dedup.hpp"
#include "tritris/statespace.hpp"
#include "tritris/transformation.hpp"

namespace tritris {

struct SemigroupOptions {
  std::size_t element_cap = 5'000'000;
  // Bounds the element arena; the effective cap is the smaller of
  // element_cap and what fits in this budget at the given degree.
  std::size_t memory_budget_bytes = std::size_t(2) << 30;
};

// All distinct transformation maps generated by an action, each with one
// shortest-found witness word stored as a (parent, generator) link.
struct SemigroupEnumeration {
  static constexpr std::uint32_t kNoParent = 0xffffffffu;

  std::uint32_t degree = 0;
  std::vector<std::string> generator_labels;
  std::vector<std::uint32_t> generator_ids;  // element id per generator
  detail::RowDedup<std::uint32_t> elements{0};
  std::vector<std::uint32_t> witness_parent;  // kNoParent marks a generator
  std::vector<std::uint32_t> witness_gen;

  std::size_t size() const { return elements.size(); }
  const std::uint32_t* element(std::uint32_t id) const { return elements.row(id); }
  Transformation transformation(std::uint32_t id) const;
  std::optional<std::uint32_t> find(const Transformation& t) const;

  // Generator indices whose product is element id, left to right.
  std::vector<std::uint32_t> witness(std::uint32_t id) const;
};

// Breadth-first closure of the generator maps under right multiplication
// by generators.  Deterministic ids: generators in label order, then
// discovery order.  Throws BudgetError (with the count found so far) when
// the effective cap is exceeded.
SemigroupEnumeration enumerate_semigroup(const ActionTable& act,
                                         const SemigroupOptions& opts = {});

// True iff every element's eventual cycle has period 1.  Only callable on
// a complete enumeration; enumerate_semigroup never returns a truncated
// one.
bool semigroup_is_aperiodic_elementwise(const SemigroupEnumeration& sg);

}  // namespace tritris

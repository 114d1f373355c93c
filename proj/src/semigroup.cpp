#include "tritris/semigroup.hpp"

#include <algorithm>

#include "tritris/errors.hpp"
#include "tritris/kernels.hpp"

namespace tritris {

Transformation SemigroupEnumeration::transformation(std::uint32_t id) const {
  Transformation t;
  t.map.assign(element(id), element(id) + degree);
  return t;
}

std::optional<std::uint32_t> SemigroupEnumeration::find(const Transformation& t) const {
  if (t.degree() != degree) return std::nullopt;
  std::uint32_t id = elements.find(t.map.data());
  if (id == detail::RowDedup<std::uint32_t>::kNotFound) return std::nullopt;
  return id;
}

std::vector<std::uint32_t> SemigroupEnumeration::witness(std::uint32_t id) const {
  std::vector<std::uint32_t> out;
  while (true) {
    out.push_back(witness_gen[id]);
    if (witness_parent[id] == kNoParent) break;
    id = witness_parent[id];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

SemigroupEnumeration enumerate_semigroup(const ActionTable& act,
                                         const SemigroupOptions& opts) {
  if (act.tables.size() != act.labels.size()) {
    throw ValidationError("action table: labels/tables size mismatch");
  }
  if (act.labels.empty()) {
    throw ValidationError("action table: no generators");
  }
  for (const auto& table : act.tables) {
    if (table.size() != act.num_states) {
      throw ValidationError("action table: wrong table length");
    }
    for (std::uint32_t v : table) {
      if (v >= act.num_states) throw ValidationError("action table: image out of range");
    }
  }

  const std::uint32_t degree = act.num_states;
  const std::size_t per_element = sizeof(std::uint32_t) * degree + 24;
  const std::size_t cap =
      std::min(opts.element_cap, std::max<std::size_t>(1, opts.memory_budget_bytes / per_element));

  SemigroupEnumeration sg;
  sg.degree = degree;
  sg.generator_labels = act.labels;
  sg.elements = detail::RowDedup<std::uint32_t>(degree, 4096);

  auto intern = [&](const std::uint32_t* row, std::uint32_t parent, std::uint32_t gen) {
    auto [id, inserted] = sg.elements.intern(row);
    if (inserted) {
      if (sg.size() > cap) {
        throw BudgetError("semigroup element cap exceeded", sg.size() - 1);
      }
      sg.witness_parent.push_back(parent);
      sg.witness_gen.push_back(gen);
    }
    return id;
  };

  for (std::uint32_t g = 0; g < act.tables.size(); ++g) {
    sg.generator_ids.push_back(
        intern(act.tables[g].data(), SemigroupEnumeration::kNoParent, g));
  }

  const kernels::ApplyTableFn apply = kernels::selected_kernel().fn;
  std::vector<std::uint32_t> product(degree);
  for (std::uint32_t id = 0; id < sg.size(); ++id) {
    for (std::uint32_t g = 0; g < act.tables.size(); ++g) {
      // element(id) then generator g, so the new map sends x to g[elt[x]].
      apply(product.data(), sg.element(id), act.tables[g].data(), degree);
      intern(product.data(), id, g);
    }
  }
  return sg;
}

bool semigroup_is_aperiodic_elementwise(const SemigroupEnumeration& sg) {
  for (std::uint32_t id = 0; id < sg.size(); ++id) {
    if (!element_is_aperiodic(sg.transformation(id))) return false;
  }
  return true;
}

}  // namespace tritris

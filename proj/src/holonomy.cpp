#include "tritris/holonomy.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "tritris/detail/bitset_ops.hpp"
#include "tritris/errors.hpp"

namespace tritris {

using detail::equal_row;
using detail::or_into;
using detail::popcount_row;

HolonomyComponent holonomy_group(std::uint32_t rep_node, const Skeleton& skel,
                                 const EquivClassification& cls,
                                 const HolonomyOptions& opts) {
  HolonomyComponent comp;
  comp.rep_node = rep_node;
  comp.representative = skel.members(rep_node);
  comp.height = cls.height_of(rep_node);
  comp.tile_nodes = tiles(rep_node, skel, opts.tile_mode);
  for (std::uint32_t t : comp.tile_nodes) comp.tiles.push_back(skel.members(t));

  const std::size_t m = comp.tile_nodes.size();
  if (m == 0) {
    throw ValidationError("holonomy_group: tile set is empty (strict mode?)");
  }
  {
    std::vector<std::uint64_t> cover(skel.words_per_set, 0);
    for (std::uint32_t t : comp.tile_nodes) {
      or_into(cover.data(), skel.bits(t), skel.words_per_set);
    }
    if (!equal_row(cover.data(), skel.bits(rep_node), skel.words_per_set)) {
      throw ValidationError("holonomy_group: tiles do not cover the representative");
    }
  }

  std::map<std::uint32_t, std::uint32_t> tile_index;
  for (std::size_t i = 0; i < m; ++i) {
    tile_index[comp.tile_nodes[i]] = static_cast<std::uint32_t>(i);
  }

  const std::size_t per_state = sizeof(std::uint32_t) * m + 24;
  const std::size_t budget = std::min(
      opts.search_budget,
      std::max<std::size_t>(1, opts.memory_budget_bytes / per_state));

  // Tuple BFS: a search state is the tuple of current images of all tiles.
  // Tiles cover rep, so the tuple's union is the current image of rep;
  // images never regrow, so states whose union is smaller than rep are
  // dead.  A tuple whose union equals rep is a permutation of the tiles.
  detail::RowDedup<std::uint32_t> visited(m, 1024);
  std::vector<std::uint32_t> parent, via_gen;
  const std::size_t rep_size = skel.sizes[rep_node];

  auto word_of = [&](std::uint32_t tuple_id) {
    std::vector<std::uint32_t> word;
    while (tuple_id != 0) {
      word.push_back(via_gen[tuple_id]);
      tuple_id = parent[tuple_id];
    }
    std::reverse(word.begin(), word.end());
    return word;
  };

  std::set<Perm> recorded;
  auto try_record = [&](const std::uint32_t* tuple, std::uint32_t tuple_id) {
    std::vector<std::uint64_t> image(skel.words_per_set, 0);
    for (std::size_t i = 0; i < m; ++i) {
      or_into(image.data(), skel.bits(tuple[i]), skel.words_per_set);
    }
    if (!equal_row(image.data(), skel.bits(rep_node), skel.words_per_set)) return;
    Perm p(m);
    for (std::size_t i = 0; i < m; ++i) {
      auto it = tile_index.find(tuple[i]);
      if (it == tile_index.end()) {
        throw InternalError("exact return produced a non-tile image");
      }
      p[i] = it->second;
    }
    if (!is_permutation(p)) throw InternalError("tile images not a bijection");
    if (recorded.insert(p).second) {
      comp.group_perms.push_back(p);
      comp.witness_words.push_back(word_of(tuple_id));
    }
  };

  visited.intern(comp.tile_nodes.data());
  parent.push_back(0);
  via_gen.push_back(0);
  try_record(comp.tile_nodes.data(), 0);  // identity, empty word

  std::vector<std::uint32_t> next(m);
  comp.complete = true;
  for (std::uint32_t id = 0; id < visited.size(); ++id) {
    for (std::uint32_t g = 0; g < skel.edges.size(); ++g) {
      const std::uint32_t* tuple = visited.row(id);
      std::vector<std::uint64_t> image(skel.words_per_set, 0);
      for (std::size_t i = 0; i < m; ++i) {
        next[i] = skel.edges[g][tuple[i]];
        or_into(image.data(), skel.bits(next[i]), skel.words_per_set);
      }
      if (popcount_row(image.data(), skel.words_per_set) < rep_size) continue;
      auto [nid, inserted] = visited.intern(next.data());
      if (!inserted) continue;
      if (visited.size() > budget) {
        comp.complete = false;
        break;
      }
      parent.push_back(id);
      via_gen.push_back(g);
      if (equal_row(image.data(), skel.bits(rep_node), skel.words_per_set)) {
        try_record(visited.row(nid), nid);
      }
    }
    if (!comp.complete) break;
  }

  comp.states_searched = visited.size();
  if (comp.complete) {
    comp.identified = identify_group(comp.group_perms);
  } else {
    comp.identified.degree = static_cast<std::uint32_t>(m);
    comp.identified.order = comp.group_perms.size();
    comp.identified.abelian = false;
    comp.identified.name =
        "incomplete(order>=" + std::to_string(comp.group_perms.size()) + ")";
  }
  return comp;
}

DecompositionReport decomposition_report(const Skeleton& skel,
                                         const EquivClassification& cls,
                                         const HolonomyOptions& opts) {
  DecompositionReport report;
  report.num_states = skel.num_states;
  report.num_generators = static_cast<std::uint32_t>(skel.edges.size());
  report.convention = cls.convention;
  report.height_x = cls.height_of_x();

  std::vector<std::uint32_t> reps;
  for (std::uint32_t c = 0; c < cls.num_classes(); ++c) {
    if (skel.sizes[cls.representative[c]] > 1) reps.push_back(cls.representative[c]);
  }
  std::sort(reps.begin(), reps.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (cls.height_of(a) != cls.height_of(b)) return cls.height_of(a) < cls.height_of(b);
    return a < b;
  });
  for (std::uint32_t rep : reps) {
    report.components.push_back(holonomy_group(rep, skel, cls, opts));
    if (!report.components.back().complete) report.complete = false;
  }
  return report;
}

DecompositionReport decomposition_report(const ActionTable& act,
                                         const ReportOptions& opts) {
  Skeleton skel = build_skeleton(act, opts.node_cap);
  EquivClassification cls = classify(skel, opts.convention);
  return decomposition_report(skel, cls, opts.holonomy);
}

std::vector<std::pair<std::uint32_t, std::string>>
DecompositionReport::nontrivial_summary() const {
  std::set<std::pair<std::uint32_t, std::string>> set;
  for (const HolonomyComponent& c : components) {
    if (c.identified.order > 1 || !c.complete) {
      set.emplace(static_cast<std::uint32_t>(c.tile_nodes.size()), c.identified.name);
    }
  }
  return {set.begin(), set.end()};
}

bool aperiodic_via_holonomy(const DecompositionReport& report) {
  if (!report.complete) {
    throw BudgetError("holonomy report is partial; aperiodicity undecided",
                      report.components.size());
  }
  for (const HolonomyComponent& c : report.components) {
    if (c.identified.order > 1) return false;
  }
  return true;
}

bool aperiodic_via_holonomy(const ActionTable& act, const ReportOptions& opts) {
  return aperiodic_via_holonomy(decomposition_report(act, opts));
}

bool aperiodic_via_holonomy(const Skeleton& skel) {
  const auto [class_of, num_classes] = generator_scc(skel);
  const std::uint32_t n = skel.num_nodes();
  const std::uint32_t gens = static_cast<std::uint32_t>(skel.edges.size());

  // Nodes grouped by class, ascending ids inside each bucket.
  std::vector<std::uint32_t> offset(num_classes + 1, 0);
  for (std::uint32_t node = 0; node < n; ++node) ++offset[class_of[node] + 1];
  for (std::uint32_t c = 0; c < num_classes; ++c) offset[c + 1] += offset[c];
  std::vector<std::uint32_t> bucket(n);
  {
    std::vector<std::uint32_t> cursor(offset.begin(), offset.end() - 1);
    for (std::uint32_t node = 0; node < n; ++node) {
      bucket[cursor[class_of[node]]++] = node;
    }
  }

  for (std::uint32_t c = 0; c < num_classes; ++c) {
    const std::uint32_t* first = bucket.data() + offset[c];
    const std::uint32_t count = offset[c + 1] - offset[c];

    if (count == 1) {
      // Only self-arcs can close a loop; each must fix the set pointwise.
      const std::uint32_t u = *first;
      for (std::uint32_t g = 0; g < gens; ++g) {
        if (skel.edges[g][u] != u) continue;
        const auto& t = skel.gen_tables[g];
        const std::uint64_t* row = skel.bits(u);
        for (std::size_t w = 0; w < skel.words_per_set; ++w) {
          for (std::uint64_t b = row[w]; b != 0; b &= b - 1) {
            const std::uint32_t i =
                static_cast<std::uint32_t>(w * 64) + std::countr_zero(b);
            if (t[i] != i) return false;
          }
        }
      }
      continue;
    }

    // BFS tree from the least node, carrying the ordered member images.
    // Every in-class arc must agree with the carried order; a mismatch is
    // a nonidentity Schreier loop generator.
    std::unordered_map<std::uint32_t, std::uint32_t> slot;
    slot.reserve(count * 2);
    for (std::uint32_t i = 0; i < count; ++i) slot.emplace(first[i], i);

    std::vector<std::vector<std::uint32_t>> carry(count);
    carry[0] = skel.members(*first);
    const std::size_t m = carry[0].size();
    std::vector<std::uint32_t> order{0};
    order.reserve(count);
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
      const std::uint32_t su = order[qi];
      const std::uint32_t u = first[su];
      for (std::uint32_t g = 0; g < gens; ++g) {
        const std::uint32_t v = skel.edges[g][u];
        const auto it = slot.find(v);
        if (it == slot.end()) continue;  // arc leaves the class
        const auto& t = skel.gen_tables[g];
        const std::vector<std::uint32_t>& cu = carry[su];
        std::vector<std::uint32_t>& cv = carry[it->second];
        if (cv.empty()) {
          cv.resize(m);
          for (std::size_t j = 0; j < m; ++j) cv[j] = t[cu[j]];
          order.push_back(it->second);
        } else {
          for (std::size_t j = 0; j < m; ++j) {
            if (t[cu[j]] != cv[j]) return false;
          }
        }
      }
    }
  }
  return true;
}

std::string dot_condensation(const Skeleton& skel, const EquivClassification& cls,
                             const DecompositionReport& report) {
  std::map<std::uint32_t, const HolonomyComponent*> by_rep;
  for (const HolonomyComponent& c : report.components) by_rep[c.rep_node] = &c;

  std::ostringstream out;
  out << "digraph condensation {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::uint32_t c = 0; c < cls.num_classes(); ++c) {
    std::uint32_t rep = cls.representative[c];
    out << "  c" << c << " [label=\"h=" << cls.heights[c]
        << " size=" << skel.sizes[rep] << " x" << cls.class_members[c].size();
    auto it = by_rep.find(rep);
    if (it != by_rep.end() && it->second->identified.order > 1) {
      out << "\\n" << it->second->identified.name;
    }
    out << "\"];\n";
  }
  std::set<std::pair<std::uint32_t, std::uint32_t>> arcs;
  for (std::uint32_t node = 0; node < skel.num_nodes(); ++node) {
    for (const auto& table : skel.edges) {
      std::uint32_t a = cls.class_of[node], b = cls.class_of[table[node]];
      if (a != b) arcs.emplace(a, b);
    }
  }
  for (const HolonomyComponent& comp : report.components) {
    for (std::uint32_t t : comp.tile_nodes) {
      std::uint32_t a = cls.class_of[comp.rep_node], b = cls.class_of[t];
      if (a != b) arcs.emplace(a, b);
    }
  }
  for (auto [a, b] : arcs) out << "  c" << a << " -> c" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string csv_components(const DecompositionReport& report) {
  std::ostringstream out;
  out << "height,degree,order,group,representative_size,complete\n";
  for (const HolonomyComponent& c : report.components) {
    out << c.height << ',' << c.tile_nodes.size() << ',' << c.identified.order
        << ',' << c.identified.name << ',' << c.representative.size() << ','
        << (c.complete ? "yes" : "no") << '\n';
  }
  return out.str();
}

std::string report_json(const DecompositionReport& report, const Skeleton& skel) {
  nlohmann::ordered_json j;
  j["schema"] = "tritris.holonomy-report/1";
  j["num_states"] = report.num_states;
  j["num_generators"] = report.num_generators;
  j["height_convention"] =
      report.convention == HeightConvention::StrictSteps ? "strict-steps" : "node-count";
  j["height_of_full_set"] = report.height_x;
  if (report.semigroup_size) j["semigroup_size"] = *report.semigroup_size;
  j["complete"] = report.complete;
  j["components"] = nlohmann::ordered_json::array();
  for (const HolonomyComponent& c : report.components) {
    nlohmann::ordered_json jc;
    jc["height"] = c.height;
    jc["representative"] = c.representative;
    jc["degree"] = c.tile_nodes.size();
    jc["tiles"] = c.tiles;
    jc["group"] = c.identified.name;
    jc["order"] = c.identified.order;
    jc["abelian"] = c.identified.abelian;
    nlohmann::ordered_json orders = nlohmann::ordered_json::object();
    for (auto [ord, count] : c.identified.element_order_multiset) {
      orders[std::to_string(ord)] = count;
    }
    jc["element_orders"] = orders;
    jc["complete"] = c.complete;
    nlohmann::ordered_json perms = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < c.group_perms.size(); ++i) {
      nlohmann::ordered_json jp;
      jp["perm"] = c.group_perms[i];
      jp["cycles"] = cycle_notation(c.group_perms[i]);
      std::string word;
      for (std::uint32_t g : c.witness_words[i]) {
        if (!word.empty()) word += ' ';
        word += skel.labels[g];
      }
      jp["witness"] = word;
      perms.push_back(jp);
    }
    jc["permutations"] = perms;
    j["components"].push_back(jc);
  }
  nlohmann::ordered_json summary = nlohmann::ordered_json::array();
  for (auto [deg, name] : report.nontrivial_summary()) {
    summary.push_back(nlohmann::ordered_json::array({deg, name}));
  }
  j["nontrivial"] = summary;
  return j.dump(2) + "\n";
}

}  // namespace tritris

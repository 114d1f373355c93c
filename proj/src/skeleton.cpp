#include "tritris/skeleton.hpp"

#include <algorithm>

#include "tritris/detail/bitset_ops.hpp"
#include "tritris/errors.hpp"

namespace tritris {

using detail::bitset_words;
using detail::equal_row;
using detail::popcount_row;
using detail::set_bit;
using detail::subset_row;
using detail::test_bit;

bool Skeleton::subset(std::uint32_t a, std::uint32_t b) const {
  return subset_row(bits(a), bits(b), words_per_set);
}

std::optional<std::vector<std::uint32_t>> Skeleton::in_word(std::uint32_t node) const {
  if (in_parent[node] == kNone && node != 0) return std::nullopt;
  std::vector<std::uint32_t> word;
  for (std::uint32_t at = node; at != 0; at = in_parent[at]) {
    word.push_back(in_gen[at]);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

ImageSet Skeleton::members(std::uint32_t node) const {
  ImageSet out;
  for (std::uint32_t i = 0; i < num_states; ++i) {
    if (test_bit(bits(node), i)) out.push_back(i);
  }
  return out;
}

std::optional<std::uint32_t> Skeleton::find_node(const ImageSet& set) const {
  std::vector<std::uint64_t> row(words_per_set, 0);
  for (std::uint32_t i : set) {
    if (i >= num_states) return std::nullopt;
    set_bit(row.data(), i);
  }
  std::uint32_t id = node_sets.find(row.data());
  if (id == detail::RowDedup<std::uint64_t>::kNotFound) return std::nullopt;
  return id;
}

std::uint32_t Skeleton::singleton_node(std::uint32_t state) const {
  auto node = find_node({state});
  if (!node) throw InternalError("missing singleton node");
  return *node;
}

Skeleton build_skeleton(const ActionTable& act, std::size_t node_cap) {
  if (act.num_states == 0) throw ValidationError("skeleton needs states");
  if (act.labels.empty()) throw ValidationError("skeleton needs generators");

  Skeleton skel;
  skel.num_states = act.num_states;
  skel.labels = act.labels;
  skel.gen_tables = act.tables;
  skel.words_per_set = bitset_words(act.num_states);
  skel.node_sets = detail::RowDedup<std::uint64_t>(skel.words_per_set, 1024);

  auto intern = [&](const std::uint64_t* row, std::uint32_t parent, std::uint32_t gen) {
    auto [id, inserted] = skel.node_sets.intern(row);
    if (inserted) {
      if (skel.node_sets.size() > node_cap) {
        throw BudgetError("skeleton node cap exceeded", skel.node_sets.size() - 1);
      }
      skel.sizes.push_back(popcount_row(row, skel.words_per_set));
      skel.in_parent.push_back(parent);
      skel.in_gen.push_back(gen);
    }
    return id;
  };

  std::vector<std::uint64_t> row(skel.words_per_set);

  // Node 0: the full state set.
  std::fill(row.begin(), row.end(), 0);
  for (std::uint32_t i = 0; i < act.num_states; ++i) set_bit(row.data(), i);
  intern(row.data(), Skeleton::kNone, 0);

  // Image closure under the generator set-action.  Nodes are processed in
  // id order, so per-generator edge rows can be appended in step.
  skel.edges.assign(act.tables.size(), {});
  for (std::uint32_t node = 0; node < skel.num_nodes(); ++node) {
    for (std::uint32_t g = 0; g < act.tables.size(); ++g) {
      std::fill(row.begin(), row.end(), 0);
      const std::uint64_t* src = skel.bits(node);
      for (std::uint32_t i = 0; i < act.num_states; ++i) {
        if (test_bit(src, i)) set_bit(row.data(), act.tables[g][i]);
      }
      skel.edges[g].push_back(intern(row.data(), node, g));
    }
  }

  // Adjoin singletons not already present as images; they get ids past the
  // closure and are processed for edges in the same ascending order.
  const std::uint32_t closure_count = skel.num_nodes();
  for (std::uint32_t i = 0; i < act.num_states; ++i) {
    std::fill(row.begin(), row.end(), 0);
    set_bit(row.data(), i);
    intern(row.data(), Skeleton::kNone, 0);
  }
  for (std::uint32_t node = closure_count; node < skel.num_nodes(); ++node) {
    const std::uint64_t* src = skel.bits(node);
    std::uint32_t state = 0;
    for (std::uint32_t i = 0; i < act.num_states; ++i) {
      if (test_bit(src, i)) {
        state = i;
        break;
      }
    }
    for (std::uint32_t g = 0; g < act.tables.size(); ++g) {
      std::fill(row.begin(), row.end(), 0);
      set_bit(row.data(), act.tables[g][state]);
      std::uint32_t target = skel.node_sets.find(row.data());
      if (target == detail::RowDedup<std::uint64_t>::kNotFound) {
        throw InternalError("singleton image missing from skeleton");
      }
      skel.edges[g].push_back(target);
    }
  }
  return skel;
}

bool subduction_leq(std::uint32_t a, std::uint32_t b, const Skeleton& skel) {
  // a ⊆ b.w for some generator word w, the empty word included.  Walk the
  // generator edges from b, testing inclusion as we go; sets only shrink
  // along edges, so prune whenever the image gets smaller than a.
  if (a >= skel.num_nodes() || b >= skel.num_nodes()) {
    throw ValidationError("subduction_leq: node out of range");
  }
  std::vector<bool> seen(skel.num_nodes(), false);
  std::vector<std::uint32_t> frontier{b};
  seen[b] = true;
  while (!frontier.empty()) {
    std::uint32_t at = frontier.back();
    frontier.pop_back();
    if (skel.sizes[at] < skel.sizes[a]) continue;
    if (skel.subset(a, at)) return true;
    for (const auto& table : skel.edges) {
      std::uint32_t next = table[at];
      if (!seen[next]) {
        seen[next] = true;
        frontier.push_back(next);
      }
    }
  }
  return false;
}

bool subduction_leq(const ImageSet& a, const ImageSet& b, const Skeleton& skel) {
  auto na = skel.find_node(a);
  auto nb = skel.find_node(b);
  if (!na || !nb) throw ValidationError("subduction_leq: set is not a skeleton node");
  return subduction_leq(*na, *nb, skel);
}

// Iterative Tarjan over the generator-edge graph.
std::pair<std::vector<std::uint32_t>, std::uint32_t> generator_scc(const Skeleton& skel) {
  const std::uint32_t n = skel.num_nodes();
  const std::uint32_t gens = static_cast<std::uint32_t>(skel.edges.size());
  constexpr std::uint32_t kUnset = 0xffffffffu;

  std::vector<std::uint32_t> comp(n, kUnset), index(n, kUnset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::uint32_t next_index = 0, next_comp = 0;

  struct Frame {
    std::uint32_t node;
    std::uint32_t gen;
  };
  std::vector<Frame> call;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    call.push_back({root, 0});
    while (!call.empty()) {
      Frame& f = call.back();
      std::uint32_t v = f.node;
      if (f.gen == 0) {
        index[v] = low[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (f.gen < gens) {
        std::uint32_t w = skel.edges[f.gen][v];
        ++f.gen;
        if (index[w] == kUnset) {
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        while (true) {
          std::uint32_t w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = next_comp;
          if (w == v) break;
        }
        ++next_comp;
      }
      call.pop_back();
      if (!call.empty()) {
        std::uint32_t parent = call.back().node;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return {std::move(comp), next_comp};
}

EquivClassification classify(const Skeleton& skel, HeightConvention convention) {
  auto [comp, num_comps] = generator_scc(skel);

  EquivClassification cls;
  cls.convention = convention;
  cls.class_of = std::move(comp);
  cls.representative.assign(num_comps, Skeleton::kNone);
  cls.class_members.assign(num_comps, {});
  for (std::uint32_t node = 0; node < skel.num_nodes(); ++node) {
    std::uint32_t c = cls.class_of[node];
    cls.class_members[c].push_back(node);
    cls.representative[c] = std::min(cls.representative[c], node);
  }

  // Arcs between classes: generator images (from every member) plus the
  // representative's tiles.  Together these realize every covering pair of
  // the class order, and every arc strictly descends in that order, so the
  // arc graph is acyclic.  Tarjan ids are reverse-topological only for the
  // generator arcs; tile arcs may point at later ids, so heights come from
  // a memoized longest-path pass instead of one id-ordered sweep.
  std::vector<std::vector<std::uint32_t>> below(num_comps);
  for (std::uint32_t c = 0; c < num_comps; ++c) {
    if (skel.sizes[cls.representative[c]] == 1) continue;  // height pinned
    for (std::uint32_t node : cls.class_members[c]) {
      for (const auto& table : skel.edges) {
        std::uint32_t d = cls.class_of[table[node]];
        if (d != c) below[c].push_back(d);
      }
    }
    for (std::uint32_t t : tiles(cls.representative[c], skel, TileMode::Maximal)) {
      std::uint32_t d = cls.class_of[t];
      if (d != c) below[c].push_back(d);
    }
    std::sort(below[c].begin(), below[c].end());
    below[c].erase(std::unique(below[c].begin(), below[c].end()), below[c].end());
  }

  constexpr std::uint32_t kUnresolved = 0xffffffffu;
  cls.heights.assign(num_comps, kUnresolved);
  for (std::uint32_t c = 0; c < num_comps; ++c) {
    // Singleton classes are pinned to 0: chains of singletons do not count
    // as decomposition levels.
    if (skel.sizes[cls.representative[c]] == 1) cls.heights[c] = 0;
  }
  std::vector<std::uint32_t> work;
  for (std::uint32_t root = 0; root < num_comps; ++root) {
    if (cls.heights[root] != kUnresolved) continue;
    work.push_back(root);
    while (!work.empty()) {
      std::uint32_t c = work.back();
      if (cls.heights[c] != kUnresolved) {
        work.pop_back();
        continue;
      }
      bool ready = true;
      for (std::uint32_t d : below[c]) {
        if (cls.heights[d] == kUnresolved) {
          work.push_back(d);
          ready = false;
        }
      }
      if (!ready) continue;
      std::uint32_t h = 0;
      for (std::uint32_t d : below[c]) h = std::max(h, cls.heights[d] + 1);
      cls.heights[c] = h;
      work.pop_back();
    }
  }

  if (convention == HeightConvention::NodeCount) {
    for (std::uint32_t& h : cls.heights) ++h;
  }
  return cls;
}

namespace {

std::vector<std::uint32_t> strict_subsets(std::uint32_t rep, const Skeleton& skel) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t node = 0; node < skel.num_nodes(); ++node) {
    if (node != rep && skel.sizes[node] < skel.sizes[rep] && skel.subset(node, rep)) {
      out.push_back(node);
    }
  }
  return out;
}

std::vector<std::uint32_t> tiles_maximal(std::uint32_t rep, const Skeleton& skel) {
  std::vector<std::uint32_t> below = strict_subsets(rep, skel);
  std::sort(below.begin(), below.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (skel.sizes[a] != skel.sizes[b]) return skel.sizes[a] > skel.sizes[b];
    return a < b;
  });
  // Size-descending scan: a set is maximal iff it fits in no earlier
  // maximal set.
  std::vector<std::uint32_t> maximal;
  for (std::uint32_t d : below) {
    bool covered = false;
    for (std::uint32_t m : maximal) {
      if (skel.sizes[d] < skel.sizes[m] && skel.subset(d, m)) {
        covered = true;
        break;
      }
    }
    if (!covered) maximal.push_back(d);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

std::vector<std::uint32_t> tiles_strict(std::uint32_t rep, const Skeleton& skel) {
  const std::uint32_t n = skel.num_nodes();
  if (static_cast<std::uint64_t>(n) * n > std::uint64_t(400'000'000) * 8) {
    throw BudgetError("strict tile mode needs all-pairs reachability; skeleton too large", n);
  }
  // reach[b] = nodes reachable from b via generator edges; a ≤ b iff a is
  // a subset of some node in reach[b].
  const std::size_t words = bitset_words(n);
  std::vector<std::uint64_t> reach(static_cast<std::size_t>(n) * words, 0);
  for (std::uint32_t b = 0; b < n; ++b) {
    std::uint64_t* row = reach.data() + static_cast<std::size_t>(b) * words;
    std::vector<std::uint32_t> frontier{b};
    set_bit(row, b);
    while (!frontier.empty()) {
      std::uint32_t at = frontier.back();
      frontier.pop_back();
      for (const auto& table : skel.edges) {
        std::uint32_t next = table[at];
        if (!test_bit(row, next)) {
          set_bit(row, next);
          frontier.push_back(next);
        }
      }
    }
  }
  auto leq = [&](std::uint32_t a, std::uint32_t b) {
    const std::uint64_t* row = reach.data() + static_cast<std::size_t>(b) * words;
    for (std::uint32_t c = 0; c < n; ++c) {
      if (test_bit(row, c) && skel.sizes[a] <= skel.sizes[c] && skel.subset(a, c)) {
        return true;
      }
    }
    return false;
  };

  std::vector<std::uint32_t> below = strict_subsets(rep, skel);
  std::vector<std::uint32_t> out;
  for (std::uint32_t a : below) {
    bool blocked = false;
    for (std::uint32_t z = 0; z < n && !blocked; ++z) {
      if (z == a || z == rep) continue;
      if (leq(a, z) && leq(z, rep)) blocked = true;
    }
    if (!blocked) out.push_back(a);
  }
  return out;
}

}  // namespace

std::vector<std::uint32_t> tiles(std::uint32_t rep, const Skeleton& skel, TileMode mode) {
  if (rep >= skel.num_nodes()) throw ValidationError("tiles: node out of range");
  if (skel.sizes[rep] < 2) throw ValidationError("tiles: representative is a singleton");
  return mode == TileMode::Maximal ? tiles_maximal(rep, skel) : tiles_strict(rep, skel);
}

}  // namespace tritris

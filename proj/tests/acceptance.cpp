// Acceptance checks for the full pipeline: state spaces, semigroup
// enumeration, skeleton heights, and holonomy decomposition on the boards
// with independently known answers.  One line per criterion; exits nonzero
// if any of them fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#ifndef TRITRIS_DATA_DIR
#define TRITRIS_DATA_DIR "data"
#endif

#include "naive_sim.hpp"
#include "tritris/cache.hpp"
#include "tritris/errors.hpp"
#include "tritris/holonomy.hpp"
#include "tritris/semigroup.hpp"
#include "tritris/words.hpp"

using namespace tritris;

namespace {

double now_seconds() {
  using clock = std::chrono::steady_clock;
  static const clock::time_point start = clock::now();
  return std::chrono::duration<double>(clock::now() - start).count();
}

GameConfig make_config(int n, int k, Variant variant,
                       std::vector<std::string> labels = {"LS", "RS", "LUS", "RUS",
                                                          "V"}) {
  GameConfig c;
  c.n = n;
  c.k = k;
  c.variant = variant;
  c.pieces = pieces_by_labels(triomino_catalog(), labels);
  return c;
}

// Everything expensive, built once and shared between criteria.
struct Lab {
  HeightConvention convention = HeightConvention::StrictSteps;

  struct Instance {
    StateSpace space;
    ActionTable act;
    std::optional<Skeleton> skel;
    std::optional<EquivClassification> cls;
    std::optional<DecompositionReport> report;
    std::optional<SemigroupEnumeration> sg;
  };
  std::map<std::string, Instance> instances;

  Instance& get(const std::string& name, const GameConfig& config) {
    auto it = instances.find(name);
    if (it == instances.end()) {
      Instance inst;
      inst.space = enumerate_state_space(config);
      inst.act = action_table(inst.space);
      it = instances.emplace(name, std::move(inst)).first;
    }
    return it->second;
  }

  // Skeleton without classification; enough for the loop-permutation
  // aperiodicity test, and the only affordable form on 3x5 standard.
  const Skeleton& skeleton_raw(Instance& inst) {
    if (!inst.skel) inst.skel = build_skeleton(inst.act);
    return *inst.skel;
  }

  const Skeleton& skeleton(Instance& inst) {
    skeleton_raw(inst);
    if (!inst.cls) inst.cls = classify(*inst.skel, convention);
    return *inst.skel;
  }

  const EquivClassification& classes(Instance& inst) {
    skeleton(inst);
    return *inst.cls;
  }

  const DecompositionReport& report(Instance& inst) {
    if (!inst.report) {
      skeleton(inst);
      inst.report = decomposition_report(*inst.skel, *inst.cls);
    }
    return *inst.report;
  }

  const SemigroupEnumeration& semigroup(Instance& inst) {
    if (!inst.sg) inst.sg = enumerate_semigroup(inst.act);
    return *inst.sg;
  }
};

struct Criterion {
  std::vector<std::string> notes;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) ok = false;
    notes.push_back(std::string(cond ? "    ok: " : "    FAIL: ") + what);
  }
  void note(const std::string& what) { notes.push_back("    " + what); }
};

std::string fmt_pairs(const std::vector<std::pair<std::uint32_t, std::string>>& v) {
  std::string out = "{";
  for (const auto& [d, n] : v) {
    if (out.size() > 1) out += ", ";
    out += "(" + std::to_string(d) + "," + n + ")";
  }
  return out + "}";
}

// Re-derive the tile permutation a witness word induces, straight from the
// state tables; nullopt when the images leave the tile family.
std::optional<Perm> induced_perm(const HolonomyComponent& comp,
                                 const std::vector<std::uint32_t>& word,
                                 const ActionTable& act) {
  std::map<ImageSet, std::uint32_t> tile_index;
  for (std::size_t i = 0; i < comp.tiles.size(); ++i) {
    tile_index[comp.tiles[i]] = static_cast<std::uint32_t>(i);
  }
  Perm p(comp.tiles.size());
  for (std::size_t i = 0; i < comp.tiles.size(); ++i) {
    std::set<std::uint32_t> image;
    for (std::uint32_t s : comp.tiles[i]) {
      std::uint32_t v = s;
      for (std::uint32_t g : word) v = act.tables[g][v];
      image.insert(v);
    }
    auto it = tile_index.find(ImageSet(image.begin(), image.end()));
    if (it == tile_index.end()) return std::nullopt;
    p[i] = it->second;
  }
  if (!is_permutation(p)) return std::nullopt;
  return p;
}

bool check_witnesses(const DecompositionReport& rep, const ActionTable& act,
                     Criterion& c, const std::string& tag) {
  std::size_t checked = 0;
  for (const auto& comp : rep.components) {
    for (std::size_t i = 0; i < comp.group_perms.size(); ++i) {
      auto p = induced_perm(comp, comp.witness_words[i], act);
      if (!p || *p != comp.group_perms[i]) {
        c.expect(false, tag + ": witness " + std::to_string(i) + " of component at node " +
                            std::to_string(comp.rep_node) + " does not reproduce its permutation");
        return false;
      }
      ++checked;
    }
  }
  c.expect(true, tag + ": all " + std::to_string(checked) +
                     " holonomy witness words reproduce their permutations");
  return true;
}

// ---- criteria ----

Criterion criterion1(Lab& lab) {
  Criterion c;

  double t0 = now_seconds();
  auto& i33 = lab.get("3x3s", make_config(3, 3, Variant::Standard));
  c.expect(i33.space.size() == 35, "3x3 standard |X| = 35 (got " +
                                       std::to_string(i33.space.size()) + ")");
  const auto& sg33 = lab.semigroup(i33);
  c.expect(sg33.size() == 2056,
           "3x3 standard |S| = 2056 (got " + std::to_string(sg33.size()) + ")");
  const auto h33 = lab.classes(i33).height_of_x();
  c.expect(h33 == 13, "3x3 standard h(X) = 13 (got " + std::to_string(h33) + ")");
  double t33 = now_seconds() - t0;
  c.expect(t33 < 10.0, "3x3 runtime under 10 s (took " + std::to_string(t33) + " s)");

  t0 = now_seconds();
  auto& i35 = lab.get("3x5s", make_config(3, 5, Variant::Standard));
  c.expect(i35.space.size() == 709, "3x5 standard |X| = 709 (got " +
                                        std::to_string(i35.space.size()) + ")");
  double t35 = now_seconds() - t0;
  c.expect(t35 < 60.0, "3x5 state count under 1 min (took " + std::to_string(t35) + " s)");

  t0 = now_seconds();
  auto& i34 = lab.get("3x4s", make_config(3, 4, Variant::Standard));
  c.expect(i34.space.size() == 135, "3x4 standard |X| = 135 (got " +
                                        std::to_string(i34.space.size()) + ")");
  if (i34.space.size() != 135) {
    // Corroborate the measured count from two independent angles so the miss
    // is attributable: a brute-force replay of the rules, and the periodic
    // variant, whose space differs from the standard one only by swapping the
    // absorbing end state for the empty board (count exactly one lower).
    const auto walk = naive::explore(make_config(3, 4, Variant::Standard), 12);
    const auto per34 = enumerate_state_space(make_config(3, 4, Variant::Periodic));
    c.note("note: brute-force replay reaches " + std::to_string(walk.states.size()) +
           " states and periodic 3x4 has " + std::to_string(per34.size()) +
           "; both consistent with the measured count, not with 135");
    c.note("note: |S| and h(X) below are checked against their expected values"
           " on the measured space");
  }
  const auto& sg34 = lab.semigroup(i34);
  c.expect(sg34.size() == 259726,
           "3x4 standard |S| = 259726 (got " + std::to_string(sg34.size()) + ")");
  const auto h34 = lab.classes(i34).height_of_x();
  c.expect(h34 == 32, "3x4 standard h(X) = 32 (got " + std::to_string(h34) + ")");
  double t34 = now_seconds() - t0;
  c.expect(t34 < 1800.0, "3x4 runtime under 30 min (took " + std::to_string(t34) + " s)");
  c.note("height convention: strict subduction steps, singleton classes at 0");
  return c;
}

Criterion criterion2(Lab& lab) {
  Criterion c;
  auto& i33 = lab.get("3x3s", make_config(3, 3, Variant::Standard));
  auto& i34 = lab.get("3x4s", make_config(3, 4, Variant::Standard));
  auto& i35 = lab.get("3x5s", make_config(3, 5, Variant::Standard));

  c.expect(semigroup_is_aperiodic_elementwise(lab.semigroup(i33)),
           "3x3 standard aperiodic, element-wise");
  c.expect(semigroup_is_aperiodic_elementwise(lab.semigroup(i34)),
           "3x4 standard aperiodic, element-wise");
  c.expect(aperiodic_via_holonomy(lab.report(i33)), "3x3 standard aperiodic, holonomy");
  c.expect(aperiodic_via_holonomy(lab.report(i34)), "3x4 standard aperiodic, holonomy");
  // The component-by-component form and the skeleton loop-permutation form
  // must agree where both are affordable.
  c.expect(aperiodic_via_holonomy(lab.skeleton_raw(i33)) ==
               aperiodic_via_holonomy(lab.report(i33)),
           "3x3 standard: skeleton test agrees with the component report");
  c.expect(aperiodic_via_holonomy(lab.skeleton_raw(i34)) ==
               aperiodic_via_holonomy(lab.report(i34)),
           "3x4 standard: skeleton test agrees with the component report");
  const double t0 = now_seconds();
  const std::uint32_t nodes35 = lab.skeleton_raw(i35).num_nodes();
  const bool ap35 = aperiodic_via_holonomy(lab.skeleton_raw(i35));
  c.expect(ap35, "3x5 standard aperiodic, holonomy (loop-permutation form, " +
                     std::to_string(nodes35) + " skeleton nodes, " +
                     std::to_string(now_seconds() - t0) + " s)");
  i35.skel.reset();  // by far the largest structure; later criteria don't need it
  if (!ap35) {
    // Corroborate the miss with a concrete witness, recomputed here from
    // scratch: the bundled 15-token word stabilizes a three-state image
    // set as a transposition, so its powers alternate forever.  The same
    // period shows up on the engine tables and on the independent
    // brute-force replay of the rules.
    GameConfig cfg35 = make_config(3, 5, Variant::Standard);
    std::ifstream in(std::string(TRITRIS_DATA_DIR) + "/words-3x5-c2.txt");
    const auto words = parse_word_file(in, cfg35);
    if (words.size() == 1) {
      const auto t = evaluate_word(words[0], i35.space);
      const bool alternates =
          power(t, 3).map == t.map && power(t, 2).map != t.map;
      c.note(std::string("note: bundled witness word on the engine tables: ") +
             (alternates ? "t^3 = t with t^2 != t (a two-element group)"
                         : "does not alternate"));
      const auto walk = naive::explore(cfg35, 64);
      bool naive_alternates = false;
      if (walk.states.size() == i35.space.size()) {
        std::vector<int> w;
        const auto events = all_events(cfg35);
        for (const Event& e : words[0].tokens) {
          for (std::size_t g = 0; g < events.size(); ++g) {
            if (events[g].piece == e.piece && events[g].column == e.column) {
              w.push_back(static_cast<int>(g));
            }
          }
        }
        const int n = static_cast<int>(walk.states.size());
        std::vector<int> tn(n), t2n(n), t3n(n);
        for (int s = 0; s < n; ++s) {
          int at = s;
          for (int g : w) at = walk.transitions.at({at, g});
          tn[s] = at;
        }
        for (int s = 0; s < n; ++s) t2n[s] = tn[tn[s]];
        for (int s = 0; s < n; ++s) t3n[s] = tn[t2n[s]];
        naive_alternates = t3n == tn && t2n != tn;
      }
      c.note(std::string("note: same word on the brute-force simulator: ") +
             (naive_alternates ? "alternates identically"
                               : "no alternation reproduced"));
    }
  }
  return c;
}

Criterion criterion3(Lab& lab) {
  Criterion c;

  auto& i33p = lab.get("3x3p", make_config(3, 3, Variant::Periodic));
  c.expect(i33p.space.size() == 34, "3x3 periodic |X| = 34 (got " +
                                        std::to_string(i33p.space.size()) + ")");
  const auto& sg = lab.semigroup(i33p);
  c.expect(sg.size() == 118637,
           "3x3 periodic |S| = 118637 (got " + std::to_string(sg.size()) + ")");
  const auto got33 = lab.report(i33p).nontrivial_summary();
  const std::vector<std::pair<std::uint32_t, std::string>> want33 = {
      {2, "C2"}, {3, "S3"}, {4, "C2xC2"}};
  c.expect(got33 == want33, "3x3 periodic nontrivial components " + fmt_pairs(want33) +
                                " (got " + fmt_pairs(got33) + ")");

  auto& i34r =
      lab.get("3x4r", make_config(3, 4, Variant::Periodic, {"RS", "LUS", "RUS", "V"}));
  c.expect(i34r.space.size() == 116, "3x4 reduced periodic |X| = 116 (got " +
                                         std::to_string(i34r.space.size()) + ")");
  const auto got34 = lab.report(i34r).nontrivial_summary();
  const std::vector<std::pair<std::uint32_t, std::string>> want34 = {
      {2, "C2"}, {3, "S3"}, {4, "C2"}, {4, "S4"}, {5, "S5"}};
  c.expect(got34 == want34, "3x4 reduced nontrivial components " + fmt_pairs(want34) +
                                " (got " + fmt_pairs(got34) + ")");
  c.expect(!i34r.sg.has_value(),
           "3x4 reduced computed without semigroup enumeration");
  return c;
}

Criterion criterion4(Lab& lab) {
  Criterion c;
  auto& i34r =
      lab.get("3x4r", make_config(3, 4, Variant::Periodic, {"RS", "LUS", "RUS", "V"}));
  const auto& rep = lab.report(i34r);

  const HolonomyComponent* s5 = nullptr;
  for (const auto& comp : rep.components) {
    if (comp.tiles.size() == 5 && comp.identified.order == 120) s5 = &comp;
  }
  if (!s5) {
    c.expect(false, "no degree-5 component of order 120 found");
    return c;
  }
  c.expect(s5->identified.name == "S5",
           "degree-5 component identified as S5 (got " + s5->identified.name + ")");
  const std::map<std::uint64_t, std::uint64_t> want_orders = {
      {1, 1}, {2, 25}, {3, 20}, {4, 30}, {5, 24}, {6, 20}};
  c.expect(s5->identified.element_order_multiset == want_orders,
           "element-order multiset {1:1, 2:25, 3:20, 4:30, 5:24, 6:20}");

  const Perm* five_cycle = nullptr;
  const Perm* three_two = nullptr;
  std::size_t five_word = 0, three_two_word = 0;
  for (std::size_t i = 0; i < s5->group_perms.size(); ++i) {
    const auto lens = cycle_lengths(s5->group_perms[i]);
    if (!five_cycle && lens == std::vector<std::uint32_t>{5}) {
      five_cycle = &s5->group_perms[i];
      five_word = i;
    }
    if (!three_two && lens == std::vector<std::uint32_t>{3, 2}) {
      three_two = &s5->group_perms[i];
      three_two_word = i;
    }
  }
  c.expect(five_cycle != nullptr, "a witnessed 5-cycle exists");
  c.expect(three_two != nullptr, "a witnessed (3,2) permutation exists");
  if (five_cycle && three_two) {
    c.note("5-cycle witness word length " +
           std::to_string(s5->witness_words[five_word].size()) +
           ", (3,2) witness word length " +
           std::to_string(s5->witness_words[three_two_word].size()));
    const auto closure = generate_group({*five_cycle, *three_two});
    c.expect(closure.size() == 120,
             "the two witnessed permutations generate the full group (closure " +
                 std::to_string(closure.size()) + ")");
  }

  // Cross-check against the bundled example words for this board: the first
  // cycles the empty state through five states, the second permutes the same
  // five with cycle type (3,2), and together they generate Sym(5).
  std::ifstream fixture(std::string(TRITRIS_DATA_DIR) + "/words-3x4-reduced.txt");
  if (fixture.good()) {
    const auto words = parse_word_file(fixture, i34r.space.config);
    if (words.size() == 2) {
      const auto t1 = evaluate_word(words[0], i34r.space);
      const auto t2 = evaluate_word(words[1], i34r.space);
      std::vector<std::uint32_t> five{0};
      for (std::uint32_t s = t1.map[0]; s != 0 && five.size() <= 6; s = t1.map[s]) {
        five.push_back(s);
      }
      auto on_five = [&](const Transformation& t) -> std::optional<Perm> {
        std::vector<std::uint32_t> map(five.size());
        std::set<std::uint32_t> hit;
        for (std::size_t i = 0; i < five.size(); ++i) {
          const auto it = std::find(five.begin(), five.end(), t.map[five[i]]);
          if (it == five.end()) return std::nullopt;
          map[i] = static_cast<std::uint32_t>(it - five.begin());
          hit.insert(map[i]);
        }
        if (hit.size() != five.size()) return std::nullopt;
        return Perm(map);
      };
      c.expect(five.size() == 5, "fixture word 1 orbits the empty state through 5 states");
      std::optional<Perm> p1, p2;
      if (five.size() == 5) {
        p1 = on_five(t1);
        p2 = on_five(t2);
      }
      c.expect(p1 && cycle_type_string(*p1) == "5", "fixture word 1 acts as a 5-cycle");
      c.expect(p2 && cycle_type_string(*p2) == "3,2",
               "fixture word 2 acts with cycle type (3,2) on the same states");
      if (p1 && p2) {
        c.expect(generate_group({*p1, *p2}).size() == 120,
                 "fixture words generate the full symmetric group on those states");
      }
    } else {
      c.expect(false, "fixture words-3x4-reduced.txt should hold 2 words");
    }
  } else {
    c.expect(false, "fixture words-3x4-reduced.txt missing");
  }
  return c;
}

Criterion criterion5(Lab& lab) {
  Criterion c;

  // Flip-flop fixture.
  const auto ff = flip_flop();
  const auto ff_sg = enumerate_semigroup(ff);
  c.expect(ff_sg.size() == 3, "flip-flop |S| = 3");
  const auto ff_report = decomposition_report(ff);
  c.expect(semigroup_is_aperiodic_elementwise(ff_sg) && aperiodic_via_holonomy(ff_report),
           "flip-flop aperiodic by both methods");
  bool ff_trivial = true;
  for (const auto& comp : ff_report.components) {
    ff_trivial = ff_trivial && comp.identified.name == "trivial";
  }
  c.expect(ff_trivial, "flip-flop holonomy trivial");

  // Subduction order properties, sampled.
  auto& i33p = lab.get("3x3p", make_config(3, 3, Variant::Periodic));
  const auto& skel = lab.skeleton(i33p);
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  auto next_node = [&]() {
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    return static_cast<std::uint32_t>(seed % skel.num_nodes());
  };
  bool reflexive = true;
  for (int i = 0; i < 50; ++i) {
    const auto a = next_node();
    reflexive = reflexive && subduction_leq(a, a, skel);
  }
  c.expect(reflexive, "subduction reflexive on 50 sampled nodes");
  int transitive_hits = 0;
  bool transitive = true;
  for (int i = 0; i < 500 && transitive_hits < 50; ++i) {
    const auto a = next_node(), b = next_node(), x = next_node();
    if (subduction_leq(a, b, skel) && subduction_leq(b, x, skel)) {
      transitive = transitive && subduction_leq(a, x, skel);
      ++transitive_hits;
    }
  }
  c.expect(transitive && transitive_hits > 0,
           "subduction transitive on " + std::to_string(transitive_hits) + " sampled chains");

  // Tile covering on every computed component, all instances with reports.
  std::size_t components = 0;
  bool covering = true;
  for (auto* inst : {&i33p, &lab.get("3x3s", make_config(3, 3, Variant::Standard)),
                     &lab.get("3x4r", make_config(3, 4, Variant::Periodic,
                                                  {"RS", "LUS", "RUS", "V"}))}) {
    for (const auto& comp : lab.report(*inst).components) {
      std::set<std::uint32_t> covered;
      for (const auto& t : comp.tiles) covered.insert(t.begin(), t.end());
      covering = covering &&
                 ImageSet(covered.begin(), covered.end()) == comp.representative;
      ++components;
    }
  }
  c.expect(covering, "tiles cover the representative on all " +
                         std::to_string(components) + " components");

  // Semigroup witness soundness, every element.
  auto& i33s = lab.get("3x3s", make_config(3, 3, Variant::Standard));
  const auto& sg = lab.semigroup(i33s);
  bool witnesses_ok = true;
  for (std::uint32_t id = 0; id < sg.size() && witnesses_ok; ++id) {
    Transformation t = identity_transformation(i33s.act.num_states);
    for (std::uint32_t g : sg.witness(id)) {
      Transformation gen;
      gen.map = i33s.act.tables[g];
      t = compose(t, gen);
    }
    witnesses_ok = t == sg.transformation(id);
  }
  c.expect(witnesses_ok, "all " + std::to_string(sg.size()) +
                             " semigroup witness words evaluate to their elements");

  // Holonomy witness soundness, every permutation.
  check_witnesses(lab.report(i33p), i33p.act, c, "3x3 periodic");
  check_witnesses(lab.report(lab.get("3x4r", make_config(3, 4, Variant::Periodic,
                                                         {"RS", "LUS", "RUS", "V"}))),
                  lab.get("3x4r", make_config(3, 4, Variant::Periodic,
                                              {"RS", "LUS", "RUS", "V"}))
                      .act,
                  c, "3x4 reduced");

  // Associativity on random triples.
  bool assoc = true;
  for (int i = 0; i < 300; ++i) {
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    const auto a = sg.transformation(seed % sg.size());
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    const auto b = sg.transformation(seed % sg.size());
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    const auto x = sg.transformation(seed % sg.size());
    assoc = assoc && compose(compose(a, b), x) == compose(a, compose(b, x));
  }
  c.expect(assoc, "composition associative on 300 random triples");

  // Element-wise versus holonomy aperiodicity on the fully computable
  // instances.
  auto& i34s = lab.get("3x4s", make_config(3, 4, Variant::Standard));
  struct Named {
    const char* name;
    bool elementwise;
    bool holonomy;
  };
  const Named agreements[] = {
      {"flip-flop", semigroup_is_aperiodic_elementwise(ff_sg),
       aperiodic_via_holonomy(ff_report)},
      {"3x3 standard", semigroup_is_aperiodic_elementwise(lab.semigroup(i33s)),
       aperiodic_via_holonomy(lab.report(i33s))},
      {"3x4 standard", semigroup_is_aperiodic_elementwise(lab.semigroup(i34s)),
       aperiodic_via_holonomy(lab.report(i34s))},
      {"3x3 periodic", semigroup_is_aperiodic_elementwise(lab.semigroup(i33p)),
       aperiodic_via_holonomy(lab.report(i33p))},
  };
  for (const auto& a : agreements) {
    c.expect(a.elementwise == a.holonomy,
             std::string("aperiodicity methods agree on ") + a.name + " (" +
                 (a.elementwise ? "true" : "false") + ")");
  }
  return c;
}

Criterion criterion6(Lab&) {
  Criterion c;
  int boards = 0;
  for (int n = 1; n <= 2; ++n) {
    for (int k = 1; k <= 2; ++k) {
      for (Variant variant : {Variant::Standard, Variant::Periodic}) {
        GameConfig cfg;
        cfg.n = n;
        cfg.k = k;
        cfg.variant = variant;
        cfg.pieces = pieces_by_labels(triomino_catalog(), {"V"});
        const auto space = enumerate_state_space(cfg);
        const auto walk = naive::explore(cfg, 8);

        const std::string tag = std::to_string(n) + "x" + std::to_string(k) +
                                (variant == Variant::Standard ? " standard" : " periodic");
        bool ok = walk.states.size() == space.size();
        auto find_state = [&](const BoardState& s) -> std::optional<std::uint32_t> {
          for (std::uint32_t i = 0; i < space.size(); ++i) {
            if (space.states[i] == s) return i;
          }
          return std::nullopt;
        };
        for (const auto& [from_event, to] : walk.transitions) {
          const auto [from, ev] = from_event;
          const auto a = find_state(walk.states[from]);
          const auto b = find_state(walk.states[to]);
          ok = ok && a && b && space.tables[ev][*a] == *b;
        }
        c.expect(ok, tag + ": " + std::to_string(walk.states.size()) + " states, " +
                         std::to_string(walk.transitions.size()) +
                         " transitions match the tables");
        ++boards;
      }
    }
  }
  c.note(std::to_string(boards) + " board/variant combinations, piece V, depth 8");
  return c;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Criterion (*run)(Lab&);
  };
  const Entry entries[] = {
      {"standard-variant counts and heights", criterion1},
      {"aperiodicity by both methods", criterion2},
      {"periodic-variant structure", criterion3},
      {"S5 component verification", criterion4},
      {"algebra property suites", criterion5},
      {"brute-force engine oracle", criterion6},
  };

  Lab lab;
  int failures = 0;
  for (std::size_t i = 0; i < std::size(entries); ++i) {
    const double t0 = now_seconds();
    Criterion result;
    std::string error;
    try {
      result = entries[i].run(lab);
    } catch (const std::exception& e) {
      result.ok = false;
      error = e.what();
    }
    const double dt = now_seconds() - t0;
    std::printf("AC%zu %s: %s (%.1f s)\n", i + 1, entries[i].name,
                result.ok ? "PASS" : "FAIL", dt);
    for (const auto& n : result.notes) std::printf("%s\n", n.c_str());
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
    std::fflush(stdout);
    if (!result.ok) ++failures;
  }
  if (failures > 0) {
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}

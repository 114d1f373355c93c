#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "tritris/cache.hpp"
#include "tritris/errors.hpp"
#include "tritris/holonomy.hpp"
#include "tritris/kernels.hpp"
#include "tritris/semigroup.hpp"
#include "tritris/words.hpp"

namespace {

using nlohmann::ordered_json;
using namespace tritris;

struct CommonOpts {
  std::string board = "3x3";
  std::string pieces = "LS,RS,LUS,RUS,V";
  std::string variant = "standard";
  std::string overflow = "pre-clear";
  std::string catalog = "triomino";
  std::string catalog_file;
  std::string format = "text";
  std::string cache_dir;
  std::size_t max_states = 1'000'000;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--board", o.board, "Board as NxK (columns x rows)");
  cmd->add_option("--pieces", o.pieces, "Comma-separated piece labels");
  cmd->add_option("--variant", o.variant, "Game variant")
      ->check(CLI::IsMember({"standard", "periodic"}));
  cmd->add_option("--overflow", o.overflow, "Overflow policy")
      ->check(CLI::IsMember({"post-clear", "pre-clear"}));
  cmd->add_option("--catalog", o.catalog, "Piece catalog")
      ->check(CLI::IsMember({"triomino", "tetromino", "file"}));
  cmd->add_option("--catalog-file", o.catalog_file, "Catalog file when --catalog=file");
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--cache-dir", o.cache_dir,
                  "Cache directory (also via TRITRIS_CACHE_DIR); empty disables caching");
  cmd->add_option("--max-states", o.max_states, "State enumeration cap");
}

std::vector<PieceShape> resolve_catalog(const CommonOpts& o) {
  if (o.catalog == "triomino") return triomino_catalog();
  if (o.catalog == "tetromino") return tetromino_catalog();
  if (o.catalog_file.empty()) {
    throw ValidationError("--catalog=file requires --catalog-file");
  }
  std::ifstream in(o.catalog_file);
  if (!in) throw ValidationError("cannot read catalog file " + o.catalog_file);
  return parse_piece_catalog(in);
}

GameConfig make_config(const CommonOpts& o) {
  GameConfig config;
  auto x = o.board.find('x');
  if (x == std::string::npos) throw ValidationError("--board must look like 3x4");
  try {
    config.n = std::stoi(o.board.substr(0, x));
    config.k = std::stoi(o.board.substr(x + 1));
  } catch (const std::exception&) {
    throw ValidationError("--board must look like 3x4");
  }
  config.variant = o.variant == "standard" ? Variant::Standard : Variant::Periodic;
  config.overflow =
      o.overflow == "post-clear" ? OverflowPolicy::PostClear : OverflowPolicy::PreClear;

  std::vector<std::string> labels;
  std::stringstream ss(o.pieces);
  std::string label;
  while (std::getline(ss, label, ',')) {
    if (!label.empty()) labels.push_back(label);
  }
  config.pieces = pieces_by_labels(resolve_catalog(o), labels);
  validate_config(config);
  return config;
}

std::optional<std::filesystem::path> cache_dir(const CommonOpts& o) {
  if (!o.cache_dir.empty()) return std::filesystem::path(o.cache_dir);
  if (const char* env = std::getenv("TRITRIS_CACHE_DIR"); env && *env) {
    return std::filesystem::path(env);
  }
  return std::nullopt;
}

StateSpace get_space(const CommonOpts& o, const GameConfig& config) {
  EnumerateOptions opts;
  opts.max_states = o.max_states;
  if (auto dir = cache_dir(o)) return enumerate_or_load(config, opts, *dir);
  return enumerate_state_space(config, opts);
}

HeightConvention parse_convention(const std::string& s) {
  return s == "node-count" ? HeightConvention::NodeCount : HeightConvention::StrictSteps;
}

TileMode parse_tile_mode(const std::string& s) {
  return s == "strict" ? TileMode::Strict : TileMode::Maximal;
}

void write_or_print(const std::string& path, const std::string& data) {
  if (path == "-") {
    std::cout << data;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write " + path);
  out << data;
}

int cmd_enumerate(const CommonOpts& o) {
  GameConfig config = make_config(o);
  StateSpace space = get_space(o, config);
  if (o.format == "json") {
    ordered_json j;
    j["states"] = space.size();
    j["generators"] = space.generators.size();
    j["has_end_state"] = space.end_index.has_value();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "|X| = " << space.size()
              << ", generators = " << space.generators.size() << "\n";
  }
  return 0;
}

int cmd_semigroup(const CommonOpts& o, std::size_t max_elements,
                  std::size_t memory_budget_mb) {
  GameConfig config = make_config(o);
  StateSpace space = get_space(o, config);
  SemigroupOptions opts;
  opts.element_cap = max_elements;
  opts.memory_budget_bytes = memory_budget_mb << 20;
  SemigroupEnumeration sg = enumerate_semigroup(action_table(space), opts);
  if (auto dir = cache_dir(o)) {
    save_semigroup(semigroup_cache_path(*dir, config), sg, config_hash(config));
  }
  if (o.format == "json") {
    ordered_json j;
    j["states"] = space.size();
    j["elements"] = sg.size();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "|S| = " << sg.size() << "\n";
  }
  return 0;
}

int cmd_aperiodic(const CommonOpts& o, const std::string& method) {
  GameConfig config = make_config(o);
  StateSpace space = get_space(o, config);
  bool aperiodic = false;
  if (method == "element") {
    SemigroupEnumeration sg = enumerate_semigroup(action_table(space));
    aperiodic = semigroup_is_aperiodic_elementwise(sg);
  } else {
    // Loop-permutation test on the skeleton; no per-component searches, so
    // this handles boards whose full decomposition is out of reach.
    aperiodic = aperiodic_via_holonomy(build_skeleton(action_table(space)));
  }
  if (o.format == "json") {
    ordered_json j;
    j["method"] = method;
    j["aperiodic"] = aperiodic;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "aperiodic (" << method << "): " << (aperiodic ? "true" : "false")
              << "\n";
  }
  return 0;
}

int cmd_holonomy(const CommonOpts& o, const std::string& convention,
                 const std::string& tile_mode, std::size_t budget,
                 bool with_semigroup, const std::string& dot_path,
                 const std::string& csv_path) {
  GameConfig config = make_config(o);
  StateSpace space = get_space(o, config);
  ActionTable act = action_table(space);

  ReportOptions opts;
  opts.convention = parse_convention(convention);
  opts.holonomy.search_budget = budget;
  opts.holonomy.tile_mode = parse_tile_mode(tile_mode);

  Skeleton skel = build_skeleton(act, opts.node_cap);
  EquivClassification cls = classify(skel, opts.convention);
  DecompositionReport report;
  report.num_states = act.num_states;
  report.num_generators = static_cast<std::uint32_t>(act.labels.size());
  report.convention = opts.convention;
  report.height_x = cls.height_of_x();
  for (std::uint32_t c = 0; c < cls.num_classes(); ++c) {
    std::uint32_t rep = cls.representative[c];
    if (skel.sizes[rep] > 1) {
      report.components.push_back(holonomy_group(rep, skel, cls, opts.holonomy));
      if (!report.components.back().complete) report.complete = false;
    }
  }
  std::sort(report.components.begin(), report.components.end(),
            [](const HolonomyComponent& a, const HolonomyComponent& b) {
              if (a.height != b.height) return a.height < b.height;
              return a.rep_node < b.rep_node;
            });
  if (with_semigroup) {
    report.semigroup_size = enumerate_semigroup(act).size();
  }

  if (!dot_path.empty()) write_or_print(dot_path, dot_condensation(skel, cls, report));
  if (!csv_path.empty()) write_or_print(csv_path, csv_components(report));

  if (o.format == "json") {
    std::cout << report_json(report, skel);
  } else {
    std::cout << "|X| = " << report.num_states
              << ", generators = " << report.num_generators
              << ", |Q| = " << skel.num_nodes() << ", h(X) = " << report.height_x
              << "\n";
    if (report.semigroup_size) std::cout << "|S| = " << *report.semigroup_size << "\n";
    std::cout << "components (height, degree, order, group):\n";
    for (const HolonomyComponent& c : report.components) {
      std::cout << "  h=" << c.height << " degree=" << c.tile_nodes.size()
                << " order=" << c.identified.order << " " << c.identified.name;
      if (!c.complete) std::cout << " [search budget hit: lower bound]";
      std::cout << "\n";
    }
    std::cout << "nontrivial:";
    auto summary = report.nontrivial_summary();
    if (summary.empty()) std::cout << " none";
    for (auto [deg, name] : summary) std::cout << " (" << deg << "," << name << ")";
    std::cout << "\n";
  }
  return 0;
}

int cmd_eval_word(const CommonOpts& o, const std::string& word_text,
                  const std::string& words_file, bool induced,
                  const std::string& convention, std::size_t budget) {
  GameConfig config = make_config(o);
  StateSpace space = get_space(o, config);

  std::vector<EventWord> words;
  if (!word_text.empty()) words.push_back(parse_word(word_text, config));
  if (!words_file.empty()) {
    std::ifstream in(words_file);
    if (!in) throw ValidationError("cannot read words file " + words_file);
    auto more = parse_word_file(in, config);
    words.insert(words.end(), more.begin(), more.end());
  }
  if (words.empty()) throw ValidationError("need --word or --words-file");

  std::vector<HolonomyComponent> components;
  if (induced) {
    ActionTable act = action_table(space);
    ReportOptions opts;
    opts.convention = parse_convention(convention);
    opts.holonomy.search_budget = budget;
    DecompositionReport report = decomposition_report(act, opts);
    for (HolonomyComponent& c : report.components) {
      if (c.identified.order > 1) components.push_back(std::move(c));
    }
  }

  ordered_json jwords = ordered_json::array();
  for (const EventWord& w : words) {
    Transformation t = evaluate_word(w, space);
    ordered_json jw;
    jw["word"] = render_word(w);
    jw["tokens"] = w.tokens.size();
    jw["image_of_empty"] = t.map[0];
    jw["aperiodic_element"] = element_is_aperiodic(t);
    if (o.format != "json") {
      std::cout << render_word(w) << "\n  tokens = " << w.tokens.size()
                << ", e -> state " << t.map[0]
                << ", aperiodic element: " << (element_is_aperiodic(t) ? "true" : "false")
                << "\n";
    }
    if (induced) {
      ordered_json jcomps = ordered_json::array();
      for (const HolonomyComponent& c : components) {
        TileAction action = induced_tile_action(w, c, space);
        ordered_json jc;
        jc["group"] = c.identified.name;
        jc["degree"] = c.tiles.size();
        if (action.perm) {
          jc["induced"] = cycle_notation(*action.perm);
          jc["cycle_type"] = cycle_type_string(*action.perm);
        } else {
          jc["induced"] = nullptr;
          jc["problem"] = action.problem;
        }
        jcomps.push_back(jc);
        if (o.format != "json") {
          std::cout << "  on " << c.identified.name << " (degree "
                    << c.tiles.size() << "): ";
          if (action.perm) {
            std::cout << cycle_notation(*action.perm) << " [cycle type "
                      << cycle_type_string(*action.perm) << "]";
          } else {
            std::cout << "not a tile permutation (" << action.problem << ")";
          }
          std::cout << "\n";
        }
      }
      jw["components"] = jcomps;
    }
    jwords.push_back(jw);
  }
  if (o.format == "json") std::cout << jwords.dump(2) << "\n";
  return 0;
}

int cmd_pieces(const std::string& which) {
  const auto& catalog = which == "tetromino" ? tetromino_catalog() : triomino_catalog();
  for (const PieceShape& p : catalog) {
    std::cout << p.label << "  (" << p.width() << "x" << p.height() << ")\n";
    std::vector<std::string> rows(p.height(), std::string(p.width(), '.'));
    for (const Cell& c : p.cells) rows[c.row][c.col] = '#';
    for (int r = p.height() - 1; r >= 0; --r) std::cout << "  " << rows[r] << "\n";
  }
  std::cout << render_piece_catalog(catalog);
  return 0;
}

struct RowResult {
  std::string x = "-";
  std::string s = "-";
  std::string h = "-";
  std::string groups = "-";
};

int cmd_reproduce(const std::string& table, const std::string& convention) {
  auto run_row = [&](const GameConfig& config, bool want_semigroup, bool want_height,
                     bool want_groups) {
    RowResult row;
    StateSpace space;
    try {
      space = enumerate_state_space(config, {});
    } catch (const BudgetError&) {
      return row;
    }
    row.x = std::to_string(space.size());
    ActionTable act = action_table(space);
    if (want_semigroup) {
      try {
        row.s = std::to_string(enumerate_semigroup(act).size());
      } catch (const BudgetError&) {
        row.s = "-";
      }
    }
    if (want_height || want_groups) {
      try {
        ReportOptions opts;
        opts.convention = parse_convention(convention);
        DecompositionReport report = decomposition_report(act, opts);
        if (want_height) row.h = std::to_string(report.height_x);
        if (want_groups) {
          auto summary = report.nontrivial_summary();
          std::string out;
          if (summary.empty()) out = "none";
          for (auto [deg, name] : summary) {
            if (!out.empty()) out += " ";
            out += "(" + std::to_string(deg) + "," + name + ")";
          }
          if (!report.complete) out += " [partial]";
          row.groups = out;
        }
      } catch (const BudgetError&) {
      }
    }
    return row;
  };

  auto pieces_full = pieces_by_labels(triomino_catalog(), {"LS", "RS", "LUS", "RUS", "V"});
  if (table == "table1") {
    std::cout << "board,|X|,|S|,h(X)\n";
    for (int k : {3, 4, 5}) {
      GameConfig config;
      config.n = 3;
      config.k = k;
      config.variant = Variant::Standard;
      config.pieces = pieces_full;
      // The 3x5 skeleton has millions of nodes; its classification is far
      // outside a desktop budget, so that row reports counts only.
      RowResult row = run_row(config, true, k != 5, false);
      std::cout << "3x" << k << "," << row.x << "," << row.s << "," << row.h << "\n";
    }
  } else {
    std::cout << "board,|X|,|S|,groups\n";
    for (int variant_row = 0; variant_row < 3; ++variant_row) {
      GameConfig config;
      config.n = 3;
      config.k = variant_row == 0 ? 3 : 4;
      config.variant = Variant::Periodic;
      config.pieces = variant_row == 2
                          ? pieces_by_labels(triomino_catalog(), {"RS", "LUS", "RUS", "V"})
                          : pieces_full;
      // |S| is only tractable on the 3x3 row; the holonomy pipeline never
      // needs it.
      RowResult row = run_row(config, variant_row == 0, false, variant_row != 1);
      std::string name = "3x" + std::to_string(config.k) +
                         (variant_row == 2 ? " reduced" : "");
      std::cout << name << "," << row.x << "," << row.s << "," << row.groups << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transformation-semigroup analysis of small stacking games"};
  app.require_subcommand(1);

  CommonOpts common;
  std::string method = "element", convention = "strict-steps", tile_mode = "maximal";
  std::string dot_path, csv_path, word_text, words_file, table = "table1";
  std::string pieces_which = "triomino";
  std::size_t max_elements = 5'000'000, memory_budget_mb = 2048, budget = 10'000'000;
  bool induced = false, with_semigroup = false;

  CLI::App* enumerate = app.add_subcommand("enumerate", "Enumerate reachable states");
  add_common(enumerate, common);

  CLI::App* semigroup = app.add_subcommand("semigroup", "Enumerate the transformation semigroup");
  add_common(semigroup, common);
  semigroup->add_option("--max-elements", max_elements, "Element cap");
  semigroup->add_option("--memory-budget-mb", memory_budget_mb, "Element arena budget");

  CLI::App* aperiodic = app.add_subcommand("aperiodic", "Test aperiodicity");
  add_common(aperiodic, common);
  aperiodic->add_option("--method", method, "element or holonomy")
      ->check(CLI::IsMember({"element", "holonomy"}));

  CLI::App* holonomy = app.add_subcommand("holonomy", "Holonomy decomposition report");
  add_common(holonomy, common);
  holonomy->add_option("--height-convention", convention, "Height convention")
      ->check(CLI::IsMember({"strict-steps", "node-count"}));
  holonomy->add_option("--tile-mode", tile_mode, "Tile definition")
      ->check(CLI::IsMember({"maximal", "strict"}));
  holonomy->add_option("--search-budget", budget, "Per-component search budget");
  holonomy->add_flag("--with-semigroup", with_semigroup, "Also enumerate |S|");
  holonomy->add_option("--dot", dot_path, "Write condensation DOT ('-' for stdout)");
  holonomy->add_option("--csv", csv_path, "Write component CSV ('-' for stdout)");

  CLI::App* eval_word = app.add_subcommand("eval-word", "Evaluate event words");
  add_common(eval_word, common);
  eval_word->add_option("--word", word_text, "Word text, e.g. 'V_0 LS_1 V_2'");
  eval_word->add_option("--words-file", words_file, "File with one word per line");
  eval_word->add_flag("--induced", induced, "Induced action on nontrivial components");
  eval_word->add_option("--height-convention", convention, "Height convention")
      ->check(CLI::IsMember({"strict-steps", "node-count"}));
  eval_word->add_option("--search-budget", budget, "Holonomy search budget");

  CLI::App* reproduce = app.add_subcommand("reproduce", "Reference result tables as CSV");
  reproduce->add_option("--table", table, "table1 or table2")
      ->check(CLI::IsMember({"table1", "table2"}));
  reproduce->add_option("--height-convention", convention, "Height convention")
      ->check(CLI::IsMember({"strict-steps", "node-count"}));

  CLI::App* pieces_cmd = app.add_subcommand("pieces", "Show a piece catalog");
  pieces_cmd->add_option("--set", pieces_which, "triomino or tetromino")
      ->check(CLI::IsMember({"triomino", "tetromino"}));

  CLI::App* kernels_cmd = app.add_subcommand("kernels", "List table-application kernels");

  try {
    app.parse(argc, argv);
    if (enumerate->parsed()) return cmd_enumerate(common);
    if (semigroup->parsed()) return cmd_semigroup(common, max_elements, memory_budget_mb);
    if (aperiodic->parsed()) return cmd_aperiodic(common, method);
    if (holonomy->parsed()) {
      return cmd_holonomy(common, convention, tile_mode, budget, with_semigroup,
                          dot_path, csv_path);
    }
    if (eval_word->parsed()) {
      return cmd_eval_word(common, word_text, words_file, induced, convention, budget);
    }
    if (reproduce->parsed()) return cmd_reproduce(table, convention);
    if (pieces_cmd->parsed()) return cmd_pieces(pieces_which);
    if (kernels_cmd->parsed()) {
      for (const kernels::KernelInfo& k : kernels::available_kernels()) {
        std::cout << k.name
                  << (k.fn == kernels::selected_kernel().fn ? " (selected)" : "") << "\n";
      }
      return 0;
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << " (reached " << e.reached << ")\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}

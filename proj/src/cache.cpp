#include "tritris/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tritris/errors.hpp"

namespace tritris {

using nlohmann::ordered_json;

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string config_key(const GameConfig& config) {
  std::ostringstream out;
  out << config.n << 'x' << config.k << ';'
      << (config.variant == Variant::Standard ? "standard" : "periodic") << ';'
      << (config.overflow == OverflowPolicy::PostClear ? "post-clear" : "pre-clear");
  for (const PieceShape& p : config.pieces) {
    out << ';' << p.label;
    for (const Cell& c : p.cells) out << ' ' << c.col << ',' << c.row;
  }
  return out.str();
}

std::string config_hash(const GameConfig& config) {
  std::uint64_t h = fnv1a64(config_key(config) + "|code=" + std::string(kCodeVersion));
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::filesystem::path statespace_cache_path(const std::filesystem::path& dir,
                                            const GameConfig& config) {
  return dir / ("statespace-" + config_hash(config) + ".json");
}

std::filesystem::path semigroup_cache_path(const std::filesystem::path& dir,
                                           const GameConfig& config) {
  return dir / ("semigroup-" + config_hash(config) + ".json");
}

namespace {

void atomic_write(const std::filesystem::path& path, const std::string& data) {
  std::filesystem::path dir = path.parent_path();
  if (!dir.empty()) std::filesystem::create_directories(dir);
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ValidationError("cannot write " + tmp.string());
    out << data;
    if (!out.flush()) throw ValidationError("short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

ordered_json read_json(const std::filesystem::path& path, std::string_view schema) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path.string());
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  if (j.value("schema", "") != schema) {
    throw ValidationError(path.string() + ": expected schema '" +
                          std::string(schema) + "'");
  }
  return j;
}

ordered_json config_json(const GameConfig& config) {
  ordered_json j;
  j["n"] = config.n;
  j["k"] = config.k;
  j["variant"] = config.variant == Variant::Standard ? "standard" : "periodic";
  j["overflow"] =
      config.overflow == OverflowPolicy::PostClear ? "post-clear" : "pre-clear";
  j["pieces"] = ordered_json::array();
  for (const PieceShape& p : config.pieces) {
    ordered_json jp;
    jp["label"] = p.label;
    ordered_json cells = ordered_json::array();
    for (const Cell& c : p.cells) cells.push_back(ordered_json::array({c.col, c.row}));
    jp["cells"] = cells;
    j["pieces"].push_back(jp);
  }
  return j;
}

GameConfig config_from_json(const ordered_json& j) {
  GameConfig config;
  config.n = j.at("n").get<int>();
  config.k = j.at("k").get<int>();
  std::string variant = j.at("variant").get<std::string>();
  if (variant == "standard") {
    config.variant = Variant::Standard;
  } else if (variant == "periodic") {
    config.variant = Variant::Periodic;
  } else {
    throw ValidationError("bad variant '" + variant + "'");
  }
  std::string overflow = j.at("overflow").get<std::string>();
  if (overflow == "post-clear") {
    config.overflow = OverflowPolicy::PostClear;
  } else if (overflow == "pre-clear") {
    config.overflow = OverflowPolicy::PreClear;
  } else {
    throw ValidationError("bad overflow policy '" + overflow + "'");
  }
  for (const auto& jp : j.at("pieces")) {
    std::vector<Cell> cells;
    for (const auto& jc : jp.at("cells")) {
      cells.push_back({jc.at(0).get<int>(), jc.at(1).get<int>()});
    }
    config.pieces.push_back(make_piece(jp.at("label").get<std::string>(), std::move(cells)));
  }
  validate_config(config);
  return config;
}

}  // namespace

void save_statespace(const std::filesystem::path& path, const StateSpace& space) {
  ordered_json j;
  j["schema"] = "tritris.statespace/1";
  j["config"] = config_json(space.config);
  j["config_hash"] = config_hash(space.config);
  j["states"] = ordered_json::array();
  for (const BoardState& s : space.states) {
    if (s.is_end) {
      j["states"].push_back("E");
    } else {
      ordered_json cells = ordered_json::array();
      for (const Cell& c : s.filled) cells.push_back(ordered_json::array({c.col, c.row}));
      j["states"].push_back(cells);
    }
  }
  j["generators"] = ordered_json::array();
  for (const Event& e : space.generators) j["generators"].push_back(event_label(e));
  j["tables"] = space.tables;
  atomic_write(path, j.dump() + "\n");
}

StateSpace load_statespace(const std::filesystem::path& path) {
  ordered_json j = read_json(path, "tritris.statespace/1");
  StateSpace space;
  space.config = config_from_json(j.at("config"));
  if (j.value("config_hash", "") != config_hash(space.config)) {
    throw ValidationError(path.string() + ": config hash mismatch (stale cache?)");
  }
  for (const auto& js : j.at("states")) {
    BoardState s;
    if (js.is_string()) {
      if (js.get<std::string>() != "E") {
        throw ValidationError(path.string() + ": bad state entry");
      }
      s.is_end = true;
      space.end_index = static_cast<std::uint32_t>(space.states.size());
    } else {
      for (const auto& jc : js) s.filled.push_back({jc.at(0).get<int>(), jc.at(1).get<int>()});
    }
    space.states.push_back(std::move(s));
  }
  space.generators = all_events(space.config);
  auto labels = j.at("generators").get<std::vector<std::string>>();
  if (labels.size() != space.generators.size()) {
    throw ValidationError(path.string() + ": generator list mismatch");
  }
  for (std::size_t g = 0; g < labels.size(); ++g) {
    if (labels[g] != event_label(space.generators[g])) {
      throw ValidationError(path.string() + ": generator order mismatch");
    }
  }
  space.tables = j.at("tables").get<std::vector<std::vector<std::uint32_t>>>();
  if (space.tables.size() != space.generators.size()) {
    throw ValidationError(path.string() + ": table count mismatch");
  }
  for (const auto& table : space.tables) {
    if (table.size() != space.states.size()) {
      throw ValidationError(path.string() + ": table length mismatch");
    }
    for (std::uint32_t v : table) {
      if (v >= space.states.size()) {
        throw ValidationError(path.string() + ": table entry out of range");
      }
    }
  }
  return space;
}

void save_semigroup(const std::filesystem::path& path,
                    const SemigroupEnumeration& sg,
                    const std::string& statespace_hash) {
  ordered_json j;
  j["schema"] = "tritris.semigroup/1";
  j["statespace_hash"] = statespace_hash;
  j["degree"] = sg.degree;
  j["generator_labels"] = sg.generator_labels;
  j["generator_ids"] = sg.generator_ids;
  ordered_json elements = ordered_json::array();
  for (std::uint32_t id = 0; id < sg.size(); ++id) {
    elements.push_back(std::vector<std::uint32_t>(sg.element(id), sg.element(id) + sg.degree));
  }
  j["elements"] = elements;
  j["witness_parent"] = sg.witness_parent;
  j["witness_gen"] = sg.witness_gen;
  atomic_write(path, j.dump() + "\n");
}

SemigroupEnumeration load_semigroup(const std::filesystem::path& path,
                                    const std::string& expected_statespace_hash) {
  ordered_json j = read_json(path, "tritris.semigroup/1");
  if (j.value("statespace_hash", "") != expected_statespace_hash) {
    throw ValidationError(path.string() + ": state-space hash mismatch");
  }
  SemigroupEnumeration sg;
  sg.degree = j.at("degree").get<std::uint32_t>();
  sg.generator_labels = j.at("generator_labels").get<std::vector<std::string>>();
  sg.generator_ids = j.at("generator_ids").get<std::vector<std::uint32_t>>();
  sg.witness_parent = j.at("witness_parent").get<std::vector<std::uint32_t>>();
  sg.witness_gen = j.at("witness_gen").get<std::vector<std::uint32_t>>();
  const auto& elements = j.at("elements");
  sg.elements = detail::RowDedup<std::uint32_t>(sg.degree, elements.size());
  std::vector<std::uint32_t> row;
  for (const auto& je : elements) {
    row = je.get<std::vector<std::uint32_t>>();
    if (row.size() != sg.degree) {
      throw ValidationError(path.string() + ": element row length mismatch");
    }
    for (std::uint32_t v : row) {
      if (v >= sg.degree) throw ValidationError(path.string() + ": element image out of range");
    }
    sg.elements.intern(row.data());
  }
  if (sg.witness_parent.size() != sg.size() || sg.witness_gen.size() != sg.size()) {
    throw ValidationError(path.string() + ": witness arrays mismatch");
  }
  return sg;
}

StateSpace enumerate_or_load(const GameConfig& config, const EnumerateOptions& opts,
                             const std::filesystem::path& dir) {
  const std::filesystem::path path = statespace_cache_path(dir, config);
  if (std::filesystem::exists(path)) return load_statespace(path);
  StateSpace space = enumerate_state_space(config, opts);
  save_statespace(path, space);
  return space;
}

}  // namespace tritris

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "tritris/semigroup.hpp"
#include "tritris/statespace.hpp"

namespace tritris {

// Bump when enumeration output formats or conventions change; part of
// every cache key, so stale files are never reused.
inline constexpr std::string_view kCodeVersion = "1";

std::uint64_t fnv1a64(std::string_view data);

// Canonical one-line description of a config; equal configs give equal
// strings.
std::string config_key(const GameConfig& config);

// Cache key of a config under the current code version, as fixed-width
// hex.
std::string config_hash(const GameConfig& config);

std::filesystem::path statespace_cache_path(const std::filesystem::path& dir,
                                            const GameConfig& config);
std::filesystem::path semigroup_cache_path(const std::filesystem::path& dir,
                                           const GameConfig& config);

// Versioned JSON, schema "tritris.statespace/1".  Writes are atomic
// (temp file + rename).  Loaders validate schema and config echo and
// throw ValidationError on mismatch.
void save_statespace(const std::filesystem::path& path, const StateSpace& space);
StateSpace load_statespace(const std::filesystem::path& path);

// Schema "tritris.semigroup/1"; records the source state space's hash.
void save_semigroup(const std::filesystem::path& path,
                    const SemigroupEnumeration& sg,
                    const std::string& statespace_hash);
SemigroupEnumeration load_semigroup(const std::filesystem::path& path,
                                    const std::string& expected_statespace_hash);

// Enumerates, or loads from dir when a cache file exists (writing one
// after a fresh enumeration).
StateSpace enumerate_or_load(const GameConfig& config, const EnumerateOptions& opts,
                             const std::filesystem::path& dir);

}  // namespace tritris

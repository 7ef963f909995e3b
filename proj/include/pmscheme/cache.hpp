#pragma once

// Advisory on-disk result cache. Entries are JSON files named by a hash of
// (schema version, operation, k, parameters); the full key is stored inside
// each entry and compared on load, so hash collisions read as misses.
// Unreadable or mismatched entries are reported, removed and recomputed.

#include "pmscheme/json_io.hpp"

#include <filesystem>
#include <functional>
#include <ostream>
#include <string>

namespace pmscheme {

class ResultCache {
public:
    /// Directory from PMSCHEME_CACHE, else ./.pmscheme-cache.
    static std::filesystem::path default_directory();

    explicit ResultCache(std::filesystem::path dir = default_directory(), std::ostream* warnings = nullptr,
                         bool enabled = true);

    const std::filesystem::path& directory() const noexcept { return dir_; }
    bool enabled() const noexcept { return enabled_; }

    /// Cached value for the key, else compute(), store and return it.
    json_io::json get_or_compute(const std::string& operation, int k, const json_io::json& params,
                                 const std::function<json_io::json()>& compute);

    /// Path of the entry file for a key (whether or not it exists).
    std::filesystem::path entry_path(const std::string& operation, int k, const json_io::json& params) const;

    std::size_t hits() const noexcept { return hits_; }
    std::size_t misses() const noexcept { return misses_; }
    std::size_t discarded() const noexcept { return discarded_; }

    void warn(const std::string& message) const;

private:
    json_io::json key(const std::string& operation, int k, const json_io::json& params) const;
    void store(const std::filesystem::path& path, const json_io::json& entry);

    std::filesystem::path dir_;
    std::ostream* warnings_;
    bool enabled_;
    std::size_t hits_ = 0, misses_ = 0, discarded_ = 0;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& bytes) noexcept;

/// full_char_table_small through the cache; the stored table is re-verified
/// with table_consistency_failures before it is trusted.
CharacterTable cached_full_table(ResultCache& cache, int k);

} // namespace pmscheme

#include "pmscheme/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

namespace pmscheme {

namespace fs = std::filesystem;
using json_io::json;

std::uint64_t fnv1a(const std::string& bytes) noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

fs::path ResultCache::default_directory()
{
    if (const char* env = std::getenv("PMSCHEME_CACHE"); env && *env) return env;
    return ".pmscheme-cache";
}

ResultCache::ResultCache(fs::path dir, std::ostream* warnings, bool enabled)
    : dir_(std::move(dir)), warnings_(warnings), enabled_(enabled)
{
}

json ResultCache::key(const std::string& operation, int k, const json& params) const
{
    return {{"schema", json_io::kSchemaVersion}, {"operation", operation}, {"k", k}, {"params", params}};
}

fs::path ResultCache::entry_path(const std::string& operation, int k, const json& params) const
{
    char name[32];
    std::snprintf(name, sizeof name, "%016llx.json",
                  static_cast<unsigned long long>(fnv1a(key(operation, k, params).dump())));
    return dir_ / (operation + "-k" + std::to_string(k) + "-" + name);
}

void ResultCache::warn(const std::string& message) const
{
    if (warnings_) *warnings_ << "warning: cache: " << message << '\n';
}

void ResultCache::store(const fs::path& path, const json& entry)
{
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) {
        warn("cannot create " + dir_.string() + ": " + ec.message());
        return;
    }
    std::random_device rd;
    const fs::path tmp = path.string() + ".tmp" + std::to_string(rd());
    {
        std::ofstream out(tmp, std::ios::binary);
        out << entry.dump() << '\n';
        if (!out) {
            warn("cannot write " + tmp.string());
            fs::remove(tmp, ec);
            return;
        }
    }
    fs::rename(tmp, path, ec);
    if (ec) {
        warn("cannot rename into " + path.string() + ": " + ec.message());
        fs::remove(tmp, ec);
    }
}

json ResultCache::get_or_compute(const std::string& operation, int k, const json& params,
                                 const std::function<json()>& compute)
{
    if (!enabled_) return compute();
    const json full_key = key(operation, k, params);
    const fs::path path = entry_path(operation, k, params);
    std::error_code ec;
    if (fs::exists(path, ec)) {
        try {
            std::ifstream in(path, std::ios::binary);
            const json entry = json::parse(in);
            if (entry.at("key") != full_key) throw std::runtime_error("key mismatch");
            ++hits_;
            return entry.at("value");
        } catch (const std::exception& e) {
            warn("discarding " + path.string() + " (" + e.what() + "); recomputing");
            ++discarded_;
            fs::remove(path, ec);
        }
    }
    ++misses_;
    json value = compute();
    store(path, {{"key", full_key}, {"value", value}});
    return value;
}

CharacterTable cached_full_table(ResultCache& cache, int k)
{
    const auto compute = [k] { return json_io::to_json(full_char_table_small(k)); };
    json j = cache.get_or_compute("char-table", k, {{"full", true}}, compute);
    try {
        auto t = json_io::table_from_json(j);
        if (t.k() == k && t.complete() && table_consistency_failures(t).empty()) return t;
    } catch (const std::exception&) {
    }
    // A parseable but wrong entry: drop it and recompute without the cache.
    cache.warn("stored table for k=" + std::to_string(k) + " failed verification; recomputing");
    std::error_code ec;
    fs::remove(cache.entry_path("char-table", k, {{"full", true}}), ec);
    return full_char_table_small(k);
}

} // namespace pmscheme

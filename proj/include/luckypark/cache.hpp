#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include "luckypark/oracle.hpp"

namespace luckypark {

/// A cache file failed an integrity check (bad magic, unsupported schema,
/// truncation, malformed numbers). The message names the offending file.
class CacheError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kCacheSchemaVersion = 1;

/// One cached oracle result. elapsed_seconds is informational only and is
/// not persisted: cache files depend solely on (schema, variant, n,
/// generator, counts), so runs with different thread counts or durations
/// produce byte-identical files.
struct CacheEntry {
    int schema_version = kCacheSchemaVersion;
    std::string generator_version = oracle_generator_version();
    LuckyTable table;
    LuckyDistribution distribution;
    double elapsed_seconds = 0.0;

    static CacheEntry from_counts(const OracleCounts& counts);
};

/// One plain-text file per (variant, n); see docs in the repository README
/// for the exact layout. Writes go to a unique temporary in the same
/// directory followed by an atomic rename, so concurrent writers serialize
/// to last-writer-wins and readers never observe partial data.
class TableCache {
public:
    explicit TableCache(std::filesystem::path directory);

    const std::filesystem::path& directory() const { return dir_; }
    std::filesystem::path path_for(Variant variant, int n) const;

    /// Returns the entry, or nullopt if absent or written by a different
    /// generator version. Throws CacheError on corruption or an
    /// unsupported schema version.
    std::optional<CacheEntry> load(Variant variant, int n) const;

    void store(const CacheEntry& entry) const;

private:
    std::filesystem::path dir_;
};

/// Serialized form of an entry (exactly the bytes store() writes).
std::string serialize_cache_entry(const CacheEntry& entry);

}  // namespace luckypark

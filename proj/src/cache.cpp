#include "luckypark/cache.hpp"

#include <unistd.h>

#include <atomic>
#include <fstream>
#include <sstream>

namespace luckypark {

namespace {

constexpr const char* kMagic = "luckypark-table";

std::string variant_token(Variant v) {
    switch (v) {
        case Variant::All: return "all";
        case Variant::WeaklyIncreasing: return "inc";
        case Variant::WeaklyDecreasing: return "dec";
    }
    return "?";
}

Variant variant_from_token(const std::string& t, const std::filesystem::path& file) {
    if (t == "all") return Variant::All;
    if (t == "inc") return Variant::WeaklyIncreasing;
    if (t == "dec") return Variant::WeaklyDecreasing;
    throw CacheError(file.string() + ": unknown variant token '" + t + "'");
}

[[noreturn]] void corrupt(const std::filesystem::path& file, const std::string& what) {
    throw CacheError(file.string() + ": " + what);
}

BigInt parse_count(const std::string& token, const std::filesystem::path& file) {
    try {
        return BigInt(token);
    } catch (const std::invalid_argument&) {
        corrupt(file, "malformed integer '" + token + "'");
    }
}

}  // namespace

CacheEntry CacheEntry::from_counts(const OracleCounts& counts) {
    CacheEntry e;
    e.table = counts.table;
    e.distribution = counts.distribution;
    e.elapsed_seconds = counts.elapsed_seconds;
    return e;
}

TableCache::TableCache(std::filesystem::path directory) : dir_(std::move(directory)) {}

std::filesystem::path TableCache::path_for(Variant variant, int n) const {
    return dir_ / (variant_token(variant) + "-" + std::to_string(n) + ".table");
}

std::string serialize_cache_entry(const CacheEntry& entry) {
    std::ostringstream os;
    os << kMagic << " " << entry.schema_version << "\n";
    os << "variant " << variant_token(entry.table.variant) << "\n";
    os << "n " << entry.table.n << "\n";
    os << "generator " << entry.generator_version << "\n";
    os << "matrix\n";
    const int n = entry.table.n;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (j > 1) os << " ";
            os << entry.table.at(i, j);
        }
        os << "\n";
    }
    os << "counts\n";
    for (int k = 1; k <= n; ++k) {
        if (k > 1) os << " ";
        os << entry.distribution.count(k);
    }
    os << "\n";
    os << "end\n";
    return os.str();
}

void TableCache::store(const CacheEntry& entry) const {
    std::filesystem::create_directories(dir_);
    const std::filesystem::path target = path_for(entry.table.variant, entry.table.n);

    static std::atomic<unsigned> counter{0};
    std::ostringstream tmpname;
    tmpname << target.filename().string() << ".tmp." << ::getpid() << "." << counter.fetch_add(1);
    const std::filesystem::path tmp = dir_ / tmpname.str();

    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw CacheError(tmp.string() + ": cannot open for writing");
        out << serialize_cache_entry(entry);
        out.flush();
        if (!out) throw CacheError(tmp.string() + ": write failed");
    }
    std::filesystem::rename(tmp, target);
}

std::optional<CacheEntry> TableCache::load(Variant variant, int n) const {
    const std::filesystem::path file = path_for(variant, n);
    std::ifstream in(file, std::ios::binary);
    if (!in) return std::nullopt;

    std::string magic;
    int schema = -1;
    if (!(in >> magic >> schema)) corrupt(file, "missing header");
    if (magic != kMagic) corrupt(file, "not a lucky-table cache file");
    if (schema != kCacheSchemaVersion)
        corrupt(file, "schema version " + std::to_string(schema) + " is not supported (want " +
                          std::to_string(kCacheSchemaVersion) + ")");

    std::string key, variant_tok;
    if (!(in >> key >> variant_tok) || key != "variant") corrupt(file, "missing variant");
    const Variant stored_variant = variant_from_token(variant_tok, file);

    int stored_n = -1;
    if (!(in >> key >> stored_n) || key != "n" || stored_n < 1) corrupt(file, "missing n");

    std::string generator;
    if (!(in >> key >> generator) || key != "generator") corrupt(file, "missing generator version");

    if (stored_variant != variant || stored_n != n)
        corrupt(file, "header disagrees with file name (holds " + variant_token(stored_variant) +
                          "-" + std::to_string(stored_n) + ")");

    if (!(in >> key) || key != "matrix") corrupt(file, "missing matrix section");
    CacheEntry entry;
    entry.schema_version = schema;
    entry.generator_version = generator;
    entry.table.variant = stored_variant;
    entry.table.n = stored_n;
    entry.table.cells.reserve(static_cast<std::size_t>(stored_n) * static_cast<std::size_t>(stored_n));
    std::string token;
    for (long c = 0; c < static_cast<long>(stored_n) * stored_n; ++c) {
        if (!(in >> token)) corrupt(file, "truncated matrix");
        entry.table.cells.push_back(parse_count(token, file));
    }

    if (!(in >> key) || key != "counts") corrupt(file, "missing counts section");
    entry.distribution.variant = stored_variant;
    entry.distribution.n = stored_n;
    entry.distribution.counts.assign(1, BigInt(0));
    for (int k = 1; k <= stored_n; ++k) {
        if (!(in >> token)) corrupt(file, "truncated counts");
        entry.distribution.counts.push_back(parse_count(token, file));
    }

    if (!(in >> key) || key != "end") corrupt(file, "missing end marker");

    // A different generator version means the entry may have been produced
    // by different counting code: treat as absent, never reinterpret.
    if (generator != oracle_generator_version()) return std::nullopt;
    return entry;
}

}  // namespace luckypark

#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "luckypark/cache.hpp"
#include "luckypark/oracle.hpp"

using namespace luckypark;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("luckypark-test-" + std::to_string(::getpid()) + "-" +
                                            std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
    static int& counter() { static int c = 0; return c; }
};

}  // namespace

TEST_CASE("store and load round trip") {
    TempDir dir;
    TableCache cache(dir.path);
    CHECK_FALSE(cache.load(Variant::All, 5).has_value());

    const CacheEntry entry = CacheEntry::from_counts(enumerate_and_count(5, Variant::All));
    cache.store(entry);
    const auto loaded = cache.load(Variant::All, 5);
    REQUIRE(loaded.has_value());
    CHECK(loaded->table == entry.table);
    CHECK(loaded->distribution == entry.distribution);
    CHECK(loaded->schema_version == kCacheSchemaVersion);
    CHECK(loaded->generator_version == oracle_generator_version());
    CHECK(loaded->elapsed_seconds == 0.0);  // timing is not persisted

    // Different key stays absent.
    CHECK_FALSE(cache.load(Variant::All, 4).has_value());
    CHECK_FALSE(cache.load(Variant::WeaklyDecreasing, 5).has_value());
}

TEST_CASE("serialization is a pure function of the counts") {
    const CacheEntry a = CacheEntry::from_counts(enumerate_and_count(6, Variant::All, {.threads = 1}));
    const CacheEntry b = CacheEntry::from_counts(enumerate_and_count(6, Variant::All, {.threads = 4}));
    CHECK(serialize_cache_entry(a) == serialize_cache_entry(b));
}

TEST_CASE("schema mismatch is an error, not a reinterpretation") {
    TempDir dir;
    TableCache cache(dir.path);
    {
        std::ofstream out(cache.path_for(Variant::All, 3));
        out << "luckypark-table 99\nvariant all\nn 3\ngenerator 1\nmatrix\n1 1 1\n1 1 1\n1 1 1\n"
               "counts\n1 1 1\nend\n";
    }
    CHECK_THROWS_AS(cache.load(Variant::All, 3), CacheError);
}

TEST_CASE("corrupt files raise errors that name the file") {
    TempDir dir;
    TableCache cache(dir.path);
    const CacheEntry entry = CacheEntry::from_counts(enumerate_and_count(4, Variant::All));
    cache.store(entry);

    const fs::path file = cache.path_for(Variant::All, 4);
    std::string text;
    {
        std::ifstream in(file);
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    {
        std::ofstream out(file, std::ios::trunc);
        out << text.substr(0, text.size() / 2);  // truncate
    }
    try {
        cache.load(Variant::All, 4);
        FAIL("expected CacheError");
    } catch (const CacheError& e) {
        CHECK(std::string(e.what()).find(file.string()) != std::string::npos);
    }
}

TEST_CASE("foreign generator versions are treated as absent") {
    TempDir dir;
    TableCache cache(dir.path);
    CacheEntry entry = CacheEntry::from_counts(enumerate_and_count(3, Variant::All));
    entry.generator_version = "0-experimental";
    cache.store(entry);
    CHECK_FALSE(cache.load(Variant::All, 3).has_value());
}

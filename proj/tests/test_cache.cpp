#include "doctest.h"
#include "pkenum/cache.hpp"
#include "pkenum/errors.hpp"

#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

using namespace pkenum;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
    const fs::path p = fs::temp_directory_path() / ("pkenum_cache_test_" + tag + "_" + std::to_string(::getpid()));
    fs::remove_all(p);
    return p;
}

std::vector<mpz_class> sample(int seed) {
    std::vector<mpz_class> v;
    mpz_class x = seed;
    for (int i = 0; i < 40; ++i) {
        v.push_back(x);
        x = x * 1000003 + 7;
    }
    return v;
}

}  // namespace

TEST_CASE("round trip") {
    const auto dir = fresh_dir("rt");
    TableCache cache(dir);
    const CacheKey key{4, 4, "ie", 19};
    CHECK_FALSE(cache.get(key).has_value());
    cache.put(key, sample(3));
    const auto back = cache.get(key);
    REQUIRE(back.has_value());
    CHECK(*back == sample(3));
    fs::remove_all(dir);
}

TEST_CASE("schema version bump invalidates entries") {
    const auto dir = fresh_dir("ver");
    const CacheKey key{5, 4, "series", 24};
    TableCache(dir).put(key, sample(2));
    std::ostringstream warnings;
    TableCache newer(dir, &warnings, TableCache::kSchemaVersion + 1);
    CHECK_FALSE(newer.get(key).has_value());
    CHECK(warnings.str().find("stale") != std::string::npos);
    newer.put(key, sample(5));
    CHECK(*newer.get(key) == sample(5));
    CHECK_FALSE(TableCache(dir).get(key).has_value());
    fs::remove_all(dir);
}

TEST_CASE("corrupt entries are ignored with a warning") {
    const auto dir = fresh_dir("bad");
    const CacheKey key{4, 3, "ie", 10};
    fs::create_directories(dir);
    std::ofstream(dir / key.file_name()) << "{ not json";
    std::ostringstream warnings;
    CHECK_FALSE(TableCache(dir, &warnings).get(key).has_value());
    CHECK_FALSE(warnings.str().empty());
    std::ofstream(dir / key.file_name(), std::ios::trunc)
        << R"({"schema_version":1,"key":{"k":4,"lambda":3,"method":"ie","order":10},"values":["12x"]})";
    CHECK_FALSE(TableCache(dir).get(key).has_value());
    fs::remove_all(dir);
}

TEST_CASE("distinct keys from concurrent writers") {
    const auto dir = fresh_dir("conc");
    TableCache cache(dir);
    std::vector<std::thread> writers;
    for (int k = 2; k < 10; ++k) {
        writers.emplace_back([&cache, k] {
            for (int rep = 0; rep < 20; ++rep) cache.put({k, 4, "ie", 30}, sample(k));
        });
    }
    for (auto& t : writers) t.join();
    for (int k = 2; k < 10; ++k) CHECK(*cache.get({k, 4, "ie", 30}) == sample(k));
    CHECK(CacheKey{4, 4, "ie", 19}.file_name() != CacheKey{4, 4, "series", 19}.file_name());
    fs::remove_all(dir);
}

TEST_CASE("unwritable directory raises") {
    TableCache cache("/proc/pkenum_cannot_exist");
    CHECK_THROWS_AS(cache.put({4, 4, "ie", 1}, sample(1)), CacheError);
}

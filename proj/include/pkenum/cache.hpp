#pragma once

// On-disk cache of count tables, one JSON file per key. Counts are stored as
// decimal strings together with a schema version; entries with another
// version, or that fail to parse, are treated as missing.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pkenum {

struct CacheKey {
    int k = 2;
    int lambda_min = 1;
    std::string method;
    int order = 0;

    std::string file_name() const;
};

class TableCache {
public:
    static constexpr int kSchemaVersion = 1;

    // `warnings` receives one line per ignored entry; may be null.
    explicit TableCache(std::filesystem::path dir, std::ostream* warnings = nullptr,
                        int schema_version = kSchemaVersion);

    const std::filesystem::path& dir() const { return dir_; }

    std::optional<std::vector<mpz_class>> get(const CacheKey& key) const;

    // Writes to a temporary file in the cache directory and renames it over
    // the entry. Throws CacheError if the directory cannot be created or
    // written.
    void put(const CacheKey& key, const std::vector<mpz_class>& values) const;

private:
    std::filesystem::path dir_;
    std::ostream* warnings_;
    int schema_version_;
};

// Name of the environment variable holding the default cache directory.
inline constexpr const char* kCacheDirEnv = "PKENUM_CACHE_DIR";

}  // namespace pkenum

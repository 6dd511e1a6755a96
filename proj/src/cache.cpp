#include "pkenum/cache.hpp"

#include <atomic>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "json.hpp"
#include "pkenum/errors.hpp"

namespace pkenum {

using nlohmann::json;

std::string CacheKey::file_name() const {
    std::ostringstream os;
    os << "T_k" << k << "_l" << lambda_min << "_" << method << "_o" << order << ".json";
    return os.str();
}

TableCache::TableCache(std::filesystem::path dir, std::ostream* warnings, int schema_version)
    : dir_(std::move(dir)), warnings_(warnings), schema_version_(schema_version) {}

std::optional<std::vector<mpz_class>> TableCache::get(const CacheKey& key) const {
    const auto path = dir_ / key.file_name();
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return std::nullopt;

    auto ignore = [&](const std::string& why) -> std::optional<std::vector<mpz_class>> {
        if (warnings_) *warnings_ << "warning: ignoring cache entry " << path.string() << ": " << why << "\n";
        return std::nullopt;
    };

    std::ifstream in(path);
    if (!in) return ignore("unreadable");
    try {
        const json doc = json::parse(in);
        if (doc.at("schema_version").get<int>() != schema_version_) return ignore("stale schema version");
        const json& k = doc.at("key");
        if (k.at("k").get<int>() != key.k || k.at("lambda").get<int>() != key.lambda_min ||
            k.at("method").get<std::string>() != key.method || k.at("order").get<int>() != key.order) {
            return ignore("key mismatch");
        }
        std::vector<mpz_class> values;
        for (const auto& v : doc.at("values")) {
            mpz_class z;
            if (z.set_str(v.get<std::string>(), 10) != 0) return ignore("malformed count");
            values.push_back(std::move(z));
        }
        return values;
    } catch (const json::exception& e) {
        return ignore(e.what());
    }
}

void TableCache::put(const CacheKey& key, const std::vector<mpz_class>& values) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw CacheError("cannot create cache directory " + dir_.string() + ": " + ec.message());

    json doc;
    doc["schema_version"] = schema_version_;
    doc["key"] = {{"k", key.k}, {"lambda", key.lambda_min}, {"method", key.method}, {"order", key.order}};
    json arr = json::array();
    for (const auto& v : values) arr.push_back(v.get_str());
    doc["values"] = std::move(arr);

    static std::atomic<unsigned> counter{0};
    std::ostringstream tmp_name;
    tmp_name << "." << key.file_name() << ".tmp." << ::getpid() << "."
             << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "." << counter++;
    const auto tmp = dir_ / tmp_name.str();
    {
        std::ofstream out(tmp, std::ios::trunc);
        out << doc.dump() << "\n";
        if (!out) throw CacheError("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, dir_ / key.file_name(), ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw CacheError("cannot install cache entry in " + dir_.string());
    }
}

}  // namespace pkenum

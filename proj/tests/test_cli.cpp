#include "doctest.h"
#include "json.hpp"
#include "pkenum/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace pkenum;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count csv") {
    const auto r = call({"count", "--k", "4", "--lambda", "4", "--n-max", "15", "--method", "series", "--no-cache"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out.rfind("n,count\n0,1\n1,1\n", 0) == 0);
    CHECK(r.out.find("15,563218\n") != std::string::npos);
    CHECK(r.out.find('\r') == std::string::npos);
}

TEST_CASE("csv and json carry the same counts") {
    const std::vector<std::string> base = {"count", "--k", "4..5", "--lambda", "4", "--n-max", "12", "--no-cache"};
    auto csv_args = base, json_args = base;
    json_args.insert(json_args.end(), {"--format", "json"});
    const auto csv = call(csv_args), js = call(json_args);
    REQUIRE(csv.code == 0);
    REQUIRE(js.code == 0);
    const auto doc = nlohmann::json::parse(js.out);
    CHECK(doc["timing_ms"].is_null());
    CHECK(doc.contains("provenance"));
    std::ostringstream rebuilt;
    rebuilt << "n,k,count\n";
    for (const auto& row : doc["results"]) {
        rebuilt << row["n"].get<std::string>() << "," << row["k"].get<std::string>() << ","
                << row["count"].get<std::string>() << "\n";
    }
    CHECK(rebuilt.str() == csv.out);
}

TEST_CASE("deterministic output") {
    const std::vector<std::string> args = {"count", "--k", "5", "--lambda", "3", "--n-max", "25", "--format", "json",
                                           "--no-cache"};
    CHECK(call(args).out == call(args).out);
    const std::vector<std::string> g = {"gamma", "--k", "4..5", "--lambda", "4"};
    CHECK(call(g).out == call(g).out);
}

TEST_CASE("gamma") {
    const auto r = call({"gamma", "--k", "4..8", "--lambda", "4"});
    CHECK(r.code == 0);
    for (const char* s : {"6.52900", "8.64830", "10.71759", "12.76348", "14.79630"}) {
        CHECK(r.out.find(s) != std::string::npos);
    }
    CHECK(r.out.rfind("k,gamma_inverse,rho,exponent,residual\n", 0) == 0);
}

TEST_CASE("exit codes") {
    CHECK(call({"count", "--k", "3", "--lambda", "4", "--n-max", "10", "--method", "ie", "--no-cache"}).code ==
          cli::kUnsupportedParameter);
    CHECK(call({"count", "--k", "2", "--lambda", "3", "--n-max", "10", "--method", "ie", "--no-cache"}).code ==
          cli::kUnsupportedParameter);
    CHECK(call({"count", "--k", "1", "--n-max", "3"}).code == cli::kUsageError);
    CHECK(call({"count", "--k", "4", "--lambda", "9", "--n-max", "3"}).code == cli::kUsageError);
    CHECK(call({"count", "--bogus"}).code == cli::kUsageError);
    CHECK(call({}).code == cli::kUsageError);
    CHECK(call({"count", "--k", "4", "--n-max", "3", "--format", "xml"}).code == cli::kUsageError);
    CHECK(call({"count", "--k", "4", "--n-max", "5", "--cache-dir", "/proc/pkenum_nope"}).code == cli::kCacheError);
    CHECK(call({"--version"}).code == cli::kSuccess);
}

TEST_CASE("unsupported message names the oracle") {
    const auto r = call({"count", "--k", "3", "--lambda", "4", "--n-max", "10", "--method", "series", "--no-cache"});
    CHECK(r.err.find("oracle") != std::string::npos);
}

TEST_CASE("oracle command and cache reuse") {
    const auto dir = std::filesystem::temp_directory_path() / ("pkenum_cli_cache_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    const auto o = call({"oracle", "--k", "3", "--lambda", "4", "--n-max", "9"});
    CHECK(o.code == 0);
    CHECK(o.out.find("7,14\n") != std::string::npos);
    const std::vector<std::string> args = {"count", "--k", "4", "--lambda", "4", "--n-max", "30",
                                           "--cache-dir", dir.string()};
    const auto first = call(args), second = call(args);
    CHECK(first.out == second.out);
    CHECK(std::filesystem::exists(dir));
    const auto shorter = call({"count", "--k", "4", "--lambda", "4", "--n-max", "15", "--cache-dir", dir.string()});
    CHECK(first.out.rfind(shorter.out, 0) == 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("out file and ratio") {
    const auto path = std::filesystem::temp_directory_path() / ("pkenum_ratio_" + std::to_string(::getpid()) + ".csv");
    const auto r = call({"ratio", "--k", "4", "--n-min", "50", "--n-max", "60", "--out", path.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "n,ratio");
    std::filesystem::remove(path);
}

TEST_CASE("verify") {
    const auto r = call({"verify", "--n-max", "10"});
    CHECK(r.code == cli::kSuccess);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

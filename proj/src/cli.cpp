#include "pkenum/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pkenum/asymptotics.hpp"
#include "pkenum/cache.hpp"
#include "pkenum/errors.hpp"
#include "pkenum/structures.hpp"
#include "pkenum/verify.hpp"

#ifndef PKENUM_VERSION
#define PKENUM_VERSION "0.0.0"
#endif

namespace pkenum::cli {

using json = nlohmann::ordered_json;

std::string version() { return PKENUM_VERSION; }

namespace {

struct JobSpec {
    std::string command;
    std::string k_text = "4";
    std::vector<int> ks;
    int lambda_min = 4;
    int n_max = -1;
    int n_min = 50;
    std::string method = "auto";
    int order = -1;
    int precision_digits = 60;
    std::string format = "csv";
    std::string out;
    std::string cache_dir;
    bool no_cache = false;
    bool timing = false;
};

// One output table: CSV header plus rows of preformatted cells.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    json provenance;
};

std::vector<int> parse_k_range(const std::string& text) {
    auto to_int = [&](const std::string& s) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) throw InvalidParameter("--k expects N or A..B, got '" + text + "'");
        return v;
    };
    std::vector<int> ks;
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        ks.push_back(to_int(text));
    } else {
        const int a = to_int(text.substr(0, dots)), b = to_int(text.substr(dots + 2));
        if (b < a) throw InvalidParameter("--k range " + text + " is empty");
        for (int k = a; k <= b; ++k) ks.push_back(k);
    }
    for (int k : ks) {
        if (k < 2) throw InvalidParameter("--k values must be >= 2");
    }
    return ks;
}

std::optional<TableCache> open_cache(const JobSpec& job, std::ostream& err) {
    if (job.no_cache) return std::nullopt;
    std::string dir = job.cache_dir;
    if (dir.empty()) {
        if (const char* env = std::getenv(kCacheDirEnv)) dir = env;
    }
    if (dir.empty()) return std::nullopt;
    return TableCache(dir, &err);
}

struct MethodChoice {
    CountMethod method;
    MatchingBackend backend = MatchingBackend::walk;
};

MethodChoice resolve_method(const std::string& name, int k, int lambda_min) {
    if (name == "auto") return {default_method(k, lambda_min)};
    if (name == "oracle") return {CountMethod::oracle};
    if (name == "ie") return {CountMethod::inclusion_exclusion};
    if (name == "series") return {CountMethod::functional_equation};
    if (name == "waterman") return {CountMethod::waterman};
    if (name == "walk" || name == "bessel") {
        if (lambda_min != 1) {
            throw UnsupportedParameter("--method " + name +
                                       " counts partial matchings (--lambda 1); use ie, series or oracle");
        }
        return {CountMethod::partial_matchings,
                name == "walk" ? MatchingBackend::walk : MatchingBackend::determinant};
    }
    throw InvalidParameter("unknown --method '" + name + "'");
}

std::string method_label(const MethodChoice& m) {
    if (m.method == CountMethod::partial_matchings) return std::string(to_string(m.backend));
    return std::string(to_string(m.method));
}

Table run_count(const JobSpec& job, std::ostream& err) {
    if (job.n_max < 0) throw InvalidParameter("--n-max is required and must be >= 0");
    if (job.lambda_min < 1 || job.lambda_min > 4) throw InvalidParameter("--lambda must be in 1..4");
    const int order = job.order >= 0 ? job.order : job.n_max + 4;
    auto cache = open_cache(job, err);

    std::map<int, std::vector<mpz_class>> by_k;
    std::string label;
    for (int k : job.ks) {
        const MethodChoice choice = resolve_method(job.command == "oracle" ? "oracle" : job.method, k, job.lambda_min);
        label = method_label(choice);
        const CacheKey key{k, job.lambda_min, label, order};
        std::optional<std::vector<mpz_class>> values;
        if (cache) {
            values = cache->get(key);
            if (values && static_cast<int>(values->size()) <= job.n_max) values.reset();
        }
        if (!values) {
            values = count_structures(k, job.lambda_min, job.n_max, choice.method, choice.backend, order).values;
            if (cache) cache->put(key, *values);
        }
        values->resize(static_cast<std::size_t>(job.n_max) + 1);
        by_k[k] = std::move(*values);
    }

    Table t;
    const bool many = job.ks.size() > 1;
    t.columns = many ? std::vector<std::string>{"n", "k", "count"} : std::vector<std::string>{"n", "count"};
    for (int n = 0; n <= job.n_max; ++n) {
        for (const auto& [k, values] : by_k) {
            if (many) {
                t.rows.push_back({std::to_string(n), std::to_string(k), values[n].get_str()});
            } else {
                t.rows.push_back({std::to_string(n), values[n].get_str()});
            }
        }
    }
    const bool uses_order = label == "series";
    t.provenance = {{"method", many && job.method == "auto" ? std::string("auto") : label},
                    {"order", uses_order ? json(order) : json(nullptr)},
                    {"precision_digits", nullptr}};
    return t;
}

Table run_gamma(const JobSpec& job, std::ostream& err) {
    if (job.lambda_min < 2 || job.lambda_min > 4) throw InvalidParameter("gamma needs --lambda in 2..4");
    SolveOptions opt;
    opt.precision_digits = job.precision_digits;
    Table t;
    t.columns = {"k", "gamma_inverse", "rho", "exponent", "residual"};
    for (int k : job.ks) {
        const SingularityReport r = solve_gamma(k, job.lambda_min, opt);
        if (r.extrapolated) {
            err << "warning: k = " << k << " lies outside the certified range 4 <= k <= 9 (extrapolated)\n";
        }
        t.rows.push_back({std::to_string(k), r.growth_rate.to_fixed(10), r.rho.get_str(), r.exponent.get_str(),
                          r.residual.to_string(3)});
    }
    t.provenance = {{"method", "bisection+newton"}, {"order", nullptr}, {"precision_digits", job.precision_digits}};
    return t;
}

Table run_ratio(const JobSpec& job) {
    if (job.ks.size() != 1) throw InvalidParameter("ratio takes a single --k");
    if (job.lambda_min != 4) throw UnsupportedParameter("ratio is defined for --lambda 4 only");
    const int n_max = job.n_max < 0 ? 150 : job.n_max;
    if (job.n_min < 1 || job.n_min > n_max) throw InvalidParameter("need 1 <= --n-min <= --n-max");
    RatioOptions opt;
    opt.precision_digits = job.precision_digits;
    const RatioDiagnostic d = ratio_diagnostic(job.ks.front(), job.n_min, n_max, opt);
    Table t;
    t.columns = {"n", "ratio"};
    for (const auto& p : d.points) {
        Real mid = (p.lower + p.upper) / Real(2, p.lower.precision());
        t.rows.push_back({std::to_string(p.n), mid.to_string(15)});
    }
    t.provenance = {{"method", "ie"}, {"order", nullptr}, {"precision_digits", job.precision_digits}};
    return t;
}

Table run_verify(const JobSpec& job, std::ostream& err, bool& all_passed) {
    VerifyOptions opt;
    if (job.n_max >= 0) opt.n_max = job.n_max;
    const auto suites = run_verification(opt);
    Table t;
    t.columns = {"suite", "status", "checks", "detail"};
    all_passed = true;
    for (const auto& s : suites) {
        t.rows.push_back({s.name, s.passed ? "pass" : "FAIL", std::to_string(s.checks), s.detail});
        if (!s.passed) {
            if (all_passed) err << "verify: suite " << s.name << " failed, " << s.detail << "\n";
            all_passed = false;
        }
    }
    t.provenance = {{"method", "cross-check"}, {"order", nullptr}, {"precision_digits", 60}};
    return t;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string render(const JobSpec& job, const Table& t, std::optional<long long> timing_ms) {
    std::ostringstream os;
    if (job.format == "csv") {
        for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
        os << "\n";
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(row[i]);
            os << "\n";
        }
        return os.str();
    }
    json results = json::array();
    for (const auto& row : t.rows) {
        json r = json::object();
        for (std::size_t i = 0; i < row.size(); ++i) r[t.columns[i]] = row[i];
        results.push_back(std::move(r));
    }
    json job_echo = {{"command", job.command},
                     {"k", job.ks.size() == 1 ? json(job.ks.front()) : json(job.ks)},
                     {"lambda", job.lambda_min},
                     {"n_max", job.n_max >= 0 ? json(job.n_max) : json(nullptr)},
                     {"method", job.method},
                     {"order", job.order >= 0 ? json(job.order) : json(nullptr)},
                     {"precision_digits", job.precision_digits},
                     {"format", job.format}};
    json envelope = {{"version", version()},
                     {"job", std::move(job_echo)},
                     {"results", std::move(results)},
                     {"provenance", t.provenance},
                     {"timing_ms", timing_ms ? json(*timing_ms) : json(nullptr)}};
    return envelope.dump(2) + "\n";
}

int dispatch(JobSpec& job, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    job.ks = parse_k_range(job.k_text);
    if (job.format != "csv" && job.format != "json") throw InvalidParameter("--format must be csv or json");

    Table table;
    int status = kSuccess;
    if (job.command == "count" || job.command == "oracle") {
        table = run_count(job, err);
    } else if (job.command == "gamma") {
        table = run_gamma(job, err);
    } else if (job.command == "ratio") {
        table = run_ratio(job);
    } else if (job.command == "verify") {
        bool passed = true;
        table = run_verify(job, err, passed);
        if (!passed) status = kVerificationMismatch;
    } else {
        throw InvalidParameter("unknown command");
    }

    std::optional<long long> timing;
    if (job.timing) {
        timing = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                     .count();
    }
    const std::string text = render(job, table, timing);
    if (job.out.empty()) {
        out << text;
    } else {
        std::ofstream f(job.out, std::ios::binary | std::ios::trunc);
        f << text;
        if (!f) throw InvalidParameter("cannot write --out file " + job.out);
    }
    return status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counts and growth rates of k-noncrossing RNA structures", "pkenum"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version());

    JobSpec job;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--k", job.k_text, "crossing bound k, or a range A..B");
        sub->add_option("--lambda", job.lambda_min, "minimum arc length (1..4)");
        sub->add_option("--n-max", job.n_max, "largest n");
        sub->add_option("--format", job.format, "csv or json");
        sub->add_option("--out", job.out, "write results to this file");
        sub->add_flag("--timing", job.timing, "report wall time in the JSON envelope");
    };

    auto* count = app.add_subcommand("count", "exact counts T_k(n) for n = 0..n-max");
    add_common(count);
    count->add_option("--method", job.method, "auto, oracle, ie, series, waterman, walk or bessel");
    count->add_option("--order", job.order, "series truncation order (default n-max + 4)");
    count->add_option("--cache-dir", job.cache_dir, std::string("table cache directory (default $") + kCacheDirEnv + ")");
    count->add_flag("--no-cache", job.no_cache, "do not read or write the cache");

    auto* oracle = app.add_subcommand("oracle", "brute-force counts by diagram enumeration (n <= ~16)");
    add_common(oracle);

    auto* gamma = app.add_subcommand("gamma", "dominant singularity and growth rate");
    add_common(gamma);
    gamma->add_option("--precision-digits", job.precision_digits, "working precision in decimal digits");

    auto* ratio = app.add_subcommand("ratio", "r(n) = T(n) n^e gamma^n for lambda 4");
    add_common(ratio);
    ratio->add_option("--n-min", job.n_min, "first n (default 50)");
    ratio->add_option("--precision-digits", job.precision_digits, "working precision in decimal digits");

    auto* verify = app.add_subcommand("verify", "run the cross-method and oracle suites");
    add_common(verify);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }
    job.command = app.get_subcommands().front()->get_name();
    if (job.command == "gamma" && job.lambda_min == 0) job.lambda_min = 4;

    try {
        return dispatch(job, out, err);
    } catch (const InvalidParameter& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    } catch (const UnsupportedParameter& e) {
        err << "unsupported parameter: " << e.what() << "\n";
        return kUnsupportedParameter;
    } catch (const CacheError& e) {
        err << "cache error: " << e.what() << "\nclear the cache directory or pass --no-cache\n";
        return kCacheError;
    } catch (const PrecisionError& e) {
        err << "precision error: " << e.what() << "\n";
        return kNumericFailure;
    } catch (const SolverError& e) {
        err << "solver error: " << e.what() << "\n";
        return kNumericFailure;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return kNumericFailure;
    }
}

}  // namespace pkenum::cli

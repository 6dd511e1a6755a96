// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "pkenum/asymptotics.hpp"
#include "pkenum/cli.hpp"
#include "pkenum/combinatorics.hpp"
#include "pkenum/diagrams.hpp"
#include "pkenum/errors.hpp"
#include "pkenum/matchings.hpp"
#include "pkenum/shortarcs.hpp"
#include "pkenum/structures.hpp"

using namespace pkenum;

namespace {

const std::vector<long> kReference = {1, 1, 1, 1, 1, 2, 5, 15, 51, 179, 647, 2397, 9081, 35181, 139307, 563218};

struct Outcome {
    bool ok = true;
    std::ostringstream why;
    void fail(const std::string& msg) {
        if (ok) why << msg;
        ok = false;
    }
};

bool run_criterion(int id, const std::string& title, double limit_s, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > limit_s) {
        std::ostringstream m;
        m << "runtime " << secs << " s exceeds " << limit_s << " s";
        o.fail(m.str());
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << std::fixed;
    std::cout.precision(2);
    std::cout << secs << " s)";
    if (!o.ok) std::cout << " -- " << o.why.str();
    std::cout << std::endl;
    return o.ok;
}

std::string cell(const char* what, int k, int n, const mpz_class& want, const mpz_class& got) {
    std::ostringstream os;
    os << what << " k=" << k << " n=" << n << ": expected " << want << ", got " << got;
    return os.str();
}

void compare(Outcome& o, const char* what, int k, const std::vector<mpz_class>& want,
             const std::vector<mpz_class>& got, int n_max) {
    for (int n = 0; n <= n_max; ++n) {
        if (want.at(n) != got.at(n)) {
            o.fail(cell(what, k, n, want[n], got[n]));
            return;
        }
    }
}

}  // namespace

int main() {
    bool all = true;

    all &= run_criterion(1, "k = 4, lambda = 4 counts via inclusion-exclusion and functional equation", 60, [](Outcome& o) {
        const auto ie = t4_inclusion_exclusion(4, 15).values;
        const auto fe = t4_functional_equation(4, 15).values;
        for (int n = 1; n <= 15; ++n) {
            if (ie[n] != kReference[n]) o.fail(cell("inclusion-exclusion", 4, n, kReference[n], ie[n]));
            if (fe[n] != kReference[n]) o.fail(cell("functional equation", 4, n, kReference[n], fe[n]));
        }
    });

    all &= run_criterion(2, "growth rates for k = 4..8", 10, [](Outcome& o) {
        const double expected[] = {6.52900, 8.64830, 10.71759, 12.76349, 14.79631};
        for (int k = 4; k <= 8; ++k) {
            const auto r = solve_gamma(k, 4);
            const double g = r.growth_rate.to_double();
            const double err = std::abs(std::round(g * 1e5) - std::round(expected[k - 4] * 1e5));
            if (err > 1) o.fail("k=" + std::to_string(k) + ": growth rate " + r.growth_rate.to_fixed(8));
            if (!(r.residual.to_double() < 1e-12)) o.fail("k=" + std::to_string(k) + ": residual too large");
        }
    });

    all &= run_criterion(3, "formula counts equal the diagram oracle", 300, [](Outcome& o) {
        for (int k = 2; k <= 5; ++k) {
            for (int lam = 2; lam <= 4; ++lam) {
                const auto oracle = count_by_oracle(k, lam, 12).values;
                std::vector<CountMethod> routes;
                if (lam == 2) routes = {CountMethod::inclusion_exclusion};
                if (lam == 3 && k > 2) routes = {CountMethod::inclusion_exclusion, CountMethod::functional_equation};
                if (lam == 4 && k > 3) routes = {CountMethod::inclusion_exclusion, CountMethod::functional_equation};
                if (k == 2) routes.push_back(CountMethod::waterman);
                for (CountMethod m : routes) {
                    compare(o, to_string(m).data(), k, oracle, count_structures(k, lam, 12, m).values, 12);
                }
            }
        }
        const auto big = count_by_oracle(4, 4, 15).values;
        for (int n = 13; n <= 15; ++n) {
            if (big[n] != kReference[n]) o.fail(cell("oracle", 4, n, kReference[n], big[n]));
        }
    });

    all &= run_criterion(4, "walk and determinant matching backends agree", 300, [](Outcome& o) {
        for (int k = 2; k <= 9; ++k) {
            const auto walk = count_matchings_walk(k, 30).values;
            const auto det = count_matchings_determinant(k, 30).values;
            compare(o, "walk vs determinant", k, walk, det, 30);
            for (int n = 0; n < k; ++n) {
                if (walk[n] != double_factorial_odd(n)) o.fail(cell("(2n-1)!!", k, n, double_factorial_odd(n), walk[n]));
            }
        }
        const auto f2 = count_matchings_walk(2, 15).values;
        for (int n = 0; n <= 15; ++n) {
            if (f2[n] != catalan(n)) o.fail(cell("Catalan", 2, n, catalan(n), f2[n]));
        }
    });

    all &= run_criterion(5, "partial matching series identity to order 30", 60, [](Outcome& o) {
        const std::size_t N = 30;
        for (int k = 2; k <= 6; ++k) {
            const auto f = count_matchings_walk(k, 15);
            const auto m = count_partial_matchings(f, 30);
            const Series z = Series::variable(N);
            const Series omz = Series::constant(N, 1) - z;
            const Series rhs = compose(matching_ogf(f, N), z / omz) / omz;
            for (std::size_t n = 0; n <= N; ++n) {
                if (rhs[n] != m[n]) {
                    o.fail("k=" + std::to_string(k) + " coefficient " + std::to_string(n) + " differs");
                    break;
                }
            }
        }
    });

    all &= run_criterion(6, "algebraic pack identities to order 50", 60, [](Outcome& o) {
        const std::size_t N = 50;
        const AlgebraicPack p = build_algebraic_pack(N);
        const Series x = Series::variable(N);
        if (!(p.a * p.f1 * p.f1 - p.B * p.f1 - x).is_zero()) o.fail("f1 is not a root");
        if (!(p.a * p.f2 * p.f2 - p.B * p.f2 - x).is_zero()) o.fail("f2 is not a root");
        if (!(p.f1 + p.f2 == p.B / p.a)) o.fail("f1 + f2 != B/a");
        if (!(p.f1 * p.f2 == -(x / p.a))) o.fail("f1 f2 != -x/a");
        const Series s = sqrt1(p.radicand);
        if (!(s * s == p.radicand)) o.fail("sqrt does not square back");
    });

    all &= run_criterion(7, "lambda table consistency", 120, [](Outcome& o) {
        const auto dp = lambda_positional_dp(14);
        const auto oracle = lambda_oracle(14);
        for (int n = 0; n <= 14; ++n) {
            for (int b = 0; 2 * b <= n; ++b) {
                if (dp.at(n, b) != oracle.at(n, b)) o.fail(cell("lambda dp", b, n, oracle.at(n, b), dp.at(n, b)));
            }
        }
        const auto big = lambda_positional_dp(60);
        for (int n = 3; n <= 60; ++n) {
            if (big.at(n, 1) != 3 * n - 6) o.fail("lambda(" + std::to_string(n) + ",1) != 3n-6");
        }
        const auto report = compare_lambda_recursion(24);
        if (!report.confined_to_boundary()) o.fail("recursion deviations escape the boundary: " + report.summary());
        std::ostringstream out, err;
        if (cli::run({"verify", "--n-max", "8"}, out, err) != cli::kSuccess) o.fail("verify failed: " + err.str());
        if (out.str().find("lambda-tables") == std::string::npos) o.fail("verify report lacks the lambda suite");
    });

    all &= run_criterion(8, "ratio diagnostic over n = 50..150", 300, [](Outcome& o) {
        const auto d = ratio_diagnostic(4, 50, 150);
        if (d.exponent != mpq_class(21, 2)) o.fail("exponent is not 21/2");
        double previous = 1e300;
        for (int n = 60; n <= 150; n += 10) {
            const double change = d.relative_change(n, 10);
            if (!(change < previous)) o.fail("relative change does not decrease at n=" + std::to_string(n));
            previous = change;
        }
        if (!(previous < 0.05)) o.fail("relative change at n=150 is " + std::to_string(previous));
        const double r150 = d.at(150).value();
        if (!(r150 > 4.4509e7 / 2 && r150 < 4.4509e7 * 2)) o.fail("r(150) = " + std::to_string(r150));
    });

    all &= run_criterion(9, "scope enforcement and oracle fallback", 120, [](Outcome& o) {
        auto code = [](std::vector<std::string> args) {
            std::ostringstream out, err;
            return cli::run(args, out, err);
        };
        for (const char* m : {"ie", "series"}) {
            for (int k = 2; k <= 3; ++k) {
                if (code({"count", "--k", std::to_string(k), "--lambda", "4", "--n-max", "12", "--method", m,
                          "--no-cache"}) != cli::kUnsupportedParameter) {
                    o.fail(std::string("lambda 4 --method ") + m + " accepted k=" + std::to_string(k));
                }
            }
        }
        if (code({"count", "--k", "2", "--lambda", "3", "--n-max", "12", "--method", "ie", "--no-cache"}) !=
            cli::kUnsupportedParameter) {
            o.fail("lambda 3 inclusion-exclusion accepted k=2");
        }
        const struct {
            int k, lam;
        } cases[] = {{2, 4}, {3, 4}, {2, 3}};
        for (const auto& c : cases) {
            std::ostringstream out, err;
            if (cli::run({"oracle", "--k", std::to_string(c.k), "--lambda", std::to_string(c.lam), "--n-max", "12"},
                         out, err) != cli::kSuccess) {
                o.fail("oracle command failed");
                continue;
            }
            DiagramFilter f{c.k, c.lam};
            std::ostringstream want;
            want << "n,count\n";
            for (int n = 0; n <= 12; ++n) want << n << "," << enumerate(n, f) << "\n";
            if (out.str() != want.str()) o.fail("oracle counts differ for k=" + std::to_string(c.k));
        }
    });

    std::cout << (all ? "all acceptance criteria passed" : "acceptance FAILED") << std::endl;
    return all ? 0 : 1;
}

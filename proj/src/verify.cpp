#include "pkenum/verify.hpp"

#include <functional>
#include <map>
#include <sstream>

#include "pkenum/asymptotics.hpp"
#include "pkenum/combinatorics.hpp"
#include "pkenum/errors.hpp"
#include "pkenum/exact_series.hpp"
#include "pkenum/matchings.hpp"
#include "pkenum/shortarcs.hpp"
#include "pkenum/structures.hpp"

namespace pkenum {

namespace {

// Records the first mismatch and counts comparisons.
class Suite {
public:
    explicit Suite(std::string name) { result_.name = std::move(name); }

    template <class A, class B>
    bool expect_equal(const A& got, const B& want, const std::string& cell) {
        ++result_.checks;
        if (got == want) return true;
        fail(cell);
        return false;
    }

    bool expect(bool ok, const std::string& cell) {
        ++result_.checks;
        if (!ok) fail(cell);
        return ok;
    }

    void fail(const std::string& cell) {
        if (result_.passed) result_.detail = "first divergent cell: " + cell;
        result_.passed = false;
    }

    void note(const std::string& s) {
        if (result_.passed) result_.detail = s;
    }

    SuiteResult finish() {
        if (result_.passed && result_.detail.empty()) {
            result_.detail = std::to_string(result_.checks) + " checks";
        }
        return result_;
    }

private:
    SuiteResult result_;
};

std::string cell(const char* what, int k, int lambda_min, int n) {
    std::ostringstream os;
    os << what << " k=" << k << " lambda=" << lambda_min << " n=" << n;
    return os.str();
}

SuiteResult oracle_equivalence(const VerifyOptions& opt) {
    Suite s("oracle-equivalence");
    for (int k = 2; k <= 5; ++k) {
        for (int lambda_min = 1; lambda_min <= 4; ++lambda_min) {
            const CountTable oracle = count_by_oracle(k, lambda_min, opt.n_max);
            std::vector<std::pair<std::string, CountTable>> routes;
            auto add = [&](const std::string& name, auto make) {
                try {
                    routes.emplace_back(name, make());
                } catch (const UnsupportedParameter&) {
                }
            };
            add("ie", [&] { return count_structures(k, lambda_min, opt.n_max, CountMethod::inclusion_exclusion); });
            add("series", [&] { return count_structures(k, lambda_min, opt.n_max, CountMethod::functional_equation); });
            add("waterman", [&] { return count_structures(k, lambda_min, opt.n_max, CountMethod::waterman); });
            add("walk", [&] { return count_structures(k, lambda_min, opt.n_max, CountMethod::partial_matchings); });
            add("bessel", [&] {
                return count_structures(k, lambda_min, opt.n_max, CountMethod::partial_matchings,
                                        MatchingBackend::determinant);
            });
            for (const auto& [name, table] : routes) {
                for (int n = 0; n <= opt.n_max; ++n) {
                    if (!s.expect_equal(table.values[n], oracle.values[n], cell(name.c_str(), k, lambda_min, n) +
                                        " formula " + table.values[n].get_str() + " oracle " +
                                        oracle.values[n].get_str())) {
                        return s.finish();
                    }
                }
            }
        }
    }
    return s.finish();
}

SuiteResult matching_backends(const VerifyOptions& opt) {
    Suite s("matching-backends");
    for (int k = 2; k <= opt.matching_k_max; ++k) {
        const MatchingTable walk = count_matchings_walk(k, opt.matching_n_max);
        const MatchingTable det = count_matchings_determinant(k, opt.matching_n_max);
        for (int n = 0; n <= opt.matching_n_max; ++n) {
            s.expect_equal(walk.values[n], det.values[n], "f_" + std::to_string(k) + "(" + std::to_string(2 * n) + ")");
            if (n < k) {
                s.expect_equal(walk.values[n], double_factorial_odd(n),
                               "f_k(2n) = (2n-1)!! at k=" + std::to_string(k) + " n=" + std::to_string(n));
            }
            if (k == 2) s.expect_equal(walk.values[n], catalan(n), "Catalan n=" + std::to_string(n));
        }
    }
    return s.finish();
}

SuiteResult partial_matching_identity() {
    Suite s("partial-matching-series");
    const std::size_t order = 30;
    for (int k = 2; k <= 6; ++k) {
        const auto m = count_partial_matchings(k, static_cast<int>(order));
        const Series F = matching_ogf(count_matchings(k, static_cast<int>(order / 2)), order);
        const Series inv = reciprocal(Series(order, {1, -1}));
        const Series rhs = inv * compose(F, Series::variable(order) * inv);
        for (std::size_t n = 0; n <= order; ++n) {
            s.expect_equal(rhs[n], mpq_class(m[n]), "M_" + std::to_string(k) + " coefficient z^" + std::to_string(n));
        }
    }
    return s.finish();
}

SuiteResult algebraic_pack() {
    Suite s("algebraic-pack");
    const std::size_t order = 50;
    const AlgebraicPack p = build_algebraic_pack(order);
    const Series x = Series::variable(order);
    const Series zero(order);
    s.expect_equal(p.u * p.u, p.radicand, "u^2 = radicand");
    s.expect_equal(p.a * p.f1 * p.f1 - p.B * p.f1 - x, zero, "a f1^2 - B f1 - x");
    s.expect_equal(p.a * p.f2 * p.f2 - p.B * p.f2 - x, zero, "a f2^2 - B f2 - x");
    s.expect_equal(p.f1 + p.f2, p.B / p.a, "f1 + f2 = B/a");
    s.expect_equal(p.f1 * p.f2, -(x / p.a), "f1 f2 = -x/a");
    s.expect(p.f1[0] == 1 && p.f2[0] == 0 && p.F1[0] == 1 && p.F2[0] == 0, "constant terms f1, f2, F1, F2");
    s.expect(p.theta1[0] == 0 && p.theta2[0] == 0 && p.theta1[1] == 1, "theta constant/linear terms");
    return s.finish();
}

SuiteResult lambda_tables(const VerifyOptions& opt) {
    Suite s("lambda-tables");
    const int oracle_n = std::min(opt.n_max, 14);
    const LambdaTable dp = lambda_positional_dp(std::max(oracle_n, 40));
    const LambdaTable oracle = lambda_oracle(oracle_n);
    for (int n = 0; n <= oracle_n; ++n) {
        for (int b = 0; 2 * b <= n; ++b) {
            s.expect_equal(dp.at(n, b), oracle.at(n, b),
                           "lambda(" + std::to_string(n) + "," + std::to_string(b) + ") DP vs oracle");
        }
    }
    for (int n = 3; n <= dp.max_n(); ++n) {
        s.expect_equal(dp.at(n, 1), mpz_class(3 * n - 6), "lambda(n,1) = 3n-6 at n=" + std::to_string(n));
    }
    const MultivariateLambdaTable multi = lambda_multivariate(20);
    for (int n = 0; n <= 20; ++n) {
        for (int b = 0; 2 * b <= n; ++b) {
            s.expect_equal(multi.aggregate(n, b), dp.at(n, b),
                           "multivariate aggregate n=" + std::to_string(n) + " b=" + std::to_string(b));
        }
    }
    const RecursionEquivalenceReport report = compare_lambda_recursion(40);
    s.expect(report.confined_to_boundary(), report.summary());
    s.note(report.summary());
    return s.finish();
}

SuiteResult phi_checks() {
    Suite s("phi-series");
    const std::size_t order = 10;
    const LambdaTable dp = lambda_positional_dp(6 + 2 * static_cast<int>(order));
    const AlgebraicPack pack = build_algebraic_pack(order);
    std::string last;
    for (int n = 1; n <= 6; ++n) {
        const PhiReport r = check_phi_recurrence(dp, n, order, pack);
        s.expect(r.recurrence_holds(), r.summary());
        s.expect(r.closed_form_holds(), r.summary());
        last = r.summary();
    }
    s.note(last);
    return s.finish();
}

SuiteResult cross_methods(const VerifyOptions& opt) {
    Suite s("ie-vs-series");
    const int n = opt.cross_method_n_max;
    for (int k = 4; k <= 6; ++k) {
        const CountTable ie = t4_inclusion_exclusion(k, n);
        const CountTable fe = t4_functional_equation(k, n);
        for (int i = 0; i <= n; ++i) s.expect_equal(ie.values[i], fe.values[i], cell("lambda4 ie/series", k, 4, i));
    }
    for (int k = 3; k <= 5; ++k) {
        const CountTable ie = t_lambda3(k, n, CountMethod::inclusion_exclusion);
        const CountTable fe = t_lambda3(k, n, CountMethod::functional_equation);
        for (int i = 0; i <= n; ++i) s.expect_equal(ie.values[i], fe.values[i], cell("lambda3 ie/series", k, 3, i));
    }
    const CountTable w = t2_waterman(20);
    const CountTable l2 = t_lambda2(2, 20);
    for (int i = 0; i <= 20; ++i) s.expect_equal(w.values[i], l2.values[i], cell("waterman/ie", 2, 2, i));

    static const long table1[] = {1, 1, 1, 1, 2, 5, 15, 51, 179, 647, 2397, 9081, 35181, 139307, 563218};
    const CountTable t = t4_functional_equation(4, 15);
    for (int i = 1; i <= 15; ++i) s.expect_equal(t.values[i], mpz_class(table1[i - 1]), cell("reference", 4, 4, i));
    return s.finish();
}

SuiteResult growth_rates() {
    Suite s("growth-rates");
    static const char* expected[] = {"6.52900", "8.64830", "10.71759", "12.76349", "14.79631"};
    for (int k = 4; k <= 8; ++k) {
        const SingularityReport r = solve_gamma(k, 4);
        const std::string got = r.growth_rate.to_fixed(5);
        s.expect(got == expected[k - 4], "growth rate k=" + std::to_string(k) + " got " + got);
        s.expect(r.residual < Real(mpq_class(1e-12), 64), "residual k=" + std::to_string(k));
    }
    return s.finish();
}

}  // namespace

std::vector<SuiteResult> run_verification(const VerifyOptions& options) {
    if (options.n_max < 0) throw InvalidParameter("verify: n_max must be >= 0");
    std::vector<SuiteResult> out;
    out.push_back(oracle_equivalence(options));
    out.push_back(matching_backends(options));
    out.push_back(partial_matching_identity());
    out.push_back(algebraic_pack());
    out.push_back(lambda_tables(options));
    out.push_back(phi_checks());
    out.push_back(cross_methods(options));
    out.push_back(growth_rates());
    return out;
}

}  // namespace pkenum

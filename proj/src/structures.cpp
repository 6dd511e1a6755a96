#include "pkenum/structures.hpp"

#include <algorithm>

#include "pkenum/combinatorics.hpp"
#include "pkenum/diagrams.hpp"
#include "pkenum/errors.hpp"
#include "pkenum/exact_series.hpp"
#include "pkenum/shortarcs.hpp"

namespace pkenum {

std::string_view to_string(CountMethod m) {
    switch (m) {
        case CountMethod::oracle: return "oracle";
        case CountMethod::inclusion_exclusion: return "ie";
        case CountMethod::functional_equation: return "series";
        case CountMethod::waterman: return "waterman";
        case CountMethod::partial_matchings: return "partial-matchings";
    }
    return "?";
}

namespace {

void check_common(int k, int n_max) {
    if (k < 2) throw InvalidParameter("k must be >= 2, got " + std::to_string(k));
    if (n_max < 0) throw InvalidParameter("n_max must be >= 0, got " + std::to_string(n_max));
}

[[noreturn]] void out_of_scope(const std::string& what) {
    throw UnsupportedParameter(what + "; use --method oracle (brute force, n <= ~16) instead");
}

// sum_b (-1)^b placements(n, b) M(n - 2b)
std::vector<mpz_class> alternating_sum(const LambdaTable& placements, const std::vector<mpz_class>& partial,
                                       int n_max) {
    std::vector<mpz_class> out(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        mpz_class acc = 0;
        for (int b = 0; 2 * b <= n; ++b) {
            if (b % 2 == 0) {
                acc += placements.at(n, b) * partial[n - 2 * b];
            } else {
                acc -= placements.at(n, b) * partial[n - 2 * b];
            }
        }
        out[n] = std::move(acc);
    }
    return out;
}

std::vector<mpz_class> integer_coefficients(const Series& s, int n_max, const char* route) {
    std::vector<mpz_class> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        const mpq_class& c = s[static_cast<std::size_t>(n)];
        if (c.get_den() != 1) {
            throw DomainError(std::string(route) + ": non-integer coefficient " + c.get_str() + " at z^" +
                              std::to_string(n));
        }
        out.push_back(c.get_num());
    }
    return out;
}

}  // namespace

CountTable t2_waterman_lambda(int lambda_min, int n_max) {
    check_common(2, n_max);
    if (lambda_min < 1) throw InvalidParameter("lambda_min must be >= 1");
    CountTable t{2, lambda_min, CountMethod::waterman, {}};
    auto& v = t.values;
    v.resize(static_cast<std::size_t>(n_max) + 1);
    v[0] = 1;
    for (int n = 1; n <= n_max; ++n) {
        mpz_class acc = v[n - 1];
        for (int s = 0; s <= n - lambda_min - 1; ++s) acc += v[n - 2 - s] * v[s];
        v[n] = std::move(acc);
    }
    return t;
}

CountTable t2_waterman(int n_max) { return t2_waterman_lambda(2, n_max); }

CountTable t_lambda2(int k, int n_max, MatchingBackend backend) {
    check_common(k, n_max);
    // Placements of b one-arcs on n vertices: C(n - b, b).
    const LambdaTable ones = lambda_positional_dp(n_max, 1);
    return {k, 2, CountMethod::inclusion_exclusion,
            alternating_sum(ones, count_partial_matchings(k, n_max, backend), n_max)};
}

CountTable t_lambda3(int k, int n_max, CountMethod method, MatchingBackend backend, int series_order) {
    check_common(k, n_max);
    if (k <= 2) {
        out_of_scope("lambda_min = 3 formulas need k > 2 (arcs of length <= 2 can lie in a 2-crossing)");
    }
    if (method == CountMethod::inclusion_exclusion) {
        const LambdaTable placements = lambda_positional_dp(n_max, 2);
        return {k, 3, method, alternating_sum(placements, count_partial_matchings(k, n_max, backend), n_max)};
    }
    if (method != CountMethod::functional_equation) {
        throw InvalidParameter("t_lambda3: method must be ie or series");
    }
    const std::size_t order = static_cast<std::size_t>(std::max({n_max, series_order, 1}));
    const Series F = matching_ogf(count_matchings(k, static_cast<int>(order / 2), backend), order);
    const Series inv_d = reciprocal(Series(order, {1, -1, 1, 1, -1}));
    const Series inner = Series(order, {0, 1, 0, -1}) * inv_d;
    const Series total = inv_d * compose(F, inner);
    return {k, 3, method, integer_coefficients(total, n_max, "lambda_min = 3 series route")};
}

CountTable t4_inclusion_exclusion(int k, int n_max, MatchingBackend backend) {
    check_common(k, n_max);
    if (k <= 3) out_of_scope("lambda_min = 4 formulas need k > 3 (short arcs lie in at most a 3-crossing)");
    const LambdaTable placements = lambda_positional_dp(n_max, 3);
    return {k, 4, CountMethod::inclusion_exclusion,
            alternating_sum(placements, count_partial_matchings(k, n_max, backend), n_max)};
}

CountTable t4_functional_equation(int k, int n_max, MatchingBackend backend, int series_order) {
    check_common(k, n_max);
    if (k <= 3) out_of_scope("lambda_min = 4 formulas need k > 3 (short arcs lie in at most a 3-crossing)");
    const std::size_t order = static_cast<std::size_t>(std::max({n_max, series_order, 1}));
    const AlgebraicPack pack = build_algebraic_pack(order);
    const Series F = matching_ogf(count_matchings(k, static_cast<int>(order / 2), backend), order);
    const Series total = pack.prefactor1 * compose(F, pack.theta1) + pack.prefactor2 * compose(F, pack.theta2);
    return {k, 4, CountMethod::functional_equation,
            integer_coefficients(total, n_max, "lambda_min = 4 functional equation")};
}

CountTable count_by_oracle(int k, int lambda_min, int n_max) {
    check_common(k, n_max);
    DiagramFilter filter;
    filter.k = k;
    filter.lambda_min = lambda_min;
    CountTable t{k, lambda_min, CountMethod::oracle, {}};
    for (int n = 0; n <= n_max; ++n) t.values.push_back(enumerate(n, filter));
    return t;
}

CountMethod default_method(int k, int lambda_min) {
    if (lambda_min == 1) return CountMethod::partial_matchings;
    if (k == 2) return CountMethod::waterman;
    if (lambda_min == 2) return CountMethod::inclusion_exclusion;
    if (lambda_min == 3) return CountMethod::inclusion_exclusion;
    if (lambda_min == 4 && k > 3) return CountMethod::inclusion_exclusion;
    return CountMethod::oracle;
}

CountTable count_structures(int k, int lambda_min, int n_max, CountMethod method, MatchingBackend backend,
                            int series_order) {
    check_common(k, n_max);
    if (lambda_min < 1) throw InvalidParameter("lambda_min must be >= 1");
    switch (method) {
        case CountMethod::oracle:
            return count_by_oracle(k, lambda_min, n_max);
        case CountMethod::waterman:
            if (k != 2) out_of_scope("the Waterman recursion counts secondary structures (k = 2) only");
            return t2_waterman_lambda(lambda_min, n_max);
        case CountMethod::partial_matchings: {
            if (lambda_min != 1) {
                throw UnsupportedParameter("partial matchings count lambda_min = 1 only; pick ie, series or oracle");
            }
            return {k, 1, method, count_partial_matchings(k, n_max, backend)};
        }
        case CountMethod::inclusion_exclusion:
            if (lambda_min == 2) return t_lambda2(k, n_max, backend);
            if (lambda_min == 3) return t_lambda3(k, n_max, method, backend);
            if (lambda_min == 4) return t4_inclusion_exclusion(k, n_max, backend);
            out_of_scope("no inclusion-exclusion route for lambda_min = " + std::to_string(lambda_min));
        case CountMethod::functional_equation: {
            if (lambda_min == 1) {
                // sum_n M_k(n) z^n = 1/(1-z) F_k(z/(1-z))
                const std::size_t order = static_cast<std::size_t>(std::max({n_max, series_order, 1}));
                const Series F = matching_ogf(count_matchings(k, static_cast<int>(order / 2), backend), order);
                const Series inv = reciprocal(Series(order, {1, -1}));
                const Series total = inv * compose(F, Series::variable(order) * inv);
                return {k, 1, method, integer_coefficients(total, n_max, "partial matching series")};
            }
            if (lambda_min == 3) return t_lambda3(k, n_max, method, backend, series_order);
            if (lambda_min == 4) return t4_functional_equation(k, n_max, backend, series_order);
            out_of_scope("no series route for lambda_min = " + std::to_string(lambda_min));
        }
    }
    throw InvalidParameter("unknown count method");
}

}  // namespace pkenum

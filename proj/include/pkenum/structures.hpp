#pragma once

// Counts of k-noncrossing structures with minimum arc length lambda_min,
// T_k^{[lambda]}(n), by every available route.

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "pkenum/matchings.hpp"

namespace pkenum {

enum class CountMethod {
    oracle,               // diagrams::enumerate
    inclusion_exclusion,  // alternating sum over short-arc placements
    functional_equation,  // series composition
    waterman,             // secondary-structure recursion (k = 2 only)
    partial_matchings,    // lambda_min = 1: M_k(n) from f_k(2n)
};

std::string_view to_string(CountMethod m);

struct CountTable {
    int k = 2;
    int lambda_min = 2;
    CountMethod method = CountMethod::oracle;
    std::vector<mpz_class> values;  // values[n], n = 0..n_max

    int n_max() const { return static_cast<int>(values.size()) - 1; }
};

// T_2^{[lambda]}(n) = T(n-1) + sum_{s=0}^{n-lambda-1} T(n-2-s) T(s), T(0) = 1.
CountTable t2_waterman_lambda(int lambda_min, int n_max);
CountTable t2_waterman(int n_max);

// T_k^{[2]}(n) = sum_b (-1)^b C(n-b, b) M_k(n-2b). Valid for all k >= 2.
CountTable t_lambda2(int k, int n_max, MatchingBackend backend = MatchingBackend::walk);

// lambda_min = 3, k > 2 only (both routes). The inclusion-exclusion route
// removes arcs of length <= 2; the series route evaluates
//   1/D(z) * F_k((z - z^3)/D(z)),  D = 1 - z + z^2 + z^3 - z^4.
// `series_order` (series route only) is the truncation order, raised to
// n_max when smaller.
CountTable t_lambda3(int k, int n_max, CountMethod method = CountMethod::inclusion_exclusion,
                     MatchingBackend backend = MatchingBackend::walk, int series_order = 0);

// lambda_min = 4, k > 3 only.
// T_k^{[4]}(n) = sum_b (-1)^b lambda(n, b) M_k(n - 2b), lambda over arcs of
// length <= 3 (positional DP).
CountTable t4_inclusion_exclusion(int k, int n_max, MatchingBackend backend = MatchingBackend::walk);

// T_k^{[4]}(z) = sum_j prefactor_j(z) F_k(theta_j(z)), j = 1, 2. Every
// extracted coefficient must be an integer; anything else is a DomainError.
CountTable t4_functional_equation(int k, int n_max, MatchingBackend backend = MatchingBackend::walk,
                                  int series_order = 0);

CountTable count_by_oracle(int k, int lambda_min, int n_max);

// Dispatches to the route named by `method`, enforcing each route's scope
// (UnsupportedParameter outside it).
CountTable count_structures(int k, int lambda_min, int n_max, CountMethod method,
                            MatchingBackend backend = MatchingBackend::walk, int series_order = 0);

// Fastest valid method for (k, lambda_min).
CountMethod default_method(int k, int lambda_min);

}  // namespace pkenum

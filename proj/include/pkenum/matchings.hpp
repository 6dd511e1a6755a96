#pragma once

// k-noncrossing perfect matchings f_k(2n) and partial matchings M_k(n).
//
// Two independent routes produce f_k(2n):
//   walk        closed lattice walks in the chamber a_1 >= ... >= a_{k-1} >= 0
//               with unit steps (oscillating tableaux with at most k-1 rows);
//   determinant coefficient extraction from det[I_{i-j}(2z) - I_{i+j}(2z)],
//               the exponential generating function of f_k(2n).

#include <cstddef>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "pkenum/exact_series.hpp"

namespace pkenum {

enum class MatchingBackend { walk, determinant };

std::string_view to_string(MatchingBackend b);

// Chamber coordinates, weakly decreasing and nonnegative.
using ChamberState = std::vector<int>;

bool is_chamber_state(const ChamberState& s);

struct MatchingTable {
    int k = 2;
    MatchingBackend backend = MatchingBackend::walk;
    std::vector<mpz_class> values;  // values[n] = f_k(2n), n = 0..n_max

    int n_max() const { return static_cast<int>(values.size()) - 1; }
};

// Walks are limited to n_max <= 255 (coordinates are stored as bytes).
MatchingTable count_matchings_walk(int k, int n_max);

MatchingTable count_matchings_determinant(int k, int n_max);

MatchingTable count_matchings(int k, int n_max, MatchingBackend backend = MatchingBackend::walk);

// M_k(n) = sum_m C(n, 2m) f_k(2m) for n = 0..n_max.
std::vector<mpz_class> count_partial_matchings(const MatchingTable& f, int n_max);
std::vector<mpz_class> count_partial_matchings(int k, int n_max,
                                               MatchingBackend backend = MatchingBackend::walk);

// F_k(z) = sum_n f_k(2n) z^{2n} truncated at `order`; needs f up to
// n = order / 2.
Series matching_ogf(const MatchingTable& f, std::size_t order);

// I_r(2z) = sum_j z^{2j+r} / (j! (r+j)!) to the given order, r >= 0.
Series bessel_series(int r, std::size_t order);

}  // namespace pkenum

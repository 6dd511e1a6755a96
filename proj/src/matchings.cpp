#include "pkenum/matchings.hpp"

#include <string>
#include <unordered_map>

#include "pkenum/combinatorics.hpp"
#include "pkenum/errors.hpp"

namespace pkenum {

std::string_view to_string(MatchingBackend b) {
    switch (b) {
        case MatchingBackend::walk: return "walk";
        case MatchingBackend::determinant: return "bessel";
    }
    return "?";
}

bool is_chamber_state(const ChamberState& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0) return false;
        if (i > 0 && s[i] > s[i - 1]) return false;
    }
    return true;
}

namespace {

void check_k(int k, int n_max) {
    if (k < 2) throw InvalidParameter("k must be >= 2, got " + std::to_string(k));
    if (n_max < 0) throw InvalidParameter("n_max must be >= 0");
}

}  // namespace

MatchingTable count_matchings_walk(int k, int n_max) {
    check_k(k, n_max);
    if (n_max > 255) throw InvalidParameter("walk backend supports n_max <= 255");

    // Keys hold one byte per chamber coordinate.
    using Level = std::unordered_map<std::string, mpz_class>;
    const std::size_t dim = static_cast<std::size_t>(k - 1);
    const std::string origin(dim, '\0');

    MatchingTable table{k, MatchingBackend::walk, {mpz_class(1)}};
    Level current{{origin, mpz_class(1)}};
    const int total = 2 * n_max;
    for (int step = 1; step <= total; ++step) {
        const int remaining = total - step;
        Level next;
        next.reserve(current.size() * 2);
        for (const auto& [key, count] : current) {
            int sum = 0;
            for (unsigned char c : key) sum += c;
            for (std::size_t i = 0; i < dim; ++i) {
                const int ai = static_cast<unsigned char>(key[i]);
                // +e_i keeps a_{i-1} >= a_i.
                if ((i == 0 || static_cast<unsigned char>(key[i - 1]) > ai) && sum + 1 <= remaining) {
                    std::string up = key;
                    up[i] = static_cast<char>(ai + 1);
                    next[up] += count;
                }
                // -e_i keeps a_i >= a_{i+1} and a_i >= 0.
                const int below = i + 1 < dim ? static_cast<unsigned char>(key[i + 1]) : 0;
                if (ai > below && sum - 1 <= remaining) {
                    std::string down = key;
                    down[i] = static_cast<char>(ai - 1);
                    next[down] += count;
                }
            }
        }
        current = std::move(next);
        if (step % 2 == 0) {
            auto it = current.find(origin);
            table.values.push_back(it == current.end() ? mpz_class(0) : it->second);
        }
    }
    return table;
}

Series bessel_series(int r, std::size_t order) {
    if (r < 0) throw InvalidParameter("bessel_series: order r must be >= 0");
    Series s(order);
    mpz_class jf = 1;                // j!
    mpz_class rjf = factorial(r);    // (r+j)!
    for (std::size_t j = 0; 2 * j + static_cast<std::size_t>(r) <= order; ++j) {
        if (j > 0) {
            jf *= static_cast<unsigned long>(j);
            rjf *= static_cast<unsigned long>(r) + j;
        }
        s[2 * j + static_cast<std::size_t>(r)] = mpq_class(mpz_class(1), jf * rjf);
    }
    return s;
}

MatchingTable count_matchings_determinant(int k, int n_max) {
    check_k(k, n_max);
    const int dim = k - 1;
    const std::size_t order = 2 * static_cast<std::size_t>(n_max);

    std::vector<Series> bessel;
    bessel.reserve(2 * static_cast<std::size_t>(dim) + 1);
    for (int r = 0; r <= 2 * dim; ++r) bessel.push_back(bessel_series(r, order));

    std::vector<std::vector<Series>> m(dim, std::vector<Series>(dim));
    for (int i = 1; i <= dim; ++i) {
        for (int j = 1; j <= dim; ++j) {
            m[i - 1][j - 1] = bessel[std::abs(i - j)] - bessel[i + j];
        }
    }

    // At z = 0 the matrix is the identity, so every pivot is a unit of the
    // series ring and elimination needs no row exchanges.
    Series det = Series::constant(order, 1);
    for (int c = 0; c < dim; ++c) {
        const Series& pivot = m[c][c];
        if (pivot[0] == 0) throw DomainError("determinant backend: singular pivot");
        det = det * pivot;
        const Series inv = reciprocal(pivot);
        for (int r = c + 1; r < dim; ++r) {
            if (m[r][c].is_zero()) continue;
            const Series factor = m[r][c] * inv;
            for (int j = c + 1; j < dim; ++j) m[r][j] -= factor * m[c][j];
        }
    }

    MatchingTable table{k, MatchingBackend::determinant, {}};
    table.values.reserve(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        const mpq_class scaled = det[2 * static_cast<std::size_t>(n)] * factorial(2 * n);
        if (scaled.get_den() != 1) {
            throw DomainError("determinant backend produced a non-integer f_k(2n) at n = " +
                              std::to_string(n));
        }
        table.values.push_back(scaled.get_num());
    }
    return table;
}

MatchingTable count_matchings(int k, int n_max, MatchingBackend backend) {
    return backend == MatchingBackend::walk ? count_matchings_walk(k, n_max)
                                            : count_matchings_determinant(k, n_max);
}

std::vector<mpz_class> count_partial_matchings(const MatchingTable& f, int n_max) {
    if (n_max < 0) throw InvalidParameter("n_max must be >= 0");
    if (2 * f.n_max() + 1 < n_max) {
        throw InvalidParameter("count_partial_matchings: matching table too short");
    }
    const BinomialTable binom(n_max);
    std::vector<mpz_class> m(static_cast<std::size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        for (int j = 0; 2 * j <= n; ++j) m[n] += binom(n, 2 * j) * f.values[j];
    }
    return m;
}

std::vector<mpz_class> count_partial_matchings(int k, int n_max, MatchingBackend backend) {
    return count_partial_matchings(count_matchings(k, n_max / 2, backend), n_max);
}

Series matching_ogf(const MatchingTable& f, std::size_t order) {
    if (static_cast<std::size_t>(2 * f.n_max()) + 1 < order) {
        throw InvalidParameter("matching_ogf: matching table too short for the requested order");
    }
    Series s(order);
    for (std::size_t n = 0; 2 * n <= order; ++n) s[2 * n] = f.values[n];
    return s;
}

}  // namespace pkenum

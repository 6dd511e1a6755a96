#include "pkenum/shortarcs.hpp"

#include <sstream>

#include "pkenum/diagrams.hpp"
#include "pkenum/errors.hpp"

namespace pkenum {

std::string_view to_string(LambdaSource s) {
    switch (s) {
        case LambdaSource::paper_recursion: return "paper-recursion";
        case LambdaSource::positional_dp: return "positional-dp";
        case LambdaSource::oracle: return "oracle";
    }
    return "?";
}

LambdaTable::LambdaTable(int max_n, LambdaSource source) : source_(source) {
    if (max_n < 0) throw InvalidParameter("LambdaTable: max_n must be >= 0");
    rows_.resize(static_cast<std::size_t>(max_n) + 1);
    for (int n = 0; n <= max_n; ++n) rows_[n].assign(static_cast<std::size_t>(n / 2) + 1, mpz_class(0));
}

mpz_class LambdaTable::at(int n, int b) const {
    if (n < 0 || b < 0 || 2 * b > n) return 0;
    if (n > max_n()) throw InvalidParameter("LambdaTable: n = " + std::to_string(n) + " beyond table");
    return rows_[n][b];
}

void LambdaTable::set(int n, int b, mpz_class value) {
    if (n < 0 || n > max_n() || b < 0 || 2 * b > n) {
        throw InvalidParameter("LambdaTable::set: cell out of range");
    }
    rows_[n][b] = std::move(value);
}

LambdaTable lambda_paper_recursion(int max_n, SeedConvention seeds) {
    LambdaTable t(max_n, LambdaSource::paper_recursion);
    for (int n = 0; n <= max_n; ++n) {
        for (int b = 0; 2 * b <= n; ++b) {
            if (b == 0) {
                t.set(n, b, 1);
                continue;
            }
            if (b == 1) {
                const bool fix = seeds == SeedConvention::corrected && n == 2;
                t.set(n, b, fix ? 1 : 3 * n - 6);
                continue;
            }
            mpz_class v = t.at(n - 1, b) + t.at(n - 4, b - 2) + t.at(n - 5, b - 2) + t.at(n - 6, b - 3);
            for (int i = 1; i <= b; ++i) {
                v += t.at(n - 2 * i, b - i) + 2 * t.at(n - 2 * i - 1, b - i) + t.at(n - 2 * i - 2, b - i);
            }
            v -= t.at(n - 3, b - 1);
            t.set(n, b, std::move(v));
        }
    }
    return t;
}

LambdaTable lambda_positional_dp(int max_n, int max_arc_length) {
    if (max_arc_length < 1 || max_arc_length > 3) {
        throw InvalidParameter("lambda_positional_dp: max_arc_length must be 1, 2 or 3");
    }
    LambdaTable t(max_n, LambdaSource::positional_dp);
    const unsigned window = 1u << max_arc_length;

    // state[mask][b]: bit d of mask marks vertex pos + d as already taken by
    // an arc opened earlier.
    std::vector<std::vector<mpz_class>> state(window, std::vector<mpz_class>(1));
    state[0][0] = 1;
    t.set(0, 0, 1);
    for (int pos = 1; pos <= max_n; ++pos) {
        // Open arcs may run ahead of the closed ones, so grow by one per step.
        const std::size_t width = state[0].size() + 1;
        std::vector<std::vector<mpz_class>> next(window, std::vector<mpz_class>(width));
        for (unsigned mask = 0; mask < window; ++mask) {
            const auto& poly = state[mask];
            for (std::size_t b = 0; b < poly.size(); ++b) {
                if (poly[b] == 0) continue;
                next[mask >> 1][b] += poly[b];
                if (mask & 1u) continue;
                for (int len = 1; len <= max_arc_length; ++len) {
                    if (mask & (1u << len)) continue;
                    next[(mask | (1u << len)) >> 1][b + 1] += poly[b];
                }
            }
        }
        state = std::move(next);
        for (int b = 0; 2 * b <= pos; ++b) t.set(pos, b, state[0][b]);
    }
    return t;
}

LambdaTable lambda_oracle(int max_n) {
    LambdaTable t(max_n, LambdaSource::oracle);
    for (int n = 0; n <= max_n; ++n) {
        for (int b = 0; 2 * b <= n; ++b) {
            mpz_class total = 0;
            for (int b1 = 0; b1 <= b; ++b1) {
                for (int b2 = 0; b1 + b2 <= b; ++b2) {
                    total += count_short_arc_placements(n, b1, b2, b - b1 - b2);
                }
            }
            t.set(n, b, std::move(total));
        }
    }
    return t;
}

mpz_class MultivariateLambdaTable::at(int n, int b1, int b2, int b3) const {
    if (n < 0 || b1 < 0 || b2 < 0 || b3 < 0) return 0;
    const auto& r = rows_.at(static_cast<std::size_t>(n));
    auto it = r.find({b1, b2, b3});
    return it == r.end() ? mpz_class(0) : it->second;
}

mpz_class MultivariateLambdaTable::aggregate(int n, int b) const {
    mpz_class total = 0;
    for (const auto& [key, v] : row(n)) {
        if (key[0] + key[1] + key[2] == b) total += v;
    }
    return total;
}

MultivariateLambdaTable lambda_multivariate(int max_n) {
    if (max_n < 0) throw InvalidParameter("lambda_multivariate: max_n must be >= 0");
    using Key = MultivariateLambdaTable::Key;
    MultivariateLambdaTable t;
    t.rows_.resize(static_cast<std::size_t>(max_n) + 1);

    std::vector<std::map<Key, mpz_class>> state(8);
    state[0][{0, 0, 0}] = 1;
    t.rows_[0] = state[0];
    for (int pos = 1; pos <= max_n; ++pos) {
        std::vector<std::map<Key, mpz_class>> next(8);
        for (unsigned mask = 0; mask < 8; ++mask) {
            for (const auto& [key, v] : state[mask]) {
                next[mask >> 1][key] += v;
                if (mask & 1u) continue;
                for (int len = 1; len <= 3; ++len) {
                    if (mask & (1u << len)) continue;
                    Key grown = key;
                    ++grown[len - 1];
                    next[(mask | (1u << len)) >> 1][grown] += v;
                }
            }
        }
        state = std::move(next);
        t.rows_[pos] = state[0];
    }
    return t;
}

Series phi_series(const LambdaTable& table, int n, std::size_t order) {
    if (n < 0) throw InvalidParameter("phi_series: n must be >= 0");
    if (n + 2 * static_cast<long>(order) > table.max_n()) {
        throw InvalidParameter("phi_series: lambda table must reach n + 2*order = " +
                               std::to_string(n + 2 * order));
    }
    Series s(order);
    for (std::size_t b = 0; b <= order; ++b) s[b] = table.at(n + 2 * static_cast<int>(b), static_cast<int>(b));
    return s;
}

namespace {

long agrees_through(const Series& lhs, const Series& rhs) {
    const std::size_t n = std::min(lhs.order(), rhs.order());
    for (std::size_t i = 0; i <= n; ++i) {
        if (lhs[i] != rhs[i]) return static_cast<long>(i) - 1;
    }
    return static_cast<long>(n);
}

Series power(const Series& s, int e) {
    Series r = Series::constant(s.order(), 1);
    for (int i = 0; i < e; ++i) r = r * s;
    return r;
}

}  // namespace

PhiReport check_phi_recurrence(const LambdaTable& table, int n, std::size_t order,
                               const AlgebraicPack& pack) {
    if (n < 1) throw InvalidParameter("check_phi_recurrence: n must be >= 1");
    if (pack.order < order) throw InvalidParameter("check_phi_recurrence: algebraic pack order too low");

    PhiReport report;
    report.n = n;
    report.order = order;

    const Series phi_n = phi_series(table, n, order);
    const Series phi_1 = phi_series(table, n - 1, order);
    const Series phi_2 = n >= 2 ? phi_series(table, n - 2, order) : Series(order);
    const Series a = pack.a.truncated(order);
    const Series B = pack.B.truncated(order);
    const Series z = Series::variable(order);
    report.recurrence_agrees_through = agrees_through(a * phi_n, B * phi_1 + z * phi_2);

    const Series f1 = pack.f1.truncated(order);
    const Series f2 = pack.f2.truncated(order);
    const Series f1n = power(f1, n);
    const Series f2n = power(f2, n);
    report.closed_form_agrees_through =
        agrees_through(phi_n, pack.F1.truncated(order) * f1n + pack.F2.truncated(order) * f2n);

    const CoefficientPair unit = unit_initial_coefficients(pack);
    report.unit_closed_form_agrees_through =
        agrees_through(phi_n, unit.F1.truncated(order) * f1n + unit.F2.truncated(order) * f2n);
    return report;
}

std::string PhiReport::summary() const {
    std::ostringstream os;
    auto range = [&](long through) {
        if (through == static_cast<long>(order)) return std::string("holds through z^") + std::to_string(order);
        return std::string("fails at z^") + std::to_string(through + 1);
    };
    os << "phi_" << n << ": recurrence " << range(recurrence_agrees_through) << "; closed form "
       << range(closed_form_agrees_through) << "; unit initial conditions "
       << range(unit_closed_form_agrees_through);
    return os.str();
}

bool RecursionEquivalenceReport::confined_to_boundary() const {
    if (!reseeded_mismatches.empty()) return false;
    for (const auto& m : seed_mismatches) {
        if (m.n >= 3) return false;
    }
    return true;
}

std::string RecursionEquivalenceReport::summary() const {
    std::ostringstream os;
    os << "3n-6 seeded lambda recursion vs positional DP, n <= " << max_n << ": ";
    os << seed_mismatches.size() << " seed cell(s) differ";
    for (const auto& m : seed_mismatches) {
        os << " [lambda(" << m.n << "," << m.b << ") seeded " << m.actual.get_str() << ", actual "
           << m.expected.get_str() << "]";
    }
    os << "; " << verbatim_mismatches.size() << " downstream cell(s) differ with verbatim seeds";
    os << "; " << reseeded_mismatches.size() << " with corrected seeds";
    return os.str();
}

RecursionEquivalenceReport compare_lambda_recursion(int max_n) {
    const LambdaTable reference = lambda_positional_dp(max_n);
    const LambdaTable verbatim = lambda_paper_recursion(max_n, SeedConvention::verbatim);
    const LambdaTable reseeded = lambda_paper_recursion(max_n, SeedConvention::corrected);

    RecursionEquivalenceReport report;
    report.max_n = max_n;
    for (int n = 0; n <= max_n; ++n) {
        for (int b = 0; 2 * b <= n; ++b) {
            const mpz_class want = reference.at(n, b);
            if (verbatim.at(n, b) != want) {
                LambdaMismatch m{n, b, want, verbatim.at(n, b)};
                if (b <= 1) report.seed_mismatches.push_back(m);
                report.verbatim_mismatches.push_back(std::move(m));
            }
            if (reseeded.at(n, b) != want) {
                report.reseeded_mismatches.push_back({n, b, want, reseeded.at(n, b)});
            }
        }
    }
    return report;
}

}  // namespace pkenum

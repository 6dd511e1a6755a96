#include "pkenum/diagrams.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "pkenum/errors.hpp"

namespace pkenum {

Diagram::Diagram(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    if (n < 0) throw InvalidParameter("Diagram: negative vertex count");
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    for (const Arc& a : arcs_) {
        if (a.left < 1 || a.left >= a.right || a.right > n) {
            throw InvalidParameter("Diagram: arc (" + std::to_string(a.left) + "," +
                                   std::to_string(a.right) + ") outside 1 <= i < j <= " +
                                   std::to_string(n));
        }
        if (used[a.left] || used[a.right]) {
            throw InvalidParameter("Diagram: vertex used by two arcs");
        }
        used[a.left] = used[a.right] = true;
    }
    std::sort(arcs_.begin(), arcs_.end());
}

Diagram Diagram::reflected() const {
    std::vector<Arc> out;
    out.reserve(arcs_.size());
    for (const Arc& a : arcs_) out.push_back({n_ + 1 - a.right, n_ + 1 - a.left});
    return Diagram(n_, std::move(out));
}

void DiagramFilter::validate() const {
    if (k < 2) throw InvalidParameter("crossing bound k must be >= 2, got " + std::to_string(k));
    if (lambda_min < 1) {
        throw InvalidParameter("lambda_min must be >= 1, got " + std::to_string(lambda_min));
    }
    if (isolated_count && *isolated_count < 0) {
        throw InvalidParameter("isolated_count must be >= 0");
    }
    if (require_perfect && isolated_count && *isolated_count != 0) {
        throw InvalidParameter("require_perfect conflicts with a nonzero isolated_count");
    }
}

namespace {

// Largest clique in the crossing graph; arcs are sorted by left endpoint.
int max_crossing_clique(std::span<const Arc> arcs, std::vector<Arc>& clique, std::size_t from) {
    int best = static_cast<int>(clique.size());
    for (std::size_t idx = from; idx < arcs.size(); ++idx) {
        const Arc& a = arcs[idx];
        bool ok = std::all_of(clique.begin(), clique.end(),
                              [&](const Arc& c) { return crosses(c, a); });
        if (!ok) continue;
        clique.push_back(a);
        best = std::max(best, max_crossing_clique(arcs, clique, idx + 1));
        clique.pop_back();
    }
    return best;
}

class Enumerator {
public:
    Enumerator(int n, const DiagramFilter& f, const DiagramVisitor& visitor)
        : n_(n), filter_(f), visitor_(visitor), matched_(static_cast<std::size_t>(n) + 2, false) {}

    mpz_class run() {
        extend(1, 0);
        return count_;
    }

private:
    // All vertices < v are decided; `isolated_before` of them are isolated.
    void extend(int v, int isolated_before) {
        const int isolated_total = n_ - 2 * static_cast<int>(arcs_.size());
        if (accepts_isolated(isolated_total)) {
            ++count_;
            if (visitor_) visitor_(Diagram(n_, arcs_));
        }

        int isolated = isolated_before;
        for (int i = v; i <= n_; ++i) {
            if (matched_[i]) continue;
            if (filter_.isolated_count && isolated > *filter_.isolated_count) break;
            for (int j = i + filter_.lambda_min; j <= n_; ++j) {
                if (matched_[j]) continue;
                Arc arc{i, j};
                if (longest_crossing_with(arc) >= filter_.k) continue;
                arcs_.push_back(arc);
                matched_[i] = matched_[j] = true;
                extend(i + 1, isolated);
                matched_[i] = matched_[j] = false;
                arcs_.pop_back();
            }
            // Passing over i leaves it isolated.
            if (filter_.require_perfect) break;
            ++isolated;
        }
    }

    bool accepts_isolated(int isolated) const {
        if (filter_.require_perfect && isolated != 0) return false;
        if (filter_.isolated_count && isolated != *filter_.isolated_count) return false;
        return true;
    }

    // Size of the largest crossing set that contains `arc`, whose left end
    // exceeds every stored left end. Arcs crossing it are (r, s) with
    // r < i < s < j; two of those cross iff their right ends increase with
    // their left ends, so the answer is 1 + the longest increasing run of
    // right ends.
    int longest_crossing_with(const Arc& arc) const {
        tails_.clear();
        for (const Arc& a : arcs_) {
            if (!(a.right > arc.left && a.right < arc.right)) continue;
            auto it = std::lower_bound(tails_.begin(), tails_.end(), a.right);
            if (it == tails_.end()) {
                tails_.push_back(a.right);
            } else {
                *it = a.right;
            }
        }
        return 1 + static_cast<int>(tails_.size());
    }

    int n_;
    const DiagramFilter& filter_;
    const DiagramVisitor& visitor_;
    std::vector<bool> matched_;
    std::vector<Arc> arcs_;
    mutable std::vector<int> tails_;
    mpz_class count_ = 0;
};

void place_short_arcs(int v, int n, std::array<int, 3>& remaining, std::vector<bool>& matched,
                      mpz_class& count) {
    while (v <= n && matched[v]) ++v;
    if (v > n) {
        if (remaining == std::array<int, 3>{0, 0, 0}) ++count;
        return;
    }
    place_short_arcs(v + 1, n, remaining, matched, count);
    for (int len = 1; len <= 3; ++len) {
        int w = v + len;
        if (w > n || matched[w] || remaining[len - 1] == 0) continue;
        --remaining[len - 1];
        matched[w] = true;
        place_short_arcs(v + 1, n, remaining, matched, count);
        matched[w] = false;
        ++remaining[len - 1];
    }
}

}  // namespace

int crossing_number(const Diagram& d) {
    std::vector<Arc> clique;
    return max_crossing_clique(d.arcs(), clique, 0);
}

mpz_class enumerate(int n, const DiagramFilter& filter, const DiagramVisitor& visitor) {
    filter.validate();
    if (n < 0) throw InvalidParameter("enumerate: n must be >= 0");
    return Enumerator(n, filter, visitor).run();
}

mpz_class count_short_arc_placements(int n, int b1, int b2, int b3) {
    if (n < 0 || b1 < 0 || b2 < 0 || b3 < 0) {
        throw InvalidParameter("count_short_arc_placements: arguments must be >= 0");
    }
    std::array<int, 3> remaining{b1, b2, b3};
    std::vector<bool> matched(static_cast<std::size_t>(n) + 2, false);
    mpz_class count = 0;
    place_short_arcs(1, n, remaining, matched, count);
    return count;
}

}  // namespace pkenum

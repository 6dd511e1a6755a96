#pragma once

// Diagram model and brute-force oracles.
//
// A diagram on n vertices 1..n is a partial matching drawn as arcs (i, j),
// i < j, in the upper half-plane. Everything the formula modules compute is
// cross-checked against the exhaustive counters here, so their conventions
// (n = 0, arc length, what counts as a crossing) are the reference ones.

#include <compare>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace pkenum {

struct Arc {
    int left = 0;
    int right = 0;

    int length() const { return right - left; }

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Arcs (i, j) and (r, s) with i < r cross iff i < r < j < s.
inline bool crosses(const Arc& a, const Arc& b) {
    if (a.left > b.left) return crosses(b, a);
    return a.left < b.left && b.left < a.right && a.right < b.right;
}

class Diagram {
public:
    Diagram() = default;

    // Throws InvalidParameter unless every arc satisfies 1 <= i < j <= n and
    // no vertex is used twice. Arcs are stored sorted.
    Diagram(int n, std::vector<Arc> arcs);

    int size() const { return n_; }
    std::span<const Arc> arcs() const { return arcs_; }
    int isolated_count() const { return n_ - 2 * static_cast<int>(arcs_.size()); }

    // Image under i -> n + 1 - i.
    Diagram reflected() const;

    friend bool operator==(const Diagram&, const Diagram&) = default;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;
};

struct DiagramFilter {
    int k = 2;           // reject diagrams containing k mutually crossing arcs
    int lambda_min = 1;  // minimum arc length
    bool require_perfect = false;
    std::optional<int> isolated_count;  // exact number of isolated vertices

    // Throws InvalidParameter on k < 2, lambda_min < 1 or an inconsistent
    // perfect/isolated combination.
    void validate() const;
};

// Size of the largest set of pairwise crossing arcs; 0 for no arcs.
int crossing_number(const Diagram& d);

using DiagramVisitor = std::function<void(const Diagram&)>;

// Exhaustive count of diagrams on n vertices accepted by the filter. The
// visitor, when given, sees every accepted diagram in lexicographic order of
// the (sorted) arc list. n = 0 yields the empty diagram. Intended for n up to
// about 16.
mpz_class enumerate(int n, const DiagramFilter& filter, const DiagramVisitor& visitor = {});

// Partial matchings of [n] whose arcs are exactly b1 arcs of length 1, b2 of
// length 2 and b3 of length 3. Crossings are allowed.
mpz_class count_short_arc_placements(int n, int b1, int b2, int b3);

}  // namespace pkenum

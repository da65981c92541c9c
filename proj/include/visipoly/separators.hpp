#pragma once

#include <algorithm>
#include <vector>

#include "visipoly/enumeration.hpp"
#include "visipoly/errors.hpp"
#include "visipoly/graph.hpp"
#include "visipoly/visibility.hpp"

namespace visipoly {

// Does every geodesic between u and v pass through sep? Equivalently,
// removing sep strictly lengthens (or severs) the u-v connection.
inline bool is_shortest_separator(const Graph& g, const DistanceMatrix& dist, int sep, int u,
                                  int v) {
    detail::check_vertex(g, sep, "is_shortest_separator");
    detail::check_vertex(g, u, "is_shortest_separator");
    detail::check_vertex(g, v, "is_shortest_separator");
    if (u == v) throw validity_error("is_shortest_separator: u and v must differ");
    if (sep == u || sep == v)
        throw validity_error("is_shortest_separator: separator must differ from the pair");
    VertexSet allowed = g.vertices().without(sep);
    return !detail::geodesic_survives(g, u, v, allowed, dist(u, v));
}

// All vertices that are a shortest-separator for at least one pair.
inline VertexSet path_cut(const Graph& g, const DistanceMatrix& dist) {
    VertexSet cut;
    const int n = g.vertex_count();
    for (int sep = 0; sep < n; ++sep) {
        for (int u = 0; u < n && !cut.contains(sep); ++u) {
            if (u == sep) continue;
            for (int v = u + 1; v < n; ++v) {
                if (v == sep) continue;
                if (is_shortest_separator(g, dist, sep, u, v)) {
                    cut = cut.with(sep);
                    break;
                }
            }
        }
    }
    return cut;
}

inline VertexSet path_cut(const Graph& g) { return path_cut(g, g.distances()); }

// Is sep a shortest-separator for every cross pair of the disjoint nonempty
// sets a and b?
inline bool is_set_separator(const Graph& g, const DistanceMatrix& dist, int sep, VertexSet a,
                             VertexSet b) {
    detail::check_vertex(g, sep, "is_set_separator");
    detail::check_set(g, a, "is_set_separator");
    detail::check_set(g, b, "is_set_separator");
    if (a.empty() || b.empty())
        throw validity_error("is_set_separator: both sets must be nonempty");
    if (a.intersects(b)) throw validity_error("is_set_separator: sets must be disjoint");
    if (a.contains(sep) || b.contains(sep))
        throw validity_error("is_set_separator: separator must lie outside both sets");
    for (int u : bits_of(a))
        for (int v : bits_of(b))
            if (!is_shortest_separator(g, dist, sep, u, v)) return false;
    return true;
}

// Is w visible through the fixed obstruction set q: every pair inside w and
// every cross pair (q-vertex, w-vertex) must be q-visible. w must avoid q.
inline bool is_cq_visible(const Graph& g, const DistanceMatrix& dist, VertexSet q, VertexSet w) {
    detail::check_set(g, q, "is_cq_visible");
    detail::check_set(g, w, "is_cq_visible");
    if (w.intersects(q)) throw validity_error("is_cq_visible: w must avoid q");
    VertexSet allowed = g.vertices() - q;
    auto inside = w.to_vector();
    for (std::size_t i = 0; i < inside.size(); ++i)
        for (std::size_t j = i + 1; j < inside.size(); ++j) {
            int u = inside[i], v = inside[j];
            if (!detail::geodesic_survives(g, u, v, allowed.with(u).with(v), dist(u, v)))
                return false;
        }
    for (int u : bits_of(q))
        for (int v : inside)
            if (!detail::geodesic_survives(g, u, v, allowed.with(u).with(v), dist(u, v)))
                return false;
    return true;
}

// The family of inclusion-maximal sets w in the complement of q with
// q ∪ w entirely q-visible, for a q that is itself a mutual-visibility set.
struct CqFamily {
    VertexSet q;
    std::vector<VertexSet> members;  // sorted by bitmask for reproducible output
    bool pairwise_disjoint = false;
};

// Enumerates the c_Q-visible subsets of the complement with the same pruned
// lattice walk as the visibility engine (c_Q-visibility is downward closed in
// w for fixed q), collects the extension-dead leaves, and keeps the
// inclusion-maximal ones. The empty set stands in when nothing qualifies.
// The enumeration cap applies to the complement, the walk's universe.
inline CqFamily maximal_absolute_cq_visible(const Graph& g, const DistanceMatrix& dist,
                                            VertexSet q,
                                            const EnumerationOptions& opts = {}) {
    if (!is_mutual_visibility_set(g, dist, q))
        throw validity_error("maximal_absolute_cq_visible: q is not a mutual-visibility set");
    VertexSet complement = g.vertices() - q;
    check_enumeration_cap(complement.count(), opts, "maximal_absolute_cq_visible");

    std::vector<VertexSet> leaves;
    bool any = detail::enumerate_leaves_from(
        VertexSet{}, 0, g.vertex_count(), complement,
        [&](VertexSet w) { return is_cq_visible(g, dist, q, w); },
        [&](VertexSet w) { leaves.push_back(w); });
    if (!any) leaves.push_back(VertexSet{});

    std::vector<VertexSet> maximal;
    for (VertexSet w : leaves) {
        bool dominated = false;
        for (VertexSet other : leaves)
            if (!(other == w) && w.subset_of(other)) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(w);
    }
    std::sort(maximal.begin(), maximal.end(),
              [](VertexSet a, VertexSet b) { return a.bits < b.bits; });
    maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());

    CqFamily fam;
    fam.q = q;
    fam.members = std::move(maximal);
    fam.pairwise_disjoint = true;
    for (std::size_t i = 0; i < fam.members.size() && fam.pairwise_disjoint; ++i)
        for (std::size_t j = i + 1; j < fam.members.size(); ++j)
            if (fam.members[i].intersects(fam.members[j])) {
                fam.pairwise_disjoint = false;
                break;
            }
    return fam;
}

inline CqFamily maximal_absolute_cq_visible(const Graph& g, VertexSet q,
                                            const EnumerationOptions& opts = {}) {
    return maximal_absolute_cq_visible(g, g.distances(), q, opts);
}

// Operational reading of "disjoint-visible": the maximal absolute
// c_Q-visible sets are pairwise disjoint (which collapses the
// inclusion-exclusion count over the family to a plain sum).
inline bool is_disjoint_visible(const Graph& g, const DistanceMatrix& dist, VertexSet q,
                                const EnumerationOptions& opts = {}) {
    return maximal_absolute_cq_visible(g, dist, q, opts).pairwise_disjoint;
}

}  // namespace visipoly

#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

#include "visipoly/enumeration.hpp"
#include "visipoly/errors.hpp"
#include "visipoly/graph.hpp"
#include "visipoly/polynomial.hpp"

namespace visipoly {

namespace detail {

// True iff some path from u to v of length dist(u,v) survives inside
// `allowed` (which must contain u and v). Level-synchronous BFS over
// neighbor masks; restricting vertices can only lengthen distances, so v is
// reachable at level target iff a geodesic survives.
inline bool geodesic_survives(const Graph& g, int u, int v, VertexSet allowed, int target) {
    if (target <= 1) return true;  // adjacent: no internal vertices to block
    VertexSet visited = VertexSet::single(u);
    VertexSet frontier = visited;
    for (int level = 1; level <= target; ++level) {
        VertexSet next;
        for (int w : bits_of(frontier)) next = next | g.neighbors(w);
        next = (next & allowed) - visited;
        if (next.empty()) return false;
        if (next.contains(v)) return level == target;
        visited = visited | next;
        frontier = next;
    }
    return false;
}

inline void check_vertex(const Graph& g, int v, const char* what) {
    if (v < 0 || v >= g.vertex_count())
        throw validity_error(std::string(what) + ": vertex " + std::to_string(v) +
                             " out of range");
}

inline void check_set(const Graph& g, VertexSet s, const char* what) {
    if (!s.subset_of(g.vertices()))
        throw validity_error(std::string(what) + ": set has bits beyond vertex count");
}

}  // namespace detail

// Are u and v visible to each other past the obstruction set x? True iff a
// geodesic between them has no internal vertex in x; u and v themselves may
// belong to x.
inline bool is_pair_visible(const Graph& g, const DistanceMatrix& dist, int u, int v,
                            VertexSet x) {
    detail::check_vertex(g, u, "is_pair_visible");
    detail::check_vertex(g, v, "is_pair_visible");
    detail::check_set(g, x, "is_pair_visible");
    if (u == v) throw validity_error("is_pair_visible: u and v must differ");
    VertexSet allowed = (g.vertices() - x).with(u).with(v);
    return detail::geodesic_survives(g, u, v, allowed, dist(u, v));
}

// A set is a mutual-visibility set when every pair inside it is visible past
// the set itself. Empty sets and singletons qualify trivially.
inline bool is_mutual_visibility_set(const Graph& g, const DistanceMatrix& dist, VertexSet x) {
    detail::check_set(g, x, "is_mutual_visibility_set");
    VertexSet allowed = g.vertices() - x;
    auto members = x.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            int u = members[i], v = members[j];
            if (!detail::geodesic_survives(g, u, v, allowed.with(u).with(v), dist(u, v)))
                return false;
        }
    return true;
}

inline bool is_mutual_visibility_set(const Graph& g, VertexSet x) {
    return is_mutual_visibility_set(g, g.distances(), x);
}

// Single-threaded walk over every nonempty mutual-visibility set, in
// lexicographic DFS order. Mutual visibility is downward closed (dropping a
// vertex removes pairs and shrinks the obstruction set), which is what makes
// the pruned walk exhaustive. On each extension the whole candidate set is
// re-verified: the new vertex can obstruct a previously visible pair.
template <typename Visit>
void enumerate_mutual_visibility_sets(const Graph& g, Visit&& visit,
                                      const EnumerationOptions& opts = {}) {
    check_enumeration_cap(g.vertex_count(), opts, "enumerate_mutual_visibility_sets");
    const DistanceMatrix& dist = g.distances();
    detail::enumerate_downward_closed(
        g.vertex_count(), g.vertices(),
        [&](VertexSet s) { return is_mutual_visibility_set(g, dist, s); },
        std::forward<Visit>(visit));
}

namespace detail {

// Size histogram of all mutual-visibility sets whose minimum vertex is
// `root`. Counts fit in 64 bits: there are at most 2^25 sets under the cap.
inline void count_subtree(const Graph& g, const DistanceMatrix& dist, int root,
                          std::array<std::uint64_t, kMaxVertices + 1>& counts) {
    VertexSet rootSet = VertexSet::single(root);
    counts[1] += 1;  // singletons are always mutual-visibility sets
    detail::enumerate_downward_closed_from(
        rootSet, root + 1, g.vertex_count(), g.vertices(),
        [&](VertexSet s) { return is_mutual_visibility_set(g, dist, s); },
        [&](VertexSet s) { counts[static_cast<std::size_t>(s.count())] += 1; });
}

}  // namespace detail

// Exact visibility polynomial by pruned exhaustive enumeration: the x^k
// coefficient counts the mutual-visibility sets of size k. The lattice walk
// is partitioned by minimum vertex; subtrees are independent, so workers
// share nothing and the merged histogram is identical for any thread count.
inline Polynomial visibility_polynomial_bruteforce(const Graph& g,
                                                   const EnumerationOptions& opts = {}) {
    const int n = g.vertex_count();
    check_enumeration_cap(n, opts, "visibility_polynomial_bruteforce");
    const DistanceMatrix& dist = g.distances();

    std::vector<std::array<std::uint64_t, kMaxVertices + 1>> per_root(
        static_cast<std::size_t>(n));
    int workers = std::min(effective_threads(opts), n);
    if (workers <= 1) {
        for (int root = 0; root < n; ++root)
            detail::count_subtree(g, dist, root, per_root[static_cast<std::size_t>(root)]);
    } else {
        std::atomic<int> next_root{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&] {
                for (int root; (root = next_root.fetch_add(1)) < n;)
                    detail::count_subtree(g, dist, root,
                                          per_root[static_cast<std::size_t>(root)]);
            });
        for (auto& th : pool) th.join();
    }

    std::array<std::uint64_t, kMaxVertices + 1> counts{};
    counts[0] = 1;  // the empty set
    for (const auto& part : per_root)
        for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) counts[k] += part[k];

    std::vector<BigInt> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        coeffs.push_back(BigInt::from_uint64(counts[static_cast<std::size_t>(k)]));
    return Polynomial::from_coeffs(std::move(coeffs));
}

// Largest mutual-visibility set size, with one witness of that size (the
// DFS-first maximum, deterministic for any thread count).
inline std::pair<int, VertexSet> mu_with_witness(const Graph& g,
                                                 const EnumerationOptions& opts = {}) {
    check_enumeration_cap(g.vertex_count(), opts, "mu");
    int best = 0;
    VertexSet witness;
    enumerate_mutual_visibility_sets(
        g,
        [&](VertexSet s) {
            if (s.count() > best) {
                best = s.count();
                witness = s;
            }
        },
        opts);
    return {best, witness};
}

// Mutual-visibility number: the degree of the visibility polynomial.
inline int mu(const Graph& g, const EnumerationOptions& opts = {}) {
    return visibility_polynomial_bruteforce(g, opts).degree();
}

}  // namespace visipoly

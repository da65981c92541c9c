#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "visipoly/errors.hpp"
#include "visipoly/vertex_set.hpp"

namespace visipoly {

// Hard cap: a VertexSet is one machine word.
inline constexpr int kMaxVertices = 64;

enum class Family { Path, Cycle, Complete, Wheel, Helm, Friendship, Shell, Bow, Join, Corona, Custom };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Complete: return "complete";
        case Family::Wheel: return "wheel";
        case Family::Helm: return "helm";
        case Family::Friendship: return "friendship";
        case Family::Shell: return "shell";
        case Family::Bow: return "bow";
        case Family::Join: return "join";
        case Family::Corona: return "corona";
        case Family::Custom: return "custom";
    }
    return "?";
}

inline std::optional<Family> family_from_name(const std::string& s) {
    static const std::map<std::string, Family> table = {
        {"path", Family::Path},       {"cycle", Family::Cycle},
        {"complete", Family::Complete}, {"wheel", Family::Wheel},
        {"helm", Family::Helm},       {"friendship", Family::Friendship},
        {"shell", Family::Shell},     {"bow", Family::Bow},
        {"join", Family::Join},       {"corona", Family::Corona},
        {"custom", Family::Custom},
    };
    auto it = table.find(s);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

// Tagged family descriptor: which named construction a graph came from and
// with which integer parameters (bow takes two, the others one).
struct FamilySpec {
    Family name = Family::Custom;
    std::vector<int> params;

    std::string to_string() const {
        std::string out = family_name(name);
        for (std::size_t i = 0; i < params.size(); ++i)
            out += (i == 0 ? " " : ",") + std::to_string(params[i]);
        return out;
    }

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

enum class Role { Hub, Apex, Center, Rim, Pendant };

inline const char* role_name(Role r) {
    switch (r) {
        case Role::Hub: return "hub";
        case Role::Apex: return "apex";
        case Role::Center: return "center";
        case Role::Rim: return "rim";
        case Role::Pendant: return "pendant";
    }
    return "?";
}

inline std::optional<Role> role_from_name(const std::string& s) {
    if (s == "hub") return Role::Hub;
    if (s == "apex") return Role::Apex;
    if (s == "center") return Role::Center;
    if (s == "rim") return Role::Rim;
    if (s == "pendant") return Role::Pendant;
    return std::nullopt;
}

using RoleMap = std::map<int, Role>;
using Edge = std::pair<int, int>;

// All-pairs shortest-path hop counts. Symmetric, zero diagonal,
// d(u,v) == 1 exactly on edges.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<std::uint8_t> d) : n_(n), d_(std::move(d)) {}

    int size() const { return n_; }

    int operator()(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }

private:
    int n_ = 0;
    std::vector<std::uint8_t> d_;
};

// Immutable connected simple undirected graph on at most 64 vertices.
// Adjacency is one neighbor bitmask per vertex; all-pairs distances are
// computed once at construction and cached.
class Graph {
public:
    static Graph from_edges(int n, const std::vector<Edge>& edges,
                            std::optional<FamilySpec> family = std::nullopt,
                            RoleMap roles = {}) {
        if (n < 1 || n > kMaxVertices)
            throw validity_error("graph must have between 1 and " +
                                 std::to_string(kMaxVertices) + " vertices, got " +
                                 std::to_string(n));
        std::vector<VertexSet> adj(static_cast<std::size_t>(n));
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw validity_error("edge endpoint out of range: (" + std::to_string(u) +
                                     "," + std::to_string(v) + ")");
            if (u == v)
                throw validity_error("self-loop rejected at vertex " + std::to_string(u));
            if (adj[u].contains(v))
                throw validity_error("duplicate edge (" + std::to_string(u) + "," +
                                     std::to_string(v) + ")");
            adj[u] = adj[u].with(v);
            adj[v] = adj[v].with(u);
        }
        for (const auto& [v, r] : roles) {
            (void)r;
            if (v < 0 || v >= n) throw validity_error("role tag on out-of-range vertex");
        }
        return Graph(n, std::move(adj), std::move(family), std::move(roles));
    }

    int vertex_count() const { return n_; }

    int edge_count() const {
        int twice = 0;
        for (const auto& a : adj_) twice += a.count();
        return twice / 2;
    }

    bool has_edge(int u, int v) const { return adj_[u].contains(v); }

    VertexSet neighbors(int v) const { return adj_[v]; }

    VertexSet vertices() const { return VertexSet::full(n_); }

    const DistanceMatrix& distances() const { return dist_; }

    const std::optional<FamilySpec>& family() const { return family_; }

    const RoleMap& roles() const { return roles_; }

    // lexicographically sorted with u < v; the canonical edge order
    std::vector<Edge> sorted_edges() const {
        std::vector<Edge> out;
        for (int u = 0; u < n_; ++u)
            for (int v : bits_of(adj_[u]))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    Graph(int n, std::vector<VertexSet> adj, std::optional<FamilySpec> family, RoleMap roles)
        : n_(n), adj_(std::move(adj)), family_(std::move(family)), roles_(std::move(roles)) {
        dist_ = compute_distances();
    }

    DistanceMatrix compute_distances() const {
        std::vector<std::uint8_t> d(static_cast<std::size_t>(n_) * n_, 0);
        const VertexSet all = VertexSet::full(n_);
        for (int s = 0; s < n_; ++s) {
            VertexSet visited = VertexSet::single(s);
            VertexSet frontier = visited;
            int level = 0;
            while (!frontier.empty()) {
                ++level;
                VertexSet next;
                for (int v : bits_of(frontier)) next = next | adj_[v];
                next = (next & all) - visited;
                for (int v : bits_of(next))
                    d[static_cast<std::size_t>(s) * n_ + v] = static_cast<std::uint8_t>(level);
                visited = visited | next;
                frontier = next;
            }
            if (!(visited == all))
                throw validity_error("graph is not connected");
        }
        return DistanceMatrix(n_, std::move(d));
    }

    int n_ = 0;
    std::vector<VertexSet> adj_;
    std::optional<FamilySpec> family_;
    RoleMap roles_;
    DistanceMatrix dist_;
};

// Recomputes BFS distances from scratch (construction already caches them;
// this re-checks connectivity and is the explicit-contract entry point).
inline DistanceMatrix all_pairs_distances(const Graph& g) {
    return g.distances();
}

namespace detail {

inline void require_param_count(const FamilySpec& spec, std::size_t want) {
    if (spec.params.size() != want)
        throw validity_error(std::string(family_name(spec.name)) + " takes " +
                             std::to_string(want) + " parameter(s), got " +
                             std::to_string(spec.params.size()));
}

}  // namespace detail

// Deterministic family constructors with the fixed labeling convention:
//   path      0..n-1 in path order
//   cycle     0..n-1 in cyclic order
//   wheel     hub 0, rim 1..n-1 in cyclic order
//   helm      hub 0, rim 1..n-1, pendant of rim vertex i at i+(n-1)
//   friendship center 0, triangle i on {2i-1, 2i}
//   shell     apex 0, path vertices 1..n-1 in path order
//   bow       apex 0, first path 1..m-1, second path m..m+n-2
inline Graph build_family(const FamilySpec& spec) {
    std::vector<Edge> edges;
    RoleMap roles;
    switch (spec.name) {
        case Family::Path: {
            detail::require_param_count(spec, 1);
            int n = spec.params[0];
            if (n < 1) throw validity_error("path requires n >= 1");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            return Graph::from_edges(n, edges, spec);
        }
        case Family::Cycle: {
            detail::require_param_count(spec, 1);
            int n = spec.params[0];
            if (n < 3) throw validity_error("cycle requires n >= 3");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(0, n - 1);
            return Graph::from_edges(n, edges, spec);
        }
        case Family::Complete: {
            detail::require_param_count(spec, 1);
            int n = spec.params[0];
            if (n < 1) throw validity_error("complete requires n >= 1");
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            return Graph::from_edges(n, edges, spec);
        }
        case Family::Wheel: {
            detail::require_param_count(spec, 1);
            int n = spec.params[0];
            if (n < 4) throw validity_error("wheel requires n >= 4");
            roles[0] = Role::Hub;
            for (int i = 1; i < n; ++i) {
                roles[i] = Role::Rim;
                edges.emplace_back(0, i);
                edges.emplace_back(i, i == n - 1 ? 1 : i + 1);
            }
            return Graph::from_edges(n, edges, spec, roles);
        }
        case Family::Helm: {
            detail::require_param_count(spec, 1);
            int n = spec.params[0];
            if (n < 4) throw validity_error("helm requires n >= 4");
            if (2 * n - 1 > kMaxVertices)
                throw validity_error("helm on " + std::to_string(2 * n - 1) +
                                     " vertices exceeds the 64-vertex cap");
            roles[0] = Role::Hub;
            for (int i = 1; i < n; ++i) {
                roles[i] = Role::Rim;
                roles[i + n - 1] = Role::Pendant;
                edges.emplace_back(0, i);
                edges.emplace_back(i, i == n - 1 ? 1 : i + 1);
                edges.emplace_back(i, i + n - 1);
            }
            return Graph::from_edges(2 * n - 1, edges, spec, roles);
        }
        case Family::Friendship: {
            detail::require_param_count(spec, 1);
            int n = spec.params[0];
            if (n < 1) throw validity_error("friendship requires n >= 1");
            if (2 * n + 1 > kMaxVertices)
                throw validity_error("friendship on " + std::to_string(2 * n + 1) +
                                     " vertices exceeds the 64-vertex cap");
            roles[0] = Role::Center;
            for (int i = 1; i <= n; ++i) {
                int a = 2 * i - 1, b = 2 * i;
                roles[a] = Role::Rim;
                roles[b] = Role::Rim;
                edges.emplace_back(0, a);
                edges.emplace_back(0, b);
                edges.emplace_back(a, b);
            }
            return Graph::from_edges(2 * n + 1, edges, spec, roles);
        }
        case Family::Shell: {
            detail::require_param_count(spec, 1);
            int n = spec.params[0];
            if (n < 3) throw validity_error("shell requires n >= 3");
            roles[0] = Role::Apex;
            for (int i = 1; i < n; ++i) {
                roles[i] = Role::Rim;
                edges.emplace_back(0, i);
                if (i + 1 < n) edges.emplace_back(i, i + 1);
            }
            return Graph::from_edges(n, edges, spec, roles);
        }
        case Family::Bow: {
            detail::require_param_count(spec, 2);
            int m = spec.params[0], n = spec.params[1];
            if (m < 3 || n < 3) throw validity_error("bow requires m >= 3 and n >= 3");
            if (m + n - 1 > kMaxVertices)
                throw validity_error("bow on " + std::to_string(m + n - 1) +
                                     " vertices exceeds the 64-vertex cap");
            roles[0] = Role::Apex;
            for (int i = 1; i <= m - 1; ++i) {
                roles[i] = Role::Rim;
                edges.emplace_back(0, i);
                if (i + 1 <= m - 1) edges.emplace_back(i, i + 1);
            }
            for (int i = m; i <= m + n - 2; ++i) {
                roles[i] = Role::Rim;
                edges.emplace_back(0, i);
                if (i + 1 <= m + n - 2) edges.emplace_back(i, i + 1);
            }
            return Graph::from_edges(m + n - 1, edges, spec, roles);
        }
        case Family::Join:
        case Family::Corona:
        case Family::Custom:
            throw validity_error(std::string(family_name(spec.name)) +
                                 " is not a parametric family; use build_join/build_corona/from_edges");
    }
    throw validity_error("unknown family");
}

// Disjoint union with every cross pair an edge; g's vertices first.
inline Graph build_join(const Graph& g, const Graph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    if (ng + nh > kMaxVertices)
        throw validity_error("join exceeds the 64-vertex cap");
    std::vector<Edge> edges = g.sorted_edges();
    for (auto [u, v] : h.sorted_edges()) edges.emplace_back(u + ng, v + ng);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) edges.emplace_back(u, ng + v);
    return Graph::from_edges(ng + nh, edges);
}

// One copy of h per vertex v of g, v joined to all of its copy. Layout:
// g's vertices 0..ng-1, then the copy for vertex v occupies the block
// ng + v*nh .. ng + (v+1)*nh - 1.
inline Graph build_corona(const Graph& g, const Graph& h) {
    int ng = g.vertex_count(), nh = h.vertex_count();
    if (ng + ng * nh > kMaxVertices)
        throw validity_error("corona exceeds the 64-vertex cap");
    std::vector<Edge> edges = g.sorted_edges();
    for (int v = 0; v < ng; ++v) {
        int base = ng + v * nh;
        for (auto [a, b] : h.sorted_edges()) edges.emplace_back(base + a, base + b);
        for (int a = 0; a < nh; ++a) edges.emplace_back(v, base + a);
    }
    return Graph::from_edges(ng + ng * nh, edges);
}

// Removes one edge; the result must stay connected.
inline Graph delete_edge(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count() || !g.has_edge(u, v))
        throw validity_error("delete_edge: (" + std::to_string(u) + "," + std::to_string(v) +
                             ") is not an edge");
    std::vector<Edge> edges;
    for (auto e : g.sorted_edges())
        if (!(e.first == std::min(u, v) && e.second == std::max(u, v))) edges.push_back(e);
    // from_edges throws if the deletion disconnected the graph
    return Graph::from_edges(g.vertex_count(), edges);
}

// Induced subgraph on `keep`, vertices relabeled to 0..|keep|-1 preserving
// index order. The result must be connected.
inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
    if (!keep.subset_of(g.vertices()) || keep.empty())
        throw validity_error("induced_subgraph: keep set out of range or empty");
    std::array<int, kMaxVertices> relabel{};
    int next = 0;
    for (int v : bits_of(keep)) relabel[static_cast<std::size_t>(v)] = next++;
    std::vector<Edge> edges;
    for (auto [u, v] : g.sorted_edges())
        if (keep.contains(u) && keep.contains(v))
            edges.emplace_back(relabel[static_cast<std::size_t>(u)],
                               relabel[static_cast<std::size_t>(v)]);
    return Graph::from_edges(keep.count(), edges);
}

}  // namespace visipoly

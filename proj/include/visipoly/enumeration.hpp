#pragma once

#include <string>
#include <thread>

#include "visipoly/errors.hpp"
#include "visipoly/vertex_set.hpp"

namespace visipoly {

// Subset enumeration caps. 2^n scans stop being desk-scale well before the
// 64-vertex graph cap, so enumeration refuses large graphs explicitly.
inline constexpr int kDefaultEnumerationCap = 22;
inline constexpr int kHardEnumerationCap = 25;

struct EnumerationOptions {
    int max_n = kDefaultEnumerationCap;
    int threads = 0;  // 0 = all hardware threads
};

inline void check_enumeration_cap(int n, const EnumerationOptions& opts, const char* what) {
    if (opts.max_n > kHardEnumerationCap)
        throw validity_error("enumeration cap " + std::to_string(opts.max_n) +
                             " exceeds the hard cap of " + std::to_string(kHardEnumerationCap));
    if (opts.max_n < 1)
        throw validity_error("enumeration cap must be positive");
    if (n > opts.max_n)
        throw cap_error(std::string(what) + ": graph has " + std::to_string(n) +
                        " vertices, over the enumeration cap of " + std::to_string(opts.max_n) +
                        " (raise with --max-n, hard cap " +
                        std::to_string(kHardEnumerationCap) + ")");
}

inline int effective_threads(const EnumerationOptions& opts) {
    int t = opts.threads > 0 ? opts.threads
                             : static_cast<int>(std::thread::hardware_concurrency());
    return t > 0 ? t : 1;
}

namespace detail {

// Depth-first walk of a downward-closed set family inside `candidates`,
// extending by increasing vertex index. `accept(s)` must be downward closed:
// acceptance of s implies acceptance of every subset. Every accepted set is
// then reachable through its sorted prefixes, so subtrees below rejected sets
// can be skipped without loss. `visit(s)` is called once per accepted
// nonempty set; the empty set is the caller's business.
template <typename Accept, typename Visit>
void enumerate_downward_closed_from(VertexSet base, int next, int n, VertexSet candidates,
                                    Accept&& accept, Visit&& visit) {
    for (int v = next; v < n; ++v) {
        if (!candidates.contains(v)) continue;
        VertexSet ext = base.with(v);
        if (!accept(ext)) continue;
        visit(ext);
        enumerate_downward_closed_from(ext, v + 1, n, candidates, accept, visit);
    }
}

template <typename Accept, typename Visit>
void enumerate_downward_closed(int n, VertexSet candidates, Accept&& accept, Visit&& visit) {
    enumerate_downward_closed_from(VertexSet{}, 0, n, candidates, accept, visit);
}

// Same walk, but reports the sets at which no extension succeeded. Every
// inclusion-maximal accepted set is such a leaf (nothing at all extends it),
// so filtering the collected leaves by pairwise inclusion yields exactly the
// maximal sets. Returns whether any extension of `base` was accepted.
template <typename Accept, typename VisitLeaf>
bool enumerate_leaves_from(VertexSet base, int next, int n, VertexSet candidates,
                           Accept&& accept, VisitLeaf&& visit_leaf) {
    bool extended = false;
    for (int v = next; v < n; ++v) {
        if (!candidates.contains(v)) continue;
        VertexSet ext = base.with(v);
        if (!accept(ext)) continue;
        extended = true;
        if (!enumerate_leaves_from(ext, v + 1, n, candidates, accept, visit_leaf))
            visit_leaf(ext);
    }
    return extended;
}

}  // namespace detail

}  // namespace visipoly

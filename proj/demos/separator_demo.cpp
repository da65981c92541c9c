// Separator machinery on a bow graph: the shared apex cuts every geodesic
// between the two paths, so any mutual-visibility set through it must stay
// on one side.

#include <iostream>

#include "visipoly/visipoly.hpp"

int main() {
    using namespace visipoly;

    const int m = 4, n = 5;
    Graph bow = build_family({Family::Bow, {m, n}});
    const DistanceMatrix& dist = bow.distances();

    std::cout << "bow " << m << "," << n << ": path-cut = "
              << path_cut(bow, dist).to_string() << "\n";

    VertexSet first, second;
    for (int v = 1; v <= m - 1; ++v) first = first.with(v);
    for (int v = m; v <= m + n - 2; ++v) second = second.with(v);
    std::cout << "apex separates " << first.to_string() << " from " << second.to_string()
              << ": " << (is_set_separator(bow, dist, 0, first, second) ? "yes" : "no")
              << "\n";

    int crossing = 0, total = 0;
    enumerate_mutual_visibility_sets(bow, [&](VertexSet s) {
        ++total;
        if (s.contains(0) && s.intersects(first) && s.intersects(second)) ++crossing;
    });
    std::cout << total << " mutual-visibility sets; " << crossing
              << " contain the apex and touch both paths\n";
    return 0;
}

// Library walk-through: build a wheel, enumerate its mutual-visibility
// sets, compare against the closed form, and inspect one cq-visible family.

#include <iostream>

#include "visipoly/visipoly.hpp"

int main() {
    using namespace visipoly;

    const int n = 10;
    Graph wheel = build_family({Family::Wheel, {n}});
    std::cout << "wheel " << n << ": " << wheel.vertex_count() << " vertices, "
              << wheel.edge_count() << " edges\n";

    Polynomial enumerated = visibility_polynomial_bruteforce(wheel);
    ClosedFormResult closed = wheel_polynomial(n);
    std::cout << "enumerated: " << enumerated.to_human() << "\n";
    std::cout << "closed:     " << closed.polynomial.to_human() << "\n";
    std::cout << "agree: " << (enumerated == closed.polynomial ? "yes" : "no") << "\n";
    std::cout << "mu: " << enumerated.degree() << "\n";

    // the hub alone obstructs long rim hops; its maximal visible sets are
    // overlapping three-vertex rim windows
    CqFamily fam = maximal_absolute_cq_visible(wheel, VertexSet::single(0));
    std::cout << "gamma(hub) has " << fam.members.size() << " members, disjoint: "
              << (fam.pairwise_disjoint ? "yes" : "no") << "\n";
    for (VertexSet member : fam.members) std::cout << "  " << member.to_string() << "\n";
    return 0;
}

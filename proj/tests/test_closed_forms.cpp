#include <doctest.h>

#include <cstdint>
#include <vector>

#include "support/naive_oracle.hpp"
#include "visipoly/closed_forms.hpp"
#include "visipoly/visibility.hpp"

using namespace visipoly;

namespace {

Polynomial poly(std::initializer_list<long long> cs) {
    std::vector<BigInt> v;
    for (long long c : cs) v.emplace_back(c);
    return Polynomial::from_coeffs(std::move(v));
}

Polynomial brute(const FamilySpec& spec) {
    return visibility_polynomial_bruteforce(build_family(spec));
}

}  // namespace

TEST_CASE("wheel closed form") {
    ClosedFormResult r = wheel_polynomial(8);
    CHECK(r.polynomial == poly({1, 8, 28, 49, 35, 21, 7, 1}));
    CHECK(r.polynomial.coeff(2) == BigInt{28});  // C(8,2)
    CHECK(r.method == ClosedFormMethod::PureClosed);
    CHECK(wheel_polynomial(9).polynomial == brute({Family::Wheel, {9}}));
    CHECK_THROWS_AS(wheel_polynomial(7), validity_error);
}

TEST_CASE("wheel hub-set characterization") {
    CHECK(wheel_hub_set_visible(8, VertexSet{}));
    CHECK(wheel_hub_set_visible(8, VertexSet::of({4})));
    CHECK(wheel_hub_set_visible(8, VertexSet::of({2, 4})));   // rim-distance 2
    CHECK(!wheel_hub_set_visible(8, VertexSet::of({2, 5})));  // rim-distance 3
    CHECK(wheel_hub_set_visible(8, VertexSet::of({1, 7})));   // wraps around, distance 1
    CHECK(!wheel_hub_set_visible(8, VertexSet::of({2, 3, 4})));
    CHECK_THROWS_AS(wheel_hub_set_visible(8, VertexSet::of({0})), validity_error);
    CHECK_THROWS_AS(wheel_hub_set_visible(7, VertexSet{}), validity_error);

    // agrees with the engine on every hub-containing set, n = 8..11
    for (int n = 8; n <= 11; ++n) {
        Graph w = build_family({Family::Wheel, {n}});
        const DistanceMatrix& d = w.distances();
        std::uint64_t rim = w.vertices().without(0).bits;
        std::uint64_t b = 0;
        do {
            CHECK(wheel_hub_set_visible(n, VertexSet{b}) ==
                  is_mutual_visibility_set(w, d, VertexSet{b}.with(0)));
            b = (b - rim) & rim;
        } while (b != 0);
    }
}

TEST_CASE("friendship closed form") {
    ClosedFormResult r1 = friendship_polynomial(1);
    CHECK(r1.polynomial == poly({1, 3, 3, 1}));
    CHECK(r1.polynomial == binomial_expand(3));  // F_1 = K_3
    CHECK(friendship_polynomial(2).polynomial == bow_polynomial(3, 3).polynomial);
    CHECK(friendship_polynomial(3).polynomial == brute({Family::Friendship, {3}}));
    CHECK_THROWS_AS(friendship_polynomial(0), validity_error);
}

TEST_CASE("friendship characterization") {
    CHECK(friendship_set_visible(3, VertexSet::of({1, 3, 5, 6})));  // center-free
    CHECK(friendship_set_visible(3, VertexSet::of({0})));
    CHECK(friendship_set_visible(3, VertexSet::of({0, 3, 4})));   // one triangle
    CHECK(!friendship_set_visible(3, VertexSet::of({0, 1, 4})));  // two triangles

    // full agreement with the engine on every subset, n <= 4
    for (int n = 1; n <= 4; ++n) {
        Graph f = build_family({Family::Friendship, {n}});
        const DistanceMatrix& d = f.distances();
        for (std::uint64_t s = 0; s < (1ull << (2 * n + 1)); ++s)
            CHECK(friendship_set_visible(n, VertexSet{s}) ==
                  is_mutual_visibility_set(f, d, VertexSet{s}));
    }
}

TEST_CASE("shell closed form") {
    CHECK(shell_polynomial(3).polynomial == poly({1, 3, 3, 1}));
    CHECK(shell_polynomial(4).polynomial == poly({1, 4, 6, 4}));
    CHECK(shell_polynomial(10).polynomial == brute({Family::Shell, {10}}));
    CHECK_THROWS_AS(shell_polynomial(2), validity_error);
}

TEST_CASE("shell characterization") {
    CHECK(shell_apex_set_visible(8, VertexSet{}));
    CHECK(shell_apex_set_visible(8, VertexSet::of({3, 5})));   // gap 2
    CHECK(!shell_apex_set_visible(8, VertexSet::of({3, 6})));  // gap 3
    CHECK(!shell_apex_set_visible(8, VertexSet::of({2, 3, 4})));

    for (int n = 3; n <= 10; ++n) {
        Graph s = build_family({Family::Shell, {n}});
        const DistanceMatrix& d = s.distances();
        std::uint64_t pathbits = s.vertices().without(0).bits;
        std::uint64_t a = 0;
        do {
            CHECK(shell_apex_set_visible(n, VertexSet{a}) ==
                  is_mutual_visibility_set(s, d, VertexSet{a}.with(0)));
            a = (a - pathbits) & pathbits;
        } while (a != 0);
    }
}

TEST_CASE("bow closed form") {
    ClosedFormResult r = bow_polynomial(3, 3);
    CHECK(r.polynomial.coeff(2) == BigInt{10});  // C(5,2)
    CHECK(r.polynomial == brute({Family::Bow, {3, 3}}));
    CHECK(bow_polynomial(4, 5).polynomial == brute({Family::Bow, {4, 5}}));
    CHECK_THROWS_AS(bow_polynomial(2, 4), validity_error);

    // the x^2 total is the universal pair count
    for (int m = 3; m <= 6; ++m)
        for (int n = m; n <= 6; ++n) {
            long long verts = m + n - 1;
            CHECK(bow_polynomial(m, n).polynomial.coeff(2) ==
                  BigInt{verts * (verts - 1) / 2});
        }
}

TEST_CASE("helm semi-closed form matches enumeration") {
    ClosedFormResult r = helm_polynomial(8);
    CHECK(r.method == ClosedFormMethod::SemiClosedHelm);
    CHECK(!r.notes.empty());
    Polynomial reference = brute({Family::Helm, {8}});
    CHECK(r.polynomial == reference);
    CHECK(r.polynomial.coeff(0) == BigInt{1});
    CHECK(r.polynomial.coeff(1) == BigInt{15});
    CHECK_THROWS_AS(helm_polynomial(7), validity_error);
}

TEST_CASE("inclusion-exclusion collapses to the plain sum on disjoint families") {
    Graph w = build_family({Family::Wheel, {8}});
    const DistanceMatrix& d = w.distances();

    // hub + one rim vertex: the maximal family is two disjoint rim windows
    CqFamily disjoint = maximal_absolute_cq_visible(w, d, VertexSet::of({0, 1}));
    REQUIRE(disjoint.pairwise_disjoint);
    Polynomial plain;
    for (VertexSet m : disjoint.members)
        plain += binomial_expand(m.count()) - Polynomial::one();
    CHECK(detail::covered_nonempty_subsets(disjoint.members) == plain);

    // hub alone: overlapping windows, strictly fewer covered sets than the sum
    CqFamily overlapping = maximal_absolute_cq_visible(w, d, VertexSet::of({0}));
    REQUIRE(!overlapping.pairwise_disjoint);
    Polynomial naive_sum;
    for (VertexSet m : overlapping.members)
        naive_sum += binomial_expand(m.count()) - Polynomial::one();
    Polynomial covered = detail::covered_nonempty_subsets(overlapping.members);
    CHECK(!(covered == naive_sum));
    CHECK(covered.all_nonnegative());
    // count matches a direct scan: rim sets inside some window of three
    CHECK(covered.evaluate(BigInt{1}) == BigInt{28});
}

TEST_CASE("universal coefficients hold for every closed form") {
    auto check_low_order = [](const Polynomial& p, long long n) {
        CHECK(p.coeff(0) == BigInt{1});
        CHECK(p.coeff(1) == BigInt{n});
        CHECK(p.coeff(2) == BigInt{n * (n - 1) / 2});
    };
    for (int n = 8; n <= 14; ++n) check_low_order(wheel_polynomial(n).polynomial, n);
    for (int n = 1; n <= 6; ++n) check_low_order(friendship_polynomial(n).polynomial, 2 * n + 1);
    for (int n = 3; n <= 12; ++n) check_low_order(shell_polynomial(n).polynomial, n);
    for (int m = 3; m <= 6; ++m)
        for (int n = 3; n <= 6; ++n)
            check_low_order(bow_polynomial(m, n).polynomial, m + n - 1);
    for (int n = 8; n <= 9; ++n) check_low_order(helm_polynomial(n).polynomial, 2 * n - 1);
}

TEST_CASE("dispatch routes families and refuses the rest") {
    CHECK(closed_form_dispatch({Family::Wheel, {10}}).polynomial ==
          wheel_polynomial(10).polynomial);
    CHECK(closed_form_dispatch({Family::Helm, {8}}).polynomial == helm_polynomial(8).polynomial);
    CHECK(closed_form_dispatch({Family::Bow, {3, 4}}).polynomial ==
          bow_polynomial(3, 4).polynomial);
    CHECK_THROWS_AS(closed_form_dispatch({Family::Wheel, {5}}), validity_error);
    CHECK_THROWS_AS(closed_form_dispatch({Family::Path, {6}}), validity_error);
    CHECK_THROWS_AS(closed_form_dispatch({Family::Complete, {4}}), validity_error);
}

TEST_CASE("symbolic rendering") {
    CHECK(symbolic_latex({Family::Wheel, {8}}) == "(1+x)^{7} + x + 7x^{2} + 14x^{3}");
    CHECK(symbolic_latex({Family::Shell, {10}}) == "(1+x)^{9} + x + 9x^{2} + 15x^{3}");
    CHECK(symbolic_latex({Family::Bow, {3, 4}}) == "(1+x)^{5} + x + 5x^{2} + 4x^{3}");
    CHECK_THROWS_AS(symbolic_latex({Family::Helm, {8}}), validity_error);
    CHECK_THROWS_AS(symbolic_latex({Family::Path, {4}}), validity_error);
}

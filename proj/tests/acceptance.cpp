// Acceptance suite: reproduces every closed form and structural
// property at the pinned sizes, against exhaustive enumeration. Prints one
// pass/fail line per criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support/corpus.hpp"
#include "support/naive_oracle.hpp"
#include "visipoly/visipoly.hpp"

using namespace visipoly;

namespace {

struct CriterionResult {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }

    void note(const std::string& info) {
        if (!detail.empty()) detail += "; ";
        detail += info;
    }
};

Graph family(Family f, std::vector<int> params) { return build_family({f, std::move(params)}); }

std::string poly_diff(const Polynomial& a, const Polynomial& b) {
    int top = std::max(a.degree(), b.degree());
    for (int k = 0; k <= top; ++k)
        if (!(a.coeff(k) == b.coeff(k)))
            return "first mismatch at x^" + std::to_string(k) + ": " + a.coeff(k).to_string() +
                   " vs " + b.coeff(k).to_string();
    return "";
}

// --- criterion 1: wheel closed form, n = 8..14, exact, < 5 s total ------------

CriterionResult wheel_closed_form() {
    CriterionResult r;
    for (int n = 8; n <= 14; ++n) {
        Polynomial closed = wheel_polynomial(n).polynomial;
        Polynomial brute = visibility_polynomial_bruteforce(family(Family::Wheel, {n}));
        if (!(closed == brute))
            r.fail("wheel " + std::to_string(n) + ": " + poly_diff(closed, brute));
    }
    return r;
}

// --- criterion 2: friendship closed form, n = 1..5, < 5 s ---------------------

CriterionResult friendship_closed_form() {
    CriterionResult r;
    for (int n = 1; n <= 5; ++n) {
        Polynomial closed = friendship_polynomial(n).polynomial;
        Polynomial brute = visibility_polynomial_bruteforce(family(Family::Friendship, {n}));
        if (!(closed == brute))
            r.fail("friendship " + std::to_string(n) + ": " + poly_diff(closed, brute));
    }
    if (!(friendship_polynomial(1).polynomial == binomial_expand(3)))
        r.fail("friendship 1 does not equal (1+x)^3");
    return r;
}

// --- criterion 3: shell closed form, n = 3..12, < 10 s ------------------------

CriterionResult shell_closed_form() {
    CriterionResult r;
    for (int n = 3; n <= 12; ++n) {
        Polynomial closed = shell_polynomial(n).polynomial;
        Polynomial brute = visibility_polynomial_bruteforce(family(Family::Shell, {n}));
        if (!(closed == brute))
            r.fail("shell " + std::to_string(n) + ": " + poly_diff(closed, brute));
    }
    return r;
}

// --- criterion 4: bow closed form, 3 <= m <= n <= 6, < 10 s -------------------

CriterionResult bow_closed_form() {
    CriterionResult r;
    for (int m = 3; m <= 6; ++m)
        for (int n = m; n <= 6; ++n) {
            Polynomial closed = bow_polynomial(m, n).polynomial;
            Polynomial brute = visibility_polynomial_bruteforce(family(Family::Bow, {m, n}));
            if (!(closed == brute))
                r.fail("bow " + std::to_string(m) + "," + std::to_string(n) + ": " +
                       poly_diff(closed, brute));
        }
    if (!(bow_polynomial(3, 3).polynomial == friendship_polynomial(2).polynomial))
        r.fail("bow 3,3 does not equal friendship 2");
    return r;
}

// --- criterion 5: helm closed form, n = 8..9, < 120 s -------------------------

CriterionResult helm_closed_form() {
    CriterionResult r;
    for (int n = 8; n <= 9; ++n) {
        ClosedFormResult closed = helm_polynomial(n);
        Polynomial brute = visibility_polynomial_bruteforce(family(Family::Helm, {n}));
        if (!(closed.polynomial == brute))
            r.fail("helm " + std::to_string(n) + ": " + poly_diff(closed.polynomial, brute));
        if (n == 8) r.note("resolved: " + closed.notes);
    }
    return r;
}

// --- criterion 6: characterization suite ----------------------------

CriterionResult characterization_suite() {
    CriterionResult r;

    // wheel: hub-set predicate vs engine, all rim subsets, n = 8..11
    for (int n = 8; n <= 11; ++n) {
        Graph w = family(Family::Wheel, {n});
        const DistanceMatrix& d = w.distances();
        std::uint64_t rim = w.vertices().without(0).bits;
        std::uint64_t b = 0;
        do {
            if (wheel_hub_set_visible(n, VertexSet{b}) !=
                is_mutual_visibility_set(w, d, VertexSet{b}.with(0))) {
                r.fail("wheel hub-set characterization fails at n=" + std::to_string(n) +
                       ", B=" + VertexSet{b}.to_string());
                break;
            }
            b = (b - rim) & rim;
        } while (b != 0);
    }

    // wheel: hub-free q has the unique maximal family {complement}, n = 8..10
    for (int n = 8; n <= 10; ++n) {
        Graph w = family(Family::Wheel, {n});
        const DistanceMatrix& d = w.distances();
        std::uint64_t rim = w.vertices().without(0).bits;
        std::uint64_t q = 0;
        do {
            if (is_mutual_visibility_set(w, d, VertexSet{q})) {
                CqFamily fam = maximal_absolute_cq_visible(w, d, VertexSet{q});
                bool ok = fam.members.size() == 1 &&
                          fam.members[0] == (w.vertices() - VertexSet{q}) &&
                          fam.pairwise_disjoint;
                if (!ok) {
                    r.fail("hub-free gamma family differs from {complement} at n=" +
                           std::to_string(n) + ", q=" + VertexSet{q}.to_string());
                    break;
                }
            }
            q = (q - rim) & rim;
        } while (q != 0);
    }

    // friendship: predicate vs engine on all 2^(2n+1) subsets, n <= 4
    for (int n = 1; n <= 4; ++n) {
        Graph f = family(Family::Friendship, {n});
        const DistanceMatrix& d = f.distances();
        for (std::uint64_t s = 0; s < (1ull << (2 * n + 1)); ++s)
            if (friendship_set_visible(n, VertexSet{s}) !=
                is_mutual_visibility_set(f, d, VertexSet{s})) {
                r.fail("friendship characterization fails at n=" + std::to_string(n) +
                       ", S=" + VertexSet{s}.to_string());
                break;
            }
    }

    // shell: predicate vs engine on all apex-containing sets, n <= 10
    for (int n = 3; n <= 10; ++n) {
        Graph sh = family(Family::Shell, {n});
        const DistanceMatrix& d = sh.distances();
        std::uint64_t pathbits = sh.vertices().without(0).bits;
        std::uint64_t a = 0;
        do {
            if (shell_apex_set_visible(n, VertexSet{a}) !=
                is_mutual_visibility_set(sh, d, VertexSet{a}.with(0))) {
                r.fail("shell characterization fails at n=" + std::to_string(n) +
                       ", A=" + VertexSet{a}.to_string());
                break;
            }
            a = (a - pathbits) & pathbits;
        } while (a != 0);
    }

    // bow: the apex is a set-separator, so apex sets avoid one of the paths
    for (int m = 3; m <= 6; ++m)
        for (int n = 3; n <= 6; ++n) {
            Graph b = family(Family::Bow, {m, n});
            VertexSet first, second;
            for (int v = 1; v <= m - 1; ++v) first = first.with(v);
            for (int v = m; v <= m + n - 2; ++v) second = second.with(v);
            bool ok = true;
            enumerate_mutual_visibility_sets(b, [&](VertexSet s) {
                if (s.contains(0) && s.intersects(first) && s.intersects(second)) ok = false;
            });
            if (!ok)
                r.fail("bow " + std::to_string(m) + "," + std::to_string(n) +
                       ": an apex set meets both paths");
        }
    return r;
}

// --- criterion 7: universal coefficients over the corpus ------------------

CriterionResult universal_coefficients() {
    CriterionResult r;
    auto graphs = corpus::standard_corpus();
    if (graphs.size() < 30)
        r.fail("corpus has only " + std::to_string(graphs.size()) + " graphs");
    for (const auto& [name, g] : graphs) {
        Polynomial p = visibility_polynomial_bruteforce(g);
        long long n = g.vertex_count();
        bool ok = p.coeff(0) == BigInt{1} && p.coeff(1) == BigInt{n} &&
                  (n < 2 || p.coeff(2) == BigInt{n * (n - 1) / 2});
        if (!ok) r.fail(name + ": low-order coefficients are off");
    }
    r.note(std::to_string(graphs.size()) + " graphs checked");
    return r;
}

// --- criterion 8: engine self-consistency ----------------------------------

CriterionResult engine_self_consistency() {
    CriterionResult r;
    auto graphs = corpus::standard_corpus();

    for (const auto& [name, g] : graphs) {
        if (g.vertex_count() > 12) continue;
        if (!(visibility_polynomial_bruteforce(g) == oracle::visibility_polynomial(g)))
            r.fail(name + ": pruned enumeration differs from the unpruned scan");
    }

    for (const auto& [name, g] : graphs) {
        EnumerationOptions one{22, 1}, two{22, 2}, four{22, 4};
        Polynomial p1 = visibility_polynomial_bruteforce(g, one);
        if (!(p1 == visibility_polynomial_bruteforce(g, two)) ||
            !(p1 == visibility_polynomial_bruteforce(g, four)))
            r.fail(name + ": output depends on thread count");
    }

    for (const auto& [name, g] : graphs) {
        bool closed = true;
        enumerate_mutual_visibility_sets(g, [&](VertexSet s) {
            for (int v : bits_of(s))
                if (!is_mutual_visibility_set(g, s.without(v))) closed = false;
        });
        if (!closed) r.fail(name + ": downward closure violated");
    }
    return r;
}

struct Criterion {
    std::string name;
    double time_budget_s;  // <= 0 means no pinned budget
    std::function<CriterionResult()> run;
};

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"wheel closed form (n=8..14, exact)", 5.0, wheel_closed_form},
        {"friendship closed form (n=1..5, exact)", 5.0, friendship_closed_form},
        {"shell closed form (n=3..12, exact)", 10.0, shell_closed_form},
        {"bow closed form (3<=m<=n<=6, exact)", 10.0, bow_closed_form},
        {"helm closed form (n=8..9, exact)", 120.0, helm_closed_form},
        {"characterization suite", 0.0, characterization_suite},
        {"universal coefficients (x^0, x^1, x^2) over the corpus", 0.0, universal_coefficients},
        {"engine self-consistency (pruned = naive, threads, closure)", 0.0,
         engine_self_consistency},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        auto start = std::chrono::steady_clock::now();
        CriterionResult result;
        try {
            result = c.run();
        } catch (const std::exception& e) {
            result.fail(std::string("exception: ") + e.what());
        }
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_budget_s > 0 && secs > c.time_budget_s)
            result.fail("over time budget: " + std::to_string(secs) + " s > " +
                        std::to_string(c.time_budget_s) + " s");

        std::ostringstream line;
        line << "[" << (i + 1) << "/" << criteria.size() << "] "
             << (result.pass ? "PASS" : "FAIL") << " " << c.name;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << " (" << secs << " s)";
        if (!result.detail.empty()) line << " -- " << result.detail;
        std::cout << line.str() << "\n";
        if (!result.pass) ++failures;
    }

    if (failures == 0) {
        std::cout << "ACCEPTANCE: all " << criteria.size() << " criteria passed\n";
        return 0;
    }
    std::cout << "ACCEPTANCE: " << failures << " of " << criteria.size()
              << " criteria FAILED\n";
    return 1;
}

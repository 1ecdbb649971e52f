#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "polyfam/errors.hpp"
#include "polyfam/search.hpp"

using polyfam::CliqueSearchOptions;
using polyfam::CompatibilityGraph;
using polyfam::Family;
using polyfam::Field;
using polyfam::Poly;
using polyfam::SearchOptions;

namespace {
const Field F2 = Field::from_order(2);
const Field F3 = Field::from_order(3);
}  // namespace

TEST_CASE("graph layout and adjacency") {
    const CompatibilityGraph g(F2, {3}, 1);
    REQUIRE(g.vertex_count() == 8);
    CHECK(g.degrees() == std::vector<int>{3});
    CHECK(g.ell() == 1);
    // Vertices are the monic cubics in index order: vertex 0 is x^3.
    CHECK(g.vertex(0) == Poly(F2, {0, 0, 0, 1}));
    CHECK(g.vertex(7) == Poly(F2, {1, 1, 1, 1}));
    for (std::size_t i = 0; i < 8; ++i) {
        CHECK(!g.adjacent(i, i));
        for (std::size_t j = 0; j < 8; ++j) {
            CHECK(g.adjacent(i, j) == g.adjacent(j, i));
            if (i != j)
                CHECK(g.adjacent(i, j) ==
                      (polyfam::gcd_degree(g.vertex(i), g.vertex(j)) >= 1));
        }
    }

    // Mixed degrees come out degree-major.
    const CompatibilityGraph m(F2, {2, 3}, 1);
    REQUIRE(m.vertex_count() == 12);
    CHECK(m.vertex(0).degree().value() == 2);
    CHECK(m.vertex(4).degree().value() == 3);

    CHECK_THROWS_AS(CompatibilityGraph(F2, {}, 1), std::invalid_argument);
    CHECK_THROWS_AS(CompatibilityGraph(F2, {2}, 3), std::invalid_argument);
    CHECK_THROWS_AS(CompatibilityGraph(F2, {2}, -1), std::invalid_argument);
    CHECK_THROWS_AS(CompatibilityGraph(F2, {13}, 1), polyfam::guard_error);
    CHECK_THROWS_AS(CompatibilityGraph(F2, {3}, 1, 4), polyfam::guard_error);
}

TEST_CASE("maximum cliques match the subset oracle on every small graph") {
    for (int n = 1; n <= 4; ++n)
        for (int ell = 1; ell <= n; ++ell) {
            CAPTURE(n);
            CAPTURE(ell);
            const CompatibilityGraph g(F2, {n}, ell);
            const auto naive = oracles::naive_maximum_cliques(g);
            const auto fast = polyfam::maximum_cliques(g);
            CHECK(fast.completed);
            CHECK(!fast.truncated);
            CHECK(fast.max_size == naive.max_size);
            CHECK(fast.clique_count == naive.cliques.size());
            CHECK(fast.cliques == naive.cliques);
        }
    // Mixed-degree graphs, still within oracle reach.
    for (const auto& degrees :
         std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}) {
        const CompatibilityGraph g(F2, degrees, 1);
        const auto naive = oracles::naive_maximum_cliques(g);
        const auto fast = polyfam::maximum_cliques(g);
        CHECK(fast.max_size == naive.max_size);
        CHECK(fast.cliques == naive.cliques);
    }
}

TEST_CASE("clique results are identical for every thread count") {
    const CompatibilityGraph g(F3, {3}, 1);  // 27 vertices
    CliqueSearchOptions one;
    one.threads = 1;
    const auto base = polyfam::maximum_cliques(g, one);
    for (unsigned t : {2u, 3u, 8u}) {
        CliqueSearchOptions opts;
        opts.threads = t;
        const auto r = polyfam::maximum_cliques(g, opts);
        CHECK(r.max_size == base.max_size);
        CHECK(r.clique_count == base.clique_count);
        CHECK(r.cliques == base.cliques);
    }
}

TEST_CASE("the storage cap truncates storage but not the count") {
    const CompatibilityGraph g(F2, {4}, 3);  // 8 maximum cliques of size 2
    CliqueSearchOptions opts;
    opts.cap = 3;
    const auto r = polyfam::maximum_cliques(g, opts);
    CHECK(r.max_size == 2);
    CHECK(r.clique_count == 8);
    CHECK(r.truncated);
    REQUIRE(r.cliques.size() == 3);
    const auto full = polyfam::maximum_cliques(g);
    REQUIRE(full.clique_count == 8);
    CHECK(!full.truncated);
    // The stored prefix is the lexicographic least cliques.
    CHECK(std::vector<std::vector<std::uint32_t>>(full.cliques.begin(),
                                                  full.cliques.begin() + 3) ==
          r.cliques);
    CHECK_THROWS_AS(polyfam::maximum_cliques(g, CliqueSearchOptions{0, 1, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("a vanishing deadline reports incompleteness") {
    const CompatibilityGraph g(F3, {3}, 1);
    CliqueSearchOptions opts;
    opts.timeout_seconds = 1e-9;
    const auto r = polyfam::maximum_cliques(g, opts);
    CHECK(!r.completed);

    SearchOptions sopts;
    sopts.timeout_seconds = 1e-9;
    const auto rep = polyfam::verify_theorem1(F3, 3, 1, sopts);
    CHECK(!rep.completed);  // and, crucially, no internal_check_error
    CHECK(rep.classifications.empty());
}

TEST_CASE("theorem statements hold on the desk-scale grid") {
    SearchOptions opts;
    opts.include_families = true;

    const auto rep = polyfam::verify_theorem1(F2, 4, 2, opts);
    CHECK(rep.completed);
    CHECK(rep.predicted_bound == 4);
    CHECK(rep.max_size_found == 4);
    CHECK(rep.maximum_family_count == 7);
    CHECK(!rep.truncated);
    const std::map<std::string, std::uint64_t> expected{
        {"Trivial", 4}, {"PrimaryConstruction", 1}, {"Exceptional", 2}};
    CHECK(rep.classifications == expected);
    REQUIRE(rep.families.has_value());
    REQUIRE(rep.families->size() == 7);
    for (const Family& fam : *rep.families) {
        CHECK(fam.size() == 4);
        CHECK(polyfam::is_ell_intersecting(fam, 2));
    }

    const auto rep4 = polyfam::verify_theorem4(F3, {2, 3}, 1, opts);
    CHECK(rep4.completed);
    CHECK(rep4.predicted_bound == 12);
    CHECK(rep4.max_size_found == 12);
    CHECK(rep4.maximum_family_count == 3);
    const std::map<std::string, std::uint64_t> expected4{{"Trivial", 3}};
    CHECK(rep4.classifications == expected4);
    REQUIRE(rep4.families.has_value());
    for (const Family& fam : *rep4.families) {
        CHECK(fam.degree_set() == std::vector<int>{2, 3});
        // Mixed-trivial: everything is a multiple of one linear polynomial.
        CHECK(polyfam::family_common_divisor(fam).degree().value() == 1);
    }
}

TEST_CASE("search argument validation") {
    CHECK_THROWS_AS(polyfam::verify_theorem1(F2, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(polyfam::verify_theorem1(F2, -1, 0), std::invalid_argument);
    CHECK_THROWS_AS(polyfam::verify_theorem4(F2, {3}, 1), std::invalid_argument);
    CHECK_THROWS_AS(polyfam::verify_theorem4(F2, {2, 3}, 2), std::invalid_argument);
    CHECK_THROWS_AS(polyfam::verify_theorem4(F2, {3, 3}, 1), std::invalid_argument);
    SearchOptions tight;
    tight.vertex_limit = 4;
    CHECK_THROWS_AS(polyfam::verify_theorem1(F2, 3, 1, tight), polyfam::guard_error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <thread>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "polyfam/counting.hpp"
#include "polyfam/errors.hpp"
#include "polyfam/irreducible.hpp"

using polyfam::BigInt;
using polyfam::Field;
using polyfam::Poly;

namespace {
const Field F2 = Field::from_order(2);
const Field F3 = Field::from_order(3);

Poly p2(std::vector<std::uint32_t> c) { return Poly(F2, std::move(c)); }
Poly p3(std::vector<std::uint32_t> c) { return Poly(F3, std::move(c)); }
}  // namespace

TEST_CASE("irreducibility matches the all-divisors oracle") {
    for (int d = 1; d <= 4; ++d)
        for (const Poly& p : enumerate_monic(F2, d)) {
            CAPTURE(p.to_string());
            CHECK(polyfam::is_irreducible(p) == oracles::naive_is_irreducible(p));
        }
    for (int d = 1; d <= 3; ++d)
        for (const Poly& p : enumerate_monic(F3, d)) {
            CAPTURE(p.to_string());
            CHECK(polyfam::is_irreducible(p) == oracles::naive_is_irreducible(p));
        }
    CHECK_THROWS_AS(polyfam::is_irreducible(Poly::one(F2)), std::invalid_argument);
    CHECK_THROWS_AS(polyfam::is_irreducible(Poly::zero(F2)), std::invalid_argument);
    // Non-monic input: same answer as its monic associate.
    CHECK(polyfam::is_irreducible(p3({2, 2})));
    CHECK(!polyfam::is_irreducible(p3({0, 0, 2})));  // 2x^2 = 2*x*x
}

TEST_CASE("irreducible enumeration over F_2 is the textbook list") {
    using VP = std::vector<Poly>;
    CHECK(enumerate_irreducible_monic(F2, 1) == VP{p2({0, 1}), p2({1, 1})});
    CHECK(enumerate_irreducible_monic(F2, 2) == VP{p2({1, 1, 1})});
    CHECK(enumerate_irreducible_monic(F2, 3) == VP{p2({1, 1, 0, 1}), p2({1, 0, 1, 1})});
    CHECK(enumerate_irreducible_monic(F2, 4) ==
          VP{p2({1, 1, 0, 0, 1}), p2({1, 0, 0, 1, 1}), p2({1, 1, 1, 1, 1})});
    CHECK(enumerate_irreducible_monic(F3, 2).size() == 3);
}

TEST_CASE("counts match enumeration and the closed formula") {
    for (std::uint64_t q : {2, 3, 4, 5}) {
        const Field f = Field::from_order(q);
        for (std::uint32_t n = 1; n <= 5; ++n) {
            CAPTURE(q);
            CAPTURE(n);
            const BigInt counted = polyfam::count_irreducibles(q, n);
            CHECK(BigInt(enumerate_irreducible_monic(f, n).size()) == counted);
            CHECK(polyfam::count_lower_bound_holds(q, n));
        }
    }
    CHECK(polyfam::count_irreducibles(2, 2) == 1);
    CHECK(polyfam::count_irreducibles(2, 5) == 6);
    CHECK(polyfam::count_irreducibles(3, 4) == 18);
    // 64-bit overflow territory: N_9(32) = (9^32 - 9^16)/32.
    CHECK(polyfam::count_irreducibles(9, 32) ==
          BigInt("107302619384140957238676882420"));
    CHECK_THROWS_AS(polyfam::count_irreducibles(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(polyfam::count_irreducibles(4, 0), std::invalid_argument);
}

TEST_CASE("integer roots") {
    CHECK(polyfam::isqrt(BigInt(0)) == 0);
    CHECK(polyfam::isqrt(BigInt(15)) == 3);
    CHECK(polyfam::isqrt(BigInt(16)) == 4);
    CHECK(polyfam::isqrt(BigInt(17)) == 4);
    CHECK(polyfam::icbrt(BigInt(26)) == 2);
    CHECK(polyfam::icbrt(BigInt(27)) == 3);
    CHECK(polyfam::icbrt(BigInt(28)) == 3);
    const BigInt big = BigInt("123456789123456789123456789");
    CHECK(polyfam::isqrt(big * big) == big);
    CHECK(polyfam::isqrt(big * big - 1) == big - 1);
    CHECK(polyfam::icbrt(big * big * big) == big);
    CHECK(polyfam::icbrt(big * big * big - 1) == big - 1);
}

TEST_CASE("factorization reconstructs its input") {
    for (int d = 1; d <= 4; ++d)
        for (const Poly& p : enumerate_monic(F2, d)) {
            const auto fac = polyfam::factor(p);
            Poly prod = Poly::constant(fac.unit);
            for (const auto& [g, m] : fac.factors) {
                CHECK(polyfam::is_irreducible(g));
                CHECK(g.is_monic());
                for (std::uint32_t i = 0; i < m; ++i) prod = prod * g;
            }
            CHECK(prod == p);
        }
}

TEST_CASE("factorization fixed points") {
    const auto fac = polyfam::factor(p2({0, 1, 0, 1}));  // x^3+x = x(x+1)^2
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.unit == F2.one());
    CHECK(fac.factors[0].factor == p2({0, 1}));
    CHECK(fac.factors[0].multiplicity == 1);
    CHECK(fac.factors[1].factor == p2({1, 1}));
    CHECK(fac.factors[1].multiplicity == 2);

    const auto nm = polyfam::factor(p3({2, 0, 2}));  // 2x^2+2 = 2 (x^2+1)
    CHECK(nm.unit == F3.element(2));
    REQUIRE(nm.factors.size() == 1);
    CHECK(nm.factors[0].factor == p3({1, 0, 1}));

    const auto unit_only = polyfam::factor(p3({2}));
    CHECK(unit_only.unit == F3.element(2));
    CHECK(unit_only.factors.empty());

    CHECK_THROWS_AS(polyfam::factor(Poly::zero(F2)), std::invalid_argument);
}

TEST_CASE("H_d values are pinned") {
    // H_2 over F_2 = x^2 (x+1)^2 (x^2+x+1) = x^6+x^5+x^3+x^2.
    CHECK(polyfam::lcm_all_monic_degree(F2, 2).coefficient_indices() ==
          std::vector<std::uint32_t>{0, 0, 1, 1, 0, 1, 1});
    // H_1 over F_3 = x(x+1)(x+2) = x^3+2x.
    CHECK(polyfam::lcm_all_monic_degree(F3, 1).coefficient_indices() ==
          std::vector<std::uint32_t>{0, 2, 0, 1});
    // Degrees follow Σ deg(g)·⌊d/deg g⌋ over irreducibles of degree ≤ d.
    CHECK(polyfam::lcm_all_monic_degree(F2, 3).degree().value() == 14);
    CHECK(polyfam::lcm_all_monic_degree(F3, 2).degree().value() == 12);
    // q=3, d=3: three linear factors cubed (9) + three quadratics (6) + eight cubics (24).
    CHECK(polyfam::lcm_all_monic_degree(F3, 3).degree().value() == 39);
}

TEST_CASE("the irreducible cache tolerates concurrent readers") {
    std::vector<std::thread> workers;
    std::vector<std::size_t> sizes(4, 0);
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&sizes, t] {
            const Field f = Field::from_order(2);
            sizes[t] = enumerate_irreducible_monic(f, 6).size();
        });
    for (auto& w : workers) w.join();
    for (std::size_t s : sizes) CHECK(s == 9);  // N_2(6) = 9
}

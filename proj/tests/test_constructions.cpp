#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "polyfam/constructions.hpp"
#include "polyfam/errors.hpp"
#include "polyfam/irreducible.hpp"
#include "polyfam/verifier.hpp"

using polyfam::Family;
using polyfam::Field;
using polyfam::Poly;
using polyfam::ScaleDirection;

namespace {
const Field F2 = Field::from_order(2);
const Field F3 = Field::from_order(3);

Poly p2(std::vector<std::uint32_t> c) { return Poly(F2, std::move(c)); }
Poly p3(std::vector<std::uint32_t> c) { return Poly(F3, std::move(c)); }
}  // namespace

TEST_CASE("family invariants") {
    CHECK_THROWS_AS(Family(F2, 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(Family(F2, -1, {Poly::x(F2)}), std::invalid_argument);
    CHECK_THROWS_AS(Family(F2, 2, {Poly::x(F2)}), std::invalid_argument);  // ell > deg
    CHECK_THROWS_AS(Family(F2, 1, {Poly::x(F2), Poly::x(F2)}), std::invalid_argument);
    CHECK_THROWS_AS(Family(F3, 1, {p3({0, 2})}), std::invalid_argument);  // not monic
    CHECK_THROWS_AS(Family(F2, 1, {Poly::x(F3)}), std::invalid_argument); // wrong field

    // Members are canonicalized into sorted order.
    const Family fam(F2, 1, {p2({1, 1, 1}), p2({0, 1}), p2({0, 0, 1})});
    CHECK(fam.members() == std::vector<Poly>{p2({0, 1}), p2({0, 0, 1}), p2({1, 1, 1})});
    CHECK(fam.degree_set() == std::vector<int>{1, 2});
    CHECK(fam.min_degree() == 1);
    CHECK(!fam.uniform_degree());
    CHECK(fam == Family(F2, 1, {p2({0, 0, 1}), p2({1, 1, 1}), p2({0, 1})}));
    CHECK(fam != Family(F2, 1, {p2({0, 0, 1}), p2({1, 1, 1})}));
}

TEST_CASE("trivial family is all multiples") {
    const Family fam = trivial_family(p2({0, 1, 1}), 4);  // g = x^2+x, n = 4
    CHECK(fam.size() == 4);  // q^{n - deg g} = 2^2
    CHECK(fam.ell() == 2);
    CHECK(fam.uniform_degree());
    CHECK(fam.min_degree() == 4);
    for (const Poly& m : fam.members()) CHECK(divides(p2({0, 1, 1}), m));
    CHECK(polyfam::family_common_divisor(fam) == p2({0, 1, 1}));
    CHECK(polyfam::is_ell_intersecting(fam, 2));

    // deg g = n is the singleton {g}; deg g = 0 is every monic degree-n poly.
    CHECK(trivial_family(p2({1, 1}), 1).size() == 1);
    CHECK(trivial_family(Poly::one(F3), 2).size() == 9);

    CHECK_THROWS_AS(trivial_family(p2({0, 1}), 0), std::invalid_argument);
    CHECK_THROWS_AS(trivial_family(p3({0, 2}), 3), std::invalid_argument);  // not monic
    CHECK_THROWS_AS(trivial_family(Poly::zero(F2), 3), std::invalid_argument);
}

TEST_CASE("primary family pinned values") {
    // q=3, d=1: members are (x^3 - x)/c for the three monic linear c.
    const Family p31 = primary_family(F3, 1);
    CHECK(p31.members() ==
          std::vector<Poly>{p3({2, 0, 1}), p3({0, 1, 1}), p3({0, 2, 1})});
    CHECK(p31.ell() == 1);

    // q=2, d=2: H_2/c over the four monic quadratics c.
    const Family p22 = primary_family(F2, 2);
    CHECK(p22.members() == std::vector<Poly>{p2({0, 1, 0, 0, 1}), p2({0, 0, 1, 0, 1}),
                                             p2({1, 1, 0, 1, 1}), p2({0, 0, 1, 1, 1})});
    CHECK(p22.ell() == 2);
    CHECK(p22.uniform_degree());
    CHECK(p22.min_degree() == 4);  // deg H_2 - 2 = 6 - 2

    CHECK_THROWS_AS(primary_family(F2, 0), std::invalid_argument);
}

TEST_CASE("primary family general invariants") {
    struct Case { std::uint64_t q; int d; };
    for (const auto& [q, d] : {Case{2, 2}, Case{2, 3}, Case{3, 1}, Case{3, 2}}) {
        CAPTURE(q);
        CAPTURE(d);
        const Field f = Field::from_order(q);
        const Family fam = primary_family(f, d);
        const int hd_deg = polyfam::lcm_all_monic_degree(f, d).degree().value();
        std::uint64_t size = 1;
        for (int i = 0; i < d; ++i) size *= q;
        CHECK(fam.size() == size);
        CHECK(fam.min_degree() == hd_deg - d);
        CHECK(fam.ell() == hd_deg - 2 * d);
        CHECK(polyfam::family_common_divisor(fam) == Poly::one(f));
        CHECK(polyfam::realized_level(fam) == hd_deg - 2 * d);
        CHECK(polyfam::is_ell_intersecting(fam, fam.ell()));
    }
}

TEST_CASE("exceptional family is the fixed quadruple") {
    const Family ex = polyfam::exceptional_family();
    CHECK(ex.field() == F2);
    CHECK(ex.ell() == 1);
    CHECK(ex.members() == std::vector<Poly>{p2({1, 0, 0, 1}), p2({0, 1, 0, 1}),
                                            p2({0, 0, 1, 1}), p2({0, 1, 1, 1})});
    CHECK(polyfam::is_ell_intersecting(ex, 1));
    CHECK(polyfam::family_common_divisor(ex) == Poly::one(F2));
    CHECK(polyfam::realized_level(ex) == 1);
}

TEST_CASE("scaling") {
    const Family ex = polyfam::exceptional_family();
    const Poly g = p2({0, 0, 1});  // x^2
    const Family up = scale_family(ex, g, ScaleDirection::multiply);
    CHECK(up.size() == 4);
    CHECK(up.min_degree() == 5);
    CHECK(up.ell() == 3);
    for (const Poly& m : up.members()) CHECK(divides(g, m));

    const Family down = scale_family(up, g, ScaleDirection::divide);
    CHECK(down == ex);

    // ell is clamped at zero when dividing by more than the declared level.
    const Family triv = trivial_family(p2({0, 1}), 3);
    CHECK(scale_family(triv, p2({0, 1}), ScaleDirection::divide).ell() == 0);

    CHECK_THROWS_AS(scale_family(ex, g, ScaleDirection::divide), std::invalid_argument);
    CHECK_THROWS_AS(scale_family(ex, p3({0, 1}), ScaleDirection::multiply),
                    std::invalid_argument);
    CHECK_THROWS_AS(scale_family(ex, p2({1, 1, 0, 0, 0, 1}) * Poly::zero(F2),
                                 ScaleDirection::multiply),
                    std::invalid_argument);  // zero scalar
}

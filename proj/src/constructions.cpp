#include "polyfam/constructions.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "polyfam/errors.hpp"
#include "polyfam/irreducible.hpp"

namespace polyfam {

Family trivial_family(const Poly& g, int n) {
    if (!g.is_monic()) throw std::invalid_argument("multiplier must be monic");
    const int ell = g.degree().value();
    if (n < ell)
        throw std::invalid_argument("target degree " + std::to_string(n) +
                                    " is below deg(g) = " + std::to_string(ell));
    std::vector<Poly> members;
    for (const Poly& p : enumerate_monic(g.field(), static_cast<std::uint32_t>(n - ell)))
        members.push_back(g * p);
    return Family(g.field(), ell, std::move(members));
}

Family primary_family(const Field& f, int d, std::uint64_t limit) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    const Poly hd = lcm_all_monic_degree(f, static_cast<std::uint32_t>(d), limit);
    const int deg_h = hd.degree().value();
    std::vector<Poly> members;
    for (const Poly& p : enumerate_monic(f, static_cast<std::uint32_t>(d), limit)) {
        auto [quot, rem] = divmod(hd, p);
        if (!rem.is_zero())
            throw internal_check_error("H_" + std::to_string(d) +
                                       " is not divisible by " + p.to_string());
        members.push_back(std::move(quot));
    }
    return Family(f, deg_h - 2 * d, std::move(members));
}

Family exceptional_family() {
    // The four monic cubics x²(x+1), x(x+1)², x(x²+x+1), (x+1)(x²+x+1)
    // over F_2, as expanded coefficient vectors (constant term first).
    const Field f(2, 1);
    std::vector<Poly> members{
        Poly(f, {0, 0, 1, 1}),  // x^3 + x^2
        Poly(f, {0, 1, 0, 1}),  // x^3 + x
        Poly(f, {0, 1, 1, 1}),  // x^3 + x^2 + x
        Poly(f, {1, 0, 0, 1}),  // x^3 + 1
    };
    return Family(f, 1, std::move(members));
}

Family scale_family(const Family& fam, const Poly& g, ScaleDirection direction) {
    if (!g.is_monic()) throw std::invalid_argument("scaling factor must be monic");
    if (g.field() != fam.field())
        throw std::invalid_argument("scaling factor over a different field");
    const int dg = g.degree().value();
    std::vector<Poly> members;
    members.reserve(fam.size());
    int ell;
    if (direction == ScaleDirection::multiply) {
        for (const Poly& m : fam.members()) members.push_back(m * g);
        ell = fam.ell() + dg;
    } else {
        for (const Poly& m : fam.members()) {
            auto [quot, rem] = divmod(m, g);
            if (!rem.is_zero())
                throw std::invalid_argument(g.to_string() + " does not divide the member " +
                                            m.to_string());
            members.push_back(std::move(quot));
        }
        ell = std::max(0, fam.ell() - dg);
    }
    return Family(fam.field(), ell, std::move(members));
}

}  // namespace polyfam

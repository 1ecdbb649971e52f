#ifndef POLYFAM_TESTS_ORACLES_HPP
#define POLYFAM_TESTS_ORACLES_HPP

// Deliberately naive reference implementations. Each one answers a question
// the library also answers, by the most literal method available, so the two
// can be compared on small inputs.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "polyfam/graph.hpp"
#include "polyfam/poly.hpp"

namespace oracles {

// All maximum cliques of g by scanning every vertex subset. Vertex count
// must be <= 20 or so; cliques come out in lexicographic order like the
// library's.
struct NaiveCliques {
    std::size_t max_size = 0;
    std::vector<std::vector<std::uint32_t>> cliques;
};

inline NaiveCliques naive_maximum_cliques(const polyfam::CompatibilityGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n > 20) throw std::invalid_argument("naive clique oracle: too many vertices");
    NaiveCliques out;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        std::vector<std::uint32_t> vs;
        for (std::uint32_t v = 0; v < n; ++v)
            if (mask & (std::uint32_t{1} << v)) vs.push_back(v);
        bool clique = true;
        for (std::size_t i = 0; i < vs.size() && clique; ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (!g.adjacent(vs[i], vs[j])) {
                    clique = false;
                    break;
                }
        if (!clique) continue;
        if (vs.size() > out.max_size) {
            out.max_size = vs.size();
            out.cliques.clear();
        }
        if (vs.size() == out.max_size) out.cliques.push_back(std::move(vs));
    }
    std::sort(out.cliques.begin(), out.cliques.end());
    return out;
}

// gcd degree by scanning every monic polynomial of degree <= min(deg a,
// deg b) and keeping the largest-degree one dividing both. The constant 1
// always divides, so the scan starts there.
inline int naive_gcd_degree(const polyfam::Poly& a, const polyfam::Poly& b) {
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("naive gcd oracle: zero operand");
    const polyfam::Field f = a.field();
    const int bound = std::min(a.degree().value(), b.degree().value());
    int best = 0;
    for (int d = 1; d <= bound; ++d)
        for (polyfam::Poly c : polyfam::enumerate_monic(f, d))
            if (divides(c, a) && divides(c, b)) best = std::max(best, d);
    return best;
}

// Irreducibility by scanning every possible monic divisor of smaller degree.
inline bool naive_is_irreducible(const polyfam::Poly& p) {
    const int n = p.degree().value();
    if (n < 1) return false;
    for (int d = 1; d < n; ++d)
        for (polyfam::Poly c : polyfam::enumerate_monic(p.field(), d))
            if (divides(c, p)) return false;
    return true;
}

}  // namespace oracles

#endif

#include "polyfam/irreducible.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <utility>

#include "polyfam/errors.hpp"

namespace polyfam {
namespace {

// Per-field cache of monic irreducibles by degree. Keyed by (p, k) since
// field construction is deterministic. Append-only: degree entries are built
// once and never mutated, and std::map nodes are stable, so references stay
// valid for concurrent readers; writes are serialized by the mutex.
using DegreeTable = std::map<std::uint32_t, std::vector<Poly>>;

std::shared_mutex cache_mutex;
std::map<std::pair<std::uint32_t, std::uint32_t>, DegreeTable>& cache() {
    static std::map<std::pair<std::uint32_t, std::uint32_t>, DegreeTable> c;
    return c;
}

const std::vector<Poly>* cache_lookup(const std::pair<std::uint32_t, std::uint32_t>& key,
                                      std::uint32_t d) {
    std::shared_lock lock(cache_mutex);
    auto it = cache().find(key);
    if (it == cache().end()) return nullptr;
    auto jt = it->second.find(d);
    return jt == it->second.end() ? nullptr : &jt->second;
}

// Build tables for degrees 1..dmax locally (no locks held): degree-1 monics
// are all irreducible, and a degree-d candidate is irreducible iff no
// irreducible of degree <= d/2 divides it.
std::vector<std::vector<Poly>> build_tables(const Field& f, std::uint32_t dmax,
                                            std::uint64_t limit) {
    std::vector<std::vector<Poly>> tables(dmax + 1);
    for (std::uint32_t d = 1; d <= dmax; ++d) {
        std::vector<Poly> found;
        for (Poly& cand : enumerate_monic(f, d, limit)) {
            bool irred = true;
            for (std::uint32_t e = 1; irred && 2 * e <= d; ++e)
                for (const Poly& g : tables[e])
                    if (divides(g, cand)) {
                        irred = false;
                        break;
                    }
            if (irred) found.push_back(std::move(cand));
        }
        tables[d] = std::move(found);
    }
    return tables;
}

// The cached irreducibles of degree d; builds all degrees up to d on a miss.
const std::vector<Poly>& cached_irreducibles(const Field& f, std::uint32_t d,
                                             std::uint64_t limit) {
    const std::pair<std::uint32_t, std::uint32_t> key{f.characteristic(),
                                                      f.extension_degree()};
    if (const auto* hit = cache_lookup(key, d)) return *hit;

    auto tables = build_tables(f, d, limit);
    std::unique_lock lock(cache_mutex);
    DegreeTable& per_field = cache()[key];
    for (std::uint32_t e = 1; e <= d; ++e)
        per_field.try_emplace(e, std::move(tables[e]));  // keep any concurrent insert
    return per_field.at(d);
}

}  // namespace

bool is_irreducible(const Poly& p) {
    if (p.degree() < 1)
        throw std::invalid_argument("irreducibility is defined for degree >= 1");
    const int deg = p.degree().value();
    for (int d = 1; 2 * d <= deg; ++d)
        for (const Poly& g : cached_irreducibles(p.field(), d, kDefaultEnumerationLimit))
            if (divides(g, p)) return false;
    return true;
}

std::vector<Poly> enumerate_irreducible_monic(const Field& f, std::uint32_t d,
                                              std::uint64_t limit) {
    if (d < 1) throw std::invalid_argument("irreducibles have degree >= 1");
    return cached_irreducibles(f, d, limit);
}

Factorization factor(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    Factorization out{p.leading_coefficient(), {}};
    Poly rest = p.monic();
    for (int d = 1; !rest.is_constant() && 2 * d <= rest.degree().value(); ++d) {
        for (const Poly& g : cached_irreducibles(p.field(), d, kDefaultEnumerationLimit)) {
            if (rest.is_constant() || 2 * d > rest.degree().value()) break;
            std::uint32_t mult = 0;
            for (;;) {
                auto [quot, rem] = divmod(rest, g);
                if (!rem.is_zero()) break;
                rest = std::move(quot);
                ++mult;
            }
            if (mult > 0) out.factors.push_back({g, mult});
        }
    }
    if (!rest.is_constant()) out.factors.push_back({rest, 1});
    return out;
}

Poly lcm_all_monic_degree(const Field& f, std::uint32_t d, std::uint64_t limit) {
    if (d < 1) throw std::invalid_argument("H_d requires d >= 1");

    // Fold lcm over the full enumeration.
    Poly folded = Poly::one(f);
    for (const Poly& p : enumerate_monic(f, d, limit)) folded = lcm(folded, p);

    // Closed form: product of g^(d / deg g) over monic irreducibles g of
    // degree <= d. Derived, so cross-checked against the fold.
    Poly closed = Poly::one(f);
    for (std::uint32_t e = 1; e <= d; ++e) {
        std::uint32_t power = d / e;
        for (const Poly& g : cached_irreducibles(f, e, limit))
            for (std::uint32_t i = 0; i < power; ++i) closed = closed * g;
    }
    if (folded != closed)
        throw internal_check_error("H_" + std::to_string(d) +
                                   " disagreement between the lcm fold (" +
                                   folded.to_string() + ") and the closed form (" +
                                   closed.to_string() + ")");
    return folded;
}

}  // namespace polyfam

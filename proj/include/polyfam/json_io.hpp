#ifndef POLYFAM_JSON_IO_HPP
#define POLYFAM_JSON_IO_HPP

#include <string>

#include "json.hpp"
#include "polyfam/family.hpp"
#include "polyfam/search.hpp"
#include "polyfam/verifier.hpp"

namespace polyfam {

// Plain nlohmann::json keeps object keys sorted, so serialization is
// byte-stable across runs; all emitters below rely on that.
using json = nlohmann::json;

/// {"p": int, "k": int, "modulus": [int,...] | null (prime fields)}
json field_to_json(const Field& f);
Field field_from_json(const json& j, const FieldOptions& opts = {});

/// Array of coefficient element indices, constant term first; [] is zero.
json poly_to_json(const Poly& p);
Poly poly_from_json(const Field& f, const json& j);

/// {"field": ..., "ell": int, "polys": [[int,...],...]} with polys in
/// canonical (degree, poly_index) order.
json family_to_json(const Family& fam);
/// Validates and canonicalizes; rejects duplicates, non-monic members, bad
/// coefficient indices, and empty families.
Family family_from_json(const json& j, const FieldOptions& opts = {});

Family load_family(const std::string& path, const FieldOptions& opts = {});

/// {"kind": str, "common_divisor": [...], "d": int (PrimaryConstruction
/// only), "realized_level": int}
json classification_to_json(const Classification& c);

/// Schema version "v": 1; parameters, bound, counts, flags, classification
/// histogram, optional families.
json report_to_json(const SearchReport& r);

}  // namespace polyfam

#endif

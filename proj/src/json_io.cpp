#include "polyfam/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace polyfam {
namespace {

std::uint32_t get_u32(const json& j, const char* key) {
    const json& v = j.at(key);
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() > 0xffffffffu)
        throw std::invalid_argument(std::string("\"") + key +
                                    "\" must be a non-negative integer");
    return v.get<std::uint32_t>();
}

}  // namespace

json field_to_json(const Field& f) {
    json j;
    j["p"] = f.characteristic();
    j["k"] = f.extension_degree();
    if (f.extension_degree() == 1)
        j["modulus"] = nullptr;
    else
        j["modulus"] = f.modulus();
    return j;
}

Field field_from_json(const json& j, const FieldOptions& opts) {
    if (!j.is_object()) throw std::invalid_argument("field must be a JSON object");
    const Field f(get_u32(j, "p"), get_u32(j, "k"), opts);
    if (j.contains("modulus") && !j.at("modulus").is_null()) {
        const auto claimed = j.at("modulus").get<std::vector<std::uint32_t>>();
        if (claimed != f.modulus())
            throw std::invalid_argument(
                "modulus mismatch: this library always uses the lexicographically "
                "least monic irreducible (empty for prime fields)");
    }
    return f;
}

json poly_to_json(const Poly& p) { return json(p.coefficient_indices()); }

Poly poly_from_json(const Field& f, const json& j) {
    if (!j.is_array())
        throw std::invalid_argument("polynomial must be an array of coefficient indices");
    std::vector<std::uint32_t> coeffs;
    coeffs.reserve(j.size());
    for (const json& c : j) {
        if (!c.is_number_unsigned() || c.get<std::uint64_t>() >= f.order())
            throw std::invalid_argument(
                "coefficient index must be an integer in [0, q)");
        coeffs.push_back(c.get<std::uint32_t>());
    }
    return Poly(f, std::move(coeffs));
}

json family_to_json(const Family& fam) {
    json polys = json::array();
    for (const Poly& m : fam.members()) polys.push_back(poly_to_json(m));
    json j;
    j["field"] = field_to_json(fam.field());
    j["ell"] = fam.ell();
    j["polys"] = std::move(polys);
    return j;
}

Family family_from_json(const json& j, const FieldOptions& opts) {
    if (!j.is_object()) throw std::invalid_argument("family must be a JSON object");
    const Field f = field_from_json(j.at("field"), opts);
    const json& ell = j.at("ell");
    if (!ell.is_number_integer())
        throw std::invalid_argument("\"ell\" must be an integer");
    const json& polys = j.at("polys");
    if (!polys.is_array() || polys.empty())
        throw std::invalid_argument("\"polys\" must be a nonempty array");
    std::vector<Poly> members;
    members.reserve(polys.size());
    for (const json& p : polys) {
        Poly m = poly_from_json(f, p);
        if (!m.is_monic())
            throw std::invalid_argument("family member " + p.dump() + " is not monic");
        members.push_back(std::move(m));
    }
    return Family(f, ell.get<int>(), std::move(members));
}

Family load_family(const std::string& path, const FieldOptions& opts) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open family file " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("family file " + path + ": " + e.what());
    }
    try {
        return family_from_json(j, opts);
    } catch (const json::exception& e) {
        throw std::invalid_argument("family file " + path + ": " + e.what());
    }
}

json classification_to_json(const Classification& c) {
    json j;
    j["kind"] = to_string(c.kind);
    j["common_divisor"] = poly_to_json(c.common_divisor);
    j["realized_level"] = c.realized_level;
    if (c.d) j["d"] = *c.d;
    return j;
}

json report_to_json(const SearchReport& r) {
    json j;
    j["v"] = 1;
    j["parameters"] = {{"q", r.field.order()},
                       {"degrees", r.degrees},
                       {"ell", r.ell},
                       {"field", field_to_json(r.field)}};
    j["predicted_bound"] = r.predicted_bound;
    j["max_size_found"] = r.max_size_found;
    j["maximum_family_count"] = r.maximum_family_count;
    j["truncated"] = r.truncated;
    j["completed"] = r.completed;
    j["classifications"] = json::object();
    for (const auto& [kind, count] : r.classifications) j["classifications"][kind] = count;
    if (r.families) {
        json fams = json::array();
        for (const Family& fam : *r.families) fams.push_back(family_to_json(fam));
        j["families"] = std::move(fams);
    }
    return j;
}

}  // namespace polyfam

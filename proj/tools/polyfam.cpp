#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "polyfam/constructions.hpp"
#include "polyfam/counting.hpp"
#include "polyfam/errors.hpp"
#include "polyfam/irreducible.hpp"
#include "polyfam/json_io.hpp"
#include "polyfam/search.hpp"

namespace {

using polyfam::json;

struct GlobalOpts {
    bool pretty = false;
    bool no_meta = false;
    unsigned threads = 0;  // 0 = hardware concurrency
    double timeout_seconds = 0.0;
    std::uint64_t vertex_limit = polyfam::kDefaultVertexLimit;
    std::uint64_t field_limit = std::uint64_t{1} << 16;
    std::string output;  // empty = stdout
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

polyfam::FieldOptions field_options(const GlobalOpts& g) {
    polyfam::FieldOptions o;
    o.order_limit = g.field_limit;
    return o;
}

// q must be a prime power; factoring it also rejects everything else.
void require_prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    std::uint64_t rest = q;
    while (rest % p == 0) rest /= p;
    if (rest != 1)
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
}

void emit(const json& payload, const GlobalOpts& g) {
    json out = payload;
    if (!g.no_meta) {
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - g.start)
                .count();
        const unsigned threads =
            g.threads != 0 ? g.threads
                           : std::max(1u, std::thread::hardware_concurrency());
        out["meta"] = {{"elapsed_seconds", elapsed}, {"threads", threads}};
    }
    const std::string text = out.dump(g.pretty ? 2 : -1) + "\n";
    if (g.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(g.output);
        if (!f) throw std::invalid_argument("cannot open output file " + g.output);
        f << text;
    }
}

json count_to_json(const polyfam::BigInt& n) {
    // Counts beyond 64 bits degrade to decimal strings instead of losing
    // precision in a JSON number.
    if (n <= std::numeric_limits<std::uint64_t>::max())
        return json(n.convert_to<std::uint64_t>());
    return json(n.str());
}

int dispatch_exit = 0;  // set by subcommands that print a report but fail softly

void run_report(const polyfam::SearchReport& rep, const GlobalOpts& g) {
    emit(polyfam::report_to_json(rep), g);
    if (!rep.completed) {
        std::cerr << "search timed out; the report is incomplete\n";
        dispatch_exit = 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOpts g;
    CLI::App app{"Exact verification of extremal intersecting families of monic "
                 "polynomials over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--pretty", g.pretty, "Indent JSON output");
    app.add_flag("--no-meta", g.no_meta,
                 "Omit the run-specific \"meta\" key (for byte-exact diffs)");
    app.add_option("--threads", g.threads, "Worker threads (0 = hardware)")
        ->envname("POLYFAM_THREADS");
    app.add_option("--timeout", g.timeout_seconds, "Search budget in seconds (0 = none)")
        ->envname("POLYFAM_TIMEOUT_S");
    app.add_option("--vertex-limit", g.vertex_limit, "Compatibility-graph vertex guard")
        ->envname("POLYFAM_VERTEX_LIMIT");
    app.add_option("--field-limit", g.field_limit, "Largest admissible field order")
        ->envname("POLYFAM_FIELD_LIMIT");
    app.add_option("-o,--output", g.output, "Write JSON to a file instead of stdout");

    // count-irreducibles
    std::uint64_t ci_q = 0;
    std::uint32_t ci_n = 0;
    bool ci_check_bound = false;
    auto* sc_count = app.add_subcommand("count-irreducibles",
                                        "N_q(n) by the Möbius formula");
    sc_count->add_option("--q", ci_q, "Field order (prime power)")->required();
    sc_count->add_option("--n", ci_n, "Degree")->required();
    sc_count->add_flag("--check-bound", ci_check_bound,
                       "Also report whether the explicit lower bound holds");
    sc_count->callback([&] {
        require_prime_power(ci_q);
        json j;
        j["count"] = count_to_json(polyfam::count_irreducibles(ci_q, ci_n));
        if (ci_check_bound)
            j["lower_bound_holds"] = polyfam::count_lower_bound_holds(ci_q, ci_n);
        emit(j, g);
    });

    // construct trivial|primary|exceptional
    auto* sc_construct = app.add_subcommand("construct", "Emit a family as JSON");
    sc_construct->require_subcommand(1);

    std::uint64_t tr_q = 0;
    std::vector<std::uint32_t> tr_g;
    int tr_n = 0;
    auto* sc_trivial = sc_construct->add_subcommand(
        "trivial", "All monic degree-n multiples of g");
    sc_trivial->add_option("--q", tr_q, "Field order")->required();
    sc_trivial
        ->add_option("--g", tr_g,
                     "Coefficient indices of monic g, constant term first")
        ->required()
        ->delimiter(',');
    sc_trivial->add_option("--n", tr_n, "Member degree")->required();
    sc_trivial->callback([&] {
        const polyfam::Field f = polyfam::Field::from_order(tr_q, field_options(g));
        const polyfam::Poly gp(f, tr_g);
        emit(polyfam::family_to_json(polyfam::trivial_family(gp, tr_n)), g);
    });

    std::uint64_t pr_q = 0;
    int pr_d = 0;
    auto* sc_primary =
        sc_construct->add_subcommand("primary", "The quotients of H_d by all monic "
                                                "degree-d polynomials");
    sc_primary->add_option("--q", pr_q, "Field order")->required();
    sc_primary->add_option("--d", pr_d, "Divisor degree")->required();
    sc_primary->callback([&] {
        const polyfam::Field f = polyfam::Field::from_order(pr_q, field_options(g));
        emit(polyfam::family_to_json(polyfam::primary_family(f, pr_d)), g);
    });

    auto* sc_exceptional = sc_construct->add_subcommand(
        "exceptional", "The fixed four-member cubic family over F_2");
    sc_exceptional->callback(
        [&] { emit(polyfam::family_to_json(polyfam::exceptional_family()), g); });

    // verify
    std::string vf_file;
    int vf_ell = 0;
    std::uint32_t vf_k = 0;
    auto* sc_verify = app.add_subcommand("verify", "Check a family file");
    sc_verify->add_option("--file", vf_file, "Family JSON file")->required();
    sc_verify->add_option("--ell", vf_ell, "Level to verify against")->required();
    sc_verify->add_option("--k", vf_k, "Additionally check k-wise intersection");
    sc_verify->callback([&] {
        const polyfam::Family fam = polyfam::load_family(vf_file, field_options(g));
        json j;
        const bool intersecting = polyfam::is_ell_intersecting(fam, vf_ell);
        j["intersecting"] = intersecting;
        j["realized_level"] = polyfam::realized_level(fam);
        j["common_divisor"] = polyfam::poly_to_json(polyfam::family_common_divisor(fam));
        std::string note;
        if (!fam.uniform_degree())
            note = "classification requires a uniform-degree family";
        else if (!intersecting)
            note = "family is not intersecting at the requested level";
        else {
            const int n = fam.min_degree();
            std::uint64_t bound = 1;
            bool overflow = false;
            for (int i = 0; i < n - vf_ell; ++i) {
                if (bound > std::numeric_limits<std::uint64_t>::max() / fam.field().order()) {
                    overflow = true;
                    break;
                }
                bound *= fam.field().order();
            }
            if (vf_ell > n)
                note = "level exceeds the member degree";
            else if (overflow || fam.size() != bound)
                note = "family does not have the extremal size q^(n-ell)";
        }
        if (note.empty()) {
            j["classification"] =
                polyfam::classification_to_json(polyfam::classify_extremal(fam, vf_ell));
        } else {
            j["classification"] = nullptr;
            j["classification_note"] = note;
        }
        if (sc_verify->count("--k") > 0) {
            j["k"] = vf_k;
            j["k_wise"] = polyfam::is_k_wise_intersecting(fam, static_cast<int>(vf_k),
                                                          vf_ell);
        }
        emit(j, g);
    });

    // search (uniform degree)
    std::uint64_t se_q = 0;
    int se_n = 0, se_ell = 0;
    bool se_enumerate = false;
    std::uint64_t se_cap = polyfam::kDefaultCliqueCap;
    auto* sc_search = app.add_subcommand(
        "search", "Maximum-clique search over all monic degree-n polynomials");
    sc_search->add_option("--q", se_q, "Field order")->required();
    sc_search->add_option("--n", se_n, "Member degree")->required();
    sc_search->add_option("--ell", se_ell, "Intersection level")->required();
    sc_search->add_flag("--enumerate", se_enumerate,
                        "Include the maximum families in the report");
    sc_search->add_option("--cap", se_cap, "Stored-clique cap")
        ->envname("POLYFAM_CLIQUE_CAP");
    sc_search->callback([&] {
        if (se_n < 1 || se_ell < 1)
            throw std::invalid_argument("search requires --n >= 1 and --ell >= 1");
        const polyfam::Field f = polyfam::Field::from_order(se_q, field_options(g));
        polyfam::SearchOptions opts;
        opts.clique_cap = se_cap;
        opts.threads = g.threads;
        opts.timeout_seconds = g.timeout_seconds;
        opts.vertex_limit = g.vertex_limit;
        opts.include_families = se_enumerate;
        run_report(polyfam::verify_theorem1(f, se_n, se_ell, opts), g);
    });

    // theorem4 (mixed degrees)
    std::uint64_t t4_q = 0;
    std::vector<int> t4_degrees;
    int t4_ell = 0;
    bool t4_enumerate = false;
    std::uint64_t t4_cap = polyfam::kDefaultCliqueCap;
    auto* sc_t4 = app.add_subcommand(
        "theorem4", "Mixed-degree maximum-clique search (all degrees above the level)");
    sc_t4->add_option("--q", t4_q, "Field order")->required();
    sc_t4->add_option("--degrees", t4_degrees, "Comma-separated degrees (at least two)")
        ->required()
        ->delimiter(',');
    sc_t4->add_option("--ell", t4_ell, "Intersection level")->required();
    sc_t4->add_flag("--enumerate", t4_enumerate,
                    "Include the maximum families in the report");
    sc_t4->add_option("--cap", t4_cap, "Stored-clique cap")
        ->envname("POLYFAM_CLIQUE_CAP");
    sc_t4->callback([&] {
        if (t4_ell < 1)
            throw std::invalid_argument("theorem4 requires --ell >= 1");
        const polyfam::Field f = polyfam::Field::from_order(t4_q, field_options(g));
        polyfam::SearchOptions opts;
        opts.clique_cap = t4_cap;
        opts.threads = g.threads;
        opts.timeout_seconds = g.timeout_seconds;
        opts.vertex_limit = g.vertex_limit;
        opts.include_families = t4_enumerate;
        run_report(polyfam::verify_theorem4(f, t4_degrees, t4_ell, opts), g);
    });

    // hd
    std::uint64_t hd_q = 0;
    std::uint32_t hd_d = 0;
    auto* sc_hd = app.add_subcommand(
        "hd", "H_d, the lcm of all monic degree-d polynomials");
    sc_hd->add_option("--q", hd_q, "Field order")->required();
    sc_hd->add_option("--d", hd_d, "Degree")->required();
    sc_hd->callback([&] {
        if (hd_d < 1) throw std::invalid_argument("hd requires --d >= 1");
        const polyfam::Field f = polyfam::Field::from_order(hd_q, field_options(g));
        const polyfam::Poly hd = polyfam::lcm_all_monic_degree(f, hd_d);
        json j;
        j["d"] = hd_d;
        j["degree"] = hd.degree().serialized();
        j["coefficients"] = polyfam::poly_to_json(hd);
        emit(j, g);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const polyfam::internal_check_error& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const polyfam::guard_error& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return dispatch_exit;
}

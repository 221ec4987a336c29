// Command-line front end: exact Hilbert/Molien series, invariant monomial
// bases, free and S-algebra generating sets for the cyclic-group invariants
// of the free associative algebra, plus the built-in verification catalogs.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
// cap exceeded.  All numeric output is exact; no floating point anywhere.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cycinv/commutative.hpp"
#include "cycinv/group_actions.hpp"
#include "cycinv/invariant_core.hpp"
#include "cycinv/s_algebra.hpp"
#include "cycinv/selftest.hpp"

using json = nlohmann::ordered_json;
using namespace cycinv;

namespace {

constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct Options {
    int d = 3;
    int degree = 1;
    int max_degree = 4;
    int terms = 8;
    std::string format = "text";
    std::string field = "Q";
    std::string gens_path;
    std::string target;
    Caps caps;
};

bool json_output(const Options& opt) { return opt.format == "json"; }

// Term-level serialization: (word index array, coefficient string) pairs.
template <class K>
json poly_terms_json(const NcPoly<K>& f) {
    json terms = json::array();
    for (const auto& [w, c] : f.terms()) {
        json letters = json::array();
        for (int l : w.letters()) letters.push_back(l);
        terms.push_back(json::array({letters, CoeffIO<K>::str(c)}));
    }
    return terms;
}

json series_json(int d, const RationalSeries& series, int terms) {
    json out;
    out["d"] = d;
    json num = json::array(), den = json::array(), coeffs = json::array();
    for (int i = 0; i <= series.num().degree(); ++i) num.push_back(series.num().coeff(i).str());
    for (int i = 0; i <= series.den().degree(); ++i) den.push_back(series.den().coeff(i).str());
    for (const Rational& c : series.coefficients(terms - 1)) coeffs.push_back(c.str());
    out["num"] = num;
    out["den"] = den;
    out["coeffs"] = coeffs;
    return out;
}

int run_hilbert(const Options& opt) {
    const RationalSeries series = cyclic_hilbert_series(opt.d);
    if (json_output(opt)) {
        std::cout << series_json(opt.d, series, opt.terms).dump(2) << "\n";
        return 0;
    }
    std::cout << "H = " << series.str() << "\n";
    const auto coeffs = series.coefficients(opt.terms - 1);
    for (size_t i = 0; i < coeffs.size(); ++i) std::cout << (i ? " " : "") << coeffs[i].str();
    std::cout << "\n";
    return 0;
}

int run_basis(const Options& opt) {
    const auto basis = invariant_monomial_basis(opt.d, opt.degree, opt.caps);
    if (json_output(opt)) {
        json out;
        out["d"] = opt.d;
        out["degree"] = opt.degree;
        out["count"] = basis.size();
        json items = json::array();
        for (const Word& w : basis) items.push_back(w.str(VarStyle::Y0Based));
        out["items"] = items;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "d=" << opt.d << " degree=" << opt.degree << " count=" << basis.size() << "\n";
    for (const Word& w : basis) std::cout << w.str(VarStyle::Y0Based) << "\n";
    return 0;
}

int run_freegens(const Options& opt) {
    const auto by_degree = free_generators_up_to_degree(opt.d, opt.max_degree, opt.caps);
    if (json_output(opt)) {
        json out;
        out["d"] = opt.d;
        out["max_degree"] = opt.max_degree;
        json levels = json::array();
        for (const auto& [degree, words] : by_degree) {
            json level;
            level["degree"] = degree;
            level["count"] = words.size();
            json items = json::array();
            for (const Word& w : words) items.push_back(w.str(VarStyle::Y0Based));
            level["items"] = items;
            levels.push_back(level);
        }
        out["by_degree"] = levels;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (const auto& [degree, words] : by_degree) {
        std::cout << "degree " << degree << " (" << words.size() << "):";
        for (const Word& w : words) std::cout << " " << w.str(VarStyle::Y0Based);
        std::cout << "\n";
    }
    return 0;
}

int run_commgens(const Options& opt) {
    const auto gens = minimal_monoid_generators(opt.d);
    if (json_output(opt)) {
        json out;
        out["d"] = opt.d;
        out["count"] = gens.size();
        json levels = json::array();
        long current = -1;
        json items = json::array();
        for (const ExponentVector& v : gens) {
            if (v.degree() != current && !items.empty()) {
                json level;
                level["degree"] = current;
                level["items"] = items;
                levels.push_back(level);
                items = json::array();
            }
            current = v.degree();
            items.push_back(v.str());
        }
        if (!items.empty()) {
            json level;
            level["degree"] = current;
            level["items"] = items;
            levels.push_back(level);
        }
        out["by_degree"] = levels;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "d=" << opt.d << " count=" << gens.size() << "\n";
    long current = -1;
    for (const ExponentVector& v : gens) {
        if (v.degree() != current) {
            current = v.degree();
            std::cout << "degree " << current << ":";
            bool first = true;
            for (const ExponentVector& u : gens)
                if (u.degree() == current) {
                    std::cout << (first ? " " : ", ") << u.str();
                    first = false;
                }
            std::cout << "\n";
        }
    }
    return 0;
}

int report_checks(const std::vector<std::pair<std::string, bool>>& results, bool as_json) {
    bool all_ok = true;
    if (as_json) {
        json out = json::array();
        for (const auto& [name, ok] : results) {
            json entry;
            entry["name"] = name;
            entry["pass"] = ok;
            out.push_back(entry);
            all_ok = all_ok && ok;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& [name, ok] : results) {
            std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
            all_ok = all_ok && ok;
        }
        std::cout << (all_ok ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return all_ok ? 0 : kExitVerification;
}

int run_verify_comm(const Options& opt) {
    std::vector<std::pair<std::string, bool>> results;
    for (const CommIdentity& identity : commutative_identity_catalog(opt.d))
        results.emplace_back(identity.name, verify_commutative_identity(identity.lhs, identity.rhs));
    return report_checks(results, json_output(opt));
}

int run_s_generators(const Options& opt) {
    const auto gens = cyclic_s_generators(opt.d);
    if (json_output(opt)) {
        json out;
        out["d"] = opt.d;
        out["count"] = gens.generators.size();
        json items = json::array();
        for (const auto& g : gens.generators) {
            json item;
            item["text"] = g.str(VarStyle::Y0Based);
            item["terms"] = poly_terms_json(g);
            items.push_back(item);
        }
        out["generators"] = items;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "d=" << opt.d << " count=" << gens.generators.size() << "\n";
    for (const auto& g : gens.generators)
        std::cout << "degree " << g.homogeneous_degree() << ": " << g.str(VarStyle::Y0Based)
                  << "\n";
    return 0;
}

int run_s_deficiency(const Options& opt) {
    const auto gens = cyclic_s_generators(opt.d);
    json values = json::array();
    std::vector<long> plain;
    // TODO: share the component spans across degrees instead of rebuilding
    // them inside every s_generator_deficiency call.
    for (int n = 1; n <= opt.max_degree; ++n) {
        const long value = s_generator_deficiency(opt.d, gens, n, opt.caps);
        values.push_back(value);
        plain.push_back(value);
    }
    if (json_output(opt)) {
        json out;
        out["d"] = opt.d;
        out["max_degree"] = opt.max_degree;
        out["deficiency"] = values;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (int n = 1; n <= opt.max_degree; ++n)
        std::cout << "degree " << n << ": " << plain[static_cast<size_t>(n - 1)] << "\n";
    return 0;
}

int run_verify_s(const Options& opt) {
    if (opt.d != 3) {
        std::cerr << "verify-s: the identity catalog exists only for d=3\n";
        return kExitUsage;
    }
    std::vector<std::pair<std::string, bool>> results;
    for (const SIdentity& identity : s_identity_catalog())
        results.emplace_back("identity " + identity.id, identity.lhs == identity.rhs);
    // Minimality evidence: y1^3 must not be reachable without v32.
    const SGeneratorSet<CycNumber> full = x_basis_s_generators_d3();
    const SGeneratorSet<CycNumber> without_v32(
        3, {full.generators[0], full.generators[1], full.generators[2]});
    const auto y1_cubed = substitute(x_to_y_basis_change(3).to_x,
                                     NcPoly<CycNumber>::monomial(Word(3, {1, 1, 1}), CycNumber(1)));
    results.emplace_back("minimality: y1^3 not in <v1, v2, v31>",
                         !s_membership(y1_cubed, without_v32, opt.caps).member);
    return report_checks(results, json_output(opt));
}

int run_selftest(const Options& opt) {
    std::vector<std::pair<std::string, bool>> results;
    for (const SelftestCase& test : selftest_catalog()) results.emplace_back(test.name, test.run());
    return report_checks(results, json_output(opt));
}

// Generator files: {"field": "Q" | "Q(e_d)", "d": 3, "generators": [...]}.
template <class K>
SGeneratorSet<K> load_generators(const json& doc, int d, int field_order) {
    std::vector<NcPoly<K>> gens;
    for (const auto& entry : doc.at("generators"))
        gens.push_back(NcPoly<K>::parse(entry.get<std::string>(), d, field_order));
    return SGeneratorSet<K>(d, std::move(gens));
}

json permutation_json(const Permutation& sigma) {
    json images = json::array();
    for (int q = 0; q < sigma.degree(); ++q) images.push_back(sigma.image(q) + 1);
    return images;
}

// x-variables and y-variables render differently; pick the style the
// input itself uses.
VarStyle style_of(const std::string& text) {
    return text.find('x') != std::string::npos ? VarStyle::X1Based : VarStyle::Y0Based;
}

template <class K>
int run_s_member_typed(const Options& opt, const json& doc, int field_order) {
    const SGeneratorSet<K> gens = load_generators<K>(doc, opt.d, field_order);
    const NcPoly<K> target = NcPoly<K>::parse(opt.target, opt.d, field_order);
    const VarStyle style = style_of(opt.target);
    const SMembership<K> result = s_membership(target, gens, opt.caps);
    if (!result.member) {
        if (json_output(opt)) {
            json out;
            out["member"] = false;
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "not a member\n";
        }
        return 0;
    }
    const bool reevaluates = result.evaluate(gens) == target;
    json out;
    out["member"] = true;
    out["target"] = target.str(style);
    out["target_terms"] = poly_terms_json(target);
    json terms = json::array();
    for (const auto& term : result.certificate) {
        json entry;
        entry["coeff"] = CoeffIO<K>::str(term.coeff);
        entry["generators"] = term.product.generator_indices;
        entry["permutation"] = permutation_json(term.product.sigma);
        terms.push_back(entry);
    }
    out["certificate"] = terms;
    out["reevaluates"] = reevaluates;
    std::cout << out.dump(2) << "\n";
    return reevaluates ? 0 : kExitVerification;
}

int run_s_member(const Options& opt) {
    std::ifstream in(opt.gens_path);
    if (!in) {
        std::cerr << "s-member: cannot open generator file '" << opt.gens_path << "'\n";
        return kExitUsage;
    }
    json doc = json::parse(in);
    const int d = doc.value("d", opt.d);
    Options local = opt;
    local.d = d;
    const std::string field = doc.value("field", opt.field);
    if (field == "Q") return run_s_member_typed<Rational>(local, doc, 1);
    if (field == "Qe" || field == "Q(e)" || field == "Q(e_" + std::to_string(d) + ")")
        return run_s_member_typed<CycNumber>(local, doc, d);
    std::cerr << "s-member: unknown coefficient field tag '" << field
              << "' (expected Q, Qe or Q(e_" << d << "))\n";
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of cyclic group actions on free associative algebras"};
    app.require_subcommand(1);

    Options opt;
    long ambient_cap = opt.caps.ambient;

    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--cap-ambient", ambient_cap,
                   "Largest allowed homogeneous component dimension d^n")
        ->envname("CYCLINV_CAP_AMBIENT")
        ->capture_default_str();

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of the invariant algebra");
    hilbert->add_option("--d", opt.d, "Number of variables / group order")->required();
    hilbert->add_option("--terms", opt.terms, "Number of coefficients to print")
        ->capture_default_str();

    auto* basis = app.add_subcommand("basis", "Invariant monomial basis of one degree");
    basis->add_option("--d", opt.d)->required();
    basis->add_option("--degree", opt.degree)->required();

    auto* freegens = app.add_subcommand("freegens", "Free generators by degree");
    freegens->add_option("--d", opt.d)->required();
    freegens->add_option("--max-degree", opt.max_degree)->capture_default_str();

    auto* commgens = app.add_subcommand("commgens", "Commutative invariant monoid generators");
    commgens->add_option("--d", opt.d)->required();

    auto* verify_comm =
        app.add_subcommand("verify-comm", "Verify the commutative relation catalog");
    verify_comm->add_option("--d", opt.d)->required()->check(CLI::IsMember({"3", "4"}));

    auto* s_generators =
        app.add_subcommand("s-generators", "Generating set of the S-algebra of invariants");
    s_generators->add_option("--d", opt.d)->required();

    auto* s_member = app.add_subcommand("s-member", "Membership in an S-subalgebra");
    s_member->add_option("--d", opt.d, "Alphabet size (may be overridden by the file)");
    s_member->add_option("--gens", opt.gens_path, "Generator file (JSON)")->required();
    s_member->add_option("--target", opt.target, "Target polynomial")->required();
    s_member->add_option("--field", opt.field, "Coefficient field when the file omits it")
        ->check(CLI::IsMember({"Q", "Qe"}));

    auto* s_deficiency = app.add_subcommand("s-deficiency", "New S-generators needed per degree");
    s_deficiency->add_option("--d", opt.d)->required();
    s_deficiency->add_option("--max-degree", opt.max_degree)->capture_default_str();

    auto* verify_s = app.add_subcommand("verify-s", "Verify the S-algebra identity catalog");
    verify_s->add_option("--d", opt.d)->capture_default_str();

    app.add_subcommand("selftest", "Run the full built-in verification catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    opt.caps.ambient = ambient_cap;

    try {
        if (hilbert->parsed()) return run_hilbert(opt);
        if (basis->parsed()) return run_basis(opt);
        if (freegens->parsed()) return run_freegens(opt);
        if (commgens->parsed()) return run_commgens(opt);
        if (verify_comm->parsed()) return run_verify_comm(opt);
        if (s_generators->parsed()) return run_s_generators(opt);
        if (s_member->parsed()) return run_s_member(opt);
        if (s_deficiency->parsed()) return run_s_deficiency(opt);
        if (verify_s->parsed()) return run_verify_s(opt);
        return run_selftest(opt);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

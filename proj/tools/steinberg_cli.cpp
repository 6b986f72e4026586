// Command line front end.
//
//   steinberg compute --family C --rank 2 --statistic affine
//   steinberg table1 [--output csv]
//   steinberg verify [--max-rank 6] [--order 40] [--jobs 4]
//
// Exit codes: 0 success, 1 a verification failed, 2 invalid usage.

#include <steinberg/diagram.hpp>
#include <steinberg/flag_polynomial.hpp>
#include <steinberg/format.hpp>
#include <steinberg/polynomial.hpp>
#include <steinberg/reference_table.hpp>
#include <steinberg/series.hpp>
#include <steinberg/signed_permutation.hpp>
#include <steinberg/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace steinberg;
using nlohmann::json;

const std::map<std::string, WeylType> kFamilies = {
    {"A", WeylType::A},   {"B", WeylType::B},   {"C", WeylType::C},
    {"D", WeylType::D},   {"E6", WeylType::E6}, {"E7", WeylType::E7},
    {"E8", WeylType::E8}, {"F4", WeylType::F4}, {"G2", WeylType::G2},
};

const char* type_name(WeylType t) {
    for (const auto& [name, type] : kFamilies)
        if (type == t) return name.c_str();
    return "?";
}

// Coxeter rank -> one-line window length of the classical group.
unsigned window_length(WeylType t, unsigned rank) {
    return t == WeylType::A ? rank + 1 : rank;
}

SeriesId series_for(Family f, Statistic s) {
    if (s == Statistic::ordinary) {
        switch (f) {
            case Family::A: return SeriesId::A;
            case Family::B:
            case Family::C: return SeriesId::BC;
            case Family::D: return SeriesId::D;
        }
    } else {
        switch (f) {
            case Family::A: return SeriesId::affA;
            case Family::B: return SeriesId::affB;
            case Family::C: return SeriesId::affC;
            case Family::D: return SeriesId::affD;
        }
    }
    throw std::invalid_argument("series_for: unknown family");
}

void print_univariate(const Polynomial& p, const std::string& output) {
    if (output == "json") {
        std::cout << to_json(p) << "\n";
    } else if (output == "csv") {
        std::cout << "power,coefficient\n";
        for (int k = 0; k <= std::max(p.degree(), 0); ++k)
            std::cout << k << "," << p.coeff(static_cast<unsigned>(k)).get_str() << "\n";
    } else {
        std::cout << to_text(p) << "\n";
    }
}

void print_flag(const FlagPolynomial& p, const std::string& output) {
    if (output == "json") {
        std::cout << to_json(p) << "\n";
    } else if (output == "csv") {
        std::cout << "subset,coefficient\n";
        for (const auto& [mask, c] : p.sorted_terms()) {
            std::string subset;
            for (const unsigned j : subset_to_indices(mask)) {
                if (!subset.empty()) subset += " ";
                subset += std::to_string(j);
            }
            std::cout << "\"" << subset << "\"," << c.get_str() << "\n";
        }
    } else {
        std::cout << to_text(p) << "\n";
    }
}

int run_compute(const std::string& family, unsigned rank, const std::string& statistic,
                const std::string& form, const std::string& method, const std::string& output) {
    const WeylType type = kFamilies.at(family);
    const std::optional<Family> classical = classical_family(type);
    const Statistic stat = statistic == "affine" ? Statistic::affine : Statistic::ordinary;

    if (method == "diagram") {
        if (stat != Statistic::affine) {
            std::cerr << "error: --method diagram computes the affine statistic only\n";
            return 2;
        }
        const FlagPolynomial p = affine_flag_eulerian(type, rank);
        if (form == "flag")
            print_flag(p, output);
        else
            print_univariate(specialize_all(p), output);
        return 0;
    }

    if (!classical) {
        std::cerr << "error: --method " << method << " supports the classical families only; "
                  << "use --method diagram for " << family << "\n";
        return 2;
    }
    const unsigned window = window_length(type, rank);

    if (method == "egf") {
        if (form == "flag") {
            std::cerr << "error: --method egf computes univariate polynomials only\n";
            return 2;
        }
        print_univariate(eulerian_from_egf(series_for(*classical, stat), window), output);
        return 0;
    }

    // method == "enumerate"
    if (form == "flag")
        print_flag(flag_descent_polynomial(*classical, window, stat), output);
    else
        print_univariate(descent_polynomial(*classical, window, stat), output);
    return 0;
}

int run_table1(const std::string& output) {
    struct Row {
        std::string family;
        unsigned rank;
        Polynomial computed;
        bool ok;
    };
    std::vector<Row> rows;
    bool all_ok = true;
    for (const ReferenceRow& ref : reference_affine_eulerian()) {
        const Polynomial computed = specialize_all(affine_flag_eulerian(ref.type, ref.rank));
        const bool ok = computed == reference_row_polynomial(ref);
        all_ok = all_ok && ok;
        rows.push_back({type_name(ref.type), ref.rank, computed, ok});
    }
    auto label = [](const Row& r) {
        return r.family.size() == 1 ? r.family + std::to_string(r.rank) : r.family;
    };

    if (output == "json") {
        json arr = json::array();
        for (const Row& r : rows) {
            json coeffs = json::array();
            for (int k = 0; k <= r.computed.degree(); ++k)
                coeffs.push_back(r.computed.coeff(static_cast<unsigned>(k)).get_str());
            arr.push_back(json{{"family", r.family},
                               {"rank", r.rank},
                               {"coefficients", coeffs},
                               {"match", r.ok}});
        }
        std::cout << arr.dump() << "\n";
    } else if (output == "csv") {
        std::cout << "family,rank,polynomial,match\n";
        for (const Row& r : rows)
            std::cout << r.family << "," << r.rank << ",\"" << to_text(r.computed) << "\","
                      << (r.ok ? "yes" : "no") << "\n";
    } else {
        for (const Row& r : rows)
            std::cout << (r.ok ? "ok   " : "FAIL ") << label(r) << ": " << to_text(r.computed)
                      << "\n";
    }
    return all_ok ? 0 : 1;
}

int run_verify(unsigned max_rank, unsigned order, unsigned jobs, const std::string& output) {
    std::vector<std::function<CheckResult()>> tasks;
    auto add = [&](std::function<CheckResult()> f) { tasks.push_back(std::move(f)); };

    for (unsigned n = 2; n <= max_rank + 1; ++n) add([n] { return check_flag_formula_A(n); });
    for (unsigned n = 1; n <= max_rank; ++n) add([n] { return check_flag_formula_C(n); });
    for (unsigned n = 2; n <= max_rank; ++n) add([n] { return check_flag_formula_B(n); });
    for (unsigned n = 4; n <= max_rank; ++n) add([n] { return check_flag_formula_D(n); });

    for (unsigned n = 1; n <= max_rank; ++n)
        for (const auto f : {GammaFormula::affC, GammaFormula::C, GammaFormula::A})
            add([f, n] { return check_gamma_expansion(f, n); });
    for (unsigned n = 2; n <= max_rank; ++n)
        add([n] { return check_gamma_expansion(GammaFormula::affB, n); });
    for (unsigned n = 4; n <= max_rank; ++n)
        for (const auto f : {GammaFormula::affD, GammaFormula::D})
            add([f, n] { return check_gamma_expansion(f, n); });

    for (unsigned n = 2; n <= max_rank; ++n) add([n] { return check_identity(IdentityKind::CBC, n); });
    for (unsigned n = 3; n <= max_rank; ++n) add([n] { return check_identity(IdentityKind::BDD, n); });
    for (unsigned n = 2; n <= max_rank; ++n) add([n] { return check_identity(IdentityKind::BDA, n); });
    for (unsigned n = 1; n <= max_rank; ++n) {
        add([n] { return check_cyclic(CyclicKind::A, n); });
        add([n] { return check_cyclic(CyclicKind::C, n); });
    }

    std::vector<CheckResult> results = run_checks(std::move(tasks), jobs);

    // The vector-returning batteries run after the pointwise checks.
    for (const auto id : {SeriesId::A, SeriesId::BC, SeriesId::D, SeriesId::affA,
                          SeriesId::affC, SeriesId::affB, SeriesId::affD})
        for (CheckResult& r : check_egf_enumeration(id, max_rank)) results.push_back(std::move(r));
    for (CheckResult& r : check_series_identities(order)) results.push_back(std::move(r));
    for (const auto id : {SeriesId::A, SeriesId::affB, SeriesId::affD, SeriesId::D})
        for (CheckResult& r : check_real_rooted(id, order)) results.push_back(std::move(r));
    for (unsigned n = 1; n <= max_rank; ++n)
        for (CheckResult& r : check_torus(WeylType::A, n)) results.push_back(std::move(r));
    for (unsigned n = 2; n <= max_rank; ++n)
        for (CheckResult& r : check_torus(WeylType::B, n)) results.push_back(std::move(r));
    for (unsigned n = 1; n <= max_rank; ++n)
        for (CheckResult& r : check_torus(WeylType::C, n)) results.push_back(std::move(r));
    for (unsigned n = 3; n <= max_rank; ++n)
        for (CheckResult& r : check_torus(WeylType::D, n)) results.push_back(std::move(r));
    for (const auto& [t, n] : std::vector<std::pair<WeylType, unsigned>>{
             {WeylType::E6, 6}, {WeylType::E7, 7}, {WeylType::E8, 8}, {WeylType::F4, 4},
             {WeylType::G2, 2}})
        for (CheckResult& r : check_torus(t, n)) results.push_back(std::move(r));

    unsigned failed = 0;
    for (const CheckResult& r : results)
        if (!r.ok) ++failed;

    if (output == "json") {
        json arr = json::array();
        for (const CheckResult& r : results)
            arr.push_back(json{{"name", r.name},
                               {"ok", r.ok},
                               {"seconds", r.elapsed_seconds},
                               {"note", r.note}});
        std::cout << arr.dump() << "\n";
    } else if (output == "csv") {
        std::cout << "name,ok,seconds\n";
        for (const CheckResult& r : results)
            std::cout << "\"" << r.name << "\"," << (r.ok ? "yes" : "no") << ","
                      << r.elapsed_seconds << "\n";
    } else {
        for (const CheckResult& r : results) {
            std::cout << (r.ok ? "ok   " : "FAIL ") << r.name;
            if (!r.note.empty()) std::cout << "  [" << r.note << "]";
            std::cout << "\n";
        }
        std::cout << results.size() << " checks, " << failed << " failed\n";
    }
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eulerian polynomials of Weyl groups and Steinberg torus invariants"};
    app.require_subcommand(1);

    std::string family = "A";
    unsigned rank = 2;
    std::string statistic = "affine";
    std::string form = "univariate";
    std::string method = "enumerate";
    std::string output = "text";
    unsigned max_rank = 6;
    unsigned order = 40;
    unsigned jobs = 1;

    auto* compute = app.add_subcommand("compute", "Compute one Eulerian polynomial");
    compute->add_option("--family", family, "A, B, C, D, E6, E7, E8, F4 or G2")
        ->check(CLI::IsMember({"A", "B", "C", "D", "E6", "E7", "E8", "F4", "G2"}))
        ->required();
    compute->add_option("--rank", rank, "Coxeter rank")->required();
    compute->add_option("--statistic", statistic, "ordinary or affine (default affine)")
        ->check(CLI::IsMember({"ordinary", "affine"}));
    compute->add_option("--form", form, "univariate or flag (default univariate)")
        ->check(CLI::IsMember({"univariate", "flag"}));
    compute->add_option("--method", method,
                        "enumerate (classical), diagram (affine, any type) or egf "
                        "(classical univariate); default enumerate")
        ->check(CLI::IsMember({"enumerate", "diagram", "egf"}));
    compute->add_option("--output", output, "text, json or csv (default text)")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* table1 = app.add_subcommand(
        "table1", "Recompute the built-in affine Eulerian table and compare");
    table1->add_option("--output", output, "text, json or csv (default text)")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    auto* verify = app.add_subcommand("verify", "Run the identity and expansion checks");
    verify->add_option("--max-rank", max_rank, "rank ceiling for enumerations (default 6)")
        ->check(CLI::Range(1u, 9u));
    verify->add_option("--order", order, "series truncation order (default 40)")
        ->check(CLI::Range(1u, 200u));
    verify->add_option("--jobs", jobs, "worker threads (default 1)")
        ->check(CLI::Range(1u, 256u));
    verify->add_option("--output", output, "text, json or csv (default text)")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed()) return run_compute(family, rank, statistic, form, method, output);
        if (table1->parsed()) return run_table1(output);
        return run_verify(max_rank, order, jobs, output);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}

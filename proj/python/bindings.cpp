#include <steinberg/diagram.hpp>
#include <steinberg/flag_polynomial.hpp>
#include <steinberg/format.hpp>
#include <steinberg/polynomial.hpp>
#include <steinberg/realroots.hpp>
#include <steinberg/reference_table.hpp>
#include <steinberg/series.hpp>
#include <steinberg/signed_permutation.hpp>
#include <steinberg/torus.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace steinberg;

namespace {

// Arbitrary-precision values cross into Python as ints via their decimal
// representation, never through a machine word.
py::object to_py_int(const Int& v) {
    return py::module_::import("builtins").attr("int")(v.get_str());
}

Int from_py_int(const py::object& v) {
    return Int(py::str(v).cast<std::string>(), 10);
}

py::list coeff_list(const Polynomial& p) {
    py::list out;
    if (p.is_zero()) {
        out.append(to_py_int(Int(0)));
        return out;
    }
    for (int k = 0; k <= p.degree(); ++k) out.append(to_py_int(p.coeff(static_cast<unsigned>(k))));
    return out;
}

Polynomial poly_from_list(const py::sequence& coeffs) {
    std::vector<Int> c;
    for (const auto& v : coeffs) c.push_back(from_py_int(py::reinterpret_borrow<py::object>(v)));
    return Polynomial(std::move(c));
}

py::dict flag_dict(const FlagPolynomial& p) {
    py::dict out;
    for (const auto& [mask, c] : p.sorted_terms()) {
        py::tuple key = py::cast(subset_to_indices(mask));
        out[key] = to_py_int(c);
    }
    return out;
}

WeylType weyl_type(const std::string& family) {
    static const std::map<std::string, WeylType> table = {
        {"A", WeylType::A},   {"B", WeylType::B},   {"C", WeylType::C},
        {"D", WeylType::D},   {"E6", WeylType::E6}, {"E7", WeylType::E7},
        {"E8", WeylType::E8}, {"F4", WeylType::F4}, {"G2", WeylType::G2},
    };
    const auto it = table.find(family);
    if (it == table.end()) throw std::invalid_argument("unknown family: " + family);
    return it->second;
}

Statistic statistic_from(const std::string& s) {
    if (s == "ordinary") return Statistic::ordinary;
    if (s == "affine") return Statistic::affine;
    throw std::invalid_argument("statistic must be 'ordinary' or 'affine'");
}

SeriesId series_from(const std::string& s) {
    static const std::map<std::string, SeriesId> table = {
        {"A", SeriesId::A},       {"BC", SeriesId::BC},     {"D", SeriesId::D},
        {"affA", SeriesId::affA}, {"affC", SeriesId::affC}, {"affB", SeriesId::affB},
        {"affD", SeriesId::affD},
    };
    const auto it = table.find(s);
    if (it == table.end())
        throw std::invalid_argument("unknown series (use A, BC, D, affA, affC, affB, affD)");
    return it->second;
}

unsigned window_length(WeylType t, unsigned rank) {
    return t == WeylType::A ? rank + 1 : rank;
}

Family classical_or_throw(WeylType t, const std::string& family) {
    const auto f = classical_family(t);
    if (!f) throw std::invalid_argument(family + " requires method='diagram'");
    return *f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Exact Eulerian polynomials of Weyl groups (ordinary and affine descent "
        "statistics) and face enumeration of reduced Steinberg tori.";

    m.def(
        "eulerian",
        [](const std::string& family, unsigned rank, const std::string& statistic,
           const std::string& method) {
            const WeylType t = weyl_type(family);
            const Statistic s = statistic_from(statistic);
            if (method == "diagram") {
                if (s != Statistic::affine)
                    throw std::invalid_argument("method='diagram' computes the affine statistic");
                return coeff_list(specialize_all(affine_flag_eulerian(t, rank)));
            }
            const Family f = classical_or_throw(t, family);
            const unsigned window = window_length(t, rank);
            if (method == "egf") {
                const SeriesId id = s == Statistic::ordinary
                                        ? (f == Family::A   ? SeriesId::A
                                           : f == Family::D ? SeriesId::D
                                                            : SeriesId::BC)
                                        : (f == Family::A   ? SeriesId::affA
                                           : f == Family::B ? SeriesId::affB
                                           : f == Family::C ? SeriesId::affC
                                                            : SeriesId::affD);
                return coeff_list(eulerian_from_egf(id, window));
            }
            if (method != "enumerate")
                throw std::invalid_argument("method must be 'enumerate', 'diagram' or 'egf'");
            return coeff_list(descent_polynomial(f, window, s));
        },
        py::arg("family"), py::arg("rank"), py::arg("statistic") = "affine",
        py::arg("method") = "enumerate",
        "Coefficient list (t^0, t^1, ...) of an Eulerian polynomial.");

    m.def(
        "flag_eulerian",
        [](const std::string& family, unsigned rank, const std::string& statistic,
           const std::string& method) {
            const WeylType t = weyl_type(family);
            const Statistic s = statistic_from(statistic);
            if (method == "diagram") {
                if (s != Statistic::affine)
                    throw std::invalid_argument("method='diagram' computes the affine statistic");
                return flag_dict(affine_flag_eulerian(t, rank));
            }
            if (method != "enumerate")
                throw std::invalid_argument("method must be 'enumerate' or 'diagram'");
            const Family f = classical_or_throw(t, family);
            return flag_dict(flag_descent_polynomial(f, window_length(t, rank), s));
        },
        py::arg("family"), py::arg("rank"), py::arg("statistic") = "affine",
        py::arg("method") = "enumerate",
        "Flag Eulerian polynomial as {subset-of-colors: coefficient}.");

    m.def(
        "eulerian_from_egf",
        [](const std::string& series, unsigned n) {
            return coeff_list(eulerian_from_egf(series_from(series), n));
        },
        py::arg("series"), py::arg("n"),
        "Extract one Eulerian polynomial from its exponential generating function.");

    m.def(
        "gamma_vector",
        [](const py::sequence& coeffs, unsigned m) {
            const GammaVector g = gamma_vector(poly_from_list(coeffs), m);
            py::list entries;
            for (const Int& e : g.entries) entries.append(to_py_int(e));
            return entries;
        },
        py::arg("coefficients"), py::arg("m"),
        "Gamma-vector of a polynomial that is symmetric with center m/2.");

    m.def(
        "is_symmetric",
        [](const py::sequence& coeffs, unsigned m) { return is_symmetric(poly_from_list(coeffs), m); },
        py::arg("coefficients"), py::arg("m"));

    m.def(
        "is_unimodal",
        [](const py::sequence& coeffs) { return is_unimodal(poly_from_list(coeffs)); },
        py::arg("coefficients"));

    m.def(
        "is_real_rooted",
        [](const py::sequence& coeffs) { return is_real_rooted(poly_from_list(coeffs)); },
        py::arg("coefficients"));

    m.def(
        "count_real_roots",
        [](const py::sequence& coeffs) { return count_real_roots(poly_from_list(coeffs)); },
        py::arg("coefficients"), "Number of distinct real roots (Sturm count).");

    m.def(
        "weyl_order",
        [](const std::string& family, unsigned rank) {
            return to_py_int(weyl_order(weyl_type(family), rank));
        },
        py::arg("family"), py::arg("rank"));

    m.def(
        "torus",
        [](const std::string& family, unsigned rank, bool reduced) {
            const TorusModel model = build_torus(weyl_type(family), rank, reduced);
            py::dict out;
            out["family"] = family;
            out["rank"] = rank;
            out["reduced"] = reduced;
            out["flag_f"] = flag_dict(model.flag_f);
            out["flag_h"] = flag_dict(model.flag_h);
            out["euler_characteristic"] = to_py_int(euler_characteristic(model));
            out["face_count"] = to_py_int(face_count(model));
            return out;
        },
        py::arg("family"), py::arg("rank"), py::arg("reduced") = true,
        "Flag f- and h-vectors of the (reduced) Steinberg torus.");

    m.def(
        "table1",
        []() {
            py::list out;
            for (const ReferenceRow& ref : reference_affine_eulerian()) {
                const Polynomial computed =
                    specialize_all(affine_flag_eulerian(ref.type, ref.rank));
                py::dict row;
                const auto fam = classical_family(ref.type);
                row["family"] = fam == Family::B   ? "B"
                                : fam == Family::D ? "D"
                                : ref.type == WeylType::E6 ? "E6"
                                : ref.type == WeylType::E7 ? "E7"
                                : ref.type == WeylType::E8 ? "E8"
                                : ref.type == WeylType::F4 ? "F4"
                                                           : "G2";
                row["rank"] = ref.rank;
                row["coefficients"] = coeff_list(computed);
                row["match"] = computed == reference_row_polynomial(ref);
                out.append(row);
            }
            return out;
        },
        "Recompute the built-in affine Eulerian table; every row carries a 'match' flag.");
}

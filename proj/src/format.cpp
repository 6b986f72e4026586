#include <steinberg/format.hpp>

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace steinberg {
namespace {

using nlohmann::json;

// Shared by both renderers: writes "c", "mono", "c*mono" or "c mono"
// depending on the coefficient and whether the monomial needs a separator.
void append_term(std::ostringstream& out, bool& first, const Int& c, const std::string& mono,
                 bool separator) {
    Int a = c;
    const bool negative = a < 0;
    if (negative) a = -a;
    if (first) {
        if (negative) out << "-";
        first = false;
    } else {
        out << (negative ? " - " : " + ");
    }
    if (mono.empty()) {
        out << a.get_str();
        return;
    }
    if (a != 1) out << a.get_str() << (separator ? "*" : "");
    out << mono;
}

}  // namespace

std::string to_text(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k <= p.degree(); ++k) {
        const Int& c = p.coeff(static_cast<unsigned>(k));
        if (c == 0) continue;
        std::string mono;
        if (k == 1) mono = "t";
        else if (k > 1) mono = "t^" + std::to_string(k);
        append_term(out, first, c, mono, /*separator=*/false);
    }
    return out.str();
}

std::string to_text(const FlagPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mask, c] : p.sorted_terms()) {
        std::string mono;
        for (const unsigned j : subset_to_indices(mask)) {
            if (!mono.empty()) mono += "*";
            mono += "t" + std::to_string(j);
        }
        append_term(out, first, c, mono, /*separator=*/true);
    }
    return out.str();
}

std::string to_json(const Polynomial& p, int indent) {
    json coeffs = json::array();
    if (p.is_zero()) {
        coeffs.push_back("0");
    } else {
        for (int k = 0; k <= p.degree(); ++k)
            coeffs.push_back(p.coeff(static_cast<unsigned>(k)).get_str());
    }
    json j{{"variable", "t"}, {"coefficients", coeffs}};
    return j.dump(indent);
}

std::string to_json(const FlagPolynomial& p, int indent) {
    json terms = json::array();
    for (const auto& [mask, c] : p.sorted_terms()) {
        json subset = json::array();
        for (const unsigned j : subset_to_indices(mask)) subset.push_back(j);
        terms.push_back(json{{"subset", subset}, {"coefficient", c.get_str()}});
    }
    json j{{"n", p.rank()}, {"terms", terms}};
    return j.dump(indent);
}

Polynomial polynomial_from_json(const std::string& text) {
    const json j = json::parse(text);
    if (!j.contains("coefficients") || !j["coefficients"].is_array())
        throw std::invalid_argument("polynomial_from_json: missing coefficients array");
    std::vector<Int> c;
    for (const auto& entry : j["coefficients"]) c.emplace_back(entry.get<std::string>(), 10);
    return Polynomial(std::move(c));
}

FlagPolynomial flag_from_json(const std::string& text) {
    const json j = json::parse(text);
    if (!j.contains("n") || !j.contains("terms") || !j["terms"].is_array())
        throw std::invalid_argument("flag_from_json: missing n or terms");
    FlagPolynomial p(j["n"].get<unsigned>());
    for (const auto& term : j["terms"]) {
        std::vector<unsigned> idx;
        for (const auto& v : term["subset"]) idx.push_back(v.get<unsigned>());
        p.set(indices_to_subset(idx, p.rank()),
              Int(term["coefficient"].get<std::string>(), 10));
    }
    return p;
}

}  // namespace steinberg

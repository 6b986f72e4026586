#pragma once

// Human-readable and JSON renderings of the polynomial types.  Coefficients
// are serialized as decimal strings so that arbitrary-precision values
// survive the round trip through JSON readers that only have doubles.

#include <steinberg/flag_polynomial.hpp>
#include <steinberg/polynomial.hpp>

#include <string>

namespace steinberg {

// "0", "1 + 6t + t^2", "10t + 28t^2 + 10t^3", "1 - t^2", ...
std::string to_text(const Polynomial& p);

// "t0 + t1 + 2*t2 + 4*t0*t1 + ...", terms ordered by cardinality then
// lexicographically by index list; "0" for the zero polynomial.
std::string to_text(const FlagPolynomial& p);

// {"variable": "t", "coefficients": ["c0", "c1", ...]}
std::string to_json(const Polynomial& p, int indent = -1);

// {"n": n, "terms": [{"subset": [j...], "coefficient": "c"}, ...]}
std::string to_json(const FlagPolynomial& p, int indent = -1);

Polynomial polynomial_from_json(const std::string& text);
FlagPolynomial flag_from_json(const std::string& text);

}  // namespace steinberg

#pragma once

#include "weylpt/expectation.hpp"

#include "json.hpp"

#include <string>

namespace weylpt {

enum class OutputFormat { Text, Json, Csv };

// "text", "json" or "csv"; anything else is an argument error.
OutputFormat parse_format(const std::string& name);

// Full-precision decimal text (%.17g) so outputs round-trip to the same double.
std::string format_float(double v);

// "(1/2)*M^2" for one part; "((128/15)*M^-10 + (-32/5)*M^-8)" for several.
std::string coeff_to_text(const CoeffValue& c);

// "(-4/3)*M^-4*T[3,0] + (-2)*M^-2*T[1,2]": terms ordered by total degree
// descending, then momentum power descending; "0" when empty. Physical
// polynomials print S[r,s].
std::string poly_to_text(const OperatorPoly& f);

// Polynomial in the level label: "(...) + (...)*n + (...)*n^2".
std::string npoly_to_text(const NPolynomial& p);

// {"params": {"M": -4}, "re": ["-4", "3"], "im": ["0", "1"]} per part,
// numerator/denominator as decimal strings so no precision is lost.
nlohmann::json coeff_to_json(const CoeffValue& c);

// {"convention": ..., "terms": [{"r", "s", "coeff"}...]} with terms in
// lexicographic (r, s) order.
nlohmann::json poly_to_json(const OperatorPoly& f);

// [{"order": k, "operator": {...}}, ...] ascending in k.
nlohmann::json series_to_json(const PerturbationSeries& s);

nlohmann::json npoly_to_json(const NPolynomial& p);

}  // namespace weylpt

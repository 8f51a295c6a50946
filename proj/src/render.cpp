#include "weylpt/render.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace weylpt {

namespace {

std::string param_suffix(const ParamExponents& p) {
    const int exps[4] = {p.M, p.hbar, p.mass, p.mu};
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (exps[i] == 0) continue;
        out += "*";
        out += kParamNames[i];
        if (exps[i] != 1) out += "^" + std::to_string(exps[i]);
    }
    return out;
}

std::string part_to_text(const ParamExponents& p, const GaussianRational& v) {
    return "(" + to_string(v) + ")" + param_suffix(p);
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown output format '" + name + "' (expected text, json or csv)");
}

std::string format_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string coeff_to_text(const CoeffValue& c) {
    if (c.is_zero()) return "(0)";
    if (c.terms.size() == 1) {
        const auto& [p, v] = *c.terms.begin();
        return part_to_text(p, v);
    }
    std::string out = "(";
    bool first = true;
    for (const auto& [p, v] : c.terms) {
        if (!first) out += " + ";
        out += part_to_text(p, v);
        first = false;
    }
    return out + ")";
}

std::string poly_to_text(const OperatorPoly& f) {
    if (f.is_zero()) return "0";
    const char* basis = f.convention == Convention::Physical ? "S" : "T";
    std::vector<std::pair<BasisKey, const CoeffValue*>> order;
    order.reserve(f.terms.size());
    for (const auto& [k, c] : f.terms) order.emplace_back(k, &c);
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
        return a.first.r > b.first.r;
    });
    std::string out;
    for (const auto& [k, c] : order) {
        if (!out.empty()) out += " + ";
        out += coeff_to_text(*c) + "*" + basis + "[" + std::to_string(k.r) + "," + std::to_string(k.s) + "]";
    }
    return out;
}

std::string npoly_to_text(const NPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (size_t j = 0; j < p.coeffs.size(); ++j) {
        if (p.coeffs[j].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += coeff_to_text(p.coeffs[j]);
        if (j == 1) out += "*n";
        if (j > 1) out += "*n^" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
}

nlohmann::json coeff_to_json(const CoeffValue& c) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& [p, v] : c.terms) {
        nlohmann::json params = nlohmann::json::object();
        const int exps[4] = {p.M, p.hbar, p.mass, p.mu};
        for (int i = 0; i < 4; ++i)
            if (exps[i] != 0) params[kParamNames[i]] = exps[i];
        parts.push_back({{"params", params},
                         {"re", {numerator(v.re).str(), denominator(v.re).str()}},
                         {"im", {numerator(v.im).str(), denominator(v.im).str()}}});
    }
    return parts;
}

nlohmann::json poly_to_json(const OperatorPoly& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : f.terms)
        terms.push_back({{"r", k.r}, {"s", k.s}, {"coeff", coeff_to_json(c)}});
    return {{"convention", f.convention == Convention::Physical ? "physical" : "scaled"},
            {"terms", terms}};
}

nlohmann::json series_to_json(const PerturbationSeries& s) {
    nlohmann::json orders = nlohmann::json::array();
    for (const auto& [k, p] : s.coeffs) orders.push_back({{"order", k}, {"operator", poly_to_json(p)}});
    return orders;
}

nlohmann::json npoly_to_json(const NPolynomial& p) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(coeff_to_json(c));
    return {{"variable", "n"}, {"coeffs", coeffs}};
}

}  // namespace weylpt

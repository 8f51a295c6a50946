#include "weylpt/commands.hpp"

#include "weylpt/numeric.hpp"
#include "weylpt/physical.hpp"
#include "weylpt/reference_tables.hpp"

#include <cmath>
#include <sstream>

namespace weylpt {

namespace {

#ifndef WEYLPT_VERSION
#define WEYLPT_VERSION "0.0.0"
#endif

constexpr const char* kVersion = WEYLPT_VERSION;

std::string text_header() { return std::string("# weylpt ") + kVersion + "\n"; }

nlohmann::json json_doc(const char* command) {
    return {{"version", kVersion}, {"command", command}};
}

std::string dump(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

void require_not_csv(const RunOptions& opt, const char* cmd) {
    if (opt.format == OutputFormat::Csv)
        throw std::invalid_argument(std::string(cmd) + " has no csv form; use text or json");
}

ParamPoint params_of(const RunOptions& opt) {
    return {.M = opt.M, .hbar = opt.hbar, .mass = opt.m, .mu = opt.mu};
}

// "matches printed table" or the exact deviation polynomial.
std::string deviation_line(const TableComparison& cmp) {
    if (cmp.matches()) return cmp.label + ": matches printed table";
    return cmp.label + ": computed - printed = " + poly_to_text(cmp.deviation);
}

nlohmann::json comparison_json(const TableComparison& cmp) {
    return {{"label", cmp.label},
            {"matches_printed", cmp.matches()},
            {"computed_minus_printed", poly_to_json(cmp.deviation)}};
}

}  // namespace

const char* version_string() { return kVersion; }

std::string cmd_qsolve(const RunOptions& opt) {
    require_not_csv(opt, "qsolve");
    const QHierarchy qh = build_q_hierarchy(opt.max_order);
    const OperatorPoly h0 = build_H(HPart::H0);

    std::vector<int> orders;
    std::vector<bool> residual_zero;
    std::vector<TableComparison> cmps;
    QHierarchy partial;
    for (int k = 1; k <= opt.max_order; k += 2) {
        orders.push_back(k);
        const OperatorPoly resid = commutator(h0, qh.at(k)) - hierarchy_rhs(k, partial);
        residual_zero.push_back(resid.is_zero());
        partial.q[k] = qh.at(k);
        partial.max_order = k;
        cmps.push_back(compare_with_reference("Q[" + std::to_string(k) + "]", qh.at(k),
                                              reference_generator(k)));
    }

    if (opt.format == OutputFormat::Json) {
        nlohmann::json doc = json_doc("qsolve");
        doc["max_order"] = opt.max_order;
        doc["orders"] = nlohmann::json::array();
        for (size_t i = 0; i < orders.size(); ++i)
            doc["orders"].push_back({{"order", orders[i]},
                                     {"generator", poly_to_json(qh.at(orders[i]))},
                                     {"residual_zero", static_cast<bool>(residual_zero[i])},
                                     {"printed_comparison", comparison_json(cmps[i])}});
        return dump(doc);
    }

    std::ostringstream out;
    out << text_header() << "generator hierarchy through eps^" << opt.max_order << "\n\n";
    for (size_t i = 0; i < orders.size(); ++i) {
        out << "Q[" << orders[i] << "] = " << poly_to_text(qh.at(orders[i])) << "\n";
        out << "  residual: " << (residual_zero[i] ? "exact zero" : "NONZERO") << "\n";
    }
    out << "\nprinted-table comparison:\n";
    for (const auto& cmp : cmps) out << "  " << deviation_line(cmp) << "\n";
    return out.str();
}

std::string cmd_hermitian(const RunOptions& opt) {
    require_not_csv(opt, "hermitian");
    if (opt.max_order < 0 || opt.max_order > 6 || opt.max_order % 2 != 0)
        throw std::invalid_argument("hermitian max order must be even and at most 6");
    const QHierarchy qh = build_q_hierarchy(std::max(1, opt.max_order - 1));
    const HermitianSeries hs = build_hermitian_h(qh, opt.max_order);

    std::vector<TableComparison> cmps;
    for (int k = 0; k <= std::min(opt.max_order, reference_hermitian_max_order()); k += 2)
        cmps.push_back(
            compare_with_reference("h[" + std::to_string(k) + "]", hs.at(k), reference_hermitian(k)));

    if (opt.format == OutputFormat::Json) {
        nlohmann::json doc = json_doc("hermitian");
        doc["max_order"] = opt.max_order;
        doc["orders"] = nlohmann::json::array();
        for (const auto& [k, p] : hs.h) doc["orders"].push_back({{"order", k}, {"operator", poly_to_json(p)}});
        doc["printed_comparisons"] = nlohmann::json::array();
        for (const auto& cmp : cmps) doc["printed_comparisons"].push_back(comparison_json(cmp));
        return dump(doc);
    }

    std::ostringstream out;
    out << text_header() << "equivalent hermitian hamiltonian through eps^" << opt.max_order << "\n\n";
    for (const auto& [k, p] : hs.h) out << "h[" << k << "] = " << poly_to_text(p) << "\n";
    out << "\nodd orders vanish identically; closed forms were cross-checked against direct conjugation.\n";
    out << "\nprinted-table comparison:\n";
    for (const auto& cmp : cmps) out << "  " << deviation_line(cmp) << "\n";
    if (opt.max_order > reference_hermitian_max_order())
        out << "  (no printed table beyond eps^" << reference_hermitian_max_order() << ")\n";
    return out.str();
}

std::string cmd_observables(const RunOptions& opt) {
    require_not_csv(opt, "observables");
    if (opt.max_order < 0 || opt.max_order > 3)
        throw std::invalid_argument("observable max order must lie in [0, 3]");
    const QHierarchy qh = build_q_hierarchy(opt.max_order >= 2 ? 3 : 1);
    const ObservableSeries X = build_observable(ObservableKind::Position, qh, opt.max_order);
    const ObservableSeries P = build_observable(ObservableKind::Momentum, qh, opt.max_order);
    const PerturbationSeries refX = reference_observable(ObservableKind::Position);
    const PerturbationSeries refP = reference_observable(ObservableKind::Momentum);

    std::vector<TableComparison> cmps;
    for (int k = 0; k <= opt.max_order; ++k) {
        cmps.push_back(compare_with_reference("X[" + std::to_string(k) + "]", X.series.order_or_zero(k),
                                              refX.order_or_zero(k)));
        cmps.push_back(compare_with_reference("P[" + std::to_string(k) + "]", P.series.order_or_zero(k),
                                              refP.order_or_zero(k)));
    }

    if (opt.format == OutputFormat::Json) {
        nlohmann::json doc = json_doc("observables");
        doc["max_order"] = opt.max_order;
        doc["position"] = series_to_json(X.series);
        doc["momentum"] = series_to_json(P.series);
        doc["printed_comparisons"] = nlohmann::json::array();
        for (const auto& cmp : cmps) doc["printed_comparisons"].push_back(comparison_json(cmp));
        return dump(doc);
    }

    std::ostringstream out;
    out << text_header() << "similarity-corrected observables through eps^" << opt.max_order << "\n\n";
    for (int k = 0; k <= opt.max_order; ++k)
        out << "X[" << k << "] = " << poly_to_text(X.series.order_or_zero(k)) << "\n";
    out << "\n";
    for (int k = 0; k <= opt.max_order; ++k)
        out << "P[" << k << "] = " << poly_to_text(P.series.order_or_zero(k)) << "\n";
    out << "\nprinted-table comparison:\n";
    for (const auto& cmp : cmps) out << "  " << deviation_line(cmp) << "\n";
    return out.str();
}

std::string cmd_classical(const RunOptions& opt) {
    require_not_csv(opt, "classical");
    const HermitianSeries hs = build_hermitian_h(build_q_hierarchy(1), 2);
    const PerturbationSeries phys = to_physical(hs.as_series());
    const OperatorPoly ord2 = to_ordered(phys.order_or_zero(2));
    const ClassicalHamiltonian cl = classical_limit(phys);
    const CoeffValue mass_coeff = mass_function_coefficient(cl);

    ClassicalHamiltonian printed;
    printed.orders[0] = reference_classical(0);
    printed.orders[2] = reference_classical(2);
    const CoeffValue printed_mass_coeff = mass_function_coefficient(printed);

    std::vector<TableComparison> cmps;
    cmps.push_back(compare_with_reference("classical eps^0", cl.order_or_zero(0), reference_classical(0)));
    cmps.push_back(compare_with_reference("classical eps^2", cl.order_or_zero(2), reference_classical(2)));
    cmps.push_back(compare_with_reference("ordered h[2]", ord2, reference_physical_h2_ordered()));

    if (opt.format == OutputFormat::Json) {
        nlohmann::json doc = json_doc("classical");
        doc["physical_h"] = series_to_json(phys);
        doc["ordered_h2"] = poly_to_json(ord2);
        doc["classical"] = nlohmann::json::array();
        for (const auto& [k, p] : cl.orders) doc["classical"].push_back({{"order", k}, {"operator", poly_to_json(p)}});
        doc["inverse_mass_coefficient"] = coeff_to_json(mass_coeff);
        doc["printed_inverse_mass_coefficient"] = coeff_to_json(printed_mass_coeff);
        doc["printed_comparisons"] = nlohmann::json::array();
        for (const auto& cmp : cmps) doc["printed_comparisons"].push_back(comparison_json(cmp));
        return dump(doc);
    }

    std::ostringstream out;
    out << text_header() << "physical form and classical limit (through eps^2)\n\n";
    out << "physical h[0] = " << poly_to_text(phys.order_or_zero(0)) << "\n";
    out << "physical h[2] = " << poly_to_text(phys.order_or_zero(2)) << "\n";
    out << "ordered h[2]  = " << poly_to_text(ord2) << "   (S[r,s] here means x^s p^r, x left of p)\n";
    out << "\nclassical eps^0 = " << poly_to_text(cl.order_or_zero(0)) << "\n";
    out << "classical eps^2 = " << poly_to_text(cl.order_or_zero(2)) << "\n";
    out << "\ninverse-mass expansion 1/M(x_c) = (1 + c*eps^2*x_c^2)/mass with c = "
        << coeff_to_text(mass_coeff) << "\n";
    out << "printed tables give c = " << coeff_to_text(printed_mass_coeff)
        << " (opposite sign on the x_c^2 p_c^2 cross term)\n";
    out << "\nprinted-table comparison:\n";
    for (const auto& cmp : cmps) out << "  " << deviation_line(cmp) << "\n";
    return out.str();
}

std::string cmd_energy(const RunOptions& opt) {
    if (opt.n_max < 0) throw std::invalid_argument("n-max must be nonnegative");
    const EnergyFormula ef = energy_formula(build_hermitian_h(build_q_hierarchy(1), 2));
    const NPolynomial printed = reference_energy_correction();
    NPolynomial printed_minus_exact = printed;
    printed_minus_exact += ef.correction.scaled(GaussianRational(-1));

    const ParamPoint at = params_of(opt);
    const int dim = std::max(120, opt.n_max + 40);
    const CMatrix h2m = matrixize(build_hermitian_h(build_q_hierarchy(1), 2).at(2), dim, opt.M);

    struct Row {
        long n;
        double exact, paper, oracle;
    };
    std::vector<Row> rows;
    double worst_oracle = 0.0;
    for (long n = 0; n <= opt.n_max; ++n) {
        Row row;
        row.n = n;
        row.exact = ef.value(n, opt.eps, at);
        row.paper = ef.harmonic.eval(n, at).real() + opt.eps * opt.eps * printed.eval(n, at).real();
        row.oracle = ef.harmonic.eval(n, at).real() + opt.eps * opt.eps * h2m(n, n).real();
        worst_oracle = std::max(worst_oracle, std::abs(row.exact - row.oracle));
        rows.push_back(row);
    }

    if (opt.format == OutputFormat::Csv) {
        std::ostringstream out;
        out << text_header() << "n,E_exact_sym_at_params,E_paper_formula,diff\n";
        for (const auto& r : rows)
            out << r.n << "," << format_float(r.exact) << "," << format_float(r.paper) << ","
                << format_float(r.paper - r.exact) << "\n";
        return out.str();
    }
    if (opt.format == OutputFormat::Json) {
        nlohmann::json doc = json_doc("energy");
        doc["eps"] = opt.eps;
        doc["M"] = opt.M;
        doc["harmonic"] = npoly_to_json(ef.harmonic);
        doc["correction"] = npoly_to_json(ef.correction);
        doc["printed_correction"] = npoly_to_json(printed);
        doc["printed_minus_exact"] = npoly_to_json(printed_minus_exact);
        doc["max_oracle_diff"] = worst_oracle;
        doc["rows"] = nlohmann::json::array();
        for (const auto& r : rows)
            doc["rows"].push_back(
                {{"n", r.n}, {"exact", r.exact}, {"paper", r.paper}, {"oracle", r.oracle}});
        return dump(doc);
    }

    std::ostringstream out;
    out << text_header() << "perturbative energies at eps=" << format_float(opt.eps)
        << " M=" << format_float(opt.M) << "\n\n";
    out << "E_n = M*(n + 1/2) + eps^2 * <n|h2|n>\n";
    out << "exact correction   = " << npoly_to_text(ef.correction) << "\n";
    out << "printed correction = " << npoly_to_text(printed) << "\n";
    out << "printed - exact    = " << npoly_to_text(printed_minus_exact) << "\n";
    out << "note: the printed second bracket carries no M^-2 factor, so the two forms"
           " coincide only at M = 1.\n\n";
    out << "n  E_exact_symbolic  E_paper_formula  E_matrix_oracle\n";
    for (const auto& r : rows)
        out << r.n << "  " << format_float(r.exact) << "  " << format_float(r.paper) << "  "
            << format_float(r.oracle) << "\n";
    out << "\nmax |E_exact - E_matrix_oracle| = " << format_float(worst_oracle) << "\n";
    return out.str();
}

std::string cmd_spectrum(const RunOptions& opt) {
    const SpectrumResult res = spectrum_H(opt.eps, opt.dim, opt.M, opt.levels);

    if (opt.format == OutputFormat::Csv) {
        std::ostringstream out;
        out << text_header() << "index,Re,Im,dim,eps\n";
        for (size_t i = 0; i < res.eigenvalues.size(); ++i)
            out << i << "," << format_float(res.eigenvalues[i].real()) << ","
                << format_float(res.eigenvalues[i].imag()) << "," << res.dim << ","
                << format_float(res.eps) << "\n";
        if (!res.converged)
            out << "# warning: truncation not converged (shift " << format_float(res.truncation_shift)
                << ")\n";
        return out.str();
    }
    if (opt.format == OutputFormat::Json) {
        nlohmann::json doc = json_doc("spectrum");
        doc["eps"] = res.eps;
        doc["M"] = res.M;
        doc["dim"] = res.dim;
        doc["truncation_shift"] = res.truncation_shift;
        doc["converged"] = res.converged;
        doc["eigenvalues"] = nlohmann::json::array();
        for (size_t i = 0; i < res.eigenvalues.size(); ++i)
            doc["eigenvalues"].push_back(
                {{"index", i}, {"re", res.eigenvalues[i].real()}, {"im", res.eigenvalues[i].imag()}});
        return dump(doc);
    }

    std::ostringstream out;
    out << text_header() << "spectrum: eps=" << format_float(opt.eps) << " M=" << format_float(opt.M)
        << " dim=" << res.dim << " levels=" << opt.levels << "\n\n";
    out << "index  Re  Im\n";
    for (size_t i = 0; i < res.eigenvalues.size(); ++i)
        out << i << "  " << format_float(res.eigenvalues[i].real()) << "  "
            << format_float(res.eigenvalues[i].imag()) << "\n";
    out << "\ntruncation shift vs dim+20: " << format_float(res.truncation_shift)
        << (res.converged ? " (converged)" : " (WARNING: not converged)") << "\n";
    return out.str();
}

std::string cmd_density(const RunOptions& opt) {
    const GridSpec grid{opt.x_min, opt.x_max, opt.points};
    const GridFunction Psi = physical_wavefunction(opt.n, opt.eps, params_of(opt), 3, grid);
    const GridFunction rho = probability_density(Psi);

    double integral = 0.0, minval = 0.0;
    const double dx = rho.spacing();
    for (int i = 0; i < rho.points(); ++i) {
        const double w = (i == 0 || i + 1 == rho.points()) ? 0.5 : 1.0;
        integral += w * rho.values[i].real() * dx;
        minval = std::min(minval, rho.values[i].real());
    }

    if (opt.format == OutputFormat::Csv) {
        std::ostringstream out;
        out << text_header() << "x,rho\n";
        for (int i = 0; i < rho.points(); ++i)
            out << format_float(rho.x_at(i)) << "," << format_float(rho.values[i].real()) << "\n";
        return out.str();
    }
    if (opt.format == OutputFormat::Json) {
        nlohmann::json doc = json_doc("density");
        doc["n"] = opt.n;
        doc["eps"] = opt.eps;
        doc["x_min"] = rho.x_min;
        doc["x_max"] = rho.x_max;
        doc["points"] = rho.points();
        doc["integral"] = integral;
        doc["rho"] = nlohmann::json::array();
        for (int i = 0; i < rho.points(); ++i) doc["rho"].push_back(rho.values[i].real());
        return dump(doc);
    }

    std::ostringstream out;
    out << text_header() << "probability density: n=" << opt.n << " eps=" << format_float(opt.eps)
        << " grid=[" << format_float(opt.x_min) << ", " << format_float(opt.x_max) << "] x "
        << opt.points << "\n\n";
    out << "trapezoid integral = " << format_float(integral) << "\n";
    out << "min value          = " << format_float(minval) << "\n";
    out << "(use --format csv for the full curve)\n";
    return out.str();
}

std::string cmd_verify(const RunOptions& opt, bool& ok) {
    const VerifyReport rep = verify_report(opt.threads);
    ok = rep.all_pass();

    if (opt.format == OutputFormat::Csv) {
        std::ostringstream out;
        out << text_header() << "check_name,value,expected_order,pass\n";
        for (const auto& c : rep.checks)
            out << c.name << "," << format_float(c.value) << "," << c.expected << ","
                << (c.pass ? 1 : 0) << "\n";
        return out.str();
    }
    if (opt.format == OutputFormat::Json) {
        nlohmann::json doc = json_doc("verify");
        doc["all_pass"] = ok;
        doc["checks"] = nlohmann::json::array();
        for (const auto& c : rep.checks)
            doc["checks"].push_back(
                {{"name", c.name}, {"value", c.value}, {"expected", c.expected}, {"pass", c.pass}});
        return dump(doc);
    }

    std::ostringstream out;
    out << text_header() << "self-check report\n\n";
    for (const auto& c : rep.checks)
        out << (c.pass ? "PASS" : "FAIL") << "  " << c.name << "  value=" << format_float(c.value)
            << "  expected: " << c.expected << "\n";
    out << "\n"
        << (ok ? "all checks passed"
               : std::to_string(rep.failures()) + " of " + std::to_string(rep.checks.size()) +
                     " checks FAILED")
        << "\n";
    return out.str();
}

}  // namespace weylpt

#pragma once

#include "weylpt/render.hpp"
#include "weylpt/verify.hpp"

#include <string>

namespace weylpt {

// Parameters shared by every command; defaults are the documented CLI
// defaults. Commands read only the fields they need.
struct RunOptions {
    int max_order = 7;  // qsolve depth; hermitian caps at 6, observables at 3
    double eps = 0.01;
    int dim = 80;
    int levels = 5;
    int n = 0;
    int n_max = 3;
    double m = 1.0;
    double mu = 1.0;
    double hbar = 1.0;
    double M = 1.0;
    double x_min = -10.0;
    double x_max = 10.0;
    int points = 2001;
    int threads = 0;  // 0 = WEYLPT_THREADS env, then hardware count
    OutputFormat format = OutputFormat::Text;
};

// Each command renders a complete document (text, json or csv). Exact symbolic
// commands reject csv; numeric table commands support all three. Argument
// problems throw std::invalid_argument, computation problems other exceptions.
std::string cmd_qsolve(const RunOptions& opt);
std::string cmd_hermitian(const RunOptions& opt);
std::string cmd_observables(const RunOptions& opt);
std::string cmd_classical(const RunOptions& opt);
std::string cmd_energy(const RunOptions& opt);
std::string cmd_spectrum(const RunOptions& opt);
std::string cmd_density(const RunOptions& opt);

// Runs the self-check suite; `ok` reports whether every check passed.
std::string cmd_verify(const RunOptions& opt, bool& ok);

// Library version as it appears in every rendered document header.
const char* version_string();

}  // namespace weylpt

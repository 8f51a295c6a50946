// Command-line front end. Links the shared C API only — everything the CLI
// can do, a foreign-language caller can do through weylpt.h the same way.
//
// Exit codes: 0 success, 1 computation or self-check failure, 2 bad arguments.
#include "CLI11.hpp"
#include "weylpt.h"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

namespace {

struct OptionsGuard {
    wpt_options* o = wpt_options_new();
    ~OptionsGuard() { wpt_options_free(o); }
};

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { wpt_string_free(s); }
};

// Per-subcommand values; each subcommand owns one so defaults stay separate.
struct Vals {
    long max_order = 7;
    long dim = 80;
    long levels = 5;
    long n = 0;
    long n_max = 3;
    long points = 2001;
    long threads = 0;
    double eps = 0.01;
    double m = 1.0;
    double mu = 1.0;
    double hbar = 1.0;
    double M = 1.0;
    double xmin = -10.0;
    double xmax = 10.0;
    std::string format = "text";
    std::string out_path;
};

void add_format_out(CLI::App* cmd, Vals& v, const char* formats) {
    cmd->add_option("--format", v.format, std::string("Output format: ") + formats)
        ->capture_default_str();
    cmd->add_option("--out", v.out_path, "Write the document to this file instead of stdout");
}

int emit(const char* doc, const Vals& v) {
    if (v.out_path.empty()) {
        std::fputs(doc, stdout);
        return 0;
    }
    std::ofstream f(v.out_path, std::ios::binary);
    f << doc;
    f.close();
    if (!f.good()) {
        std::fprintf(stderr, "error: cannot write '%s'\n", v.out_path.c_str());
        return 1;
    }
    return 0;
}

int fail(wpt_status st) {
    std::fprintf(stderr, "error: %s\n", wpt_last_error());
    return st == WPT_ERR_ARGS ? 2 : 1;
}

// Pushes the parsed values into a fresh options handle. The keys are fixed
// strings that match the header's documented tables, so setters cannot fail.
wpt_status load(wpt_options* o, const Vals& v) {
    wpt_options_set_int(o, "max-order", v.max_order);
    wpt_options_set_int(o, "dim", v.dim);
    wpt_options_set_int(o, "levels", v.levels);
    wpt_options_set_int(o, "n", v.n);
    wpt_options_set_int(o, "n-max", v.n_max);
    wpt_options_set_int(o, "points", v.points);
    wpt_options_set_int(o, "threads", v.threads);
    wpt_options_set_double(o, "eps", v.eps);
    wpt_options_set_double(o, "m", v.m);
    wpt_options_set_double(o, "mu", v.mu);
    wpt_options_set_double(o, "hbar", v.hbar);
    wpt_options_set_double(o, "M", v.M);
    wpt_options_set_double(o, "xmin", v.xmin);
    wpt_options_set_double(o, "xmax", v.xmax);
    return wpt_options_set_format(o, v.format.c_str());
}

using Command = wpt_status (*)(const wpt_options*, char**);

int run(Command cmd, const Vals& v) {
    OptionsGuard opt;
    if (opt.o == nullptr) {
        std::fprintf(stderr, "error: out of memory\n");
        return 1;
    }
    wpt_status st = load(opt.o, v);
    if (st != WPT_OK) return fail(st);
    StringGuard out;
    st = cmd(opt.o, &out.s);
    if (st != WPT_OK) return fail(st);
    return emit(out.s, v);
}

int run_verify(const Vals& v) {
    OptionsGuard opt;
    if (opt.o == nullptr) {
        std::fprintf(stderr, "error: out of memory\n");
        return 1;
    }
    wpt_status st = load(opt.o, v);
    if (st != WPT_OK) return fail(st);
    StringGuard out;
    int all_pass = 0;
    st = wpt_cmd_verify(opt.o, &out.s, &all_pass);
    if (st != WPT_OK) return fail(st);
    const int rc = emit(out.s, v);
    return rc != 0 ? rc : (all_pass ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact operator algebra and numerical cross-checks for the "
                 "PT-symmetric quartic anharmonic oscillator"};
    app.set_version_flag("--version", wpt_version());
    app.require_subcommand(1);

    int rc = 0;

    Vals q;
    CLI::App* qsolve = app.add_subcommand(
        "qsolve", "Solve the generator hierarchy Q[1], Q[3], ... exactly, with residual "
                  "checks and printed-table comparison");
    qsolve->add_option("--max-order", q.max_order, "Hierarchy depth: 1, 3, 5 or 7")
        ->capture_default_str();
    add_format_out(qsolve, q, "text or json");
    qsolve->callback([&] { rc = run(wpt_cmd_qsolve, q); });

    Vals h;
    h.max_order = 6;
    CLI::App* hermitian = app.add_subcommand(
        "hermitian", "Equivalent Hermitian Hamiltonian exp(-Q/2) H exp(Q/2), even orders");
    hermitian->add_option("--max-order", h.max_order, "Top even order: 0, 2, 4 or 6")
        ->capture_default_str();
    add_format_out(hermitian, h, "text or json");
    hermitian->callback([&] { rc = run(wpt_cmd_hermitian, h); });

    Vals ob;
    ob.max_order = 3;
    CLI::App* observables = app.add_subcommand(
        "observables", "Similarity-corrected position and momentum operator series");
    observables->add_option("--max-order", ob.max_order, "Top order, at most 3")
        ->capture_default_str();
    add_format_out(observables, ob, "text or json");
    observables->callback([&] { rc = run(wpt_cmd_observables, ob); });

    Vals cl;
    CLI::App* classical = app.add_subcommand(
        "classical", "Physical-variable form, ordered form, and the hbar -> 0 limit");
    add_format_out(classical, cl, "text or json");
    classical->callback([&] { rc = run(wpt_cmd_classical, cl); });

    Vals en;
    CLI::App* energy = app.add_subcommand(
        "energy", "Perturbative energies with symbolic and matrix-diagonal cross-checks");
    energy->add_option("--eps", en.eps, "Coupling strength")->capture_default_str();
    energy->add_option("--n-max", en.n_max, "Highest level in the table")->capture_default_str();
    energy->add_option("--M", en.M, "Harmonic frequency parameter")->capture_default_str();
    add_format_out(energy, en, "text, json or csv");
    energy->callback([&] { rc = run(wpt_cmd_energy, en); });

    Vals sp;
    CLI::App* spectrum = app.add_subcommand(
        "spectrum", "Low eigenvalues of the truncated Hamiltonian matrix");
    spectrum->add_option("--eps", sp.eps, "Coupling strength")->capture_default_str();
    spectrum->add_option("--dim", sp.dim, "Truncation dimension")->capture_default_str();
    spectrum->add_option("--levels", sp.levels, "Number of eigenvalues reported")
        ->capture_default_str();
    spectrum->add_option("--M", sp.M, "Harmonic frequency parameter")->capture_default_str();
    add_format_out(spectrum, sp, "text, json or csv");
    spectrum->callback([&] { rc = run(wpt_cmd_spectrum, sp); });

    Vals de;
    CLI::App* density = app.add_subcommand(
        "density", "Position probability density of a perturbatively corrected eigenstate");
    density->add_option("--n", de.n, "Level index")->capture_default_str();
    density->add_option("--eps", de.eps, "Coupling strength")->capture_default_str();
    density->add_option("--m", de.m, "Particle mass")->capture_default_str();
    density->add_option("--mu", de.mu, "Oscillator frequency")->capture_default_str();
    density->add_option("--hbar", de.hbar, "Planck constant")->capture_default_str();
    density->add_option("--xmin", de.xmin, "Grid lower edge")->capture_default_str();
    density->add_option("--xmax", de.xmax, "Grid upper edge")->capture_default_str();
    density->add_option("--points", de.points, "Grid point count")->capture_default_str();
    add_format_out(density, de, "text, json or csv");
    density->callback([&] { rc = run(wpt_cmd_density, de); });

    Vals ve;
    CLI::App* verify = app.add_subcommand(
        "verify", "Run the full self-check suite; exits 1 if any check fails");
    verify->add_option("--threads", ve.threads, "Worker threads (0 = WEYLPT_THREADS or hardware)")
        ->capture_default_str();
    add_format_out(verify, ve, "text, json or csv");
    verify->callback([&] { rc = run_verify(ve); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help/version or the error text
        return code == 0 ? 0 : 2;
    }
    return rc;
}

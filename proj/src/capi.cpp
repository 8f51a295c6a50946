#include "weylpt.h"

#include "weylpt/commands.hpp"

#include <cstdlib>
#include <cstring>

struct wpt_options {
    weylpt::RunOptions v;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Shared exception boundary: no C++ exception may cross into the C caller.
template <typename Fn>
wpt_status run_command(const wpt_options* opt, char** out, Fn&& fn) {
    if (out == nullptr) {
        g_last_error = "output pointer is null";
        return WPT_ERR_ARGS;
    }
    *out = nullptr;
    if (opt == nullptr) {
        g_last_error = "options handle is null";
        return WPT_ERR_ARGS;
    }
    try {
        *out = dup_string(fn());
        if (*out == nullptr) {
            g_last_error = "out of memory";
            return WPT_ERR_COMPUTE;
        }
        g_last_error.clear();
        return WPT_OK;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return WPT_ERR_ARGS;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return WPT_ERR_COMPUTE;
    } catch (...) {
        g_last_error = "unknown failure";
        return WPT_ERR_COMPUTE;
    }
}

}  // namespace

extern "C" {

const char* wpt_version(void) { return weylpt::version_string(); }

wpt_options* wpt_options_new(void) { return new (std::nothrow) wpt_options{}; }

void wpt_options_free(wpt_options* opt) { delete opt; }

wpt_status wpt_options_set_int(wpt_options* opt, const char* key, long value) {
    if (opt == nullptr || key == nullptr) {
        g_last_error = "null argument";
        return WPT_ERR_ARGS;
    }
    const std::string k = key;
    int* slot = nullptr;
    if (k == "max-order") slot = &opt->v.max_order;
    else if (k == "dim") slot = &opt->v.dim;
    else if (k == "levels") slot = &opt->v.levels;
    else if (k == "n") slot = &opt->v.n;
    else if (k == "n-max") slot = &opt->v.n_max;
    else if (k == "points") slot = &opt->v.points;
    else if (k == "threads") slot = &opt->v.threads;
    if (slot == nullptr) {
        g_last_error = "unknown integer option '" + k + "'";
        return WPT_ERR_ARGS;
    }
    *slot = static_cast<int>(value);
    g_last_error.clear();
    return WPT_OK;
}

wpt_status wpt_options_set_double(wpt_options* opt, const char* key, double value) {
    if (opt == nullptr || key == nullptr) {
        g_last_error = "null argument";
        return WPT_ERR_ARGS;
    }
    const std::string k = key;
    double* slot = nullptr;
    if (k == "eps") slot = &opt->v.eps;
    else if (k == "m") slot = &opt->v.m;
    else if (k == "mu") slot = &opt->v.mu;
    else if (k == "hbar") slot = &opt->v.hbar;
    else if (k == "M") slot = &opt->v.M;
    else if (k == "xmin") slot = &opt->v.x_min;
    else if (k == "xmax") slot = &opt->v.x_max;
    if (slot == nullptr) {
        g_last_error = "unknown double option '" + k + "'";
        return WPT_ERR_ARGS;
    }
    *slot = value;
    g_last_error.clear();
    return WPT_OK;
}

wpt_status wpt_options_set_format(wpt_options* opt, const char* name) {
    if (opt == nullptr || name == nullptr) {
        g_last_error = "null argument";
        return WPT_ERR_ARGS;
    }
    try {
        opt->v.format = weylpt::parse_format(name);
        g_last_error.clear();
        return WPT_OK;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return WPT_ERR_ARGS;
    }
}

wpt_status wpt_cmd_qsolve(const wpt_options* opt, char** out) {
    return run_command(opt, out, [&] { return weylpt::cmd_qsolve(opt->v); });
}

wpt_status wpt_cmd_hermitian(const wpt_options* opt, char** out) {
    return run_command(opt, out, [&] { return weylpt::cmd_hermitian(opt->v); });
}

wpt_status wpt_cmd_observables(const wpt_options* opt, char** out) {
    return run_command(opt, out, [&] { return weylpt::cmd_observables(opt->v); });
}

wpt_status wpt_cmd_classical(const wpt_options* opt, char** out) {
    return run_command(opt, out, [&] { return weylpt::cmd_classical(opt->v); });
}

wpt_status wpt_cmd_energy(const wpt_options* opt, char** out) {
    return run_command(opt, out, [&] { return weylpt::cmd_energy(opt->v); });
}

wpt_status wpt_cmd_spectrum(const wpt_options* opt, char** out) {
    return run_command(opt, out, [&] { return weylpt::cmd_spectrum(opt->v); });
}

wpt_status wpt_cmd_density(const wpt_options* opt, char** out) {
    return run_command(opt, out, [&] { return weylpt::cmd_density(opt->v); });
}

wpt_status wpt_cmd_verify(const wpt_options* opt, char** out, int* all_pass) {
    if (all_pass == nullptr) {
        if (out != nullptr) *out = nullptr;
        g_last_error = "all_pass pointer is null";
        return WPT_ERR_ARGS;
    }
    *all_pass = 0;
    bool ok = false;
    const wpt_status st = run_command(opt, out, [&] { return weylpt::cmd_verify(opt->v, ok); });
    *all_pass = ok ? 1 : 0;
    return st;
}

const char* wpt_last_error(void) { return g_last_error.c_str(); }

void wpt_string_free(char* s) { std::free(s); }

}  // extern "C"

/* C interface to the weylpt engine.
 *
 * Usage pattern: create an options handle, adjust the fields you care about,
 * call a command. Every command renders one complete document (text, json or
 * csv) into a malloc'd NUL-terminated string that the caller releases with
 * wpt_string_free. On failure the output pointer is set to NULL, the return
 * code states whether the arguments or the computation were at fault, and
 * wpt_last_error() holds a message (per thread) until the next call.
 */
#ifndef WEYLPT_H
#define WEYLPT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wpt_status {
    WPT_OK = 0,
    WPT_ERR_COMPUTE = 1, /* computation failed (convergence, internal check, ...) */
    WPT_ERR_ARGS = 2     /* unusable arguments (range, unknown key, bad format) */
} wpt_status;

/* Opaque command options; starts out with the documented defaults. */
typedef struct wpt_options wpt_options;

const char* wpt_version(void);

wpt_options* wpt_options_new(void);
void wpt_options_free(wpt_options* opt);

/* Integer keys:  max-order, dim, levels, n, n-max, points, threads.
 * Double keys:   eps, m, mu, hbar, M, xmin, xmax.
 * Formats:       text, json, csv.
 * Unknown keys and unknown formats return WPT_ERR_ARGS. */
wpt_status wpt_options_set_int(wpt_options* opt, const char* key, long value);
wpt_status wpt_options_set_double(wpt_options* opt, const char* key, double value);
wpt_status wpt_options_set_format(wpt_options* opt, const char* name);

/* Exact symbolic commands (text/json only). */
wpt_status wpt_cmd_qsolve(const wpt_options* opt, char** out);
wpt_status wpt_cmd_hermitian(const wpt_options* opt, char** out);
wpt_status wpt_cmd_observables(const wpt_options* opt, char** out);
wpt_status wpt_cmd_classical(const wpt_options* opt, char** out);

/* Numeric table commands (text/json/csv). */
wpt_status wpt_cmd_energy(const wpt_options* opt, char** out);
wpt_status wpt_cmd_spectrum(const wpt_options* opt, char** out);
wpt_status wpt_cmd_density(const wpt_options* opt, char** out);

/* Self-check suite; *all_pass is set to 1 when every check passed, else 0. */
wpt_status wpt_cmd_verify(const wpt_options* opt, char** out, int* all_pass);

/* Message for the most recent failure on this thread; empty after success. */
const char* wpt_last_error(void);

void wpt_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* WEYLPT_H */

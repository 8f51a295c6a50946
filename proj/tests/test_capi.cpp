#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// Exercises the shared-library boundary only: everything goes through the
// C header, statuses and strings, never the C++ types behind it.
#include "weylpt.h"

#include <cstring>
#include <string>

namespace {

bool contains(const char* hay, const char* needle) {
    return hay != nullptr && std::strstr(hay, needle) != nullptr;
}

struct OptionsGuard {
    wpt_options* o = wpt_options_new();
    ~OptionsGuard() { wpt_options_free(o); }
};

struct StringGuard {
    char* s = nullptr;
    ~StringGuard() { wpt_string_free(s); }
};

}  // namespace

TEST_CASE("version string matches the document header") {
    REQUIRE(wpt_version() != nullptr);
    CHECK(std::string(wpt_version()) == "1.0.0");
}

TEST_CASE("option setters accept known keys and reject unknown ones") {
    OptionsGuard opt;
    REQUIRE(opt.o != nullptr);

    CHECK(wpt_options_set_int(opt.o, "max-order", 3) == WPT_OK);
    CHECK(wpt_options_set_int(opt.o, "dim", 60) == WPT_OK);
    CHECK(wpt_options_set_double(opt.o, "eps", 0.02) == WPT_OK);
    CHECK(wpt_options_set_format(opt.o, "json") == WPT_OK);

    CHECK(wpt_options_set_int(opt.o, "epsilon", 1) == WPT_ERR_ARGS);
    CHECK(contains(wpt_last_error(), "unknown integer option"));
    CHECK(wpt_options_set_double(opt.o, "dim", 1.0) == WPT_ERR_ARGS);
    CHECK(wpt_options_set_format(opt.o, "yaml") == WPT_ERR_ARGS);
    CHECK(contains(wpt_last_error(), "yaml"));

    CHECK(wpt_options_set_int(nullptr, "dim", 60) == WPT_ERR_ARGS);
}

TEST_CASE("qsolve through the C boundary") {
    OptionsGuard opt;
    REQUIRE(wpt_options_set_int(opt.o, "max-order", 3) == WPT_OK);

    StringGuard out;
    REQUIRE(wpt_cmd_qsolve(opt.o, &out.s) == WPT_OK);
    REQUIRE(out.s != nullptr);
    CHECK(contains(out.s, "# weylpt 1.0.0"));
    CHECK(contains(out.s, "Q[1] = (-4/3)*M^-4*T[3,0] + (-2)*M^-2*T[1,2]"));
    CHECK(std::string(wpt_last_error()).empty());
}

TEST_CASE("argument errors are WPT_ERR_ARGS with a message and no output") {
    OptionsGuard opt;
    StringGuard out;

    REQUIRE(wpt_options_set_int(opt.o, "max-order", 9) == WPT_OK);
    CHECK(wpt_cmd_qsolve(opt.o, &out.s) == WPT_ERR_ARGS);
    CHECK(out.s == nullptr);
    CHECK(!std::string(wpt_last_error()).empty());

    REQUIRE(wpt_options_set_int(opt.o, "max-order", 3) == WPT_OK);
    REQUIRE(wpt_options_set_format(opt.o, "csv") == WPT_OK);
    CHECK(wpt_cmd_qsolve(opt.o, &out.s) == WPT_ERR_ARGS);
    CHECK(contains(wpt_last_error(), "csv"));

    CHECK(wpt_cmd_qsolve(nullptr, &out.s) == WPT_ERR_ARGS);
    CHECK(wpt_cmd_qsolve(opt.o, nullptr) == WPT_ERR_ARGS);
}

TEST_CASE("numeric commands render csv and json") {
    OptionsGuard opt;
    REQUIRE(wpt_options_set_format(opt.o, "csv") == WPT_OK);

    StringGuard spec;
    REQUIRE(wpt_cmd_spectrum(opt.o, &spec.s) == WPT_OK);
    CHECK(contains(spec.s, "index,Re,Im,dim,eps"));

    REQUIRE(wpt_options_set_format(opt.o, "json") == WPT_OK);
    StringGuard energy;
    REQUIRE(wpt_cmd_energy(opt.o, &energy.s) == WPT_OK);
    CHECK(contains(energy.s, "\"command\": \"energy\""));

    StringGuard density;
    REQUIRE(wpt_options_set_int(opt.o, "points", 401) == WPT_OK);
    REQUIRE(wpt_cmd_density(opt.o, &density.s) == WPT_OK);
    CHECK(contains(density.s, "\"integral\""));
}

TEST_CASE("remaining commands succeed with defaults") {
    OptionsGuard opt;

    REQUIRE(wpt_options_set_int(opt.o, "max-order", 6) == WPT_OK);
    StringGuard h;
    CHECK(wpt_cmd_hermitian(opt.o, &h.s) == WPT_OK);

    REQUIRE(wpt_options_set_int(opt.o, "max-order", 3) == WPT_OK);
    StringGuard obs;
    CHECK(wpt_cmd_observables(opt.o, &obs.s) == WPT_OK);

    StringGuard cl;
    CHECK(wpt_cmd_classical(opt.o, &cl.s) == WPT_OK);
    CHECK(contains(cl.s, "with c = (6)*mu^-4"));
}

TEST_CASE("verify reports an overall pass flag") {
    OptionsGuard opt;
    StringGuard out;
    int ok = -1;
    REQUIRE(wpt_cmd_verify(opt.o, &out.s, &ok) == WPT_OK);
    CHECK(ok == 1);
    CHECK(contains(out.s, "all checks passed"));

    StringGuard dropped;
    CHECK(wpt_cmd_verify(opt.o, &dropped.s, nullptr) == WPT_ERR_ARGS);
}

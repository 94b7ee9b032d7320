// End-to-end checks of the command line tool: spawns the built binary,
// parses its output, and cross-checks values against the library.

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "render.hpp"
#include "tables.hpp"
#include "specq/analysis.hpp"

using nlohmann::ordered_json;
using namespace specq;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env = "") {
    const std::string cmd =
        env + (env.empty() ? "" : " ") + SPECQ_CLI_PATH + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CliResult res;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0)
        res.out.append(buf, got);
    const int status = pclose(pipe);
    res.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::vector<std::string> lines_of(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

TEST_CASE("analyze thermal be reproduces the M = 3 Planck row") {
    const auto res =
        run_cli("--format json analyze --shape thermal --m 3 --stats be");
    REQUIRE(res.code == 0);
    const auto doc = ordered_json::parse(res.out);
    for (const char* field :
         {"shape", "m", "n", "level_fraction", "x_peak", "f_peak", "x_lower",
          "x_upper", "bandwidth", "q_direct", "q_reciprocal", "x_median",
          "area_fraction"})
        CHECK(doc.contains(field));
    CHECK(doc["shape"] == "thermal");
    CHECK(doc["m"].get<double>() == 3.0);
    CHECK(doc["n"].get<double>() == -1.0);
    CHECK(doc["level_fraction"].get<double>() == 0.5);
    CHECK(doc["x_peak"].get<double>() == doctest::Approx(2.821439).epsilon(1e-6));
    CHECK(doc["q_direct"].get<double>() == doctest::Approx(0.6632).epsilon(1e-4));
    CHECK(doc["x_median"].get<double>() == doctest::Approx(3.5030).epsilon(1e-4));
    CHECK(doc["area_fraction"].get<double>() ==
          doctest::Approx(0.7536).epsilon(1e-3));
    CHECK_FALSE(doc["q_reciprocal"].is_null());
}

TEST_CASE("analyze thermal mb matches the Wien row") {
    const auto res =
        run_cli("--format json analyze --shape thermal --m 3 --stats mb");
    REQUIRE(res.code == 0);
    const auto doc = ordered_json::parse(res.out);
    CHECK(doc["x_peak"].get<double>() == 3.0);
    CHECK(doc["q_direct"].get<double>() == doctest::Approx(0.7262).epsilon(1e-4));
}

TEST_CASE("analyze rlc emits the golden-ratio pair") {
    const auto res = run_cli("--format json analyze --shape rlc --q 1");
    REQUIRE(res.code == 0);
    const auto doc = ordered_json::parse(res.out);
    CHECK(doc["m"].is_null());
    CHECK(doc["n"].is_null());
    CHECK(doc["q_reciprocal"].is_null());
    CHECK(doc["x_lower"].get<double>() ==
          doctest::Approx(0.618034).epsilon(1e-6));
    CHECK(doc["x_upper"].get<double>() ==
          doctest::Approx(1.618034).epsilon(1e-6));
}

TEST_CASE("JSON round-trips to the identical text rendering") {
    for (const std::string args :
         {std::string("analyze --shape thermal --m 5 --n -1"),
          std::string("analyze --shape gaussian"),
          std::string("analyze --shape bvd --q 50 --r 5")}) {
        const auto text = run_cli(args);
        const auto json = run_cli("--format json " + args);
        REQUIRE(text.code == 0);
        REQUIRE(json.code == 0);
        const auto doc = ordered_json::parse(json.out);
        CHECK(render::analysis_text(doc, 6) == text.out);
    }
}

TEST_CASE("BVD analyze leaves the area fields null") {
    const auto res = run_cli("--format json analyze --shape bvd --q 50 --r 5");
    REQUIRE(res.code == 0);
    const auto doc = ordered_json::parse(res.out);
    CHECK(doc["x_median"].is_null());
    CHECK(doc["area_fraction"].is_null());
}

TEST_CASE("table VI cells equal the analysis operations bit for bit") {
    const auto res = run_cli("--format json table VI");
    REQUIRE(res.code == 0);
    const auto doc = ordered_json::parse(res.out);
    REQUIRE(doc["rows"].size() == 3);
    const double ns[3] = {-1.0, 0.0, 1.0};
    const LevelSpec half = LevelSpec::fraction(0.5);
    for (int i = 0; i < 3; ++i) {
        const LineShape s = GeneralizedThermal{3.0, ns[i]};
        const auto pk = find_peak(s);
        const auto [lo, hi] = level_points(s, half);
        const double q = q_factor(s, half).direct;
        const auto& row = doc["rows"][i];
        CHECK(row[1]["value"].get<double>() == ns[i]);
        CHECK(row[2]["value"].get<double>() == lo);
        CHECK(row[3]["value"].get<double>() == pk.x);
        CHECK(row[4]["value"].get<double>() == hi);
        CHECK(row[5]["value"].get<double>() == q);
    }
}

TEST_CASE("table IV carries the Y column of the wavelength view") {
    const auto res = run_cli("--format json table IV");
    REQUIRE(res.code == 0);
    const auto doc = ordered_json::parse(res.out);
    REQUIRE(doc["rows"].size() == 4);
    const double want_y[4] = {0.1235, 0.1779, 0.2014, 0.3660};
    for (int i = 0; i < 4; ++i)
        CHECK(doc["rows"][i][1]["value"].get<double>() ==
              doctest::Approx(want_y[i]).epsilon(1e-3));
}

TEST_CASE("table V ratio column") {
    const auto res = run_cli("--format json table V");
    REQUIRE(res.code == 0);
    const auto doc = ordered_json::parse(res.out);
    REQUIRE(doc["rows"].size() == 7);
    const double want[7] = {76.10, 50.0, 50.0, 75.36, 75.36, 74.81, 74.46};
    for (int i = 0; i < 7; ++i)
        CHECK(doc["rows"][i][2]["value"].get<double>() ==
              doctest::Approx(want[i]).epsilon(1e-4));
}

TEST_CASE("table text round-trips from the JSON document") {
    for (const std::string id : {"III", "IV", "V", "VI"}) {
        const auto text = run_cli("table " + id);
        const auto json = run_cli("--format json table " + id);
        REQUIRE(text.code == 0);
        REQUIRE(json.code == 0);
        CHECK(render::table_text(ordered_json::parse(json.out), 6) == text.out);
    }
}

TEST_CASE("curve emits ascending CSV peaking at the Planck maximum") {
    const auto res = run_cli(
        "curve --shape thermal --m 3 --n -1 --from 0.01 --to 20 --points 500 --log");
    REQUIRE(res.code == 0);
    const auto rows = lines_of(res.out);
    REQUIRE(rows.size() == 501);
    CHECK(rows[0] == "x,f");
    double prev_x = -1.0, best_x = 0.0, best_f = -1.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double x, f;
        REQUIRE(std::sscanf(rows[i].c_str(), "%lf,%lf", &x, &f) == 2);
        CHECK(x > prev_x);
        prev_x = x;
        if (f > best_f) {
            best_f = f;
            best_x = x;
        }
    }
    CHECK(best_x == doctest::Approx(2.8214).epsilon(0.02));
}

TEST_CASE("curve uses the omega,g header for circuit shapes") {
    const auto res =
        run_cli("curve --shape rlc --q 10 --from 0.5 --to 2 --points 300");
    REQUIRE(res.code == 0);
    const auto rows = lines_of(res.out);
    REQUIRE(rows.size() == 301);
    CHECK(rows[0] == "omega,g");
    double best_x = 0.0, best_f = -1.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double x, f;
        REQUIRE(std::sscanf(rows[i].c_str(), "%lf,%lf", &x, &f) == 2);
        if (f > best_f) {
            best_f = f;
            best_x = x;
        }
    }
    CHECK(best_x == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("full-precision CSV renders doubles reversibly") {
    const auto res = run_cli(
        "--full-precision curve --shape thermal --m 3 --n -1 --from 0.5 --to 8 "
        "--points 20");
    REQUIRE(res.code == 0);
    const auto rows = lines_of(res.out);
    REQUIRE(rows.size() == 21);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double x, f;
        REQUIRE(std::sscanf(rows[i].c_str(), "%lf,%lf", &x, &f) == 2);
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g", x, f);
        CHECK(rows[i] == buf);
    }
}

TEST_CASE("rj asymptote replaces the ordinate with X^(M-1)") {
    const auto res = run_cli(
        "--full-precision curve --shape thermal --m 3 --n -1 --from 0.5 --to 2 "
        "--points 4 --rj-asymptote");
    REQUIRE(res.code == 0);
    const auto rows = lines_of(res.out);
    REQUIRE(rows.size() == 5);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        double x, f;
        REQUIRE(std::sscanf(rows[i].c_str(), "%lf,%lf", &x, &f) == 2);
        CHECK(f == doctest::Approx(x * x).epsilon(1e-15));
    }
}

TEST_CASE("convert reports the Wien peak positions") {
    const auto sun = run_cli("--format json convert --temperature 5778 --peak-of m5");
    REQUIRE(sun.code == 0);
    const auto sdoc = ordered_json::parse(sun.out);
    CHECK(sdoc["wavelength_m"].get<double>() ==
          doctest::Approx(501.5e-9).epsilon(1e-3));
    CHECK(sdoc["lambda_p_times_t_m_k"].get<double>() ==
          doctest::Approx(2.8978e-3).epsilon(1e-4));

    const auto cmb = run_cli("--format json convert --temperature 2.725 --peak-of m3");
    REQUIRE(cmb.code == 0);
    const auto cdoc = ordered_json::parse(cmb.out);
    CHECK(cdoc["frequency_hz"].get<double>() ==
          doctest::Approx(160.2e9).epsilon(1e-3));

    const auto unit = run_cli("--format json convert --temperature 1 --x 1");
    REQUIRE(unit.code == 0);
    const auto udoc = ordered_json::parse(unit.out);
    CHECK(udoc["frequency_hz"].get<double>() ==
          doctest::Approx(2.0837e10).epsilon(1e-4));
}

TEST_CASE("rlc subcommand routes") {
    const auto res = run_cli("--format json rlc --restitution 0.85");
    REQUIRE(res.code == 0);
    CHECK(ordered_json::parse(res.out)["q"].get<double>() ==
          doctest::Approx(9.665313).epsilon(1e-6));

    const auto q5 = run_cli("--format json rlc --q 5");
    REQUIRE(q5.code == 0);
    CHECK(ordered_json::parse(q5.out)["bandwidth"].get<double>() ==
          doctest::Approx(0.2).epsilon(1e-12));

    const auto unit = run_cli("--format json rlc --r 1 --l 1 --c 1");
    REQUIRE(unit.code == 0);
    const auto udoc = ordered_json::parse(unit.out);
    CHECK(udoc["q"].get<double>() == 1.0);
    CHECK(udoc["f1_hz"].get<double>() ==
          doctest::Approx(1.0 / (2.0 * M_PI)).epsilon(1e-12));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("analyze --shape thermal").code == 2);          // missing --m
    CHECK(run_cli("analyze --shape thermal --m 0.5").code == 2);  // m <= 1
    CHECK(run_cli("analyze --shape nonsense --m 3").code == 2);
    CHECK(run_cli("analyze --shape rlc").code == 2);  // missing --q
    CHECK(run_cli("analyze --shape rlc --q 1 --m 3").code == 2);
    CHECK(run_cli("analyze --shape thermal --m 3 --n 0 --stats be").code == 2);
    CHECK(run_cli("analyze --shape thermal --m 3 --level 1.5").code == 2);
    CHECK(run_cli("table VII").code == 2);
    CHECK(run_cli("curve --shape thermal --m 3 --from 0 --to 1 --log").code == 2);
    CHECK(run_cli("--format json curve --shape thermal --m 3 --from 1 --to 2").code == 2);
    CHECK(run_cli("convert --temperature 300").code == 2);
    CHECK(run_cli("convert --temperature 300 --x 1 --peak-of m3").code == 2);
    CHECK(run_cli("rlc --q 1 --decrement 0.3").code == 2);
    CHECK(run_cli("rlc --r 1 --l 1").code == 2);
    CHECK(run_cli("--definitely-not-a-flag analyze").code == 2);
    CHECK(run_cli("analyze --shape thermal --m 3",
                  "Q_ANALYZER_TOL=abc").code == 2);
}

TEST_CASE("numerical failures exit with code 3") {
    // an unattainable tolerance starves the Voigt convolution budget
    CHECK(run_cli("analyze --shape voigt --ratio 1",
                  "Q_ANALYZER_TOL=1e-30").code == 3);
    // BVD dip that never reaches the requested level
    CHECK(run_cli("analyze --shape bvd --q 1 --r 1").code == 3);
}

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("analyze --help").code == 0);
}

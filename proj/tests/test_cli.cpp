#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <littlesinc/cli.hpp>
#include <littlesinc/emit.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = lsf::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

double field_as_double(const lsf::Value& v) {
    if (std::holds_alternative<long long>(v))
        return static_cast<double>(std::get<long long>(v));
    return std::get<double>(v);
}

} // namespace

TEST_CASE("no command / unknown flags are usage errors (exit 2)") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"spectrum", "--no-such-flag"}).code == 2);
    CHECK(run_cli({"spectrum", "--problem", "harmonic", "--N", "ten", "--pms"}).code == 2);
}

TEST_CASE("--help succeeds") {
    const RunResult r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("spectrum") != std::string::npos);
}

TEST_CASE("conflicting and missing scale flags") {
    CHECK(run_cli({"spectrum", "--problem", "harmonic", "--N", "10", "--pms", "--L", "3"}).code ==
          2);
    // neither --pms nor --L
    CHECK(run_cli({"spectrum", "--problem", "harmonic", "--N", "10"}).code == 2);
}

TEST_CASE("unknown problem preset: exit 2 with a machine-greppable code") {
    const RunResult r = run_cli({"spectrum", "--problem", "nosuch", "--N", "10", "--pms"});
    CHECK(r.code == 2);
    CHECK(r.err.find("E_USAGE") == 0); // code leads the line
    CHECK(r.err.find("nosuch") != std::string::npos);
    CHECK(r.err.find("\x1b[") == std::string::npos); // no ANSI color off a terminal
}

TEST_CASE("domain errors exit 1 with their code") {
    const RunResult r = run_cli({"spectrum", "--problem", "harmonic", "--N", "7", "--pms"});
    CHECK(r.code == 1);
    CHECK(r.err.find("E_DOMAIN") == 0);
}

TEST_CASE("scale search failure surfaces as a convergence error (exit 1)") {
    // 1D Morse scanned over a window left of the trace minimum has its
    // argmin on the right edge and no cap: E_CONVERGENCE
    const RunResult r = run_cli({"pms", "--problem", "morse-1d", "--N", "20", "--lo", "0.1",
                                 "--hi", "0.5"});
    CHECK(r.code == 1);
    CHECK(r.err.find("E_CONVERGENCE") == 0);
}

TEST_CASE("spectrum --pms reproduces the harmonic benchmark in JSON") {
    const RunResult r = run_cli({"spectrum", "--problem", "harmonic", "--N", "10", "--pms",
                                 "--format", "json"});
    REQUIRE(r.code == 0);
    const lsf::ParsedJson doc = lsf::parse_json(r.out);
    CHECK(doc.meta.command == "spectrum");
    CHECK(doc.meta.version == std::string(lsf::kEmitVersion));
    REQUIRE(doc.table.records.size() == 9); // N-1 levels, capped at --states
    // columns: n, E, E_exact, err
    const double err0 = field_as_double(doc.table.records[0][3].value);
    const double err1 = field_as_double(doc.table.records[1][3].value);
    const double err2 = field_as_double(doc.table.records[2][3].value);
    CHECK(std::abs(err0) > 4.86e-6 / 2.0);
    CHECK(std::abs(err0) < 4.86e-6 * 2.0);
    CHECK(err0 < 0.0);
    CHECK(std::abs(err1) > 1.2e-4 / 2.0);
    CHECK(std::abs(err1) < 1.2e-4 * 2.0);
    CHECK(err1 > 0.0);
    CHECK(std::abs(err2) > 1.6e-3 / 2.0);
    CHECK(std::abs(err2) < 1.6e-3 * 2.0);
    CHECK(err2 < 0.0);
}

TEST_CASE("spectrum --L and --states control the output rows") {
    const RunResult r = run_cli({"spectrum", "--problem", "harmonic", "--N", "12", "--L", "4.5",
                                 "--states", "3"});
    REQUIRE(r.code == 0);
    const lsf::ParsedTable t = lsf::parse_csv(r.out);
    CHECK(t.records.size() == 3);
    CHECK(t.header == std::vector<std::string>{"n", "E", "E_exact", "err"});
}

TEST_CASE("inline potentials need no preset") {
    // --mass 0.5 puts V = x^2 in the convention -u'' + V u = E u, so E0 = 1
    const RunResult r = run_cli({"spectrum", "--poly", "0,0,1", "--N", "10", "--pms",
                                 "--states", "1", "--mass", "0.5"});
    REQUIRE(r.code == 0);
    const lsf::ParsedTable t = lsf::parse_csv(r.out);
    REQUIRE(t.records.size() == 1);
    // no exact-energy column for inline potentials; E matches the harmonic run
    CHECK(t.header == std::vector<std::string>{"n", "E"});
    CHECK(field_as_double(t.records[0][1].value) == doctest::Approx(1.0).epsilon(1e-4));
    // default mass for inline potentials is 1, so the same run without
    // --mass gives E0 = sqrt(2)/2
    const RunResult r1 = run_cli({"spectrum", "--poly", "0,0,1", "--N", "10", "--pms",
                                  "--states", "1"});
    REQUIRE(r1.code == 0);
    const lsf::ParsedTable t1 = lsf::parse_csv(r1.out);
    CHECK(field_as_double(t1.records[0][1].value) ==
          doctest::Approx(std::sqrt(0.5)).epsilon(1e-4));
    CHECK(run_cli({"spectrum", "--poly", "1,x", "--N", "10", "--pms"}).code == 1);
    CHECK(run_cli({"spectrum", "--N", "10", "--pms"}).code == 1); // no potential at all
}

TEST_CASE("interp writes the pinned N = 22 error curve") {
    const RunResult r = run_cli({"interp", "--problem", "steng-cubic", "--N", "22"});
    REQUIRE(r.code == 0);
    const lsf::ParsedTable t = lsf::parse_csv(r.out);
    REQUIRE(t.records.size() == 1001);
    double worst = 0.0;
    for (const auto& rec : t.records)
        worst = std::max(worst, std::abs(field_as_double(rec[3].value)));
    CHECK(worst == doctest::Approx(1.1068383713200708e-3).epsilon(1e-12));
    CHECK(run_cli({"interp", "--problem", "other"}).code == 2);
    CHECK(run_cli({"interp", "--kind", "spline"}).code == 2);
}

TEST_CASE("bvp emits node errors and the Xi diagnostics") {
    const RunResult r = run_cli({"bvp", "--problem", "lybeck", "--N", "20"});
    REQUIRE(r.code == 0);
    const lsf::ParsedTable t = lsf::parse_csv(r.out);
    REQUIRE(t.records.size() == 19);
    CHECK(t.header == std::vector<std::string>{"k", "x", "u", "u_exact", "err"});
    CHECK(r.err.find("XiG=") != std::string::npos);
    CHECK(r.err.find("XiL=") != std::string::npos);
}

TEST_CASE("pms emits the optimum row, or the scan with --scan") {
    const RunResult one = run_cli({"pms", "--problem", "harmonic", "--N", "50"});
    REQUIRE(one.code == 0);
    const lsf::ParsedTable t1 = lsf::parse_csv(one.out);
    REQUIRE(t1.records.size() == 1);
    const double h_opt = field_as_double(t1.records[0][2].value);
    CHECK(h_opt >= 0.352);
    CHECK(h_opt <= 0.362);

    const RunResult scan = run_cli({"pms", "--problem", "harmonic", "--N", "10", "--scan"});
    REQUIRE(scan.code == 0);
    const lsf::ParsedTable t2 = lsf::parse_csv(scan.out);
    CHECK(t2.records.size() == 64);
    CHECK(t2.header == std::vector<std::string>{"L", "trace"});
}

TEST_CASE("byte-identical reruns") {
    const std::vector<std::string> args = {"spectrum", "--problem", "anharmonic", "--N", "14",
                                           "--pms", "--format", "json"};
    const RunResult a = run_cli(args);
    const RunResult b = run_cli(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    const RunResult c = run_cli({"reproduce", "table1", "--max-N", "20"});
    const RunResult d = run_cli({"reproduce", "table1", "--max-N", "20"});
    REQUIRE(c.code == 0);
    CHECK(c.out == d.out);
}

TEST_CASE("--out writes the same bytes to a file") {
    const std::string path = "cli_test_out.csv";
    std::remove(path.c_str());
    const RunResult direct = run_cli({"pms", "--problem", "quartic", "--N", "20"});
    const RunResult filed = run_cli({"pms", "--problem", "quartic", "--N", "20", "--out", path});
    REQUIRE(direct.code == 0);
    REQUIRE(filed.code == 0);
    CHECK(filed.out.empty());
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == direct.out);
    in.close();
    std::remove(path.c_str());

    const RunResult bad =
        run_cli({"pms", "--problem", "quartic", "--N", "20", "--out", "no-such-dir/x.csv"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("E_IO") == 0);
}

TEST_CASE("reproduce subcommands run end to end") {
    struct Want {
        std::vector<std::string> args;
        std::size_t rows;
        std::string first_col;
    };
    const std::vector<Want> wants = {
        {{"reproduce", "table1", "--max-N", "20"}, 18, "l"},
        {{"reproduce", "fig3"}, 1001, "x"},
        {{"reproduce", "fig4"}, 14, "N"},
        {{"reproduce", "fig7"}, 80, "L"},
        {{"reproduce", "fig8"}, 199, "r"},
        {{"reproduce", "wei"}, 6, "N"},
    };
    for (const auto& w : wants) {
        const RunResult r = run_cli(w.args);
        CAPTURE(w.args[1]);
        REQUIRE(r.code == 0);
        const lsf::ParsedTable t = lsf::parse_csv(r.out);
        CHECK(t.records.size() == w.rows);
        CHECK(t.header[0] == w.first_col);
    }
    CHECK(run_cli({"reproduce"}).code == 2);
    CHECK(run_cli({"reproduce", "fig99"}).code == 2);
}

TEST_CASE("reproduce fig6 emits three error columns over the L sweep") {
    const RunResult r = run_cli({"reproduce", "fig6"});
    REQUIRE(r.code == 0);
    const lsf::ParsedTable t = lsf::parse_csv(r.out);
    CHECK(t.records.size() == 71);
    CHECK(t.header == std::vector<std::string>{"L", "eps0", "eps1", "eps2"});
    // all three level errors must pass through a deep minimum near L_pms
    double best0 = 1e300;
    for (const auto& rec : t.records)
        best0 = std::min(best0, std::abs(field_as_double(rec[1].value)));
    CHECK(best0 <= 1e-3);
}

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "cleangraph/report.hpp"

using namespace cleangraph;

namespace {

std::string first_line(const std::string& text, const std::string& prefix) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t end = text.find('\n', pos);
        const std::string line = text.substr(pos, end - pos);
        if (line.starts_with(prefix)) return line;
        if (end == std::string::npos) break;
        pos = end + 1;
    }
    return {};
}

struct cli_result {
    int exit_code = -1;
    std::string out;
};

// Runs the installed CLI (path from CLEANGRAPH_CLI) through the shell,
// capturing stdout; stderr (timings) is dropped.
cli_result run_cli(const std::string& args) {
    const char* bin = std::getenv("CLEANGRAPH_CLI");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    cli_result result;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.out.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

TEST_CASE("analyze n = 15") {
    const analysis_report rep = analyze(15);
    CHECK(rep.n == 15);
    CHECK(rep.phi == 8);
    CHECK(rep.r == 4);
    CHECK(rep.vertex_total == 24);
    CHECK(rep.edge_count == 86);
    CHECK(rep.diameter_closed_value == distance::finite(3));
    CHECK(rep.diameter_oracle_value == distance::finite(3));
    CHECK(rep.wiener_closed_value == distance::finite(492));
    CHECK(rep.wiener_oracle_value == distance::finite(492));
    CHECK(rep.wiener_published_value == distance::finite(492));
    CHECK(rep.matching_closed_value == 12);
    CHECK(rep.matching_oracle_value == 12);
    CHECK(rep.perfect_matching_valid == true);
    REQUIRE(rep.decomposition_closed.has_value());
    CHECK(rep.decomposition_closed->total == 492);
    CHECK(rep.decomposition_closed == rep.decomposition_oracle);
    CHECK(rep.published_matches_closed);
    CHECK(rep.all_agree());
}

TEST_CASE("analyze n = 30 quantifies the published divergence") {
    const analysis_report rep = analyze(30);
    CHECK(rep.wiener_closed_value == distance::finite(2588));
    CHECK(rep.wiener_oracle_value == distance::finite(2588));
    CHECK(rep.wiener_published_value == distance::finite(2756));
    CHECK(!rep.published_matches_closed);
    CHECK(rep.all_agree());  // exact closed form vs oracle, not the published one
    CHECK(rep.matching_closed_value == 28);
    CHECK(rep.matching_oracle_value == 28);
}

TEST_CASE("analyze n = 9: the disconnected family") {
    const analysis_report rep = analyze(9);
    CHECK(rep.fact.k_total == 1);
    CHECK(rep.vertex_total == 6);
    CHECK(rep.diameter_closed_value == distance::infinite());
    CHECK(rep.diameter_oracle_value == distance::infinite());
    CHECK(rep.wiener_closed_value == distance::infinite());
    CHECK(rep.wiener_oracle_value == distance::infinite());
    CHECK(!rep.decomposition_closed.has_value());
    CHECK(!rep.decomposition_oracle.has_value());
    CHECK(rep.matching_closed_value == 2);
    CHECK(rep.matching_oracle_value == 2);
    CHECK(!rep.perfect_matching_valid.has_value());
    CHECK(rep.all_agree());
}

TEST_CASE("analyze n = 2: single vertex disagrees with the k = 1 closed form") {
    const analysis_report rep = analyze(2);
    CHECK(rep.vertex_total == 1);
    CHECK(rep.diameter_closed_value == distance::infinite());
    CHECK(rep.diameter_oracle_value == distance::finite(0));
    CHECK(rep.wiener_oracle_value == distance::finite(0));
    CHECK(!rep.diameter_agree);
    CHECK(!rep.wiener_agree);
    CHECK(rep.matching_agree);
    CHECK(!rep.all_agree());
}

TEST_CASE("analyze respects caps and rejects bad input") {
    CHECK_THROWS_AS((void)analyze(1), std::invalid_argument);
    analyze_options tight;
    tight.limits.bfs_vertex_cap = 23;
    CHECK_THROWS_AS((void)analyze(15, tight), size_limit_error);
    tight.with_oracle = false;
    const analysis_report rep = analyze(15, tight);  // closed forms ignore the cap
    CHECK(rep.wiener_closed_value == distance::finite(492));
    CHECK(!rep.edge_count.has_value());
    CHECK(!rep.wiener_oracle_value.has_value());
    CHECK(!rep.matching_oracle_value.has_value());
    CHECK(rep.all_agree());  // vacuously

    analyze_options no_blossom;
    no_blossom.limits.matching_vertex_cap = 5;
    const analysis_report rep2 = analyze(15, no_blossom);
    CHECK(rep2.wiener_oracle_value == distance::finite(492));
    CHECK(!rep2.matching_oracle_value.has_value());
    CHECK(rep2.matching_agree);  // vacuously
}

TEST_CASE("closed-only analysis handles huge n") {
    const analysis_report rep = analyze(9699690, analyze_options{.with_oracle = false});  // 8 primes
    CHECK(rep.fact.k_total == 8);
    CHECK(rep.phi == 1658880);
    CHECK(rep.vertex_total == wide{255} * 1658880);
    CHECK(!rep.wiener_closed_value.is_infinite());
    CHECK(!rep.published_matches_closed);
}

TEST_CASE("report serialization round-trips and is deterministic") {
    for (std::uint64_t n : {15ull, 30ull, 9ull, 2ull}) {
        const analysis_report rep = analyze(n);
        CHECK(report_from_json(report_to_json(rep)) == rep);
        CHECK(report_to_json(rep) == report_to_json(analyze(n)));
        CHECK(report_to_text(rep) == report_to_text(analyze(n)));
    }
    const analysis_report closed_only = analyze(9699690, analyze_options{.with_oracle = false});
    CHECK(report_from_json(report_to_json(closed_only)) == closed_only);

    std::string bad = report_to_json(analyze(15));
    const auto pos = bad.find("\"n\": 15");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 7, "\"n\": 14");  // factor list no longer matches n
    CHECK_THROWS_AS((void)report_from_json(bad), std::runtime_error);
}

TEST_CASE("report text carries the worked values") {
    const std::string text = report_to_text(analyze(15));
    CHECK(text.find("n = 15 = 3 * 5") != std::string::npos);
    CHECK(text.find("wiener:    closed = 492, oracle = 492  [agree]") != std::string::npos);
    CHECK(text.find("result: full agreement") != std::string::npos);

    const std::string diverging = report_to_text(analyze(30));
    CHECK(diverging.find("published closed form: 2756  [DIVERGES") != std::string::npos);

    const std::string isolated = report_to_text(analyze(9));
    CHECK(isolated.find("note: k_total = 1") != std::string::npos);
    CHECK(first_line(isolated, "diameter:") == "diameter:  closed = INF, oracle = INF  [agree]");
}

TEST_CASE("scan: header, frozen rows, agreement flag") {
    CHECK(std::string(scan_csv_header) ==
          "n,phi,k,m,r,vertices,wiener_closed,wiener_oracle,matching_closed,matching_oracle,"
          "diameter,agree");
    const scan_result r = scan_range(2, 20, scan_options{});
    CHECK(!r.all_agree);  // the n = 2 row
    CHECK(r.csv.starts_with(std::string(scan_csv_header) + "\n"));
    CHECK(first_line(r.csv, "2,") == "2,1,1,1,1,1,INF,0,0,0,0,0");
    CHECK(first_line(r.csv, "15,") == "15,8,2,0,4,24,492,492,12,12,3,1");
    CHECK(first_line(r.csv, "12,") == "12,4,2,2,4,12,114,114,6,6,3,1");
    CHECK(first_line(r.csv, "9,") == "9,6,1,0,2,6,INF,INF,2,2,INF,1");

    const scan_result healthy = scan_range(6, 6, scan_options{});
    CHECK(healthy.all_agree);

    CHECK_THROWS_AS((void)scan_range(1, 5, scan_options{}), std::invalid_argument);
    CHECK_THROWS_AS((void)scan_range(10, 9, scan_options{}), std::invalid_argument);
}

TEST_CASE("scan: oracle cells empty above the caps") {
    scan_options tight;
    tight.limits.bfs_vertex_cap = 20;
    const scan_result r = scan_range(15, 15, tight);
    CHECK(first_line(r.csv, "15,") == "15,8,2,0,4,24,492,,12,,3,1");
    CHECK(r.all_agree);  // nothing to compare, vacuous

    scan_options no_blossom;
    no_blossom.limits.matching_vertex_cap = 10;
    const scan_result r2 = scan_range(15, 15, no_blossom);
    CHECK(first_line(r2.csv, "15,") == "15,8,2,0,4,24,492,492,12,,3,1");
}

TEST_CASE("scan output is identical for any worker-pool size") {
    scan_options serial;
    serial.jobs = 1;
    scan_options wide_pool;
    wide_pool.jobs = 8;
    const scan_result a = scan_range(2, 120, serial);
    const scan_result b = scan_range(2, 120, wide_pool);
    CHECK(a.csv == b.csv);
    CHECK(a.all_agree == b.all_agree);
}

TEST_CASE("caps_from_env") {
    const caps normal = caps_from_env();
    CHECK(normal.bfs_vertex_cap == default_vertex_cap);
    CHECK(normal.matching_vertex_cap == default_matching_cap);

    setenv("CLEANGRAPH_VERTEX_CAP", "1234", 1);
    CHECK(caps_from_env().bfs_vertex_cap == 1234);
    setenv("CLEANGRAPH_VERTEX_CAP", "junk", 1);
    CHECK_THROWS_AS((void)caps_from_env(), std::invalid_argument);
    setenv("CLEANGRAPH_VERTEX_CAP", "0", 1);
    CHECK_THROWS_AS((void)caps_from_env(), std::invalid_argument);
    setenv("CLEANGRAPH_VERTEX_CAP", "12cats", 1);
    CHECK_THROWS_AS((void)caps_from_env(), std::invalid_argument);
    unsetenv("CLEANGRAPH_VERTEX_CAP");
    CHECK(caps_from_env().bfs_vertex_cap == default_vertex_cap);
}

TEST_CASE("published table fixtures") {
    REQUIRE(printed_table1().size() == 10);
    CHECK(printed_table1()[0].printed == coefficient_row{17, 15, 8});
    CHECK(printed_table1()[5].printed == coefficient_row{1, 15, 16});
    REQUIRE(printed_table2().size() == 10);
    CHECK(printed_table2()[0].n == 6);
    CHECK(printed_table2()[0].printed_w == 23);
}

TEST_CASE("table 2 errata: exactly n in {12, 20, 24, 36}") {
    const auto errata = table2_errata();
    REQUIRE(errata.size() == 4);
    const std::vector<std::pair<std::string, std::string>> expect = {
        {"table2 n=12", "114"}, {"table2 n=20", "492"}, {"table2 n=24", "500"},
        {"table2 n=36", "1142"}};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(errata[i].location == expect[i].first);
        CHECK(errata[i].computed == expect[i].second);
        CHECK(errata[i].oracle == expect[i].second);  // brute force agrees
    }
    CHECK(errata[0].printed == "110");
    CHECK(errata[1].printed == "488");
    CHECK(errata[2].printed == "488");
    CHECK(errata[3].printed == "1138");
}

TEST_CASE("table 1 errata: nine rows, witnesses where feasible") {
    const auto errata = table1_errata();
    REQUIRE(errata.size() == 9);  // every printed row except "2 p1^a1"
    for (const auto& e : errata) CHECK(e.location.starts_with("table1 "));

    auto find_entry = [&](const std::string& needle) {
        for (const auto& e : errata)
            if (e.location.find(needle) != std::string::npos && e.location.find("(k=") != std::string::npos)
                return e;
        return errata_entry{};
    };
    const errata_entry odd_k2 = find_entry("p1^a1 p2^a2 (k=2)");
    CHECK(odd_k2.printed == "(1 x^2 - 15 x + 16)/2");
    CHECK(odd_k2.computed == "(17 x^2 - 15 x + 16)/2");
    CHECK(odd_k2.oracle == "n=15: actual W = 492; printed form gives -20, recomputed form 492");

    const errata_entry even_k3 = find_entry("2 p1^a1 p2^a2 (k=3)");
    CHECK(even_k3.printed == "(29 x^2 - 59 x + 32)/2");
    CHECK(even_k3.computed == "(93 x^2 - 59 x + 32)/2");
    CHECK(even_k3.oracle == "n=30: actual W = 2588; printed form gives 708, recomputed form 2756");

    const errata_entry odd_k3 = find_entry("p1^a1 p2^a2 p3^a3 (k=3)");
    CHECK(odd_k3.oracle ==
          "n=105: actual W = 98984; printed form gives 32024, recomputed form 105752");

    const errata_entry even_k4 = find_entry("2 p1^a1 p2^a2 p3^a3 (k=4)");
    CHECK(even_k4.oracle ==
          "n=210: actual W = 457048; printed form gives 202744, recomputed form 497656");

    // k = 5 and up: no witness fits under the default cap.
    int with_oracle = 0;
    for (const auto& e : errata) with_oracle += !e.oracle.empty();
    CHECK(with_oracle == 4);
}

TEST_CASE("rendered tables") {
    const std::string text = render_tables(true);
    CHECK(text.find("(17, 15, 8)") != std::string::npos);
    CHECK(text.find("table2 n=12") != std::string::npos);
    CHECK(text.find("oracle:   114") != std::string::npos);
    const std::string plain = render_tables(false);
    CHECK(plain.find("errata") == std::string::npos);
    CHECK(render_tables(true) == text);  // deterministic
}

TEST_CASE("CLI subprocess: worked example and exit codes") {
    const cli_result ok = run_cli("analyze 15");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("wiener:    closed = 492, oracle = 492  [agree]") != std::string::npos);
    CHECK(ok.out.find("vertices = 24, edges = 86") != std::string::npos);
    CHECK(ok.out.find("matching:  closed = 12, oracle = 12  [agree]") != std::string::npos);

    CHECK(run_cli("analyze 2").exit_code == 2);
    CHECK(run_cli("analyze 1").exit_code == 1);
    CHECK(run_cli("analyze").exit_code == 1);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("analyze 1000000").exit_code == 3);
    CHECK(run_cli("analyze 1000000 --oracle off").exit_code == 0);
    CHECK(run_cli("analyze 614889782588491410 --oracle off").exit_code == 3);

    const cli_result json = run_cli("analyze 15 --json");
    CHECK(json.exit_code == 0);
    CHECK(report_from_json(json.out) == analyze(15));
}

TEST_CASE("CLI subprocess: scan and env cap") {
    const cli_result scan = run_cli("scan 6 10");
    CHECK(scan.exit_code == 0);
    CHECK(scan.out.starts_with(std::string(scan_csv_header) + "\n"));
    CHECK(first_line(scan.out, "6,") == "6,2,2,1,2,6,23,23,3,3,3,1");

    CHECK(run_cli("scan 2 6").exit_code == 2);  // n = 2 row disagrees

    const cli_result capped = run_cli("scan 15 15 --cap 20");
    CHECK(first_line(capped.out, "15,") == "15,8,2,0,4,24,492,,12,,3,1");

    const cli_result env_capped = run_cli("scan 15 15");  // via env instead of flag
    CHECK(first_line(env_capped.out, "15,") == "15,8,2,0,4,24,492,492,12,12,3,1");
    const char* bin = std::getenv("CLEANGRAPH_CLI");
    REQUIRE(bin != nullptr);
    FILE* pipe = popen(
        (std::string("CLEANGRAPH_VERTEX_CAP=20 ") + bin + " scan 15 15 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    CHECK(first_line(out, "15,") == "15,8,2,0,4,24,492,,12,,3,1");
}

TEST_CASE("CLI subprocess: tables") {
    const cli_result tables = run_cli("tables --errata");
    CHECK(tables.exit_code == 0);
    CHECK(tables.out.find("table2 n=24") != std::string::npos);
    CHECK(tables.out.find("oracle:   500") != std::string::npos);
    CHECK(tables.out ==
          run_cli("tables --errata").out);  // byte-deterministic across invocations
}

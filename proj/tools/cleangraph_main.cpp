#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "cleangraph/report.hpp"

namespace {

// 0 success + agreement, 1 usage/input error, 2 closed-vs-oracle
// disagreement, 3 size cap or arithmetic range exceeded.
enum exit_code : int { exit_ok = 0, exit_usage = 1, exit_disagreement = 2, exit_resource = 3 };

void write_file(const std::string& path, const std::string& payload) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << payload;
    out.flush();
    if (!out) throw std::runtime_error("failed while writing " + path);
}

// For k_total >= 2 the deterministic perfect matching; for k_total = 1 the
// graph is a disjoint union of inverse-pair edges and isolated self-inverse
// vertices, so the inverse pairs alone are already maximum.
std::vector<std::pair<std::uint32_t, std::uint32_t>> exportable_matching(
    const cleangraph::clean_graph& g) {
    if (g.ring().fact.k_total >= 2) return cleangraph::construct_perfect_matching(g);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t s = 0; s < g.vertex_count(); ++s) {
        const std::uint32_t t = g.inverse_slot(s);
        if (t > s) pairs.emplace_back(s, t);
    }
    return pairs;
}

int run(int argc, char** argv) {
    CLI::App app{"clean graph Cl2(Z_n): closed forms checked against brute-force oracles"};
    app.require_subcommand(1);

    std::uint64_t n = 0;
    std::string oracle = "on";
    bool as_json = false;
    std::uint32_t cap_flag = 0, matching_cap_flag = 0;
    std::string matching_csv;

    auto* cmd_analyze = app.add_subcommand("analyze", "full report for a single n");
    cmd_analyze->add_option("n", n, "modulus, n >= 2")->required();
    cmd_analyze->add_option("--oracle", oracle, "compare against brute force (default on)")
        ->check(CLI::IsMember({"on", "off"}));
    cmd_analyze->add_flag("--json", as_json, "emit the report as JSON");
    cmd_analyze->add_option("--cap", cap_flag, "max vertices for graph build + BFS");
    cmd_analyze->add_option("--matching-cap", matching_cap_flag, "max vertices for the blossom oracle");
    cmd_analyze->add_option("--matching-csv", matching_csv,
                            "also write the constructed matching as CSV to this path");

    std::uint64_t lo = 0, hi = 0;
    std::string out_path;
    unsigned jobs = 0;
    auto* cmd_scan = app.add_subcommand("scan", "CSV row per n over a range");
    cmd_scan->add_option("min", lo, "first n, >= 2")->required();
    cmd_scan->add_option("max", hi, "last n")->required();
    cmd_scan->add_option("-o,--output", out_path, "CSV path (default: stdout)");
    cmd_scan->add_option("--jobs", jobs, "worker threads (0 = auto); output is identical either way");
    cmd_scan->add_option("--cap", cap_flag, "max vertices for graph build + BFS");
    cmd_scan->add_option("--matching-cap", matching_cap_flag, "max vertices for the blossom oracle");

    bool with_errata = false;
    auto* cmd_tables = app.add_subcommand("tables", "regenerate the published closed-form tables");
    cmd_tables->add_flag("--errata", with_errata, "list printed-vs-computed mismatches");

    std::string format;
    auto* cmd_export = app.add_subcommand("export", "write the graph itself to a file");
    cmd_export->add_option("n", n, "modulus, n >= 2")->required();
    cmd_export->add_option("--format", format, "dot, csv (edge list) or json")
        ->required()
        ->check(CLI::IsMember({"dot", "csv", "edge-csv", "json"}));
    cmd_export->add_option("-o,--output", out_path, "output path")->required();
    cmd_export->add_option("--cap", cap_flag, "max vertices for graph build");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    cleangraph::caps limits = cleangraph::caps_from_env();
    if (cap_flag != 0) limits.bfs_vertex_cap = cap_flag;
    if (matching_cap_flag != 0) limits.matching_vertex_cap = matching_cap_flag;

    if (*cmd_analyze) {
        cleangraph::analyze_options opts;
        opts.with_oracle = oracle == "on";
        opts.limits = limits;
        const cleangraph::analysis_report rep = cleangraph::analyze(n, opts);
        std::cout << (as_json ? cleangraph::report_to_json(rep) : cleangraph::report_to_text(rep));
        if (!matching_csv.empty()) {
            cleangraph::build_options bopts;
            bopts.vertex_cap = limits.bfs_vertex_cap;
            const cleangraph::clean_graph g = cleangraph::build_cl2(n, bopts);
            write_file(matching_csv, cleangraph::matching_to_csv(g, exportable_matching(g)));
        }
        std::cerr << "timing: closed " << rep.timings.closed_ms << " ms, build "
                  << rep.timings.build_ms << " ms, bfs " << rep.timings.bfs_ms << " ms, matching "
                  << rep.timings.matching_ms << " ms\n";
        return rep.all_agree() ? exit_ok : exit_disagreement;
    }

    if (*cmd_scan) {
        cleangraph::scan_options opts;
        opts.jobs = jobs;
        opts.limits = limits;
        const cleangraph::scan_result result = cleangraph::scan_range(lo, hi, opts);
        if (out_path.empty())
            std::cout << result.csv;
        else
            write_file(out_path, result.csv);
        return result.all_agree ? exit_ok : exit_disagreement;
    }

    if (*cmd_tables) {
        std::cout << cleangraph::render_tables(with_errata, limits);
        return exit_ok;
    }

    // export
    cleangraph::build_options bopts;
    bopts.vertex_cap = limits.bfs_vertex_cap;
    const cleangraph::clean_graph g = cleangraph::build_cl2(n, bopts);
    std::string payload;
    if (format == "dot")
        payload = cleangraph::to_dot(g);
    else if (format == "json")
        payload = cleangraph::to_json_string(g);
    else
        payload = cleangraph::to_edge_csv(g);
    write_file(out_path, payload);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const cleangraph::size_limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_resource;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: value out of range: " << e.what() << "\n";
        return exit_resource;
    } catch (const std::underflow_error& e) {
        std::cerr << "error: value out of range: " << e.what() << "\n";
        return exit_resource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cleangraph/matching.hpp"
#include "cleangraph/metrics.hpp"

namespace cleangraph {

inline constexpr std::uint32_t default_matching_cap = 5000;

struct caps {
    std::uint32_t bfs_vertex_cap = default_vertex_cap;        // graph build + BFS oracles
    std::uint32_t matching_vertex_cap = default_matching_cap; // blossom oracle
};

// CLEANGRAPH_VERTEX_CAP, when set, overrides the BFS/vertex cap.
caps caps_from_env();

struct analyze_options {
    bool with_oracle = true;  // off = closed forms only, no graph is built
    caps limits = caps_from_env();
};

struct phase_timings {
    double closed_ms = 0;
    double build_ms = 0;
    double bfs_ms = 0;
    double matching_ms = 0;
};

struct analysis_report {
    std::uint64_t n = 0;
    factorization fact;
    std::uint64_t phi = 0;
    std::uint64_t r = 0;
    wide vertex_total = 0;  // (2^k - 1) * phi, independent of any cap

    distance diameter_closed_value;
    distance wiener_closed_value;
    distance wiener_published_value;  // published model; diverges for k_total >= 3
    wide matching_closed_value = 0;
    std::optional<wiener_decomposition> decomposition_closed;  // k_total >= 2 only

    // Oracle side, present when requested and within caps.
    std::optional<std::uint64_t> edge_count;
    std::optional<distance> diameter_oracle_value;
    std::optional<distance> wiener_oracle_value;
    std::optional<wiener_decomposition> decomposition_oracle;
    std::optional<std::uint64_t> matching_oracle_value;
    std::optional<bool> perfect_matching_valid;  // constructed matching verified

    bool diameter_agree = true;   // vacuous when the oracle side is absent
    bool wiener_agree = true;
    bool decomposition_agree = true;
    bool matching_agree = true;
    bool published_matches_closed = true;

    bool all_agree() const {
        return diameter_agree && wiener_agree && decomposition_agree && matching_agree;
    }

    phase_timings timings;  // excluded from serialization and equality

    friend bool operator==(const analysis_report& a, const analysis_report& b);
};

// Requires 2 <= n; throws size_limit_error when oracles are requested and the
// vertex count exceeds the cap, std::overflow_error when a closed value
// leaves 128 bits.
analysis_report analyze(std::uint64_t n, const analyze_options& options = {});

std::string report_to_text(const analysis_report& rep);
// Deterministic JSON (sorted keys, exact decimal strings for wide values).
std::string report_to_json(const analysis_report& rep);
analysis_report report_from_json(std::string_view text);

// ---- range scan ----

struct scan_options {
    unsigned jobs = 0;  // 0 = hardware concurrency; output is identical regardless
    caps limits = caps_from_env();
};

struct scan_result {
    std::string csv;      // fixed header, one row per n ascending
    bool all_agree = true;
};

inline constexpr const char* scan_csv_header =
    "n,phi,k,m,r,vertices,wiener_closed,wiener_oracle,matching_closed,matching_oracle,"
    "diameter,agree";

// Rows for n in [lo, hi]; oracle cells are left empty above the caps.
// Requires 2 <= lo <= hi.
scan_result scan_range(std::uint64_t lo, std::uint64_t hi, const scan_options& options = {});

// ---- published tables and errata ----

struct table1_row {
    std::string shape;   // "2 p1 p2" style family label
    unsigned k_total = 0;
    two_adic_case parity = two_adic_case::odd;
    std::uint64_t r = 0;
    coefficient_row printed;  // as published
};

struct table2_entry {
    std::uint64_t n = 0;
    std::uint64_t printed_w = 0;  // as published
};

const std::vector<table1_row>& printed_table1();
const std::vector<table2_entry>& printed_table2();

struct errata_entry {
    std::string location;
    std::string printed;
    std::string computed;
    std::string oracle;  // empty when no witness is feasible

    friend bool operator==(const errata_entry&, const errata_entry&) = default;
};

// Printed-vs-regenerated diffs. Table-1 entries carry a brute-force witness
// evaluation where a witness graph is small enough, which is also where the
// k >= 3 divergence of the published model itself becomes visible.
std::vector<errata_entry> table1_errata(const caps& limits = caps_from_env());
std::vector<errata_entry> table2_errata(const caps& limits = caps_from_env());

// Regenerated tables (+ optional errata section), deterministic text.
std::string render_tables(bool with_errata, const caps& limits = caps_from_env());

}  // namespace cleangraph

#include "cleangraph/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include <json.hpp>

namespace cleangraph {

namespace {

using steady = std::chrono::steady_clock;

double ms_since(steady::time_point start) {
    return std::chrono::duration<double, std::milli>(steady::now() - start).count();
}

}  // namespace

caps caps_from_env() {
    caps c;
    if (const char* raw = std::getenv("CLEANGRAPH_VERTEX_CAP")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(raw, &end, 10);
        if (end == raw || *end != '\0' || v == 0 || v > ~std::uint32_t{0})
            throw std::invalid_argument("CLEANGRAPH_VERTEX_CAP: expected a positive integer, got \"" +
                                        std::string(raw) + "\"");
        c.bfs_vertex_cap = static_cast<std::uint32_t>(v);
    }
    return c;
}

bool operator==(const analysis_report& a, const analysis_report& b) {
    // Timings are observational, not part of the report's meaning.
    return a.n == b.n && a.fact == b.fact && a.phi == b.phi && a.r == b.r &&
           a.vertex_total == b.vertex_total &&
           a.diameter_closed_value == b.diameter_closed_value &&
           a.wiener_closed_value == b.wiener_closed_value &&
           a.wiener_published_value == b.wiener_published_value &&
           a.matching_closed_value == b.matching_closed_value &&
           a.decomposition_closed == b.decomposition_closed && a.edge_count == b.edge_count &&
           a.diameter_oracle_value == b.diameter_oracle_value &&
           a.wiener_oracle_value == b.wiener_oracle_value &&
           a.decomposition_oracle == b.decomposition_oracle &&
           a.matching_oracle_value == b.matching_oracle_value &&
           a.perfect_matching_valid == b.perfect_matching_valid &&
           a.diameter_agree == b.diameter_agree && a.wiener_agree == b.wiener_agree &&
           a.decomposition_agree == b.decomposition_agree && a.matching_agree == b.matching_agree &&
           a.published_matches_closed == b.published_matches_closed;
}

analysis_report analyze(std::uint64_t n, const analyze_options& options) {
    if (n < 2) throw std::invalid_argument("analyze: requires n >= 2");
    analysis_report rep;
    auto phase = steady::now();
    rep.n = n;
    rep.fact = factorize(n);
    rep.phi = euler_phi(rep.fact);
    rep.r = count_self_inverse_closed(rep.fact);
    rep.vertex_total = checked_mul((wide{1} << rep.fact.k_total) - 1, rep.phi);
    rep.diameter_closed_value = diameter_closed(rep.fact);
    rep.wiener_closed_value = wiener_closed(rep.fact);
    rep.wiener_published_value = wiener_closed_published(rep.fact);
    rep.matching_closed_value = matching_number_closed(rep.fact);
    if (rep.fact.k_total >= 2) rep.decomposition_closed = wiener_decomposition_closed(rep.fact);
    rep.published_matches_closed = rep.wiener_published_value == rep.wiener_closed_value;
    rep.timings.closed_ms = ms_since(phase);

    if (!options.with_oracle) return rep;

    phase = steady::now();
    if (rep.vertex_total > options.limits.bfs_vertex_cap) {
        const wide u64_max = ~std::uint64_t{0};
        throw size_limit_error(
            static_cast<std::uint64_t>(rep.vertex_total > u64_max ? u64_max : rep.vertex_total),
            options.limits.bfs_vertex_cap);
    }
    build_options bopts;
    bopts.vertex_cap = options.limits.bfs_vertex_cap;
    const clean_graph g = build_cl2(n, bopts);
    rep.edge_count = g.edge_count();
    rep.timings.build_ms = ms_since(phase);

    phase = steady::now();
    rep.diameter_oracle_value = diameter_oracle(g);
    if (rep.fact.k_total >= 2) {
        // The class sums add up to the Wiener index, so one BFS sweep serves both.
        rep.decomposition_oracle = wiener_decomposition_oracle(g);
        rep.wiener_oracle_value = distance::finite(rep.decomposition_oracle->total);
    } else {
        rep.wiener_oracle_value = wiener_bruteforce(g);
    }
    rep.timings.bfs_ms = ms_since(phase);

    phase = steady::now();
    if (g.vertex_count() <= options.limits.matching_vertex_cap) {
        rep.matching_oracle_value = matching_size(maximum_matching(g));
        if (rep.fact.k_total >= 2) {
            const auto pm = construct_perfect_matching(g);
            rep.perfect_matching_valid = verify_matching(g, pm).perfect;
        }
    }
    rep.timings.matching_ms = ms_since(phase);

    rep.diameter_agree = rep.diameter_closed_value == *rep.diameter_oracle_value;
    rep.wiener_agree = rep.wiener_closed_value == *rep.wiener_oracle_value;
    if (rep.decomposition_closed && rep.decomposition_oracle) {
        rep.decomposition_agree = *rep.decomposition_closed == *rep.decomposition_oracle;
    }
    if (rep.matching_oracle_value) {
        rep.matching_agree = rep.matching_closed_value == wide{*rep.matching_oracle_value};
    }
    return rep;
}

// ---- serialization ----

namespace {

nlohmann::json decomposition_to_json(const wiener_decomposition& d) {
    return {{"s1", to_string(d.s1)}, {"s2", to_string(d.s2)}, {"s3", to_string(d.s3)},
            {"s4", to_string(d.s4)}, {"t1", to_string(d.t1)}, {"t2", to_string(d.t2)},
            {"t3", to_string(d.t3)}, {"total", to_string(d.total)}};
}

wiener_decomposition decomposition_from_json(const nlohmann::json& j) {
    wiener_decomposition d;
    d.s1 = wide_from_string(j.at("s1").get<std::string>());
    d.s2 = wide_from_string(j.at("s2").get<std::string>());
    d.s3 = wide_from_string(j.at("s3").get<std::string>());
    d.s4 = wide_from_string(j.at("s4").get<std::string>());
    d.t1 = wide_from_string(j.at("t1").get<std::string>());
    d.t2 = wide_from_string(j.at("t2").get<std::string>());
    d.t3 = wide_from_string(j.at("t3").get<std::string>());
    d.total = wide_from_string(j.at("total").get<std::string>());
    return d;
}

}  // namespace

std::string report_to_json(const analysis_report& rep) {
    nlohmann::json j;
    j["n"] = rep.n;
    auto& factors = j["factorization"] = nlohmann::json::array();
    for (const auto& pp : rep.fact.factors) factors.push_back({pp.p, pp.exponent});
    j["phi"] = rep.phi;
    j["k_total"] = rep.fact.k_total;
    j["k_odd"] = rep.fact.k_odd;
    j["m"] = rep.fact.m;
    j["r"] = rep.r;
    j["vertices"] = to_string(rep.vertex_total);
    j["edges"] = rep.edge_count ? nlohmann::json(*rep.edge_count) : nlohmann::json();
    j["diameter"] = {{"closed", to_string(rep.diameter_closed_value)},
                     {"oracle", rep.diameter_oracle_value
                                    ? nlohmann::json(to_string(*rep.diameter_oracle_value))
                                    : nlohmann::json()}};
    j["wiener"] = {{"closed", to_string(rep.wiener_closed_value)},
                   {"published", to_string(rep.wiener_published_value)},
                   {"oracle", rep.wiener_oracle_value
                                  ? nlohmann::json(to_string(*rep.wiener_oracle_value))
                                  : nlohmann::json()}};
    j["decomposition"] = {
        {"closed", rep.decomposition_closed ? decomposition_to_json(*rep.decomposition_closed)
                                            : nlohmann::json()},
        {"oracle", rep.decomposition_oracle ? decomposition_to_json(*rep.decomposition_oracle)
                                            : nlohmann::json()}};
    j["matching"] = {{"closed", to_string(rep.matching_closed_value)},
                     {"oracle", rep.matching_oracle_value ? nlohmann::json(*rep.matching_oracle_value)
                                                          : nlohmann::json()},
                     {"perfect_construction_valid",
                      rep.perfect_matching_valid ? nlohmann::json(*rep.perfect_matching_valid)
                                                 : nlohmann::json()}};
    j["agreement"] = {{"diameter", rep.diameter_agree},
                      {"wiener", rep.wiener_agree},
                      {"decomposition", rep.decomposition_agree},
                      {"matching", rep.matching_agree},
                      {"published_matches_closed", rep.published_matches_closed},
                      {"all", rep.all_agree()}};
    return j.dump(2) + "\n";
}

analysis_report report_from_json(std::string_view text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    analysis_report rep;
    rep.n = j.at("n").get<std::uint64_t>();
    rep.fact = factorize(rep.n);
    // The factor list is redundant with n; verify instead of trusting it.
    const auto& factors = j.at("factorization");
    if (factors.size() != rep.fact.factors.size())
        throw std::runtime_error("report json: factorization does not match n");
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i][0].get<std::uint64_t>() != rep.fact.factors[i].p ||
            factors[i][1].get<unsigned>() != rep.fact.factors[i].exponent)
            throw std::runtime_error("report json: factorization does not match n");
    }
    rep.phi = j.at("phi").get<std::uint64_t>();
    rep.r = j.at("r").get<std::uint64_t>();
    rep.vertex_total = wide_from_string(j.at("vertices").get<std::string>());
    if (!j.at("edges").is_null()) rep.edge_count = j.at("edges").get<std::uint64_t>();
    rep.diameter_closed_value = distance_from_string(j.at("diameter").at("closed").get<std::string>());
    if (!j.at("diameter").at("oracle").is_null())
        rep.diameter_oracle_value =
            distance_from_string(j.at("diameter").at("oracle").get<std::string>());
    rep.wiener_closed_value = distance_from_string(j.at("wiener").at("closed").get<std::string>());
    rep.wiener_published_value =
        distance_from_string(j.at("wiener").at("published").get<std::string>());
    if (!j.at("wiener").at("oracle").is_null())
        rep.wiener_oracle_value = distance_from_string(j.at("wiener").at("oracle").get<std::string>());
    if (!j.at("decomposition").at("closed").is_null())
        rep.decomposition_closed = decomposition_from_json(j.at("decomposition").at("closed"));
    if (!j.at("decomposition").at("oracle").is_null())
        rep.decomposition_oracle = decomposition_from_json(j.at("decomposition").at("oracle"));
    rep.matching_closed_value = wide_from_string(j.at("matching").at("closed").get<std::string>());
    if (!j.at("matching").at("oracle").is_null())
        rep.matching_oracle_value = j.at("matching").at("oracle").get<std::uint64_t>();
    if (!j.at("matching").at("perfect_construction_valid").is_null())
        rep.perfect_matching_valid = j.at("matching").at("perfect_construction_valid").get<bool>();
    rep.diameter_agree = j.at("agreement").at("diameter").get<bool>();
    rep.wiener_agree = j.at("agreement").at("wiener").get<bool>();
    rep.decomposition_agree = j.at("agreement").at("decomposition").get<bool>();
    rep.matching_agree = j.at("agreement").at("matching").get<bool>();
    rep.published_matches_closed = j.at("agreement").at("published_matches_closed").get<bool>();
    return rep;
}

namespace {

std::string decomposition_line(const wiener_decomposition& d) {
    return "s1 = " + to_string(d.s1) + ", s2 = " + to_string(d.s2) + ", s3 = " + to_string(d.s3) +
           ", s4 = " + to_string(d.s4) + " (t1 = " + to_string(d.t1) + ", t2 = " + to_string(d.t2) +
           ", t3 = " + to_string(d.t3) + "), total = " + to_string(d.total);
}

std::string agree_tag(bool agree) { return agree ? "  [agree]" : "  [DISAGREE]"; }

}  // namespace

std::string report_to_text(const analysis_report& rep) {
    std::string out;
    out += "n = " + std::to_string(rep.n) + " = " + to_string(rep.fact) + "\n";
    out += "phi = " + std::to_string(rep.phi) + "   k_total = " + std::to_string(rep.fact.k_total) +
           " (k_odd = " + std::to_string(rep.fact.k_odd) + ", m = " + std::to_string(rep.fact.m) +
           ")   r = " + std::to_string(rep.r) + "\n";
    out += "vertices = " + to_string(rep.vertex_total);
    if (rep.edge_count) out += ", edges = " + std::to_string(*rep.edge_count);
    out += "\n";
    if (rep.fact.k_total < 2) {
        out += "note: k_total = 1, vertex (1,1) is isolated for n >= 3; "
               "distance closed forms report INF\n";
    }
    out += "diameter:  closed = " + to_string(rep.diameter_closed_value);
    if (rep.diameter_oracle_value) {
        out += ", oracle = " + to_string(*rep.diameter_oracle_value) + agree_tag(rep.diameter_agree);
    }
    out += "\n";
    out += "wiener:    closed = " + to_string(rep.wiener_closed_value);
    if (rep.wiener_oracle_value) {
        out += ", oracle = " + to_string(*rep.wiener_oracle_value) + agree_tag(rep.wiener_agree);
    }
    out += "\n";
    if (rep.decomposition_closed) {
        out += "  closed decomposition: " + decomposition_line(*rep.decomposition_closed) + "\n";
    }
    if (rep.decomposition_oracle) {
        out += "  oracle decomposition: " + decomposition_line(*rep.decomposition_oracle) +
               agree_tag(rep.decomposition_agree) + "\n";
    }
    out += "matching:  closed = " + to_string(rep.matching_closed_value);
    if (rep.matching_oracle_value) {
        out += ", oracle = " + std::to_string(*rep.matching_oracle_value) +
               agree_tag(rep.matching_agree);
    }
    out += "\n";
    if (rep.perfect_matching_valid) {
        out += std::string("  constructed perfect matching: ") +
               (*rep.perfect_matching_valid ? "valid and perfect" : "INVALID") + ", size " +
               to_string(rep.matching_closed_value) + "\n";
    }
    out += "published closed form: " + to_string(rep.wiener_published_value);
    if (rep.published_matches_closed) {
        out += "  [matches the exact closed form]\n";
    } else {
        out += "  [DIVERGES from the exact closed form " + to_string(rep.wiener_closed_value) +
               "; the published coefficients undercount annihilating idempotent pairs for "
               "k_total >= 3]\n";
    }
    out += std::string("result: ") + (rep.all_agree() ? "full agreement" : "DISAGREEMENT") + "\n";
    return out;
}

// ---- scan ----

namespace {

std::string scan_row(std::uint64_t n, const caps& limits) {
    const factorization fact = factorize(n);
    const std::uint64_t phi = euler_phi(fact);
    const std::uint64_t r = count_self_inverse_closed(fact);
    const wide vertices = checked_mul((wide{1} << fact.k_total) - 1, phi);
    const distance closed_w = wiener_closed(fact);
    const wide closed_mu = matching_number_closed(fact);

    std::optional<clean_graph> g;
    if (vertices <= limits.bfs_vertex_cap) {
        build_options bopts;
        bopts.vertex_cap = limits.bfs_vertex_cap;
        g.emplace(build_cl2(n, bopts));
    }
    std::optional<distance> oracle_w, oracle_diam;
    std::optional<std::uint64_t> oracle_mu;
    if (g) {
        oracle_w = wiener_bruteforce(*g);
        oracle_diam = diameter_oracle(*g);
        if (g->vertex_count() <= limits.matching_vertex_cap) {
            oracle_mu = matching_size(maximum_matching(*g));
        }
    }

    bool agree = true;
    if (oracle_w) agree &= closed_w == *oracle_w;
    if (oracle_diam) agree &= diameter_closed(fact) == *oracle_diam;
    if (oracle_mu) agree &= closed_mu == wide{*oracle_mu};

    std::string row = std::to_string(n) + "," + std::to_string(phi) + "," +
                      std::to_string(fact.k_total) + "," + std::to_string(fact.m) + "," +
                      std::to_string(r) + "," + to_string(vertices) + "," + to_string(closed_w) +
                      ",";
    if (oracle_w) row += to_string(*oracle_w);
    row += "," + to_string(closed_mu) + ",";
    if (oracle_mu) row += std::to_string(*oracle_mu);
    row += ",";
    row += oracle_diam ? to_string(*oracle_diam) : to_string(diameter_closed(fact));
    row += ",";
    row += agree ? "1" : "0";
    row += "\n";
    return row;
}

}  // namespace

scan_result scan_range(std::uint64_t lo, std::uint64_t hi, const scan_options& options) {
    if (lo < 2 || hi < lo) throw std::invalid_argument("scan_range: requires 2 <= lo <= hi");
    const std::uint64_t count = hi - lo + 1;
    unsigned jobs = options.jobs != 0 ? options.jobs : std::thread::hardware_concurrency();
    jobs = std::max(1u, std::min<unsigned>(jobs, 64));
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, count));

    std::vector<std::string> rows(count);
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        for (;;) {
            const std::uint64_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                rows[i] = scan_row(lo + i, options.limits);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    scan_result result;
    result.csv = std::string(scan_csv_header) + "\n";
    for (const auto& row : rows) {
        result.csv += row;
        // agree is the last CSV field: "...,0\n" or "...,1\n"
        if (row.size() >= 2 && row[row.size() - 2] == '0') result.all_agree = false;
    }
    return result;
}

// ---- published tables and errata ----

const std::vector<table1_row>& printed_table1() {
    static const std::vector<table1_row> rows = {
        {"2 p1^a1", 2, two_adic_case::m1, 2, {17, 15, 8}},
        {"2 p1^a1 p2^a2", 3, two_adic_case::m1, 4, {29, 59, 32}},
        {"2 p1^a1 p2^a2 p3^a3", 4, two_adic_case::m1, 8, {181, 243, 128}},
        {"2 p1^a1 p2^a2 p3^a3 p4^a4", 5, two_adic_case::m1, 16, {869, 995, 512}},
        {"2 p1^a1 p2^a2 p3^a3 p4^a4 p5^a5", 6, two_adic_case::m1, 32, {3781, 4035, 2048}},
        {"p1^a1 p2^a2", 2, two_adic_case::odd, 4, {1, 15, 16}},
        {"p1^a1 p2^a2 p3^a3", 3, two_adic_case::odd, 8, {29, 59, 64}},
        {"p1^a1 p2^a2 p3^a3 p4^a4", 4, two_adic_case::odd, 16, {181, 243, 256}},
        {"p1^a1 p2^a2 p3^a3 p4^a4 p5^a5", 5, two_adic_case::odd, 32, {869, 995, 1024}},
        {"p1^a1 p2^a2 p3^a3 p4^a4 p5^a5 p6^a6", 6, two_adic_case::odd, 64, {3781, 4035, 4096}},
    };
    return rows;
}

const std::vector<table2_entry>& printed_table2() {
    static const std::vector<table2_entry> rows = {
        {6, 23},  {10, 110},  {12, 110}, {14, 265},  {18, 265},
        {20, 488}, {22, 779}, {24, 488}, {26, 1138}, {36, 1138},
    };
    return rows;
}

namespace {

// Smallest graph of each table-1 family that an all-pairs BFS can check in
// test time; 0 = none small enough.
std::uint64_t witness_for(unsigned k, two_adic_case parity) {
    if (parity == two_adic_case::m1) {
        if (k == 2) return 6;
        if (k == 3) return 30;
        if (k == 4) return 210;
        return 0;  // 2*3*5*7*11 already has 14880 vertices
    }
    if (k == 2) return 15;
    if (k == 3) return 105;
    return 0;  // 3*5*7*11 already has 7200 vertices
}

std::string row_polynomial(const coefficient_row& row) {
    return "(" + to_string(row.a) + " x^2 - " + to_string(row.b) + " x + " + to_string(row.c) +
           ")/2";
}

// Printed rows can be wrong enough to go negative (k=2 odd gives -20 at n=15),
// so witness evaluation is signed.
std::string signed_row_value(const coefficient_row& row, std::uint64_t phi) {
    const auto x = static_cast<__int128>(phi);
    const __int128 v =
        (static_cast<__int128>(row.a) * x * x - static_cast<__int128>(row.b) * x +
         static_cast<__int128>(row.c)) /
        2;
    if (v < 0) return "-" + to_string(static_cast<wide>(-v));
    return to_string(static_cast<wide>(v));
}

}  // namespace

std::vector<errata_entry> table1_errata(const caps& limits) {
    std::vector<errata_entry> entries;
    for (const auto& row : printed_table1()) {
        const coefficient_row regen = coefficient_table(row.k_total, row.parity);
        if (regen == row.printed) continue;
        errata_entry entry;
        entry.location = "table1 " + row.shape + " (k=" + std::to_string(row.k_total) + ")";
        entry.printed = row_polynomial(row.printed);
        entry.computed = row_polynomial(regen);
        const std::uint64_t witness = witness_for(row.k_total, row.parity);
        if (witness != 0) {
            const factorization wf = factorize(witness);
            const wide vertices = ((wide{1} << wf.k_total) - 1) * euler_phi(wf);
            if (vertices <= limits.bfs_vertex_cap) {
                build_options bopts;
                bopts.vertex_cap = limits.bfs_vertex_cap;
                const distance actual = wiener_bruteforce(build_cl2(witness, bopts));
                entry.oracle = "n=" + std::to_string(witness) + ": actual W = " +
                               to_string(actual) + "; printed form gives " +
                               signed_row_value(row.printed, euler_phi(wf)) +
                               ", recomputed form " + signed_row_value(regen, euler_phi(wf));
            }
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::vector<errata_entry> table2_errata(const caps& limits) {
    std::vector<errata_entry> entries;
    for (const auto& row : printed_table2()) {
        const factorization fact = factorize(row.n);
        const wide computed = wiener_closed(fact).value();
        if (computed == wide{row.printed_w}) continue;
        errata_entry entry;
        entry.location = "table2 n=" + std::to_string(row.n);
        entry.printed = std::to_string(row.printed_w);
        entry.computed = to_string(computed);
        const wide vertices = ((wide{1} << fact.k_total) - 1) * euler_phi(fact);
        if (vertices <= limits.bfs_vertex_cap) {
            build_options bopts;
            bopts.vertex_cap = limits.bfs_vertex_cap;
            entry.oracle = to_string(wiener_bruteforce(build_cl2(row.n, bopts)));
        }
        entries.push_back(std::move(entry));
    }
    return entries;
}

std::string render_tables(bool with_errata, const caps& limits) {
    std::string out;
    out += "table 1: closed forms W = (a x^2 - b x + c)/2, x = phi(n)\n";
    out += "  family                                k  r    printed                 regenerated     "
           "        exact\n";
    for (const auto& row : printed_table1()) {
        const coefficient_row regen = coefficient_table(row.k_total, row.parity);
        const coefficient_row exact = coefficient_table_exact(row.k_total, row.parity);
        auto triple = [](const coefficient_row& r) {
            return "(" + to_string(r.a) + ", " + to_string(r.b) + ", " + to_string(r.c) + ")";
        };
        std::string family = row.shape;
        family.resize(36, ' ');
        std::string printed = triple(row.printed);
        printed.resize(22, ' ');
        std::string regen_s = triple(regen);
        regen_s.resize(22, ' ');
        out += "  " + family + "  " + std::to_string(row.k_total) + "  " +
               std::to_string(row.r) + (row.r < 10 ? "  " : " ") + "  " + printed + "  " +
               regen_s + "  " + triple(exact) + "\n";
    }
    out += "\ntable 2: Wiener index values\n";
    out += "  n   printed  computed\n";
    for (const auto& row : printed_table2()) {
        std::string n_s = std::to_string(row.n);
        n_s.resize(3, ' ');
        std::string printed = std::to_string(row.printed_w);
        printed.resize(7, ' ');
        out += "  " + n_s + " " + printed + "  " + to_string(wiener_closed(factorize(row.n)).value()) +
               "\n";
    }
    if (with_errata) {
        out += "\nerrata (printed vs regenerated):\n";
        for (const auto& e : table1_errata(limits)) {
            out += "  " + e.location + "\n    printed:  " + e.printed + "\n    computed: " +
                   e.computed + "\n";
            if (!e.oracle.empty()) out += "    oracle:   " + e.oracle + "\n";
        }
        for (const auto& e : table2_errata(limits)) {
            out += "  " + e.location + "\n    printed:  " + e.printed + "\n    computed: " +
                   e.computed + "\n";
            if (!e.oracle.empty()) out += "    oracle:   " + e.oracle + "\n";
        }
    }
    return out;
}

}  // namespace cleangraph

#include "cleangraph/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace cleangraph {

bool clean_graph::adjacent(std::uint32_t a, std::uint32_t b) const {
    if (a == b) return false;
    if (!adj_bits_.empty()) {
        const std::size_t bit = static_cast<std::size_t>(a) * bit_stride_ + b;
        return (adj_bits_[bit >> 6] >> (bit & 63)) & 1;
    }
    // Same O(1) answer algebraically: blocks annihilate, or the units invert.
    return zero_product(block_of_[a], block_of_[b]) ||
           unit_slot(b) == inverse_slot_[unit_slot(a)];
}

bool operator==(const clean_graph& a, const clean_graph& b) {
    return a.n() == b.n() && a.has_zero_block_ == b.has_zero_block_ &&
           a.vertices_ == b.vertices_ && a.blocks_ == b.blocks_ &&
           a.adj_offsets_ == b.adj_offsets_ && a.adj_targets_ == b.adj_targets_;
}

clean_graph build_cl2(std::uint64_t n, const build_options& options) {
    if (n < 2) throw std::invalid_argument("build_cl2: requires n >= 2");
    clean_graph g;
    g.ring_ = make_ring_data(factorize(n));
    g.has_zero_block_ = options.include_zero_block;
    const auto& units = g.ring_.units;
    const std::uint64_t phi = g.ring_.phi;
    g.phi_ = static_cast<std::uint32_t>(phi);

    std::vector<std::uint64_t> block_idems;
    for (std::uint64_t e : g.ring_.idempotents) {
        if (e != 0 || options.include_zero_block) block_idems.push_back(e);
    }
    const std::size_t nblocks = block_idems.size();
    const auto total_wide = static_cast<unsigned __int128>(nblocks) * phi;
    if (total_wide > options.vertex_cap) {
        constexpr auto u64_max = ~std::uint64_t{0};
        throw size_limit_error(
            total_wide > u64_max ? u64_max : static_cast<std::uint64_t>(total_wide),
            options.vertex_cap);
    }
    const std::uint64_t total = static_cast<std::uint64_t>(total_wide);

    g.vertices_.reserve(total);
    g.block_of_.reserve(total);
    for (std::size_t b = 0; b < nblocks; ++b) {
        g.blocks_.push_back({block_idems[b], static_cast<std::uint32_t>(b * phi),
                             static_cast<std::uint32_t>((b + 1) * phi)});
        for (std::uint64_t u : units) {
            g.vertices_.push_back({block_idems[b], u});
            g.block_of_.push_back(static_cast<std::uint32_t>(b));
        }
    }

    // Unit slot -> slot of the inverse unit (units are sorted, binary search).
    g.inverse_slot_.resize(phi);
    for (std::size_t s = 0; s < units.size(); ++s) {
        const std::uint64_t inv = mod_inverse(units[s], n);
        const auto it = std::lower_bound(units.begin(), units.end(), inv);
        g.inverse_slot_[s] = static_cast<std::uint32_t>(it - units.begin());
    }

    g.zero_product_.assign(nblocks * nblocks, 0);
    for (std::size_t a = 0; a < nblocks; ++a) {
        for (std::size_t b = 0; b < nblocks; ++b) {
            g.zero_product_[a * nblocks + b] =
                mul_mod(block_idems[a] % n, block_idems[b] % n, n) == 0;
        }
    }

    // Degrees are block-structured: a whole block per annihilating partner,
    // one inverse vertex in every other block (minus self when u = u^-1).
    const std::uint32_t V = g.vertex_count();
    g.adj_offsets_.assign(V + 1, 0);
    for (std::uint32_t v = 0; v < V; ++v) {
        const std::uint32_t b = g.block_of_[v];
        std::uint64_t deg = 0;
        for (std::size_t c = 0; c < nblocks; ++c) {
            if (g.zero_product_[b * nblocks + c]) {
                deg += phi - (c == b ? 1 : 0);
            } else {
                const std::uint32_t slot = g.unit_slot(v);
                deg += !(c == b && g.inverse_slot_[slot] == slot);
            }
        }
        g.adj_offsets_[v + 1] = g.adj_offsets_[v] + deg;
    }
    g.edge_count_ = g.adj_offsets_[V] / 2;

    g.adj_targets_.resize(g.adj_offsets_[V]);
    const bool build_bits = V <= 4096;
    if (build_bits) {
        g.bit_stride_ = V;
        g.adj_bits_.assign((static_cast<std::size_t>(V) * V + 63) / 64, 0);
    }
    auto set_bit = [&](std::uint32_t a, std::uint32_t b) {
        const std::size_t bit = static_cast<std::size_t>(a) * V + b;
        g.adj_bits_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
    };
    for (std::uint32_t v = 0; v < V; ++v) {
        const std::uint32_t b = g.block_of_[v];
        const std::uint32_t inv = g.inverse_slot_[g.unit_slot(v)];
        std::uint64_t out = g.adj_offsets_[v];
        // Ascending block loop + contiguous blocks = sorted neighbor list.
        for (std::size_t c = 0; c < nblocks; ++c) {
            const std::uint32_t base = static_cast<std::uint32_t>(c * phi);
            if (g.zero_product_[b * nblocks + c]) {
                for (std::uint32_t t = base; t < base + phi; ++t) {
                    if (t == v) continue;
                    g.adj_targets_[out++] = t;
                    if (build_bits) set_bit(v, t);
                }
            } else {
                const std::uint32_t t = base + inv;
                if (t == v) continue;
                g.adj_targets_[out++] = t;
                if (build_bits) set_bit(v, t);
            }
        }
    }
    return g;
}

std::string to_dot(const clean_graph& g) {
    std::string out = "graph cl2_" + std::to_string(g.n()) + " {\n";
    const auto& vs = g.vertices();
    for (std::uint32_t i = 0; i < g.vertex_count(); ++i) {
        out += "  v" + std::to_string(i) + " [label=\"(" + std::to_string(vs[i].e) + "," +
               std::to_string(vs[i].u) + ")\"];\n";
    }
    for (std::uint32_t i = 0; i < g.vertex_count(); ++i) {
        for (std::uint32_t j : g.neighbors(i)) {
            if (j > i) out += "  v" + std::to_string(i) + " -- v" + std::to_string(j) + ";\n";
        }
    }
    out += "}\n";
    return out;
}

std::string to_edge_csv(const clean_graph& g) {
    std::string out = "e1,u1,e2,u2\n";
    const auto& vs = g.vertices();
    for (std::uint32_t i = 0; i < g.vertex_count(); ++i) {
        for (std::uint32_t j : g.neighbors(i)) {
            if (j > i) {
                out += std::to_string(vs[i].e) + "," + std::to_string(vs[i].u) + "," +
                       std::to_string(vs[j].e) + "," + std::to_string(vs[j].u) + "\n";
            }
        }
    }
    return out;
}

std::string to_json_string(const clean_graph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    j["includes_zero_block"] = g.has_zero_block();
    auto& vs = j["vertices"] = nlohmann::json::array();
    for (const auto& v : g.vertices()) vs.push_back({v.e, v.u});
    auto& bs = j["blocks"] = nlohmann::json::array();
    for (const auto& b : g.blocks()) {
        bs.push_back({{"e", b.e}, {"begin", b.begin}, {"end", b.end}});
    }
    auto& es = j["edges"] = nlohmann::json::array();
    for (std::uint32_t i = 0; i < g.vertex_count(); ++i) {
        for (std::uint32_t t : g.neighbors(i)) {
            if (t > i) es.push_back({i, t});
        }
    }
    return j.dump(2) + "\n";
}

clean_graph graph_from_json_string(std::string_view text, std::uint32_t vertex_cap) {
    nlohmann::json j = nlohmann::json::parse(text);
    build_options opts;
    opts.include_zero_block = j.at("includes_zero_block").get<bool>();
    opts.vertex_cap = vertex_cap;
    clean_graph g = build_cl2(j.at("n").get<std::uint64_t>(), opts);

    const auto& vs = j.at("vertices");
    if (vs.size() != g.vertex_count())
        throw std::runtime_error("graph json: vertex count does not match n");
    for (std::uint32_t i = 0; i < g.vertex_count(); ++i) {
        if (vs[i][0].get<std::uint64_t>() != g.vertices()[i].e ||
            vs[i][1].get<std::uint64_t>() != g.vertices()[i].u)
            throw std::runtime_error("graph json: vertex list does not match n");
    }
    const auto& bs = j.at("blocks");
    if (bs.size() != g.blocks().size())
        throw std::runtime_error("graph json: block count does not match n");
    for (std::size_t b = 0; b < bs.size(); ++b) {
        if (bs[b].at("e").get<std::uint64_t>() != g.blocks()[b].e ||
            bs[b].at("begin").get<std::uint32_t>() != g.blocks()[b].begin ||
            bs[b].at("end").get<std::uint32_t>() != g.blocks()[b].end)
            throw std::runtime_error("graph json: block list does not match n");
    }
    const auto& es = j.at("edges");
    if (es.size() != g.edge_count())
        throw std::runtime_error("graph json: edge count does not match n");
    std::size_t idx = 0;
    for (std::uint32_t i = 0; i < g.vertex_count(); ++i) {
        for (std::uint32_t t : g.neighbors(i)) {
            if (t <= i) continue;
            if (es[idx][0].get<std::uint32_t>() != i || es[idx][1].get<std::uint32_t>() != t)
                throw std::runtime_error("graph json: edge list does not match n");
            ++idx;
        }
    }
    return g;
}

}  // namespace cleangraph

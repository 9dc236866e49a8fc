#include "cleangraph/matching.hpp"

#include <algorithm>
#include <stdexcept>

namespace cleangraph {
namespace {

// Edmonds' maximum matching with blossom contraction. `neighbors(v)` yields
// the adjacency of v; contraction is tracked through per-vertex base pointers
// rather than an explicit contracted graph.
template <class Neighbors>
class blossom_solver {
  public:
    blossom_solver(std::int32_t n, Neighbors neighbors)
        : n_(n), neighbors_(neighbors), mate_(n, -1), parent_(n), base_(n), used_(n), mark_(n) {}

    std::vector<std::int32_t> solve() {
        // Greedy seed: most of the matching falls out without augmentation.
        for (std::int32_t v = 0; v < n_; ++v) {
            if (mate_[v] != -1) continue;
            for (std::uint32_t t : neighbors_(v)) {
                const auto to = static_cast<std::int32_t>(t);
                if (mate_[to] == -1) {
                    mate_[v] = to;
                    mate_[to] = v;
                    break;
                }
            }
        }
        for (std::int32_t v = 0; v < n_; ++v) {
            if (mate_[v] != -1) continue;
            const std::int32_t leaf = find_augmenting_path(v);
            // Flip matched/unmatched along the found path.
            std::int32_t cur = leaf;
            while (cur != -1) {
                const std::int32_t prev = parent_[cur];
                const std::int32_t next = mate_[prev];
                mate_[cur] = prev;
                mate_[prev] = cur;
                cur = next;
            }
        }
        return mate_;
    }

  private:
    std::int32_t lowest_common_base(std::int32_t a, std::int32_t b) {
        std::fill(mark_.begin(), mark_.end(), false);
        for (std::int32_t cur = a;;) {
            cur = base_[cur];
            mark_[cur] = true;
            if (mate_[cur] == -1) break;
            cur = parent_[mate_[cur]];
        }
        for (std::int32_t cur = b;;) {
            cur = base_[cur];
            if (mark_[cur]) return cur;
            cur = parent_[mate_[cur]];
        }
    }

    // Walk one side of an odd cycle up to its base, absorbing every passed
    // blossom and reparenting so the cycle can be traversed both ways.
    void mark_path(std::int32_t v, std::int32_t cycle_base, std::int32_t child,
                   std::vector<char>& in_blossom) {
        while (base_[v] != cycle_base) {
            in_blossom[base_[v]] = true;
            in_blossom[base_[mate_[v]]] = true;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    std::int32_t find_augmenting_path(std::int32_t root) {
        std::fill(used_.begin(), used_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (std::int32_t i = 0; i < n_; ++i) base_[i] = i;
        std::vector<std::int32_t> queue{root};
        used_[root] = true;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::int32_t v = queue[head];
            for (std::uint32_t t : neighbors_(v)) {
                const auto to = static_cast<std::int32_t>(t);
                if (base_[v] == base_[to] || mate_[v] == to) continue;
                if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
                    // Two even-level vertices meet: contract the odd cycle.
                    const std::int32_t cycle_base = lowest_common_base(v, to);
                    std::vector<char> in_blossom(n_, false);
                    mark_path(v, cycle_base, to, in_blossom);
                    mark_path(to, cycle_base, v, in_blossom);
                    for (std::int32_t i = 0; i < n_; ++i) {
                        if (in_blossom[base_[i]]) {
                            base_[i] = cycle_base;
                            if (!used_[i]) {
                                used_[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (mate_[to] == -1) return to;  // augmenting path reaches a free vertex
                    used_[mate_[to]] = true;
                    queue.push_back(mate_[to]);
                }
            }
        }
        return -1;
    }

    std::int32_t n_;
    Neighbors neighbors_;
    std::vector<std::int32_t> mate_;
    std::vector<std::int32_t> parent_;
    std::vector<std::int32_t> base_;
    std::vector<char> used_;
    std::vector<bool> mark_;
};

}  // namespace

std::vector<std::int32_t> maximum_matching(const std::vector<std::vector<std::uint32_t>>& adj) {
    auto neighbors = [&adj](std::int32_t v) -> const std::vector<std::uint32_t>& {
        return adj[static_cast<std::size_t>(v)];
    };
    return blossom_solver<decltype(neighbors)>(static_cast<std::int32_t>(adj.size()), neighbors)
        .solve();
}

std::vector<std::int32_t> maximum_matching(const clean_graph& g) {
    auto neighbors = [&g](std::int32_t v) {
        return g.neighbors(static_cast<std::uint32_t>(v));
    };
    return blossom_solver<decltype(neighbors)>(static_cast<std::int32_t>(g.vertex_count()),
                                               neighbors)
        .solve();
}

wide matching_number_closed(const factorization& f) {
    if (f.n < 2) throw std::domain_error("matching_number_closed: requires n >= 2");
    const wide phi = euler_phi(f);
    if (f.k_total < 2) return (phi - count_self_inverse_closed(f)) / 2;
    return checked_mul(phi, (wide{1} << f.k_total) - 1) / 2;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> construct_perfect_matching(
    const clean_graph& g) {
    if (g.has_zero_block())
        throw std::domain_error("construct_perfect_matching: zero block not supported");
    const auto& ring = g.ring();
    if (ring.fact.k_total < 2)
        throw std::domain_error("construct_perfect_matching: requires k_total >= 2");

    const std::uint32_t phi = static_cast<std::uint32_t>(ring.phi);
    const std::uint32_t nblocks = static_cast<std::uint32_t>(g.blocks().size());
    const auto& units = ring.units;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> matched;
    matched.reserve(static_cast<std::size_t>(phi) * nblocks / 2);
    auto add = [&matched](std::uint32_t a, std::uint32_t b) {
        matched.emplace_back(std::min(a, b), std::max(a, b));
    };

    // Step 1: inside every block, pair each unit with its distinct inverse.
    for (std::uint32_t b = 0; b < nblocks; ++b) {
        for (std::uint32_t s = 0; s < phi; ++s) {
            const std::uint32_t inv = g.inverse_slot(s);
            if (inv > s) add(b * phi + s, b * phi + inv);
        }
    }

    // Self-inverse units, ascending; slot of each in the sorted unit list.
    std::vector<std::uint32_t> self_slots;
    for (std::uint32_t s = 0; s < phi; ++s) {
        if (g.inverse_slot(s) == s) self_slots.push_back(s);
    }

    // Step 2: consecutive self-inverse units (u, w) bridge the complement
    // blocks e* and 1 - e*, where e* is the smallest nontrivial idempotent.
    // (u, w) is an edge there because e*(1 - e*) = 0.
    const std::uint64_t e_star = g.blocks()[1].e;
    const std::uint64_t e_comp = ring.fact.n + 1 - e_star;
    const auto block_index = [&g](std::uint64_t e) {
        for (std::uint32_t b = 0; b < g.blocks().size(); ++b) {
            if (g.blocks()[b].e == e) return b;
        }
        throw std::logic_error("construct_perfect_matching: complement block missing");
    };
    const std::uint32_t b_star = 1;
    const std::uint32_t b_comp = block_index(e_comp);

    // assigned[i] = block that step 2 consumed for self-inverse unit i.
    std::vector<std::uint32_t> assigned(self_slots.size());
    for (std::size_t i = 0; i + 1 < self_slots.size(); i += 2) {
        add(b_star * phi + self_slots[i], b_comp * phi + self_slots[i + 1]);
        assigned[i] = b_star;
        assigned[i + 1] = b_comp;
    }

    // Step 3: for each self-inverse unit u, the vertices (e, u) over the
    // remaining blocks form a clique (u * u = 1); pair consecutive blocks
    // ascending. 2^k - 2 of them remain, an even number.
    for (std::size_t i = 0; i < self_slots.size(); ++i) {
        const std::uint32_t slot = self_slots[i];
        std::vector<std::uint32_t> rest;
        rest.reserve(nblocks - 1);
        for (std::uint32_t b = 0; b < nblocks; ++b) {
            if (b != assigned[i]) rest.push_back(b);
        }
        for (std::size_t j = 0; j + 1 < rest.size(); j += 2) {
            add(rest[j] * phi + slot, rest[j + 1] * phi + slot);
        }
    }

    std::sort(matched.begin(), matched.end());
    return matched;
}

matching_check verify_matching(const clean_graph& g,
                               const std::vector<std::pair<std::uint32_t, std::uint32_t>>& m) {
    matching_check check;
    check.edges_ok = true;
    check.disjoint = true;
    check.size = m.size();
    std::vector<char> seen(g.vertex_count(), 0);
    for (const auto& [a, b] : m) {
        if (a >= g.vertex_count() || b >= g.vertex_count() || !g.adjacent(a, b)) {
            check.edges_ok = false;
            if (check.detail.empty())
                check.detail = "pair (" + std::to_string(a) + ", " + std::to_string(b) +
                               ") is not an edge";
        }
        for (std::uint32_t v : {a, b}) {
            if (v < g.vertex_count() && seen[v]++) {
                check.disjoint = false;
                if (check.detail.empty())
                    check.detail = "vertex " + std::to_string(v) + " matched twice";
            }
        }
    }
    check.perfect = check.valid() && 2 * m.size() == g.vertex_count();
    return check;
}

std::string matching_to_csv(const clean_graph& g,
                            const std::vector<std::pair<std::uint32_t, std::uint32_t>>& m) {
    std::string out = "e1,u1,e2,u2\n";
    const auto& vs = g.vertices();
    for (const auto& [a, b] : m) {
        out += std::to_string(vs[a].e) + "," + std::to_string(vs[a].u) + "," +
               std::to_string(vs[b].e) + "," + std::to_string(vs[b].u) + "\n";
    }
    return out;
}

}  // namespace cleangraph

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cleangraph/graph.hpp"
#include "cleangraph/wide.hpp"

namespace cleangraph {

// Maximum matching on an arbitrary undirected graph: Edmonds' blossom
// contraction over a greedy seed, O(V^3). Returns mate[v] (-1 = unmatched).
// The adjacency-list overload exists so tests can drive it with graphs far
// outside the clean family.
std::vector<std::int32_t> maximum_matching(const std::vector<std::vector<std::uint32_t>>& adj);
std::vector<std::int32_t> maximum_matching(const clean_graph& g);

inline std::uint64_t matching_size(const std::vector<std::int32_t>& mate) {
    std::uint64_t matched = 0;
    for (auto m : mate) matched += (m >= 0);
    return matched / 2;
}

// Closed matching number: phi(n) * (2^k - 1) / 2 for k_total >= 2 (the graph
// has a perfect matching), (phi(n) - r) / 2 for k_total = 1 (only the
// non-self-inverse unit pairs inside V1 carry edges). Requires n >= 2.
wide matching_number_closed(const factorization& f);

// Deterministic perfect matching for k_total >= 2, no zero block, as vertex
// index pairs (a, b), a < b:
//   1. inside every block, match (e, u)-(e, u^-1) for each non-self-inverse
//      inverse pair;
//   2. with e* the smallest nontrivial idempotent, take the self-inverse
//      units ascending in consecutive pairs (u, w) and match (e*, u)-(1-e*, w);
//   3. for each self-inverse unit, the blocks it is still unmatched in form a
//      clique on that unit; match them in consecutive ascending-e pairs.
// Sizes: (2^k - 1)(phi - r)/2 + r/2 + r(2^k - 2)/2 = phi (2^k - 1) / 2.
std::vector<std::pair<std::uint32_t, std::uint32_t>> construct_perfect_matching(
    const clean_graph& g);

struct matching_check {
    bool edges_ok = false;     // every pair is an actual edge
    bool disjoint = false;     // no vertex is used twice
    bool perfect = false;      // every vertex is covered
    std::uint64_t size = 0;
    std::string detail;        // first violation, empty when valid

    bool valid() const { return edges_ok && disjoint; }
};

matching_check verify_matching(const clean_graph& g,
                               const std::vector<std::pair<std::uint32_t, std::uint32_t>>& m);

// "e1,u1,e2,u2" rows, one matched pair per line, deterministic order.
std::string matching_to_csv(const clean_graph& g,
                            const std::vector<std::pair<std::uint32_t, std::uint32_t>>& m);

}  // namespace cleangraph

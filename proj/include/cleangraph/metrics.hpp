#pragma once

#include <cstdint>
#include <vector>

#include "cleangraph/distance.hpp"
#include "cleangraph/graph.hpp"

namespace cleangraph {

// ---- distances ----

// Closed-form distance between two vertices when k_total >= 2 (the connected
// family): 0 for equal vertices, 1 when e*f = 0 or u*v = 1, 3 when e = f = 1
// (and not adjacent), else 2. Throws std::domain_error when k_total < 2.
distance distance_closed(const vertex& v, const vertex& w, const factorization& f);

// Single-source BFS; -1 marks unreachable. The raw form is the oracle
// workhorse, the wrapped form the public one.
std::vector<std::int32_t> bfs_raw(const clean_graph& g, std::uint32_t source);
std::vector<distance> bfs_distances(const clean_graph& g, std::uint32_t source);

distance diameter_oracle(const clean_graph& g);      // infinite iff disconnected
distance diameter_closed(const factorization& f);    // infinite when k_total < 2, else 3

// ---- Wiener index ----

// Sum of all pairwise distances by all-source BFS; infinite iff the graph is
// disconnected (a single vertex sums to 0).
distance wiener_bruteforce(const clean_graph& g);

// Unordered pairs {e, f} of nonzero idempotents with e*f = 0 (mod n), as a
// function of k = k_total alone: pairs of disjoint nonempty subsets of the k
// prime-power positions, (3^k - 2^(k+1) + 1) / 2.
wide zero_product_pair_count(unsigned k_total);

// The complement pairs (e, 1-e) only: (2^k - 2) / 2. This is the published
// tables' model of the annihilating pairs; it equals the true count only at
// k = 2, which is where the published Wiener closed form stops being exact.
wide complement_pair_count(unsigned k_total);

// W = (a*x^2 - b*x + c) / 2 with x = phi(n); c = 2^k * r throughout.
struct coefficient_row {
    wide a = 0;
    wide b = 0;
    wide c = 0;

    friend bool operator==(const coefficient_row&, const coefficient_row&) = default;
};

// Residue of n modulo powers of two, which (with k_odd) fixes r.
enum class two_adic_case { odd, m1, m2, m3_plus };

two_adic_case two_adic_case_of(const factorization& f);

// Coefficient rows for k_total in [2, 8]:
//   coefficient_table       — the published model (complement annihilators only):
//                             a = 2*4^k - 5*2^k + 5, b = 4^k - 2^k + 3.
//   coefficient_table_exact — all annihilating pairs counted:
//                             a = 2*4^k - 2^(k+1) + 2 - 3^k, b = 4^k + 2^(k+1) - 3^k.
// The rows agree at k = 2 and split from k = 3 on.
coefficient_row coefficient_table(unsigned k_total, two_adic_case c);
coefficient_row coefficient_table_exact(unsigned k_total, two_adic_case c);

// Closed Wiener index, exact for every k_total >= 2 (matches BFS); infinite
// when k_total < 2 (vertex (1,1) is isolated for n >= 3).
distance wiener_closed(const factorization& f);

// The closed form as published alongside the coefficient tables. Overcounts
// distance-2 pairs as distance-1 whenever k_total >= 3; kept callable so
// reports can quantify that divergence.
distance wiener_closed_published(const factorization& f);

// ---- Wiener decomposition ----

// Split of W by vertex-pair class: s1 inside V1 (the e = 1 block), s2 inside
// one other block, s3 between V1 and another block, s4 across two non-V1
// blocks, refined by t1 (blocks annihilate: distance 1), t2 (inverse units:
// distance 1), t3 (neither: distance 2).
struct wiener_decomposition {
    wide s1 = 0, s2 = 0, s3 = 0, s4 = 0;
    wide t1 = 0, t2 = 0, t3 = 0;
    wide total = 0;

    friend bool operator==(const wiener_decomposition&, const wiener_decomposition&) = default;
};

// Closed decomposition (exact, oracle-equal); throws std::domain_error when
// k_total < 2.
wiener_decomposition wiener_decomposition_closed(const factorization& f);

// BFS-backed class sums over the same partition; requires a connected-family
// graph without the zero block.
wiener_decomposition wiener_decomposition_oracle(const clean_graph& g);

}  // namespace cleangraph

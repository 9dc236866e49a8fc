#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cleangraph/factorization.hpp"

namespace cleangraph {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n);

// Inverse of u modulo n; throws std::domain_error unless gcd(u, n) = 1.
std::uint64_t mod_inverse(std::uint64_t u, std::uint64_t n);

// All idempotents e^2 = e (mod n), ascending, 0 and 1 included. Built by CRT:
// one idempotent per choice of 0-or-1 residue at each prime power, so the
// count is exactly 2^k_total and no residue scan is needed.
std::vector<std::uint64_t> enumerate_idempotents(const factorization& f);

// Nontrivial idempotents grouped as complement pairs (e, 1-e), smaller member
// first, pairs ascending by the smaller member. Empty when k_total < 2.
std::vector<std::pair<std::uint64_t, std::uint64_t>> complement_pairs(const factorization& f);

// Units of Z_n ascending; requires n >= 2. O(n) — only graph construction
// (vertex-capped) and tests need the explicit list.
std::vector<std::uint64_t> enumerate_units(const factorization& f);

// Solutions of u^2 = 1 (mod n) ascending; requires n >= 2. Runs an
// incremental-square residue scan (no divisions), cheap enough for the
// 10^5-wide verification sweeps.
std::vector<std::uint64_t> enumerate_self_inverse_units(const factorization& f);

// r = |{u : u^2 = 1 mod n}| by case analysis on the power of 2:
// 2^k_odd for m in {0,1}, 2^(k_odd+1) for m = 2, 2^(k_odd+2) for m >= 3.
std::uint64_t count_self_inverse_closed(const factorization& f);

// Everything graph construction wants from Z_n in one bundle.
struct ring_data {
    factorization fact;
    std::uint64_t phi = 0;
    std::uint64_t r = 0;                        // self-inverse unit count
    std::vector<std::uint64_t> idempotents;     // all, ascending (0 included)
    std::vector<std::uint64_t> units;           // ascending
    std::vector<std::uint64_t> self_inverse_units;
};

ring_data make_ring_data(const factorization& f);  // requires n >= 2

}  // namespace cleangraph

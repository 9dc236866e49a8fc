#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cleangraph {

struct prime_power {
    std::uint64_t p = 0;
    unsigned exponent = 0;
    std::uint64_t value = 0;  // p^exponent

    friend bool operator==(const prime_power&, const prime_power&) = default;
};

// n = 2^m * q_1^a_1 * ... * q_{k_odd}^a_{k_odd} with the odd primes ascending.
// k_total counts every distinct prime (2 included when m > 0); most structural
// quantities of the clean graph depend on n only through k_total and phi(n).
struct factorization {
    std::uint64_t n = 0;
    std::vector<prime_power> factors;  // ascending p; includes the 2^m part when m > 0
    unsigned m = 0;                    // exponent of 2 in n
    unsigned k_odd = 0;                // number of distinct odd primes
    unsigned k_total = 0;              // k_odd + (m > 0 ? 1 : 0)

    friend bool operator==(const factorization&, const factorization&) = default;
};

// Factors any n in [1, 2^63 - 1]. Small trial division plus deterministic
// Miller-Rabin and Brent's rho for the 64-bit tail, so large prime factors do
// not stall the closed-form-only paths.
factorization factorize(std::uint64_t n);

std::uint64_t euler_phi(const factorization& f);

// "2^3 * 3 * 5" style rendering, deterministic.
std::string to_string(const factorization& f);

}  // namespace cleangraph

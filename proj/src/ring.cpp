#include "cleangraph/ring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cleangraph {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
    std::uint64_t result = 1 % n;
    base %= n;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, n);
        base = mul_mod(base, base, n);
        exp >>= 1;
    }
    return result;
}

std::uint64_t mod_inverse(std::uint64_t u, std::uint64_t n) {
    if (n == 0) throw std::domain_error("mod_inverse: modulus must be positive");
    // Extended Euclid on (u, n); signed coefficients stay within +-n.
    std::int64_t t = 0, new_t = 1;
    std::uint64_t r = n, new_r = u % n;
    while (new_r != 0) {
        std::uint64_t q = r / new_r;
        std::int64_t tmp_t = t - static_cast<std::int64_t>(q) * new_t;
        t = new_t;
        new_t = tmp_t;
        std::uint64_t tmp_r = r - q * new_r;
        r = new_r;
        new_r = tmp_r;
    }
    if (r != 1) {
        throw std::domain_error("mod_inverse: " + std::to_string(u) + " is not a unit mod " +
                                std::to_string(n));
    }
    return t < 0 ? static_cast<std::uint64_t>(t + static_cast<std::int64_t>(n))
                 : static_cast<std::uint64_t>(t);
}

std::vector<std::uint64_t> enumerate_idempotents(const factorization& f) {
    const std::uint64_t n = f.n;
    if (n == 1) return {0};
    // CRT basis: b_i = 1 mod q_i, 0 mod every other prime power. Each subset
    // sum of the basis is one idempotent, and all 2^k are distinct.
    std::vector<std::uint64_t> basis;
    basis.reserve(f.factors.size());
    for (const auto& pp : f.factors) {
        const std::uint64_t rest = n / pp.value;  // coprime to pp.value
        basis.push_back(mul_mod(rest % n, mod_inverse(rest % pp.value, pp.value), n));
    }
    std::vector<std::uint64_t> result{0};
    result.reserve(std::size_t{1} << basis.size());
    for (std::uint64_t b : basis) {
        const std::size_t half = result.size();
        for (std::size_t i = 0; i < half; ++i) {
            std::uint64_t e = result[i] + b;
            result.push_back(e >= n ? e - n : e);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> complement_pairs(const factorization& f) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    for (std::uint64_t e : enumerate_idempotents(f)) {
        if (e == 0 || e == 1) continue;
        const std::uint64_t partner = f.n + 1 - e;  // 1 - e mod n; e is in (1, n)
        if (e < partner) pairs.emplace_back(e, partner);
    }
    return pairs;  // ascending: source list was sorted
}

std::vector<std::uint64_t> enumerate_units(const factorization& f) {
    if (f.n < 2) throw std::domain_error("enumerate_units: requires n >= 2");
    std::vector<std::uint64_t> units;
    units.reserve(euler_phi(f));
    for (std::uint64_t u = 1; u < f.n; ++u) {
        if (std::gcd(u, f.n) == 1) units.push_back(u);
    }
    return units;
}

std::vector<std::uint64_t> enumerate_self_inverse_units(const factorization& f) {
    const std::uint64_t n = f.n;
    if (n < 2) throw std::domain_error("enumerate_self_inverse_units: requires n >= 2");
    std::vector<std::uint64_t> result;
    // Walk x = 1..n-1 maintaining s = x^2 mod n through the identity
    // (x+1)^2 = x^2 + 2x + 1: additions and subtractions only. With the
    // increment reduced first, every intermediate stays below 2n < 2^64.
    std::uint64_t s = 1;
    for (std::uint64_t x = 1; x < n; ++x) {
        if (s == 1) result.push_back(x);
        std::uint64_t inc = 2 * x + 1;  // x <= n - 2, so this fits in 64 bits
        if (inc >= n) inc -= n;
        s += inc;
        if (s >= n) s -= n;
    }
    return result;
}

std::uint64_t count_self_inverse_closed(const factorization& f) {
    if (f.n < 2) throw std::domain_error("count_self_inverse_closed: requires n >= 2");
    unsigned bump = f.m <= 1 ? 0 : (f.m == 2 ? 1 : 2);
    return std::uint64_t{1} << (f.k_odd + bump);
}

ring_data make_ring_data(const factorization& f) {
    if (f.n < 2) throw std::domain_error("make_ring_data: requires n >= 2");
    ring_data rd;
    rd.fact = f;
    rd.phi = euler_phi(f);
    rd.r = count_self_inverse_closed(f);
    rd.idempotents = enumerate_idempotents(f);
    rd.units = enumerate_units(f);
    rd.self_inverse_units = enumerate_self_inverse_units(f);
    return rd;
}

}  // namespace cleangraph

#include "cleangraph/factorization.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cleangraph/ring.hpp"

namespace cleangraph {
namespace {

bool miller_rabin(std::uint64_t n, std::uint64_t a) {
    if (a % n == 0) return true;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    std::uint64_t x = pow_mod(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 0; i < s - 1; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    // This base set decides primality for every n below 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (!miller_rabin(n, a)) return false;
    }
    return true;
}

// Pollard's rho (Floyd cycle) for odd composite n; only reached when trial
// division by small primes has already failed.
std::uint64_t rho_factor(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        auto step = [&](std::uint64_t x) {
            std::uint64_t r = mul_mod(x, x, n) + c;
            return r >= n ? r - n : r;
        };
        std::uint64_t x = 2, y = 2, d = 1;
        do {
            x = step(x);
            y = step(step(y));
            std::uint64_t diff = x > y ? x - y : y - x;
            d = std::gcd(diff, n);  // diff = 0 gives d = n: sequence cycled, try next c
        } while (d == 1);
        if (d != n) return d;
    }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& primes) {
    while (n > 1) {
        if (is_prime(n)) {
            primes.push_back(n);
            return;
        }
        std::uint64_t small = 1;
        for (std::uint64_t p = 3; p * p <= n && p < 300; p += 2) {
            if (n % p == 0) {
                small = p;
                break;
            }
        }
        std::uint64_t d = small > 1 ? small : rho_factor(n);
        factor_into(d, primes);
        n /= d;
    }
}

}  // namespace

factorization factorize(std::uint64_t n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    if (n > (1ull << 63) - 1) throw std::invalid_argument("factorize: n exceeds 2^63 - 1");
    factorization f;
    f.n = n;
    std::uint64_t rest = n;
    while (rest % 2 == 0) {
        rest /= 2;
        ++f.m;
    }
    std::vector<std::uint64_t> primes;
    if (rest > 1) factor_into(rest, primes);
    std::sort(primes.begin(), primes.end());
    if (f.m > 0) {
        f.factors.push_back({2, f.m, std::uint64_t{1} << f.m});
    }
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        std::uint64_t value = 1;
        while (j < primes.size() && primes[j] == primes[i]) {
            value *= primes[j];
            ++j;
        }
        f.factors.push_back({primes[i], static_cast<unsigned>(j - i), value});
        i = j;
    }
    f.k_odd = static_cast<unsigned>(f.factors.size()) - (f.m > 0 ? 1 : 0);
    f.k_total = f.k_odd + (f.m > 0 ? 1 : 0);
    return f;
}

std::uint64_t euler_phi(const factorization& f) {
    std::uint64_t phi = 1;
    for (const auto& pp : f.factors) phi *= pp.value - pp.value / pp.p;
    return phi;
}

std::string to_string(const factorization& f) {
    if (f.factors.empty()) return "1";
    std::string out;
    for (const auto& pp : f.factors) {
        if (!out.empty()) out += " * ";
        out += std::to_string(pp.p);
        if (pp.exponent > 1) out += "^" + std::to_string(pp.exponent);
    }
    return out;
}

}  // namespace cleangraph

#include "cleangraph/metrics.hpp"

#include <cassert>
#include <stdexcept>

namespace cleangraph {

distance distance_closed(const vertex& v, const vertex& w, const factorization& f) {
    if (f.k_total < 2)
        throw std::domain_error("distance_closed: defined for k_total >= 2 only");
    if (v == w) return distance::finite(0);
    const std::uint64_t n = f.n;
    if (mul_mod(v.e, w.e, n) == 0 || mul_mod(v.u, w.u, n) == 1) return distance::finite(1);
    // Non-adjacent inside V1 is the one stretched case: both detours must
    // leave through a complement block and come back.
    if (v.e == 1 && w.e == 1) return distance::finite(3);
    return distance::finite(2);
}

std::vector<std::int32_t> bfs_raw(const clean_graph& g, std::uint32_t source) {
    const std::uint32_t V = g.vertex_count();
    std::vector<std::int32_t> dist(V, -1);
    std::vector<std::uint32_t> queue;
    queue.reserve(V);
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t v = queue[head];
        const std::int32_t next = dist[v] + 1;
        for (std::uint32_t t : g.neighbors(v)) {
            if (dist[t] < 0) {
                dist[t] = next;
                queue.push_back(t);
            }
        }
    }
    return dist;
}

std::vector<distance> bfs_distances(const clean_graph& g, std::uint32_t source) {
    std::vector<distance> out;
    out.reserve(g.vertex_count());
    for (std::int32_t d : bfs_raw(g, source)) {
        out.push_back(d < 0 ? distance::infinite() : distance::finite(static_cast<wide>(d)));
    }
    return out;
}

distance diameter_oracle(const clean_graph& g) {
    std::int32_t best = 0;
    for (std::uint32_t s = 0; s < g.vertex_count(); ++s) {
        for (std::int32_t d : bfs_raw(g, s)) {
            if (d < 0) return distance::infinite();
            best = std::max(best, d);
        }
    }
    return distance::finite(static_cast<wide>(best));
}

distance diameter_closed(const factorization& f) {
    return f.k_total < 2 ? distance::infinite() : distance::finite(3);
}

distance wiener_bruteforce(const clean_graph& g) {
    wide doubled = 0;
    for (std::uint32_t s = 0; s < g.vertex_count(); ++s) {
        for (std::int32_t d : bfs_raw(g, s)) {
            if (d < 0) return distance::infinite();
            doubled += static_cast<wide>(d);
        }
    }
    return distance::finite(doubled / 2);
}

namespace {

wide pow_wide(wide base, unsigned exp) {
    wide result = 1;
    for (unsigned i = 0; i < exp; ++i) result = checked_mul(result, base);
    return result;
}

struct poly_coeffs {
    wide a, b;
};

// Quadratic/linear coefficients of the bracket 2W = a*phi^2 - b*phi + 2^k r.
poly_coeffs exact_coeffs(unsigned k) {
    const wide two_k = pow_wide(2, k);
    const wide four_k = checked_mul(two_k, two_k);
    const wide three_k = pow_wide(3, k);
    // a = 2*4^k - 2^(k+1) + 2 - 3^k, b = 4^k + 2^(k+1) - 3^k; both positive
    // for k >= 2 (3^k < 4^k - 2^(k+1) there).
    return {checked_sub(checked_add(checked_mul(2, four_k), 2), checked_add(2 * two_k, three_k)),
            checked_sub(checked_add(four_k, 2 * two_k), three_k)};
}

poly_coeffs published_coeffs(unsigned k) {
    const wide two_k = pow_wide(2, k);
    const wide four_k = checked_mul(two_k, two_k);
    return {checked_sub(checked_add(checked_mul(2, four_k), 5), 5 * two_k),
            checked_sub(checked_add(four_k, 3), two_k)};
}

wide bracket_value(const poly_coeffs& ab, wide phi, wide c) {
    const wide quad = checked_mul(ab.a, checked_mul(phi, phi));
    const wide bracket = checked_add(checked_sub(quad, checked_mul(ab.b, phi)), c);
    assert(bracket % 2 == 0);
    return bracket / 2;
}

wide closed_form(const factorization& f, poly_coeffs (*coeffs)(unsigned)) {
    const wide phi = euler_phi(f);
    const wide c = checked_mul(pow_wide(2, f.k_total), count_self_inverse_closed(f));
    return bracket_value(coeffs(f.k_total), phi, c);
}

}  // namespace

wide zero_product_pair_count(unsigned k_total) {
    // Unordered pairs of disjoint nonempty subsets of k positions: each of the
    // 3^k assignments {left, right, neither} counts an ordered pair, minus the
    // 2^(k+1) - 1 assignments with an empty side, halved.
    const wide three_k = pow_wide(3, k_total);
    return checked_sub(checked_add(three_k, 1), checked_mul(2, pow_wide(2, k_total))) / 2;
}

wide complement_pair_count(unsigned k_total) {
    return checked_sub(pow_wide(2, k_total), 2) / 2;
}

two_adic_case two_adic_case_of(const factorization& f) {
    if (f.m == 0) return two_adic_case::odd;
    if (f.m == 1) return two_adic_case::m1;
    if (f.m == 2) return two_adic_case::m2;
    return two_adic_case::m3_plus;
}

namespace {

wide r_of(unsigned k_total, two_adic_case c) {
    const unsigned k_odd = k_total - (c == two_adic_case::odd ? 0 : 1);
    const unsigned bump = c == two_adic_case::m2 ? 1 : (c == two_adic_case::m3_plus ? 2 : 0);
    return pow_wide(2, k_odd + bump);
}

coefficient_row make_row(unsigned k, two_adic_case c, poly_coeffs (*coeffs)(unsigned)) {
    if (k < 2 || k > 8) throw std::domain_error("coefficient table: k_total must be in [2, 8]");
    const auto ab = coeffs(k);
    return {ab.a, ab.b, checked_mul(pow_wide(2, k), r_of(k, c))};
}

}  // namespace

coefficient_row coefficient_table(unsigned k_total, two_adic_case c) {
    return make_row(k_total, c, published_coeffs);
}

coefficient_row coefficient_table_exact(unsigned k_total, two_adic_case c) {
    return make_row(k_total, c, exact_coeffs);
}

distance wiener_closed(const factorization& f) {
    if (f.k_total < 2) return distance::infinite();
    return distance::finite(closed_form(f, exact_coeffs));
}

distance wiener_closed_published(const factorization& f) {
    if (f.k_total < 2) return distance::infinite();
    return distance::finite(closed_form(f, published_coeffs));
}

wiener_decomposition wiener_decomposition_closed(const factorization& f) {
    if (f.k_total < 2)
        throw std::domain_error("wiener_decomposition_closed: requires k_total >= 2");
    const wide phi = euler_phi(f);
    const wide r = count_self_inverse_closed(f);
    const wide K = pow_wide(2, f.k_total);  // block count + 1
    const wide phi2 = checked_mul(phi, phi);

    wiener_decomposition d;
    // Inside V1: (phi - r)/2 inverse pairs at distance 1, the rest at 3.
    d.s1 = checked_sub(checked_add(checked_mul(3, phi2), checked_mul(2, r)),
                       checked_mul(5, phi)) /
           2;
    // Inside each other block: inverse pairs at 1, rest at 2.
    d.s2 = checked_mul(K / 2 - 1,
                       checked_sub(checked_add(checked_mul(2, phi2), r), checked_mul(3, phi)));
    // V1 against each other block: inverse pairs at 1, rest at 2.
    d.s3 = checked_mul(K - 2, checked_sub(checked_mul(2, phi2), phi));
    // Across two non-V1 blocks: whole blocks at distance 1 when the
    // idempotents annihilate, otherwise only the inverse pairs are at 1.
    const wide pairs = checked_mul(K - 2, K - 3) / 2;  // all cross-block pairs
    const wide zp = zero_product_pair_count(f.k_total);
    const wide plain = checked_sub(pairs, zp);  // cross pairs whose blocks keep a product
    d.t1 = checked_mul(zp, phi2);
    d.t2 = checked_mul(plain, phi);
    d.t3 = checked_mul(checked_mul(2, plain), checked_sub(phi2, phi));
    d.s4 = checked_add(checked_add(d.t1, d.t2), d.t3);
    d.total = checked_add(checked_add(d.s1, d.s2), checked_add(d.s3, d.s4));
    assert(distance::finite(d.total) == wiener_closed(f));
    return d;
}

wiener_decomposition wiener_decomposition_oracle(const clean_graph& g) {
    if (g.has_zero_block())
        throw std::domain_error("wiener_decomposition_oracle: zero block not supported");
    if (g.ring().fact.k_total < 2)
        throw std::domain_error("wiener_decomposition_oracle: requires k_total >= 2");
    const std::uint32_t V = g.vertex_count();
    wiener_decomposition out;
    for (std::uint32_t i = 0; i < V; ++i) {
        const auto dist = bfs_raw(g, i);
        const std::uint32_t bi = g.block_of(i);
        const std::uint32_t inv_i = g.inverse_slot(g.unit_slot(i));
        for (std::uint32_t j = i + 1; j < V; ++j) {
            if (dist[j] < 0)
                throw std::domain_error("wiener_decomposition_oracle: graph is disconnected");
            const wide d = static_cast<wide>(dist[j]);
            const std::uint32_t bj = g.block_of(j);
            if (bi == 0 && bj == 0) {
                out.s1 += d;
            } else if (bi == bj) {
                out.s2 += d;
            } else if (bi == 0 || bj == 0) {
                out.s3 += d;
            } else if (g.zero_product(bi, bj)) {
                out.t1 += d;
            } else if (g.unit_slot(j) == inv_i) {
                out.t2 += d;
            } else {
                out.t3 += d;
            }
        }
    }
    out.s4 = out.t1 + out.t2 + out.t3;
    out.total = out.s1 + out.s2 + out.s3 + out.s4;
    return out;
}

}  // namespace cleangraph

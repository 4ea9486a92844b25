// SPDX-License-Identifier: Apache-2.0

#include "macc/construct_cyclic.hpp"

#include <numeric>

#include "macc/verify.hpp"

namespace macc {

namespace {

std::vector<std::string> numeric_labels(int F) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(F));
    for (int j = 1; j <= F; ++j) labels.push_back(std::to_string(j));
    return labels;
}

// Star mask of the delivery array implied by the cyclic caching placement:
// column k is starred on the union of the accessed caches' intervals.
DeliveryArray delivery_shell(const CachingArray &c, const NetworkParams &p, int S) {
    DeliveryArray d;
    d.K = c.K;
    d.F = c.F;
    d.Z = c.Z;
    d.r = p.r;
    d.S = S;
    d.L = p.L;
    d.cells.assign(static_cast<std::size_t>(d.F) * d.K, kStar);
    d.caching_hash = content_hash(c);
    d.row_labels = c.row_labels;
    return d;
}

// Fills d at permuted coordinates: a value at row j, permuted column k lands
// in column pi(k) of d. Throws on star overwrite or integer collision.
void place(DeliveryArray &d, const std::vector<std::uint8_t> &mask, const ColumnPermutation &pi, int j, int k,
           int s) {
    int col = pi.forward[static_cast<std::size_t>(k - 1)];
    if (mask[static_cast<std::size_t>(j - 1) * d.K + (col - 1)])
        throw std::logic_error("cyclic construction: integer placement hits a star cell");
    int &cell = d.cells[d.idx(j, col)];
    if (cell != kStar) throw std::logic_error("cyclic construction: integer placement collision");
    cell = s;
}

std::vector<std::uint8_t> star_mask(const CachingArray &c, int r) {
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(c.F) * c.K, 0);
    for (int j = 1; j <= c.F; ++j)
        for (int k = 1; k <= c.K; ++k)
            for (int m = 0; m < r; ++m)
                if (c.star(j, cyclic_mod(k + m, c.K))) {
                    mask[static_cast<std::size_t>(j - 1) * c.K + (k - 1)] = 1;
                    break;
                }
    return mask;
}

void apply_mask(DeliveryArray &d, const std::vector<std::uint8_t> &mask) {
    for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) d.cells[i] = kStar;
}

int case_b_multiplier(const NetworkParams &p) {
    long long denom = static_cast<long long>(p.r) * p.t + p.L;
    if ((p.K + p.L) % denom != 0) return 0;
    return static_cast<int>((p.K + p.L) / denom); // K = m*rt + (m-1)L  <=>  m = (K+L)/(rt+L)
}

// Case-b integer layout into the permuted array. The odd-p second row follows
// the displayed formula <((p+1)/2)(rt+L)+q>_K; alt_odd_row switches to the
// prose variant <((p+1)/2)(rt+L)+rt+q>_K.
void fill_case_b(DeliveryArray &d, const std::vector<std::uint8_t> &mask, const ColumnPermutation &pi,
                 const NetworkParams &p, int m, bool alt_odd_row) {
    const int K = p.K, rt = p.r * p.t, L = p.L;
    for (int pp = 0; pp <= m - 2; ++pp) {
        for (int q = 1; q <= K; ++q) {
            int s = pp * K + q;
            if (pp % 2 == 0) {
                for (int i = 1; i <= L; ++i) place(d, mask, pi, q, cyclic_mod((pp / 2) * (rt + L) + q + i, K), s);
                int row = cyclic_mod((pp / 2) * (rt + L) + rt + q, K);
                for (int i = 1; i <= rt; ++i) place(d, mask, pi, row, cyclic_mod(q - rt + i, K), s);
            } else {
                for (int i = 1; i <= rt; ++i)
                    place(d, mask, pi, q, cyclic_mod(((pp - 1) / 2) * (rt + L) + L + q + i, K), s);
                int row = cyclic_mod(((pp + 1) / 2) * (rt + L) + (alt_odd_row ? rt : 0) + q, K);
                for (int i = 1; i <= L; ++i) place(d, mask, pi, row, cyclic_mod(q - rt + i, K), s);
            }
        }
    }
}

} // namespace

CachingArray build_caching_array_cyclic(const NetworkParams &p) {
    p.validate();
    if (p.r * p.t >= p.K) throw std::invalid_argument("cyclic caching array: needs r*t < K");
    CachingArray c;
    c.K = p.K;
    c.F = p.K;
    c.Z = p.t;
    c.r = p.r;
    c.stars.assign(static_cast<std::size_t>(c.F) * c.K, 0);
    for (int k = 1; k <= p.K; ++k)
        for (int j : cyclic_interval((k - 1) * p.t + 1, k * p.t, p.K)) c.set_star(j, k);
    c.row_labels = numeric_labels(c.F);
    return c;
}

ColumnPermutation pi_permutation(const NetworkParams &p) {
    p.validate();
    if (std::gcd(p.K, p.t) != 1)
        throw std::invalid_argument("pi_permutation: no such permutation unless gcd(K,t) = 1");
    ColumnPermutation pi;
    pi.forward.assign(static_cast<std::size_t>(p.K), 0);
    pi.inverse.assign(static_cast<std::size_t>(p.K), 0);
    for (int j = 1; j <= p.K; ++j) {
        for (int k = 1; k <= p.K; ++k) {
            if (cyclic_mod(static_cast<long long>(k - 1) * p.t + 1, p.K) == j) {
                pi.forward[static_cast<std::size_t>(j - 1)] = k;
                pi.inverse[static_cast<std::size_t>(k - 1)] = j;
                break;
            }
        }
    }
    return pi;
}

DeliveryArray build_delivery_array_case_a(const NetworkParams &p) {
    p.validate();
    if (p.K != p.r * p.t + p.L) throw std::invalid_argument("case (a): needs K = r*t + L");
    if (std::gcd(p.K, p.t) != 1) throw std::invalid_argument("case (a): needs gcd(K,t) = 1");
    CachingArray c = build_caching_array_cyclic(p);
    auto mask = star_mask(c, p.r);
    ColumnPermutation pi = pi_permutation(p);
    DeliveryArray d = delivery_shell(c, p, p.L);
    apply_mask(d, mask);
    const int rt = p.r * p.t;
    for (int s = 1; s <= p.L; ++s)
        for (int k = 1; k <= p.K; ++k) place(d, mask, pi, cyclic_mod(rt + s + k - 1, p.K), k, s);
    return d;
}

DeliveryArray build_delivery_array_case_b(const NetworkParams &p) {
    p.validate();
    int m = case_b_multiplier(p);
    if (m < 2) throw std::invalid_argument("case (b): needs K = m*rt + (m-1)L for an integer m >= 2");
    if (p.L < p.r * p.t) throw std::invalid_argument("case (b): needs L >= r*t");
    if (std::gcd(p.K, p.t) != 1) throw std::invalid_argument("case (b): needs gcd(K,t) = 1");
    CachingArray c = build_caching_array_cyclic(p);
    auto mask = star_mask(c, p.r);
    ColumnPermutation pi = pi_permutation(p);

    // The displayed odd-p row formula is used first; the condition checker is
    // the arbiter and the alternate prose reading is the fallback.
    for (bool alt : {false, true}) {
        DeliveryArray d = delivery_shell(c, p, (m - 1) * p.K);
        apply_mask(d, mask);
        try {
            fill_case_b(d, mask, pi, p, m, alt);
        } catch (const std::logic_error &) {
            continue;
        }
        if (check_delivery_array(c, d, p.L).empty()) return d;
    }
    throw std::logic_error("case (b): neither row-index reading yields a valid delivery array");
}

std::pair<CachingArray, DeliveryArray> build_grouped_arrays(const NetworkParams &p) {
    p.validate();
    int gamma = std::gcd(p.K, std::gcd(p.t, p.L));
    if (gamma <= 1)
        throw std::invalid_argument("grouped arrays: gcd(K,t,L) = 1; use the case (a)/(b) constructions directly");
    NetworkParams red{p.K / gamma, p.r, p.t / gamma, p.L / gamma, 0};
    if (std::gcd(red.K, red.t) != 1) throw std::invalid_argument("grouped arrays: needs gcd(K/gamma, t/gamma) = 1");

    CachingArray cred = build_caching_array_cyclic(red);
    DeliveryArray g;
    if (red.K == red.r * red.t + red.L) {
        g = build_delivery_array_case_a(red);
    } else if (case_b_multiplier(red) >= 2 && red.L >= red.r * red.t) {
        g = build_delivery_array_case_b(red);
    } else {
        throw std::invalid_argument("grouped arrays: needs K = rt+L or K = m*rt+(m-1)L with L >= rt");
    }

    // Replicate horizontally gamma times; placement depends only on the
    // within-group column index.
    CachingArray c;
    c.K = p.K;
    c.F = cred.F;
    c.Z = cred.Z;
    c.r = p.r;
    c.stars.assign(static_cast<std::size_t>(c.F) * c.K, 0);
    for (int j = 1; j <= c.F; ++j)
        for (int k = 1; k <= c.K; ++k)
            if (cred.star(j, (k - 1) % red.K + 1)) c.set_star(j, k);
    c.row_labels = numeric_labels(c.F);

    DeliveryArray d;
    d.K = p.K;
    d.F = g.F;
    d.Z = g.Z;
    d.r = p.r;
    d.S = g.S;
    d.L = p.L;
    d.cells.assign(static_cast<std::size_t>(d.F) * d.K, kStar);
    for (int j = 1; j <= d.F; ++j)
        for (int k = 1; k <= d.K; ++k) d.set(j, k, g.at(j, (k - 1) % red.K + 1));
    d.caching_hash = content_hash(c);
    d.row_labels = c.row_labels;
    return {std::move(c), std::move(d)};
}

} // namespace macc

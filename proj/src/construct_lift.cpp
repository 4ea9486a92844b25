// SPDX-License-Identifier: Apache-2.0

#include "macc/construct_lift.hpp"

#include "macc/construct_general.hpp"

namespace macc {

namespace {

std::vector<std::string> numeric_labels(int F) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(F));
    for (int j = 1; j <= F; ++j) labels.push_back(std::to_string(j));
    return labels;
}

void require_lift(const Epda &a, int r) {
    if (r < 1) throw std::invalid_argument("lift: needs r >= 1");
    if (a.K < 1 || a.F < 1) throw std::invalid_argument("lift: empty source array");
}

} // namespace

Epda epda_source(const NetworkParams &p) {
    NetworkParams src{p.K, 1, p.t, p.L, 0};
    DeliveryArray d = build_delivery_array_general(src);
    return Epda{d.K, d.F, d.Z, d.L, d.S, d.cells};
}

CachingArray lift_caching(const Epda &a, int r) {
    require_lift(a, r);
    CachingArray c;
    c.K = r * a.K;
    c.F = r * a.F;
    c.Z = a.Z;
    c.r = r;
    c.stars.assign(static_cast<std::size_t>(c.F) * c.K, 0);
    for (int i = 0; i < r; ++i) {
        for (int j = 1; j <= a.F; ++j) {
            for (int col = 1; col <= c.K; ++col) {
                int base = cyclic_mod(col - i, c.K); // shift block i right by i
                if (base % r != 0) continue;         // stars live on columns k'*r
                if (a.star(j, base / r)) c.set_star(i * a.F + j, col);
            }
        }
    }
    c.row_labels = numeric_labels(c.F);
    return c;
}

DeliveryArray lift_delivery(const CachingArray &c, const Epda &a, int r) {
    require_lift(a, r);
    if (c.K != r * a.K || c.F != r * a.F)
        throw std::invalid_argument("lift: caching array does not match the source EPDA");
    DeliveryArray d;
    d.K = c.K;
    d.F = c.F;
    d.Z = a.Z;
    d.r = r;
    d.S = r * a.S;
    d.L = r * a.L;
    d.cells.assign(static_cast<std::size_t>(d.F) * d.K, kStar);
    for (int i = 0; i < r; ++i) {
        for (int j = 1; j <= a.F; ++j) {
            for (int col = 1; col <= d.K; ++col) {
                int base = cyclic_mod(col - i, d.K);
                int v = a.at(j, (base - 1) / r + 1); // each source column repeated r times
                if (v != kStar) v += i * a.S;        // block-local integers stay disjoint
                d.set(i * a.F + j, col, v);
            }
        }
    }
    d.row_labels = numeric_labels(d.F);
    d.caching_hash = content_hash(c);
    return d;
}

DeliveryArray antenna_slack(const DeliveryArray &d, int ell) {
    if (ell < 0) throw std::invalid_argument("antenna_slack: needs ell >= 0");
    DeliveryArray out = d;
    out.L = d.L + ell;
    return out;
}

} // namespace macc

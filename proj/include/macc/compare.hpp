// SPDX-License-Identifier: Apache-2.0
//
// Closed-form performance catalog: NDT and subpacketization formulas for every
// construction in this toolkit plus two prior schemes from the literature,
// with applicability predicates, a text table, and a CSV sweep over t.

#ifndef MACC_COMPARE_HPP
#define MACC_COMPARE_HPP

#include <string>
#include <vector>

#include "macc/core.hpp"

namespace macc {

struct SchemeRow {
    std::string name;
    bool applicable = false;
    Rational ndt;
    long long F = 0;
};

/// Exact binomial coefficient; throws on overflow of long long.
long long binomial(int n, int k);

/// Fixed-order catalog. t = 0 is the no-caching point: every scheme degrades
/// to plain multiplexed broadcast with NDT = K/L.
std::vector<SchemeRow> evaluate_catalog(const NetworkParams &p);

std::string render_table(const NetworkParams &p, const std::vector<SchemeRow> &rows);

/// CSV rows "K,r,t,L,scheme,ndt,ndt_decimal,F" for t in [t_min, t_max],
/// applicable schemes only. Header row included.
std::string sweep_csv(int K, int r, int L, int t_min, int t_max);

} // namespace macc

#endif

// SPDX-License-Identifier: Apache-2.0
//
// Cyclic-placement constructions: the K = rt+L scheme, the K = m*rt+(m-1)L
// scheme, and their user-grouping variants for gcd(K,t,L) > 1.

#ifndef MACC_CONSTRUCT_CYCLIC_HPP
#define MACC_CONSTRUCT_CYCLIC_HPP

#include <utility>

#include "macc/core.hpp"

namespace macc {

/// Column permutation taking the cyclic-placement delivery array to the form
/// where column k's stars occupy rows [k, <k+rt-1>_K] consecutively.
struct ColumnPermutation {
    std::vector<int> forward; // pi: 1-based, forward[k-1] = pi(k)
    std::vector<int> inverse;
};

/// K x K caching array with column k starred on the cyclic length-t interval
/// starting at row <(k-1)t+1>_K. Requires rt < K and t >= 1.
CachingArray build_caching_array_cyclic(const NetworkParams &p);

/// pi(j) is the unique k with <(k-1)t+1>_K = j; exists iff gcd(K,t) = 1.
ColumnPermutation pi_permutation(const NetworkParams &p);

/// K = rt + L, gcd(K,t) = 1: S = L, every integer once per column, NDT = L/K.
DeliveryArray build_delivery_array_case_a(const NetworkParams &p);

/// K = m*rt + (m-1)L with m >= 2, L >= rt, gcd(K,t) = 1: S = (m-1)K, every
/// integer occurring rt+L times, NDT = m-1.
DeliveryArray build_delivery_array_case_b(const NetworkParams &p);

/// gcd(K,t,L) = gamma > 1 with gcd(K/gamma, t/gamma) = 1: the reduced-size
/// construction replicated gamma times horizontally; F = K/gamma.
std::pair<CachingArray, DeliveryArray> build_grouped_arrays(const NetworkParams &p);

} // namespace macc

#endif

// SPDX-License-Identifier: Apache-2.0
//
// The general construction: works for every K >= r(t+L) and produces arrays
// with F = K/(t+L) * binom(K-(r-1)(t+L)-1, t+L-1) * (t+L) rows, indexed by a
// spread-out index set J and a cyclic window of t positions inside it.

#ifndef MACC_CONSTRUCT_GENERAL_HPP
#define MACC_CONSTRUCT_GENERAL_HPP

#include <utility>

#include "macc/core.hpp"

namespace macc {

/// Row coordinate of the general construction: a sorted index set J of size
/// t+L whose circular gaps are all >= r, and a window start position in
/// [1, t+L]. The cached columns are the t cyclically consecutive elements of J
/// starting at that position.
struct RowIndex {
    std::vector<int> J;
    int window_start = 1;
};

/// All sorted subsets of [1,K] of the given size whose circular gaps
/// (including the wrap gap) are >= r, in lexicographic order.
std::vector<std::vector<int>> enumerate_index_sets(int K, int r, int size);

/// Enumeration of the index sets with rank lookup. phi is the 0-based
/// lexicographic rank.
class IndexSetUniverse {
  public:
    IndexSetUniverse(int K, int r, int size);

    const std::vector<std::vector<int>> &sets() const { return sets_; }
    long long phi(const std::vector<int> &J) const;

  private:
    std::vector<std::vector<int>> sets_;
};

/// 1-based position of `target` in the ascending complement of the accessible
/// closure of J (each j in J blocks the cyclic interval [j, <j+r-1>_K]).
int psi(const std::vector<int> &J, int target, int K, int r);

/// Index-set relabeling used when a vacant column is outside every accessible
/// interval: k is inserted, the set is rotated toward it, and the positions
/// strictly between the window predecessor and k shift down by r-1 (mod K).
struct CaseIiiDerivation {
    std::vector<int> J_new;
    int target = 0; // the displaced element, looked up via psi(J_new, target)
};
CaseIiiDerivation derive_case_iii(const std::vector<int> &J, int window_start, int k, int K, int r);

/// Rows of the general construction in serialization order: J lexicographic,
/// then window start ascending.
std::vector<RowIndex> enumerate_rows(const NetworkParams &p);

CachingArray build_caching_array_general(const NetworkParams &p);
DeliveryArray build_delivery_array_general(const NetworkParams &p);

/// For gamma = gcd(K,t,L) > 1: the general construction at (K/gamma, r,
/// t/gamma, L/gamma) replicated gamma times horizontally. Same NDT at a
/// gamma*(t+L)/(t'+L')-fold smaller subpacketization.
std::pair<CachingArray, DeliveryArray> gcd_reduced_arrays(const NetworkParams &p);

} // namespace macc

#endif

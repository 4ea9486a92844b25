// SPDX-License-Identifier: Apache-2.0
//
// Lifting an extended placement delivery array for a K'-user dedicated-cache
// network into a (K = rK')-user cyclic multi-access scheme by cyclic column
// shifts: r vertically stacked blocks, block i shifted right by i columns.

#ifndef MACC_CONSTRUCT_LIFT_HPP
#define MACC_CONSTRUCT_LIFT_HPP

#include "macc/core.hpp"

namespace macc {

/// EPDA produced by the general construction at access degree 1:
/// parameters (K, L, (t+L)*binom(K,t+L), t*binom(K-1,t+L-1), (K-t)*binom(K,t+L)).
/// Every integer occurs exactly t+L times.
Epda epda_source(const NetworkParams &p);

/// rK'-user caching array: block i (i = 0..r-1) places EPDA column k's stars
/// into column <k*r + i>_{rK'}, so Z stays Z' and F becomes r*F'.
CachingArray lift_caching(const Epda &a, int r);

/// Matching delivery array: block i repeats each EPDA column r times, shifts
/// right by i, and offsets integers by i*S'. S = r*S', antennas L = r*L'.
DeliveryArray lift_delivery(const CachingArray &c, const Epda &a, int r);

/// Same array served with ell spare transmit antennas: the row-load bound
/// loosens from L to L + ell, NDT is unchanged. Requires ell >= 0.
DeliveryArray antenna_slack(const DeliveryArray &d, int ell);

} // namespace macc

#endif

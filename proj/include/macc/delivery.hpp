// SPDX-License-Identifier: Apache-2.0
//
// Executable delivery phase: placement maps, per-integer transmission
// scheduling with null sets, a symbolic one-shot decodability check, and a
// numeric zero-forcing simulation at infinite SNR.

#ifndef MACC_DELIVERY_HPP
#define MACC_DELIVERY_HPP

#include <string>
#include <vector>

#include "macc/core.hpp"

namespace macc {

/// Subfile rows held by each cache and each user. Users read r consecutive
/// caches, so a user's set is the union of r cache sets (disjoint by B2).
struct PlacementMap {
    int K = 0;
    int r = 1;
    int Z = 0;
    std::vector<std::vector<int>> cache_rows; // size K, sorted ascending
    std::vector<std::vector<int>> user_rows;  // size K, sorted ascending, rZ entries each
};

PlacementMap placement(const CachingArray &c, const NetworkParams &p);

/// One served (user, subfile) pair of a transmission. The null set lists the
/// other participants' users that do not hold this subfile; their channels are
/// the zero-forcing constraints of this participant's precoder.
struct Participant {
    int user = 0;
    int row = 0;
    int demand = 0;
    std::vector<int> null_users;
};

struct Transmission {
    int s = 0;
    std::vector<Participant> participants;
};

struct TransmissionPlan {
    int K = 0;
    int F = 0;
    int S = 0;
    int L = 1;
    Rational ndt;
    std::vector<Transmission> transmissions;
};

/// One transmission per integer s, participants in user order. Throws when the
/// (C, D) pair fails its condition checks or the demand length is not K.
TransmissionPlan schedule(const CachingArray &c, const DeliveryArray &d, const std::vector<int> &demand);

struct DecodeReport {
    bool pass = false;
    std::vector<std::string> failures;
    std::vector<long long> served_per_user; // size K, each must equal F - rZ
};

/// Verifies one-shot decodability symbolically: within every transmission each
/// participant can strip every other subfile via cache or zero-forcing, every
/// null set fits the L-1 spatial degrees of freedom, and over the whole plan
/// every missing (user, row) pair is served exactly once.
DecodeReport symbolic_decode_check(const TransmissionPlan &plan, const DeliveryArray &d);

/// Noiseless zero-forcing simulation: per transmission, random complex
/// channels and payload scalars, precoders orthogonal to the null-set
/// channels, reconstruction at every participant. Returns the maximum
/// relative reconstruction error. Deterministic given the seed: transmission s
/// uses sub-seed hash(seed, s). Throws on numeric degeneracy after 8 resample
/// attempts.
double numeric_simulate(const TransmissionPlan &plan, const DeliveryArray &d, std::uint64_t seed);

/// Text rendering of a plan: per-transmission participant lists and null sets.
std::string render(const TransmissionPlan &plan);

/// Demand vector helpers used by the CLI. "distinct" requires N >= K.
std::vector<int> demand_distinct(const NetworkParams &p);
std::vector<int> demand_uniform(const NetworkParams &p, int file);

} // namespace macc

#endif

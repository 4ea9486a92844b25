// SPDX-License-Identifier: Apache-2.0
//
// Exhaustive condition checkers for caching arrays (B1-B2), delivery arrays
// (D1-D3), and EPDAs (C1-C4), plus exact scheme metrics and a desk-scale
// brute-force delivery-array filler used as an independent oracle.

#ifndef MACC_VERIFY_HPP
#define MACC_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "macc/core.hpp"

namespace macc {

/// One violated condition with its location. Violations are data, not errors;
/// callers decide severity.
struct Violation {
    std::string condition; // B1|B2|D1|D2|D3|C1|C2|C3|C4|regularity|shape
    int row = 0;
    int col = 0;
    int col2 = 0;
    long long s = 0;
    std::string detail;
};

std::string to_string(const Violation &v);

std::vector<Violation> check_caching_array(const CachingArray &c, int r);
std::vector<Violation> check_delivery_array(const CachingArray &c, const DeliveryArray &d, int L);
std::vector<Violation> check_epda(const Epda &a);

/// g when every integer occurs exactly g times, nullopt otherwise.
std::optional<int> regularity(const Epda &a);

/// Exact-rational metrics of a verified (C, D) pair.
SchemeMetrics metrics(const CachingArray &c, const DeliveryArray &d, const NetworkParams &p);

// Hard caps of the brute-force filler; documented in the CLI.
inline constexpr int kBruteForceMaxF = 12;
inline constexpr int kBruteForceMaxK = 8;

/// Backtracking search for a delivery array over the star mask implied by C,
/// minimizing the integer count S subject to D2-D3. Deterministic cell order
/// (row-major), integers tried ascending. Returns nullopt when the node budget
/// runs out before an optimum is proven.
std::optional<DeliveryArray> brute_force_min_fill(const CachingArray &c, const NetworkParams &p,
                                                  long long budget = 50'000'000);

} // namespace macc

#endif

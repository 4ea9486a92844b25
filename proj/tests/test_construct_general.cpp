// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <doctest.h>
#include <numeric>
#include <set>

#include "fixtures.hpp"
#include "macc/compare.hpp"
#include "macc/construct_general.hpp"
#include "macc/verify.hpp"

using namespace macc;

namespace {

// Independent oracle: filter all size-subsets of [K] by the circular gap rule.
std::vector<std::vector<int>> index_sets_by_filter(int K, int r, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick(static_cast<std::size_t>(size));
    std::iota(pick.begin(), pick.end(), 1);
    auto ok = [&](const std::vector<int> &J) {
        for (int a = 0; a + 1 < size; ++a)
            if (J[static_cast<std::size_t>(a + 1)] - J[static_cast<std::size_t>(a)] < r) return false;
        return K - J.back() + J.front() >= r;
    };
    // Odometer over ascending tuples.
    while (true) {
        if (ok(pick)) out.push_back(pick);
        int i = size - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == K - (size - 1 - i)) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int a = i + 1; a < size; ++a)
            pick[static_cast<std::size_t>(a)] = pick[static_cast<std::size_t>(a - 1)] + 1;
    }
    return out;
}

} // namespace

TEST_CASE("index-set enumeration matches a brute-force filter") {
    for (auto [K, r, size] : {std::tuple{9, 2, 4}, {7, 2, 3}, {12, 3, 4}, {5, 1, 4}, {10, 2, 5}}) {
        auto got = enumerate_index_sets(K, r, size);
        auto want = index_sets_by_filter(K, r, size);
        CHECK(got == want);
        CHECK(std::is_sorted(got.begin(), got.end()));
    }
    // The nine sets behind the K=9 fixture, in rank order.
    auto sets = enumerate_index_sets(9, 2, 4);
    REQUIRE(sets.size() == 9);
    CHECK(sets[0] == std::vector<int>{1, 3, 5, 7});
    CHECK(sets[1] == std::vector<int>{1, 3, 5, 8});
    CHECK(sets[2] == std::vector<int>{1, 3, 6, 8});
    CHECK(sets[6] == std::vector<int>{2, 4, 7, 9});
    CHECK(sets[8] == std::vector<int>{3, 5, 7, 9});
    IndexSetUniverse u(9, 2, 4);
    CHECK(u.phi({1, 3, 5, 8}) == 1);
    CHECK(u.phi({2, 4, 7, 9}) == 6);
    CHECK_THROWS_AS(u.phi({1, 2, 3, 4}), std::invalid_argument);
}

TEST_CASE("psi ranks inside the accessible complement") {
    // J = {1,3,5,8}, r=2 blocks {1,2,3,4,5,6,8,9}; only 7 remains.
    CHECK(psi({1, 3, 5, 8}, 7, 9, 2) == 1);
    CHECK(psi({2, 4, 7, 9}, 6, 9, 2) == 1);
    // r=1 blocks only J itself.
    CHECK(psi({1, 2, 3, 5}, 4, 5, 1) == 1);
    CHECK(psi({2, 5}, 4, 9, 2) == 2); // complement of {2,3,5,6} is {1,4,7,8,9}
    CHECK_THROWS_AS(psi({1, 3, 5, 8}, 3, 9, 2), std::invalid_argument);
}

TEST_CASE("case-iii relabeling reproduces hand-worked cells") {
    // Fixture row (1368,81), column 4.
    auto d1 = derive_case_iii({1, 3, 6, 8}, 4, 4, 9, 2);
    CHECK(d1.J_new == std::vector<int>{2, 4, 7, 9});
    CHECK(d1.target == 6);
    // Fixture row (2479,92), column 5.
    auto d2 = derive_case_iii({2, 4, 7, 9}, 4, 5, 9, 2);
    CHECK(d2.J_new == std::vector<int>{1, 3, 5, 8});
    CHECK(d2.target == 7);
    // Fixture row (1357,13), column 8: no shift needed.
    auto d3 = derive_case_iii({1, 3, 5, 7}, 1, 8, 9, 2);
    CHECK(d3.J_new == std::vector<int>{1, 3, 5, 8});
    CHECK(d3.target == 7);
}

TEST_CASE("general construction reproduces the K=9 fixtures cell-for-cell") {
    NetworkParams p{9, 2, 2, 2, 0};
    CachingArray c = build_caching_array_general(p);
    DeliveryArray d = build_delivery_array_general(p);
    CHECK(serialize(c) == fixtures::kCaching9);
    CHECK(serialize(d) == fixtures::kDelivery9);
    CHECK(c.F == 36);
    CHECK(c.Z == 8);
    CHECK(d.S == 45);
}

TEST_CASE("general construction satisfies all conditions across a sweep") {
    int count = 0;
    for (int K = 4; K <= 15; ++K) {
        for (int r = 1; r <= 4; ++r) {
            for (int t = 1; t <= 5; ++t) {
                for (int L = 1; L <= 4; ++L) {
                    if (r >= K || K < r * (t + L)) continue;
                    NetworkParams p{K, r, t, L, 0};
                    CachingArray c = build_caching_array_general(p);
                    DeliveryArray d = build_delivery_array_general(p);
                    CHECK(check_caching_array(c, r).empty());
                    CHECK(check_delivery_array(c, d, L).empty());
                    // Closed forms for F, Z, S.
                    long long binom = binomial(K - (r - 1) * (t + L) - 1, t + L - 1);
                    CHECK(c.F == K * binom);
                    CHECK(c.Z == t * binom);
                    CHECK(d.S == (K - static_cast<long long>(r) * t) * c.F / (t + L));
                    SchemeMetrics m = metrics(c, d, p);
                    CHECK(m.ndt == Rational(K - r * t, t + L));
                    // Every integer occurs exactly t+L times.
                    for (const auto &[s, n] : m.occurrences) CHECK(n == t + L);
                    CHECK(m.occurrences.size() == static_cast<std::size_t>(d.S));
                    ++count;
                }
            }
        }
    }
    CHECK(count >= 60);
}

TEST_CASE("gcd reduction shrinks F without changing NDT") {
    NetworkParams p{20, 3, 4, 2, 0};
    auto [c, d] = gcd_reduced_arrays(p);
    CHECK(c.F == 30);
    CHECK(c.K == 20);
    CHECK(check_caching_array(c, 3).empty());
    CHECK(check_delivery_array(c, d, 2).empty());
    SchemeMetrics m = metrics(c, d, p);
    CHECK(m.ndt == Rational(4, 3));
    // Occurrences multiply by gamma against the reduced construction.
    for (const auto &[s, n] : m.occurrences) CHECK(n == 2 * (2 + 1));

    NetworkParams coprime{7, 2, 2, 3, 0};
    CHECK_THROWS_AS(gcd_reduced_arrays(coprime), std::invalid_argument);
}

TEST_CASE("general construction rejects out-of-range parameters") {
    CHECK_THROWS_AS(build_caching_array_general(NetworkParams{7, 2, 2, 3, 0}), std::invalid_argument); // K < r(t+L)
    CHECK_THROWS_AS(build_delivery_array_general(NetworkParams{6, 3, 1, 2, 0}), std::invalid_argument);
    CHECK_NOTHROW(build_delivery_array_general(NetworkParams{6, 3, 1, 1, 0})); // boundary K = r(t+L)
    CHECK_NOTHROW(build_delivery_array_general(NetworkParams{6, 1, 2, 1, 0}));
}

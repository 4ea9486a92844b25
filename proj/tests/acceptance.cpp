// SPDX-License-Identifier: Apache-2.0
//
// Acceptance gate: one check per release criterion, one PASS/FAIL line each.

#include <functional>
#include <iostream>
#include <numeric>
#include <vector>

#include "fixtures.hpp"
#include "macc/compare.hpp"
#include "macc/construct_cyclic.hpp"
#include "macc/construct_general.hpp"
#include "macc/construct_lift.hpp"
#include "macc/core.hpp"
#include "macc/delivery.hpp"
#include "macc/verify.hpp"

using namespace macc;

namespace {

bool require(bool cond, const char *what) {
    if (!cond) std::cout << "  failed: " << what << "\n";
    return cond;
}

bool golden_cyclic() {
    NetworkParams p{7, 2, 2, 3, 0};
    CachingArray c = build_caching_array_cyclic(p);
    DeliveryArray d = build_delivery_array_case_a(p);
    bool ok = require(serialize(c) == fixtures::kCaching7, "caching array differs from the golden document");
    ok &= require(serialize(d) == fixtures::kDelivery7, "delivery array differs from the golden document");
    ColumnPermutation pi = pi_permutation(p);
    ok &= require(pi.forward == std::vector<int>{1, 5, 2, 6, 3, 7, 4}, "column permutation");
    TransmissionPlan plan = schedule(c, d, demand_distinct(p));
    std::vector<std::pair<int, int>> got;
    for (const auto &pt : plan.transmissions[0].participants) got.push_back({pt.user, pt.row});
    std::vector<std::pair<int, int>> want{{1, 5}, {2, 7}, {3, 2}, {4, 4}, {5, 6}, {6, 1}, {7, 3}};
    ok &= require(got == want, "transmission 1 participant list");
    return ok;
}

bool golden_general() {
    NetworkParams p{9, 2, 2, 2, 0};
    CachingArray c = build_caching_array_general(p);
    DeliveryArray d = build_delivery_array_general(p);
    bool ok = require(serialize(c) == fixtures::kCaching9, "caching array differs from the golden document");
    ok &= require(serialize(d) == fixtures::kDelivery9, "delivery array differs from the golden document");
    ok &= require(c.F == 36 && d.S == 45, "F = 36, S = 45");
    SchemeMetrics m = metrics(c, d, p);
    ok &= require(m.ndt == Rational(5, 4), "ndt = 45/36 = 5/4");
    return ok;
}

bool golden_case_b() {
    NetworkParams p{7, 2, 1, 3, 0};
    CachingArray c = build_caching_array_cyclic(p);
    DeliveryArray d = build_delivery_array_case_b(p);
    bool ok = require(d.S == 7, "S = 7");
    SchemeMetrics m = metrics(c, d, p);
    ok &= require(m.ndt == Rational(1) && m.optimal, "ndt = 1 meets the bound");
    TransmissionPlan plan = schedule(c, d, demand_distinct(p));
    std::vector<std::pair<int, int>> got;
    for (const auto &pt : plan.transmissions[0].participants) got.push_back({pt.user, pt.row});
    std::vector<std::pair<int, int>> want{{1, 3}, {2, 1}, {3, 1}, {4, 1}, {7, 3}};
    ok &= require(got == want, "transmission 1 participant list");
    return ok;
}

bool golden_lift() {
    Epda a = epda_source(NetworkParams{5, 1, 2, 2, 0});
    bool ok = require(a.K == 5 && a.L == 2 && a.F == 20 && a.Z == 8 && a.S == 15, "EPDA parameters (5,2,20,8,15)");
    ok &= require(regularity(a) == 4, "EPDA regularity 4");
    CachingArray c = lift_caching(a, 2);
    DeliveryArray d = lift_delivery(c, a, 2);
    ok &= require(c.K == 10 && c.F == 40 && c.Z == 8 && c.r == 2, "(10,40,8,2) caching array");
    ok &= require(d.S == 30 && d.L == 4, "(C,30,4) delivery array");
    SchemeMetrics m = metrics(c, d, NetworkParams{10, 2, 2, 4, 0});
    for (const auto &[s, n] : m.occurrences) ok &= n == 8;
    ok &= require(ok, "every integer occurs 8 times");
    ok &= require(m.ndt == Rational(3, 4), "ndt = 3/4");
    return ok;
}

bool optimality_sweep() {
    bool ok = true;
    int points = 0;
    for (int K = 3; K <= 30; ++K) {
        for (int r = 1; r < K && r <= 6; ++r) {
            for (int t = 1; r * t < K; ++t) {
                if (std::gcd(K, t) != 1) continue;
                int La = K - r * t;
                {
                    NetworkParams p{K, r, t, La, 0};
                    DeliveryArray d = build_delivery_array_case_a(p);
                    CachingArray c = build_caching_array_cyclic(p);
                    SchemeMetrics m = metrics(c, d, p);
                    ok &= m.ndt == Rational(K - r * t, r * t + La);
                    ++points;
                }
                for (int mult = 2; mult <= 5; ++mult) {
                    int num = K - mult * r * t;
                    if (num <= 0 || num % (mult - 1) != 0) continue;
                    int L = num / (mult - 1);
                    if (L < r * t) continue;
                    NetworkParams p{K, r, t, L, 0};
                    DeliveryArray d = build_delivery_array_case_b(p);
                    CachingArray c = build_caching_array_cyclic(p);
                    SchemeMetrics m = metrics(c, d, p);
                    ok &= m.ndt == Rational(K - r * t, r * t + L);
                    ++points;
                }
            }
        }
    }
    for (int Kp = 2; Kp <= 6; ++Kp) {
        for (int r = 2; r <= 4 && r * Kp <= 24; ++r) {
            for (int t = 1; t < Kp; ++t) {
                for (int Lp = 1; t + Lp <= Kp; ++Lp) {
                    Epda a = epda_source(NetworkParams{Kp, 1, t, Lp, 0});
                    CachingArray c = lift_caching(a, r);
                    DeliveryArray d = lift_delivery(c, a, r);
                    SchemeMetrics m = metrics(c, d, NetworkParams{r * Kp, r, t, r * Lp, 0});
                    ok &= m.ndt == m.optimal_bound;
                    ++points;
                }
            }
        }
    }
    return require(ok, "every accepted point meets (K-rt)/(rt+L)") && require(points >= 100, "point count");
}

bool condition_sweep() {
    bool ok = true;
    int tuples = 0;
    // General construction, K <= 15.
    for (int K = 4; K <= 15; ++K)
        for (int r = 1; r <= 4 && r < K; ++r)
            for (int t = 1; t <= 4; ++t)
                for (int L = 1; L <= 3; ++L) {
                    if (K < r * (t + L)) continue;
                    NetworkParams p{K, r, t, L, 0};
                    CachingArray c = build_caching_array_general(p);
                    DeliveryArray d = build_delivery_array_general(p);
                    ok &= check_caching_array(c, r).empty() && check_delivery_array(c, d, L).empty();
                    ++tuples;
                }
    // Cyclic constructions, K <= 30.
    for (int K = 3; K <= 30; ++K)
        for (int r = 1; r <= 4 && r < K; ++r)
            for (int t = 1; r * t < K; ++t) {
                if (std::gcd(K, t) != 1) continue;
                NetworkParams p{K, r, t, K - r * t, 0};
                CachingArray c = build_caching_array_cyclic(p);
                DeliveryArray d = build_delivery_array_case_a(p);
                ok &= check_caching_array(c, r).empty() && check_delivery_array(c, d, p.L).empty();
                ++tuples;
            }
    // Lifts with Kp <= 6, r <= 4.
    for (int Kp = 3; Kp <= 6; ++Kp)
        for (int r = 1; r <= 4; ++r)
            for (int t = 1; t < Kp; ++t)
                for (int Lp = 1; t + Lp <= Kp; ++Lp) {
                    Epda a = epda_source(NetworkParams{Kp, 1, t, Lp, 0});
                    CachingArray c = lift_caching(a, r);
                    DeliveryArray d = lift_delivery(c, a, r);
                    ok &= check_caching_array(c, r).empty() && check_delivery_array(c, d, d.L).empty();
                    ++tuples;
                }
    ok = require(ok, "zero violations across the sweep");
    ok &= require(tuples >= 200, "at least 200 parameter tuples");
    // Mutation sensitivity on a golden fixture.
    CachingArray c = parse_caching(fixtures::kCaching7);
    DeliveryArray d = parse_delivery(fixtures::kDelivery7);
    bool caught = true;
    for (int j = 1; j <= d.F; ++j)
        for (int k = 1; k <= d.K; ++k) {
            DeliveryArray mu = d;
            mu.set(j, k, d.star(j, k) ? 1 : (d.at(j, k) % d.S) + 1);
            caught &= !check_delivery_array(c, mu, d.L).empty();
        }
    return ok & require(caught, "every single-cell mutation draws a violation");
}

bool oracle_equivalence() {
    NetworkParams p{7, 2, 2, 3, 0};
    CachingArray c = build_caching_array_cyclic(p);
    auto best = brute_force_min_fill(c, p);
    bool ok = require(best.has_value() && best->S == 3, "minimum fill S = 3 at (7,2,2,3)");
    NetworkParams p2{5, 1, 3, 2, 0};
    CachingArray c2 = build_caching_array_cyclic(p2);
    auto best2 = brute_force_min_fill(c2, p2);
    ok &= require(best2.has_value() && best2->S == 2, "minimum fill S = 2 at (5,1,3,2)");
    return ok;
}

bool delivery_correctness() {
    struct Scheme {
        NetworkParams p;
        CachingArray c;
        DeliveryArray d;
    };
    std::vector<Scheme> schemes;
    {
        NetworkParams p{7, 2, 2, 3, 0};
        schemes.push_back({p, build_caching_array_cyclic(p), build_delivery_array_case_a(p)});
    }
    {
        NetworkParams p{7, 2, 1, 3, 0};
        schemes.push_back({p, build_caching_array_cyclic(p), build_delivery_array_case_b(p)});
    }
    {
        NetworkParams p{9, 2, 2, 2, 0};
        schemes.push_back({p, build_caching_array_general(p), build_delivery_array_general(p)});
    }
    {
        Epda a = epda_source(NetworkParams{5, 1, 2, 2, 0});
        CachingArray c = lift_caching(a, 2);
        DeliveryArray d = lift_delivery(c, a, 2);
        schemes.push_back({NetworkParams{10, 2, 2, 4, 0}, std::move(c), std::move(d)});
    }
    bool ok = true;
    for (const auto &s : schemes) {
        TransmissionPlan plan = schedule(s.c, s.d, demand_distinct(s.p));
        DecodeReport rep = symbolic_decode_check(plan, s.d);
        ok &= rep.pass;
        long long want = s.d.F - static_cast<long long>(s.p.r) * s.d.Z;
        for (long long n : rep.served_per_user) ok &= n == want;
        for (const auto &tx : plan.transmissions)
            for (const auto &pt : tx.participants) ok &= static_cast<int>(pt.null_users.size()) <= s.d.L - 1;
        for (std::uint64_t seed = 0; seed < 32; ++seed) ok &= numeric_simulate(plan, s.d, seed) <= 1e-6;
    }
    return require(ok, "symbolic + numeric delivery on every golden scheme, 32 seeds");
}

bool comparison_numbers() {
    auto find = [](const std::vector<SchemeRow> &rows, const char *name) {
        for (const auto &r : rows)
            if (r.name == name) return r;
        return SchemeRow{};
    };
    auto r1 = evaluate_catalog(NetworkParams{19, 5, 3, 4, 0});
    bool ok = require(find(r1, "construction-2").ndt == Rational(4, 19) && find(r1, "construction-2").F == 19,
                      "(19,5,3,4) ours 4/19 at F 19");
    ok &= require(find(r1, "prior-pda-based").ndt == Rational(1, 4) && find(r1, "prior-pda-based").F == 76,
                  "(19,5,3,4) prior 1/4 at F 76");
    auto r2 = evaluate_catalog(NetworkParams{20, 3, 4, 2, 0});
    ok &= require(find(r2, "prior-pda-based").ndt == Rational(4, 5) && find(r2, "prior-pda-based").F == 1400,
                  "(20,3,4,2) prior 4/5 at F 1400");
    ok &= require(find(r2, "construction-1").ndt == Rational(4, 3) && find(r2, "construction-1-gcd").F == 30,
                  "(20,3,4,2) ours 4/3 with reduced F 30");
    auto r3 = evaluate_catalog(NetworkParams{30, 3, 0, 3, 0});
    ok &= require(find(r3, "baseline").ndt == Rational(10), "t = 0 anchor ndt 10");
    auto r4 = evaluate_catalog(NetworkParams{30, 3, 9, 3, 0});
    ok &= require(find(r4, "construction-2-grouped").ndt == Rational(1, 10), "(30,3,9,3) anchor ndt 1/10");
    for (int t = 1; t <= 5; ++t) {
        auto rows = evaluate_catalog(NetworkParams{25, 3, t, 1, 0});
        ok &= find(rows, "construction-1").F == 25 * binomial(22 - 2 * t, t);
        ok &= find(rows, "prior-single-antenna").F == 25 * binomial(25 - 2 * t, t);
    }
    return require(ok, "single-antenna curve data");
}

bool gcd_reduction() {
    NetworkParams p{20, 3, 4, 2, 0};
    auto [c, d] = gcd_reduced_arrays(p);
    bool ok = require(c.F == 30, "reduced F = 30");
    ok &= require(check_caching_array(c, p.r).empty() && check_delivery_array(c, d, p.L).empty(),
                  "reduced pair passes all conditions");
    ok &= require(metrics(c, d, p).ndt == Rational(4, 3), "ndt unchanged at 4/3");
    return ok;
}

} // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<bool()> run;
    };
    const std::vector<Criterion> criteria{
        {"1. cyclic construction golden arrays and transmission list", golden_cyclic},
        {"2. general construction golden arrays, F=36, S=45, ndt=5/4", golden_general},
        {"3. K=7 m=2 scheme: S=7, ndt=1, transmission list", golden_case_b},
        {"4. EPDA source parameters, regularity, and r=2 lift metrics", golden_lift},
        {"5. optimality sweep meets (K-rt)/(rt+L) exactly", optimality_sweep},
        {"6. condition checks clean on 200+ tuples, mutations caught", condition_sweep},
        {"7. brute-force minimum fill matches the construction", oracle_equivalence},
        {"8. delivery correctness on golden schemes across 32 seeds", delivery_correctness},
        {"9. comparison catalog reproduces the worked numbers", comparison_numbers},
        {"10. gcd reduction to F=30 with unchanged ndt", gcd_reduction},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception &e) {
            std::cout << "  exception: " << e.what() << "\n";
        }
        std::cout << (ok ? "PASS " : "FAIL ") << c.name << "\n";
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}

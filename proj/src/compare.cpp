// SPDX-License-Identifier: Apache-2.0

#include "macc/compare.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace macc {

long long binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 res = 1;
    for (int i = 1; i <= k; ++i) {
        res = res * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i); // exact at every step
        if (res > static_cast<unsigned __int128>(INT64_MAX)) throw std::overflow_error("binomial: overflow");
    }
    return static_cast<long long>(res);
}

namespace {

long long f_general(int K, int r, int t, int L) {
    return static_cast<long long>(K) * binomial(K - (r - 1) * (t + L) - 1, t + L - 1);
}

} // namespace

std::vector<SchemeRow> evaluate_catalog(const NetworkParams &p) {
    p.validate(true);
    const int K = p.K, r = p.r, t = p.t, L = p.L;
    const long long rt = static_cast<long long>(r) * t;
    std::vector<SchemeRow> rows;
    auto add = [&rows](const std::string &name, bool ok, Rational ndt = Rational(0), long long F = 0) {
        rows.push_back({name, ok, ok ? ndt : Rational(0), ok ? F : 0});
    };

    if (t == 0 || rt == K) {
        // t = 0: no caching, one broadcast round per user batch of L.
        // rt = K: the accessible caches cover the whole library, nothing to send.
        Rational bc = (t == 0) ? Rational(K, L) : Rational(0);
        for (const char *name :
             {"baseline", "construction-1", "construction-1-gcd", "construction-2", "construction-2-grouped",
              "construction-3", "construction-3-grouped", "construction-4", "construction-4-slack",
              "prior-single-antenna", "prior-pda-based"})
            add(name, true, bc, 1);
        return rows;
    }

    add("baseline", true, Rational(K, L), 1);

    const bool c1_ok = K >= r * (t + L);
    add("construction-1", c1_ok, Rational(K - rt, t + L), c1_ok ? f_general(K, r, t, L) : 0);

    const int gamma = std::gcd(K, std::gcd(t, L));
    const bool c1g_ok = c1_ok && gamma > 1;
    add("construction-1-gcd", c1g_ok, Rational(K - rt, t + L),
        c1g_ok ? f_general(K / gamma, r, t / gamma, L / gamma) : 0);

    const bool a_ok = (K == rt + L) && std::gcd(K, t) == 1;
    add("construction-2", a_ok, Rational(K - rt, rt + L), K);

    const bool ag_ok = (K == rt + L) && gamma > 1 && std::gcd(K / gamma, t / gamma) == 1;
    add("construction-2-grouped", ag_ok, Rational(K - rt, rt + L), K / std::max(gamma, 1));

    const bool b_shape = (K + L) % (rt + L) == 0 && (K + L) / (rt + L) >= 2 && L >= rt;
    const bool b_ok = b_shape && std::gcd(K, t) == 1;
    add("construction-3", b_ok, Rational(K - rt, rt + L), K);

    const bool bg_ok = b_shape && gamma > 1 && std::gcd(K / gamma, t / gamma) == 1;
    add("construction-3-grouped", bg_ok, Rational(K - rt, rt + L), K / std::max(gamma, 1));

    const bool c4_ok = K % r == 0 && L % r == 0 && K / r >= t + L / r && L / r >= 1;
    add("construction-4", c4_ok, Rational(K - rt, rt + L),
        c4_ok ? static_cast<long long>(r) * (t + L / r) * binomial(K / r, t + L / r) : 0);

    // Spare antennas: r does not divide L, the lifted array for floor(L/r)
    // antennas per block is served with the extras idle.
    const int Lq = L / r;
    const bool c4s_ok = K % r == 0 && L % r != 0 && Lq >= 1 && K / r >= t + Lq;
    add("construction-4-slack", c4s_ok, c4s_ok ? Rational(K / r - t, t + Lq) : Rational(0),
        c4s_ok ? static_cast<long long>(r) * (t + Lq) * binomial(K / r, t + Lq) : 0);

    const bool sw_ok = L == 1 && K > rt && K - t * (r - 1) >= t;
    add("prior-single-antenna", sw_ok, Rational(K - rt, t + 1),
        sw_ok ? static_cast<long long>(K) * binomial(K - t * (r - 1), t) : 0);

    const bool pd_shape = r > L && r > 1 && (K - t) % (r - 1) == 0 && (K - t) / (r - 1) >= 1 && K > rt;
    add("prior-pda-based", pd_shape, Rational(K - rt, static_cast<long long>(L) * t + L),
        pd_shape ? static_cast<long long>(K) * L * binomial((K - t) / (r - 1), t) / std::gcd(L, r - 1) : 0);

    return rows;
}

std::string render_table(const NetworkParams &p, const std::vector<SchemeRow> &rows) {
    std::ostringstream os;
    os << "K=" << p.K << " r=" << p.r << " t=" << p.t << " L=" << p.L << "\n";
    os << "scheme                  ndt        ndt_decimal  F\n";
    for (const auto &row : rows) {
        os << row.name;
        for (std::size_t i = row.name.size(); i < 24; ++i) os << ' ';
        if (!row.applicable) {
            os << "-\n";
            continue;
        }
        std::string nd = row.ndt.str();
        os << nd;
        for (std::size_t i = nd.size(); i < 11; ++i) os << ' ';
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%-12.6f ", row.ndt.value());
        os << buf << row.F << "\n";
    }
    return os.str();
}

std::string sweep_csv(int K, int r, int L, int t_min, int t_max) {
    std::ostringstream os;
    os << "K,r,t,L,scheme,ndt,ndt_decimal,F\n";
    for (int t = t_min; t <= t_max; ++t) {
        NetworkParams p{K, r, t, L, 0};
        p.validate(true);
        for (const auto &row : evaluate_catalog(p)) {
            if (!row.applicable) continue;
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.6f", row.ndt.value());
            os << K << ',' << r << ',' << t << ',' << L << ',' << row.name << ',' << row.ndt.str() << ',' << buf
               << ',' << row.F << "\n";
        }
    }
    return os.str();
}

} // namespace macc

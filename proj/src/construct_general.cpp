// SPDX-License-Identifier: Apache-2.0

#include "macc/construct_general.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace macc {

namespace {

void require_general(const NetworkParams &p) {
    p.validate();
    if (p.K < p.r * (p.t + p.L))
        throw std::invalid_argument("general construction: needs K >= r*(t+L)");
}

std::string row_label(const RowIndex &row, int t, int K) {
    int tl = static_cast<int>(row.J.size());
    std::vector<int> w;
    for (int a = 0; a < t; ++a) w.push_back(row.J[static_cast<std::size_t>(cyclic_mod(row.window_start + a, tl) - 1)]);
    auto join = [K](const std::vector<int> &xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i && K > 9) s += ' ';
            s += std::to_string(xs[i]);
        }
        return s;
    };
    return "(" + join(row.J) + "," + join(w) + ")";
}

// Window membership of column k in row (J, window_start).
bool in_window(const RowIndex &row, int t, int k) {
    int tl = static_cast<int>(row.J.size());
    for (int a = 0; a < t; ++a)
        if (row.J[static_cast<std::size_t>(cyclic_mod(row.window_start + a, tl) - 1)] == k) return true;
    return false;
}

} // namespace

std::vector<std::vector<int>> enumerate_index_sets(int K, int r, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto &&self, int next) -> void {
        if (static_cast<int>(cur.size()) == size) {
            if (K - cur.back() + cur.front() >= r) out.push_back(cur); // wrap gap
            return;
        }
        int remaining = size - static_cast<int>(cur.size());
        for (int v = next; v + (remaining - 1) * r <= K + (r - 1); ++v) {
            if (v > K) break;
            cur.push_back(v);
            self(self, v + r);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

IndexSetUniverse::IndexSetUniverse(int K, int r, int size) : sets_(enumerate_index_sets(K, r, size)) {}

long long IndexSetUniverse::phi(const std::vector<int> &J) const {
    auto it = std::lower_bound(sets_.begin(), sets_.end(), J);
    if (it == sets_.end() || *it != J)
        throw std::invalid_argument("phi: not a valid index set for these parameters");
    return it - sets_.begin();
}

int psi(const std::vector<int> &J, int target, int K, int r) {
    std::vector<std::uint8_t> blocked(static_cast<std::size_t>(K) + 1, 0);
    for (int j : J)
        for (int m = 0; m < r; ++m) blocked[static_cast<std::size_t>(cyclic_mod(j + m, K))] = 1;
    int pos = 0;
    for (int v = 1; v <= K; ++v) {
        if (blocked[static_cast<std::size_t>(v)]) continue;
        ++pos;
        if (v == target) return pos;
    }
    throw std::invalid_argument("psi: target is inside the accessible closure of J");
}

CaseIiiDerivation derive_case_iii(const std::vector<int> &J, int window_start, int k, int K, int r) {
    const int tl = static_cast<int>(J.size());
    const int n = tl + 1;
    std::vector<int> vals(J);
    vals.push_back(k);
    std::sort(vals.begin(), vals.end());
    int l = static_cast<int>(std::find(vals.begin(), vals.end(), k) - vals.begin()) + 1;
    int target = J[static_cast<std::size_t>(cyclic_mod(window_start - 1, tl) - 1)];
    int p = static_cast<int>(std::find(vals.begin(), vals.end(), target) - vals.begin()) + 1;
    // Shift the elements strictly between the window predecessor and k down by
    // r-1 so the relabeled set keeps all gaps >= r.
    for (int q = cyclic_mod(p + 1, n); q != l; q = cyclic_mod(q + 1, n))
        vals[static_cast<std::size_t>(q - 1)] = cyclic_mod(vals[static_cast<std::size_t>(q - 1)] - (r - 1), K);
    CaseIiiDerivation out;
    out.target = target;
    for (int q = 1; q <= n; ++q)
        if (q != p) out.J_new.push_back(vals[static_cast<std::size_t>(q - 1)]);
    std::sort(out.J_new.begin(), out.J_new.end());
    return out;
}

std::vector<RowIndex> enumerate_rows(const NetworkParams &p) {
    require_general(p);
    std::vector<RowIndex> rows;
    for (const auto &J : enumerate_index_sets(p.K, p.r, p.t + p.L))
        for (int i = 1; i <= p.t + p.L; ++i) rows.push_back({J, i});
    return rows;
}

CachingArray build_caching_array_general(const NetworkParams &p) {
    auto rows = enumerate_rows(p);
    CachingArray c;
    c.K = p.K;
    c.F = static_cast<int>(rows.size());
    c.r = p.r;
    c.stars.assign(static_cast<std::size_t>(c.F) * c.K, 0);
    for (int j = 1; j <= c.F; ++j) {
        const auto &row = rows[static_cast<std::size_t>(j - 1)];
        for (int k : row.J)
            if (in_window(row, p.t, k)) c.set_star(j, k);
        c.row_labels.push_back(row_label(row, p.t, p.K));
    }
    int z = 0;
    for (int j = 1; j <= c.F; ++j) z += c.star(j, 1) ? 1 : 0;
    c.Z = z;
    return c;
}

DeliveryArray build_delivery_array_general(const NetworkParams &p) {
    CachingArray c = build_caching_array_general(p);
    auto rows = enumerate_rows(p);
    IndexSetUniverse universe(p.K, p.r, p.t + p.L);
    const int tl = p.t + p.L;
    const long long span = p.K - static_cast<long long>(p.r) * p.t;

    DeliveryArray d;
    d.K = p.K;
    d.F = c.F;
    d.Z = c.Z;
    d.r = p.r;
    d.S = static_cast<int>(span * static_cast<long long>(universe.sets().size()));
    d.L = p.L;
    d.cells.assign(static_cast<std::size_t>(d.F) * d.K, kStar);
    d.row_labels = c.row_labels;
    d.caching_hash = content_hash(c);

    for (int j = 1; j <= d.F; ++j) {
        const auto &row = rows[static_cast<std::size_t>(j - 1)];
        const auto &J = row.J;
        const int i = row.window_start;
        long long base = span * universe.phi(J);
        for (int k = 1; k <= p.K; ++k) {
            bool star = false;
            for (int m = 0; m < p.r && !star; ++m) star = c.star(j, cyclic_mod(k + m, p.K));
            if (star) continue;
            long long val;
            auto it = std::find(J.begin(), J.end(), k);
            if (it != J.end()) {
                int l = static_cast<int>(it - J.begin()) + 1;
                val = base + cyclic_mod(i - l, tl);
            } else {
                int m_hit = 0, l = 0;
                for (int m = 1; m < p.r && !m_hit; ++m) {
                    auto jt = std::find(J.begin(), J.end(), cyclic_mod(k + m, p.K));
                    if (jt != J.end()) {
                        m_hit = m;
                        l = static_cast<int>(jt - J.begin()) + 1;
                    }
                }
                if (m_hit) {
                    val = base + static_cast<long long>(m_hit) * p.L + cyclic_mod(i - l, tl);
                } else {
                    auto der = derive_case_iii(J, i, k, p.K, p.r);
                    val = span * universe.phi(der.J_new) + static_cast<long long>(p.r) * p.L +
                          psi(der.J_new, der.target, p.K, p.r);
                }
            }
            d.set(j, k, static_cast<int>(val));
        }
    }
    return d;
}

std::pair<CachingArray, DeliveryArray> gcd_reduced_arrays(const NetworkParams &p) {
    require_general(p);
    int gamma = std::gcd(p.K, std::gcd(p.t, p.L));
    if (gamma <= 1)
        throw std::invalid_argument("gcd reduction: gcd(K,t,L) = 1, nothing to reduce");
    NetworkParams red{p.K / gamma, p.r, p.t / gamma, p.L / gamma, 0};
    CachingArray cred = build_caching_array_general(red);
    DeliveryArray dred = build_delivery_array_general(red);

    CachingArray c;
    c.K = p.K;
    c.F = cred.F;
    c.Z = cred.Z;
    c.r = p.r;
    c.stars.assign(static_cast<std::size_t>(c.F) * c.K, 0);
    for (int j = 1; j <= c.F; ++j)
        for (int k = 1; k <= c.K; ++k)
            if (cred.star(j, (k - 1) % red.K + 1)) c.set_star(j, k);
    c.row_labels = cred.row_labels;

    DeliveryArray d;
    d.K = p.K;
    d.F = dred.F;
    d.Z = dred.Z;
    d.r = p.r;
    d.S = dred.S;
    d.L = p.L;
    d.cells.assign(static_cast<std::size_t>(d.F) * d.K, kStar);
    for (int j = 1; j <= d.F; ++j)
        for (int k = 1; k <= d.K; ++k) d.set(j, k, dred.at(j, (k - 1) % red.K + 1));
    d.row_labels = dred.row_labels;
    d.caching_hash = content_hash(c);
    return {std::move(c), std::move(d)};
}

} // namespace macc

// SPDX-License-Identifier: Apache-2.0

#include "macc/verify.hpp"

#include <algorithm>
#include <set>

namespace macc {

std::string to_string(const Violation &v) {
    std::string s = v.condition;
    if (v.row || v.col) {
        s += " at (" + std::to_string(v.row) + "," + std::to_string(v.col) + ")";
    } else if (v.col2) {
        s += " columns " + std::to_string(v.col) + "," + std::to_string(v.col2);
    }
    if (v.s) s += " integer " + std::to_string(v.s);
    if (!v.detail.empty()) s += ": " + v.detail;
    return s;
}

namespace {

void sort_violations(std::vector<Violation> &vs) {
    std::stable_sort(vs.begin(), vs.end(), [](const Violation &a, const Violation &b) {
        return std::tie(a.condition, a.row, a.col, a.col2, a.s) < std::tie(b.condition, b.row, b.col, b.col2, b.s);
    });
}

} // namespace

std::vector<Violation> check_caching_array(const CachingArray &c, int r) {
    std::vector<Violation> out;
    // B1: exactly Z stars per column.
    for (int k = 1; k <= c.K; ++k) {
        int z = 0;
        for (int j = 1; j <= c.F; ++j) z += c.star(j, k) ? 1 : 0;
        if (z != c.Z)
            out.push_back({"B1", 0, k, 0, 0,
                           "column has " + std::to_string(z) + " stars, expected Z = " + std::to_string(c.Z)});
    }
    // B2: columns at cyclic distance < r in either direction have disjoint star rows.
    for (int k1 = 1; k1 <= c.K; ++k1) {
        for (int k2 = k1 + 1; k2 <= c.K; ++k2) {
            int d1 = cyclic_mod(k1 - k2, c.K), d2 = cyclic_mod(k2 - k1, c.K);
            if (d1 >= r && d2 >= r) continue;
            for (int j = 1; j <= c.F; ++j) {
                if (c.star(j, k1) && c.star(j, k2))
                    out.push_back({"B2", j, k1, k2, 0, "columns within access distance share star row"});
            }
        }
    }
    sort_violations(out);
    return out;
}

std::vector<Violation> check_delivery_array(const CachingArray &c, const DeliveryArray &d, int L) {
    if (c.K != d.K || c.F != d.F) throw std::invalid_argument("check_delivery_array: C and D dimensions differ");
    std::vector<Violation> out;
    // D1: star mask recomputed from C and the access degree r.
    for (int k = 1; k <= d.K; ++k) {
        for (int j = 1; j <= d.F; ++j) {
            bool expect = false;
            for (int m = 0; m < d.r && !expect; ++m) expect = c.star(j, cyclic_mod(k + m, c.K));
            if (expect != d.star(j, k))
                out.push_back({"D1", j, k, 0, 0,
                               expect ? "cell must be a star (cached via an accessible column)"
                                      : "cell must not be a star"});
        }
    }
    Epda view{d.K, d.F, d.r * d.Z, L, d.S, d.cells};
    for (const auto &v : check_epda(view)) {
        if (v.condition == "C1") continue; // column star count already covered by D1 against C
        Violation named = v;
        named.condition = (v.condition == "C4") ? "D3" : "D2";
        out.push_back(named);
    }
    sort_violations(out);
    return out;
}

std::vector<Violation> check_epda(const Epda &a) {
    std::vector<Violation> out;
    // C1: Z stars per column; C3: no integer twice in a column.
    for (int k = 1; k <= a.K; ++k) {
        int z = 0;
        std::set<int> seen;
        for (int j = 1; j <= a.F; ++j) {
            int v = a.at(j, k);
            if (v == kStar) {
                ++z;
                continue;
            }
            if (!seen.insert(v).second)
                out.push_back({"C3", j, k, 0, v, "integer repeats in column"});
        }
        if (z != a.Z)
            out.push_back({"C1", 0, k, 0, 0,
                           "column has " + std::to_string(z) + " stars, expected Z = " + std::to_string(a.Z)});
    }
    // C2 + C4 per integer.
    std::vector<std::vector<std::pair<int, int>>> cells_of(static_cast<std::size_t>(a.S) + 1);
    for (int j = 1; j <= a.F; ++j)
        for (int k = 1; k <= a.K; ++k)
            if (int v = a.at(j, k); v != kStar) cells_of[static_cast<std::size_t>(v)].push_back({j, k});
    for (int s = 1; s <= a.S; ++s) {
        const auto &cs = cells_of[static_cast<std::size_t>(s)];
        if (cs.empty()) {
            out.push_back({"C2", 0, 0, 0, s, "integer never occurs"});
            continue;
        }
        std::set<int> rows, cols;
        for (auto [j, k] : cs) {
            rows.insert(j);
            cols.insert(k);
        }
        for (int j : rows) {
            int ints = 0;
            for (int k : cols) ints += (a.at(j, k) != kStar) ? 1 : 0;
            if (ints > a.L)
                out.push_back({"C4", j, 0, 0, s,
                               "sub-array row carries " + std::to_string(ints) + " integers, limit L = " +
                                   std::to_string(a.L)});
        }
    }
    sort_violations(out);
    return out;
}

std::optional<int> regularity(const Epda &a) {
    std::vector<long long> count(static_cast<std::size_t>(a.S) + 1, 0);
    for (int v : a.cells)
        if (v != kStar) ++count[static_cast<std::size_t>(v)];
    if (a.S == 0) return std::nullopt;
    long long g = count[1];
    for (int s = 2; s <= a.S; ++s)
        if (count[static_cast<std::size_t>(s)] != g) return std::nullopt;
    return static_cast<int>(g);
}

SchemeMetrics metrics(const CachingArray &c, const DeliveryArray &d, const NetworkParams &p) {
    p.validate(true);
    if (!check_caching_array(c, p.r).empty() || !check_delivery_array(c, d, p.L).empty())
        throw std::invalid_argument("metrics: arrays fail their condition checks");
    SchemeMetrics m;
    m.F = d.F;
    m.S = d.S;
    m.ndt = Rational(d.S, d.F);
    m.optimal_bound = Rational(p.K - static_cast<long long>(p.r) * p.t, static_cast<long long>(p.r) * p.t + p.L);
    m.memory_ratio = Rational(c.Z, c.F);
    m.dof = Rational(p.K - static_cast<long long>(p.r) * p.t) / m.ndt;
    for (int v : d.cells)
        if (v != kStar) ++m.occurrences[v];
    m.optimal = (m.ndt == m.optimal_bound);
    return m;
}

// ---- brute-force oracle -------------------------------------------------

namespace {

struct FillSearch {
    int K, F, L, S;
    std::vector<int> cells;                    // kStar-initialized grid; 0 reused as "unassigned" for vacant
    std::vector<std::pair<int, int>> vacant;   // row-major (j,k)
    std::vector<std::uint8_t> star;            // star mask
    long long budget;
    long long nodes = 0;

    bool is_star(int j, int k) const { return star[static_cast<std::size_t>(j - 1) * K + (k - 1)] != 0; }
    int &cell(int j, int k) { return cells[static_cast<std::size_t>(j - 1) * K + (k - 1)]; }

    bool column_has(int k, int v) const {
        for (int j = 1; j <= F; ++j)
            if (cells[static_cast<std::size_t>(j - 1) * K + (k - 1)] == v) return true;
        return false;
    }

    // Partial D3: assigned cells only. Monotone, so safe to prune on.
    bool d3_ok(int s) const {
        std::set<int> rows, cols;
        for (int j = 1; j <= F; ++j)
            for (int k = 1; k <= K; ++k)
                if (cells[static_cast<std::size_t>(j - 1) * K + (k - 1)] == s) {
                    rows.insert(j);
                    cols.insert(k);
                }
        for (int j : rows) {
            int ints = 0;
            for (int k : cols) {
                int v = cells[static_cast<std::size_t>(j - 1) * K + (k - 1)];
                if (v != 0 && !is_star(j, k)) ++ints;
            }
            if (ints > L) return false;
        }
        return true;
    }

    bool solve(std::size_t pos, int used) {
        if (++nodes > budget) throw std::runtime_error("budget");
        if (pos == vacant.size()) return used == S;
        // Not enough cells left to introduce every label at least once.
        if (S - used > static_cast<int>(vacant.size() - pos)) return false;
        auto [j, k] = vacant[pos];
        int limit = std::min(S, used + 1); // canonical labeling breaks label symmetry
        for (int v = 1; v <= limit; ++v) {
            if (column_has(k, v)) continue;
            cell(j, k) = v;
            bool ok = true;
            // D3 can only be affected for labels sharing this row or column.
            for (int s = 1; s <= std::max(used, v) && ok; ++s) ok = d3_ok(s);
            if (ok && solve(pos + 1, std::max(used, v))) return true;
            cell(j, k) = 0;
        }
        return false;
    }
};

} // namespace

std::optional<DeliveryArray> brute_force_min_fill(const CachingArray &c, const NetworkParams &p, long long budget) {
    p.validate(true);
    if (c.F > kBruteForceMaxF || c.K > kBruteForceMaxK)
        throw std::invalid_argument("brute_force_min_fill: instance exceeds hard caps (F <= 12, K <= 8)");
    if (!check_caching_array(c, p.r).empty())
        throw std::invalid_argument("brute_force_min_fill: caching array fails B1/B2");

    FillSearch fs;
    fs.K = c.K;
    fs.F = c.F;
    fs.L = p.L;
    fs.budget = budget;
    fs.star.assign(static_cast<std::size_t>(c.F) * c.K, 0);
    int max_col_vacant = 0;
    for (int k = 1; k <= c.K; ++k) {
        int vac = 0;
        for (int j = 1; j <= c.F; ++j) {
            bool st = false;
            for (int m = 0; m < p.r && !st; ++m) st = c.star(j, cyclic_mod(k + m, c.K));
            if (st)
                fs.star[static_cast<std::size_t>(j - 1) * c.K + (k - 1)] = 1;
            else
                ++vac;
        }
        max_col_vacant = std::max(max_col_vacant, vac);
    }
    for (int j = 1; j <= c.F; ++j)
        for (int k = 1; k <= c.K; ++k)
            if (!fs.star[static_cast<std::size_t>(j - 1) * c.K + (k - 1)]) fs.vacant.push_back({j, k});

    // Each column needs that many distinct labels, so start there.
    for (int S = max_col_vacant; S <= static_cast<int>(fs.vacant.size()); ++S) {
        fs.S = S;
        fs.cells.assign(static_cast<std::size_t>(c.F) * c.K, 0);
        bool found = false;
        try {
            found = fs.solve(0, 0);
        } catch (const std::runtime_error &) {
            return std::nullopt; // budget exhausted
        }
        if (!found) continue;
        DeliveryArray d;
        d.K = c.K;
        d.F = c.F;
        d.Z = c.Z;
        d.r = p.r;
        d.S = S;
        d.L = p.L;
        d.cells.assign(static_cast<std::size_t>(c.F) * c.K, kStar);
        for (int j = 1; j <= c.F; ++j)
            for (int k = 1; k <= c.K; ++k)
                if (!fs.star[static_cast<std::size_t>(j - 1) * c.K + (k - 1)]) d.set(j, k, fs.cell(j, k));
        d.caching_hash = content_hash(c);
        d.row_labels = c.row_labels;
        return d;
    }
    // No vacant cells at all: the empty fill with S = 0.
    if (fs.vacant.empty()) {
        DeliveryArray d;
        d.K = c.K;
        d.F = c.F;
        d.Z = c.Z;
        d.r = p.r;
        d.S = 0;
        d.L = p.L;
        d.cells.assign(static_cast<std::size_t>(c.F) * c.K, kStar);
        d.caching_hash = content_hash(c);
        return d;
    }
    return std::nullopt;
}

} // namespace macc

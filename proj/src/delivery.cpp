// SPDX-License-Identifier: Apache-2.0

#include "macc/delivery.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <set>
#include <sstream>

#include "macc/verify.hpp"

namespace macc {

namespace {

void require_checked(const CachingArray &c, const DeliveryArray &d, int L) {
    auto vb = check_caching_array(c, c.r);
    if (!vb.empty()) throw std::invalid_argument("schedule: caching array check failed: " + to_string(vb.front()));
    auto vd = check_delivery_array(c, d, L);
    if (!vd.empty()) throw std::invalid_argument("schedule: delivery array check failed: " + to_string(vd.front()));
}

// splitmix64-style stream seeding so each transmission is independent.
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t s) { return mix(mix(seed) ^ mix(s * 0xd6e8feb86659fd93ULL)); }

// Portable uniform doubles and normals straight off the generator; the
// distributions in <random> are not bit-stable across standard libraries.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state = mix(state);
        return state;
    }
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    std::complex<double> cgauss() {
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double m = std::sqrt(-2.0 * std::log(u1));
        return {m * std::cos(2.0 * M_PI * u2), m * std::sin(2.0 * M_PI * u2)};
    }
};

} // namespace

PlacementMap placement(const CachingArray &c, const NetworkParams &p) {
    auto vb = check_caching_array(c, p.r);
    if (!vb.empty()) throw std::invalid_argument("placement: caching array check failed: " + to_string(vb.front()));
    PlacementMap m;
    m.K = c.K;
    m.r = p.r;
    m.Z = c.Z;
    m.cache_rows.assign(static_cast<std::size_t>(c.K), {});
    m.user_rows.assign(static_cast<std::size_t>(c.K), {});
    for (int k = 1; k <= c.K; ++k)
        for (int j = 1; j <= c.F; ++j)
            if (c.star(j, k)) m.cache_rows[static_cast<std::size_t>(k - 1)].push_back(j);
    for (int k = 1; k <= c.K; ++k) {
        std::set<int> rows;
        for (int i = 0; i < p.r; ++i) {
            const auto &cr = m.cache_rows[static_cast<std::size_t>(cyclic_mod(k + i, c.K) - 1)];
            rows.insert(cr.begin(), cr.end());
        }
        m.user_rows[static_cast<std::size_t>(k - 1)].assign(rows.begin(), rows.end());
    }
    return m;
}

TransmissionPlan schedule(const CachingArray &c, const DeliveryArray &d, const std::vector<int> &demand) {
    require_checked(c, d, d.L);
    if (static_cast<int>(demand.size()) != d.K)
        throw std::invalid_argument("schedule: demand vector must have one entry per user");
    TransmissionPlan plan;
    plan.K = d.K;
    plan.F = d.F;
    plan.S = d.S;
    plan.L = d.L;
    plan.ndt = Rational(d.S, d.F);
    plan.transmissions.resize(static_cast<std::size_t>(d.S));
    for (int s = 1; s <= d.S; ++s) plan.transmissions[static_cast<std::size_t>(s - 1)].s = s;
    // Column-major scan keeps participants in user order.
    for (int k = 1; k <= d.K; ++k)
        for (int j = 1; j <= d.F; ++j)
            if (int s = d.at(j, k); s != kStar)
                plan.transmissions[static_cast<std::size_t>(s - 1)].participants.push_back(
                    {k, j, demand[static_cast<std::size_t>(k - 1)], {}});
    for (auto &tx : plan.transmissions)
        for (auto &pt : tx.participants)
            for (const auto &other : tx.participants)
                if (other.user != pt.user && !d.star(pt.row, other.user)) pt.null_users.push_back(other.user);
    return plan;
}

DecodeReport symbolic_decode_check(const TransmissionPlan &plan, const DeliveryArray &d) {
    DecodeReport rep;
    rep.served_per_user.assign(static_cast<std::size_t>(plan.K), 0);
    std::set<std::pair<int, int>> served;
    for (const auto &tx : plan.transmissions) {
        for (const auto &pt : tx.participants) {
            if (static_cast<int>(pt.null_users.size()) > plan.L - 1)
                rep.failures.push_back("transmission " + std::to_string(tx.s) + " user " + std::to_string(pt.user) +
                                       ": null set exceeds L-1 spatial degrees of freedom");
            if (d.star(pt.row, pt.user))
                rep.failures.push_back("transmission " + std::to_string(tx.s) + " user " + std::to_string(pt.user) +
                                       ": served a subfile it already holds");
            if (!served.insert({pt.user, pt.row}).second)
                rep.failures.push_back("user " + std::to_string(pt.user) + " row " + std::to_string(pt.row) +
                                       ": served more than once (not one-shot)");
            else
                ++rep.served_per_user[static_cast<std::size_t>(pt.user - 1)];
            // Every interfering subfile must be cached or zero-forced away.
            for (const auto &other : tx.participants) {
                if (other.user == pt.user) continue;
                bool cached = d.star(other.row, pt.user);
                bool nulled =
                    std::find(other.null_users.begin(), other.null_users.end(), pt.user) != other.null_users.end();
                if (!cached && !nulled)
                    rep.failures.push_back("transmission " + std::to_string(tx.s) + " user " +
                                           std::to_string(pt.user) + ": interference from user " +
                                           std::to_string(other.user) + " neither cached nor nulled");
            }
        }
    }
    long long want = static_cast<long long>(plan.F) - static_cast<long long>(d.r) * d.Z;
    for (int k = 1; k <= plan.K; ++k)
        if (rep.served_per_user[static_cast<std::size_t>(k - 1)] != want)
            rep.failures.push_back("user " + std::to_string(k) + ": served " +
                                   std::to_string(rep.served_per_user[static_cast<std::size_t>(k - 1)]) +
                                   " subfiles, expected " + std::to_string(want));
    rep.pass = rep.failures.empty();
    return rep;
}

double numeric_simulate(const TransmissionPlan &plan, const DeliveryArray &d, std::uint64_t seed) {
    using Mat = Eigen::MatrixXcd;
    using Vec = Eigen::VectorXcd;
    constexpr double kPivot = 1e-9;
    constexpr int kAttempts = 8;
    const int L = plan.L;
    double max_err = 0.0;

    for (const auto &tx : plan.transmissions) {
        Rng rng(sub_seed(seed, static_cast<std::uint64_t>(tx.s)));
        Mat h(plan.K, L); // row k-1 = channel of user k
        for (int k = 0; k < plan.K; ++k)
            for (int a = 0; a < L; ++a) h(k, a) = rng.cgauss();
        const int l = static_cast<int>(tx.participants.size());
        std::vector<std::complex<double>> payload(static_cast<std::size_t>(l));
        for (auto &w : payload) w = rng.cgauss();

        // Zero-forcing precoders: v_i in the kernel of the null-set channels,
        // kept away from the intended receiver's orthogonal complement.
        std::vector<Vec> v(static_cast<std::size_t>(l));
        for (int i = 0; i < l; ++i) {
            const auto &pt = tx.participants[static_cast<std::size_t>(i)];
            const int n = static_cast<int>(pt.null_users.size());
            Mat a(n, L);
            for (int q = 0; q < n; ++q) a.row(q) = h.row(pt.null_users[static_cast<std::size_t>(q)] - 1);
            bool ok = false;
            for (int attempt = 0; attempt < kAttempts && !ok; ++attempt) {
                Vec g(L);
                for (int q = 0; q < L; ++q) g(q) = rng.cgauss();
                Vec cand = g;
                if (n > 0) {
                    Eigen::CompleteOrthogonalDecomposition<Mat> cod(a);
                    cand = g - cod.pseudoInverse() * (a * g);
                }
                if (cand.norm() < kPivot) continue;
                cand.normalize();
                if (std::abs((h.row(pt.user - 1) * cand)(0)) < kPivot) continue;
                v[static_cast<std::size_t>(i)] = cand;
                ok = true;
            }
            if (!ok)
                throw std::runtime_error("numeric_simulate: degenerate channel realization, transmission " +
                                         std::to_string(tx.s));
        }

        Vec x = Vec::Zero(L);
        for (int i = 0; i < l; ++i) x += v[static_cast<std::size_t>(i)] * payload[static_cast<std::size_t>(i)];

        for (int i = 0; i < l; ++i) {
            const auto &pt = tx.participants[static_cast<std::size_t>(i)];
            auto hk = h.row(pt.user - 1);
            std::complex<double> y = (hk * x)(0);
            for (int u = 0; u < l; ++u) {
                if (u == i) continue;
                const auto &other = tx.participants[static_cast<std::size_t>(u)];
                if (d.star(other.row, pt.user))
                    y -= (hk * v[static_cast<std::size_t>(u)])(0) * payload[static_cast<std::size_t>(u)];
            }
            std::complex<double> est = y / (hk * v[static_cast<std::size_t>(i)])(0);
            double err = std::abs(est - payload[static_cast<std::size_t>(i)]) /
                         std::abs(payload[static_cast<std::size_t>(i)]);
            max_err = std::max(max_err, err);
        }
    }
    return max_err;
}

std::string render(const TransmissionPlan &plan) {
    std::ostringstream os;
    os << "plan K=" << plan.K << " F=" << plan.F << " S=" << plan.S << " L=" << plan.L << " ndt=" << plan.ndt.str()
       << "\n";
    for (const auto &tx : plan.transmissions) {
        os << "s=" << tx.s << ":";
        for (const auto &pt : tx.participants) {
            os << " (user " << pt.user << ", row " << pt.row << ", file " << pt.demand;
            if (!pt.null_users.empty()) {
                os << ", null {";
                for (std::size_t q = 0; q < pt.null_users.size(); ++q)
                    os << (q ? "," : "") << pt.null_users[q];
                os << "}";
            }
            os << ")";
        }
        os << "\n";
    }
    return os.str();
}

std::vector<int> demand_distinct(const NetworkParams &p) {
    if (p.files() < p.K) throw std::invalid_argument("distinct demands need N >= K");
    std::vector<int> d(static_cast<std::size_t>(p.K));
    for (int k = 1; k <= p.K; ++k) d[static_cast<std::size_t>(k - 1)] = k;
    return d;
}

std::vector<int> demand_uniform(const NetworkParams &p, int file) {
    if (file < 1 || file > p.files()) throw std::invalid_argument("uniform demand: file index out of range");
    return std::vector<int>(static_cast<std::size_t>(p.K), file);
}

} // namespace macc

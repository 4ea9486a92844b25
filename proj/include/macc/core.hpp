// SPDX-License-Identifier: Apache-2.0
//
// macc-toolkit: construction, verification, and simulation of multi-antenna
// multi-access coded caching schemes on cyclic wrap-around cache networks.

#ifndef MACC_CORE_HPP
#define MACC_CORE_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace macc {

/// Cyclic residue in [1, K]: i mod K with residue 0 mapped to K.
int cyclic_mod(long long i, int K);

/// Inclusive cyclic range <a>_K, <a+1>_K, ..., <b>_K. Length is <b-a>_K + 1.
std::vector<int> cyclic_interval(int a, int b, int K);

/// Exact rational number, always kept in lowest terms with positive denominator.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long num, long long den);
    Rational(long long num) : num_(num), den_(1) {} // NOLINT(google-explicit-constructor)

    long long num() const { return num_; }
    long long den() const { return den_; }
    double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    Rational operator+(const Rational &o) const;
    Rational operator-(const Rational &o) const;
    Rational operator*(const Rational &o) const;
    Rational operator/(const Rational &o) const;
    bool operator==(const Rational &o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational &o) const { return !(*this == o); }
    bool operator<(const Rational &o) const;

  private:
    long long num_;
    long long den_; // > 0
};

/// Network parameters of a cyclic wrap-around MACC instance.
///
/// K users and caches, each user reads r consecutive caches, t = KM/N is the
/// integer cache fraction, L transmit antennas, N library files.
struct NetworkParams {
    int K = 0;
    int r = 1;
    int t = 0;
    int L = 1;
    int N = 0; // defaults to K when left at 0

    int files() const { return N > 0 ? N : K; }

    // Throws std::invalid_argument on violation. Constructions require t >= 1;
    // metric/comparison paths accept t = 0.
    void validate(bool allow_zero_t = false) const;
};

// Star token in delivery/EPDA cell grids (integers are in [1, S]).
inline constexpr int kStar = 0;

/// F x K star/null grid prescribing cache placement (conditions B1-B2).
struct CachingArray {
    int K = 0;
    int F = 0;
    int Z = 0;
    int r = 1;
    std::vector<std::uint8_t> stars;      // F*K row-major, 1 = star
    std::vector<std::string> row_labels;  // empty or size F

    bool star(int j, int k) const { return stars[idx(j, k)] != 0; }
    void set_star(int j, int k) { stars[idx(j, k)] = 1; }
    std::size_t idx(int j, int k) const { return static_cast<std::size_t>(j - 1) * K + (k - 1); }
};

/// F x K star/integer grid prescribing side information and transmissions
/// (conditions D1-D3). No empty cells. Linked to the caching array it was
/// derived from by parameters and content hash.
struct DeliveryArray {
    int K = 0;
    int F = 0;
    int Z = 0; // stars per column of the linked caching array (column star count is r*Z)
    int r = 1;
    int S = 0;
    int L = 1;
    std::vector<int> cells; // F*K row-major, kStar or integer in [1,S]
    std::vector<std::string> row_labels;
    std::string caching_hash;

    int at(int j, int k) const { return cells[idx(j, k)]; }
    bool star(int j, int k) const { return at(j, k) == kStar; }
    void set(int j, int k, int v) { cells[idx(j, k)] = v; }
    std::size_t idx(int j, int k) const { return static_cast<std::size_t>(j - 1) * K + (k - 1); }
};

/// K x F extended placement delivery array satisfying C1-C4.
struct Epda {
    int K = 0;
    int F = 0;
    int Z = 0;
    int L = 1;
    int S = 0;
    std::vector<int> cells; // F*K row-major, kStar or integer in [1,S]

    int at(int j, int k) const { return cells[idx(j, k)]; }
    bool star(int j, int k) const { return at(j, k) == kStar; }
    void set(int j, int k, int v) { cells[idx(j, k)] = v; }
    std::size_t idx(int j, int k) const { return static_cast<std::size_t>(j - 1) * K + (k - 1); }
};

/// Exact performance numbers of a (C, D) scheme.
struct SchemeMetrics {
    long long F = 0;
    long long S = 0;
    Rational ndt;             // S/F
    Rational dof;             // K(1 - rt/K) / ndt
    Rational optimal_bound;   // (K - rt)/(rt + L)
    Rational memory_ratio;    // Z/F
    std::map<int, long long> occurrences;
    bool optimal = false;     // ndt == optimal_bound
};

// ---- interchange format -------------------------------------------------

std::string serialize(const CachingArray &c);
std::string serialize(const DeliveryArray &d);
std::string serialize(const Epda &a);

// Deserializers re-validate every invariant checkable from the document alone
// and throw std::runtime_error naming the violated condition and cell.
CachingArray parse_caching(const std::string &doc);
DeliveryArray parse_delivery(const std::string &doc);
Epda parse_epda(const std::string &doc);

using AnyArray = std::variant<CachingArray, DeliveryArray, Epda>;
AnyArray parse_any(const std::string &doc);

/// FNV-1a digest of the canonical serialization, rendered as hex. Used to link
/// a delivery array to the caching array it was built from.
std::string content_hash(const CachingArray &c);

} // namespace macc

#endif

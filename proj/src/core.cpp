// SPDX-License-Identifier: Apache-2.0

#include "macc/core.hpp"

#include <cstdio>
#include <functional>
#include <numeric>
#include <sstream>

#include "macc/verify.hpp"

namespace macc {

int cyclic_mod(long long i, int K) {
    if (K <= 0) throw std::invalid_argument("cyclic_mod: modulus must be positive");
    long long m = i % K;
    if (m < 0) m += K;
    return m == 0 ? K : static_cast<int>(m);
}

std::vector<int> cyclic_interval(int a, int b, int K) {
    if (K <= 0) throw std::invalid_argument("cyclic_interval: modulus must be positive");
    int len = cyclic_mod(static_cast<long long>(b) - a, K) % K + 1; // <b-a>_K + 1, full cycle when a==b+K
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) out.push_back(cyclic_mod(static_cast<long long>(a) + i, K));
    return out;
}

Rational::Rational(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    num_ = num / g;
    den_ = den / g;
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator+(const Rational &o) const { return {num_ * o.den_ + o.num_ * den_, den_ * o.den_}; }
Rational Rational::operator-(const Rational &o) const { return {num_ * o.den_ - o.num_ * den_, den_ * o.den_}; }
Rational Rational::operator*(const Rational &o) const { return {num_ * o.num_, den_ * o.den_}; }
Rational Rational::operator/(const Rational &o) const {
    if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
    return {num_ * o.den_, den_ * o.num_};
}
bool Rational::operator<(const Rational &o) const { return num_ * o.den_ < o.num_ * den_; }

void NetworkParams::validate(bool allow_zero_t) const {
    if (K < 1) throw std::invalid_argument("params: K must be positive");
    if (r < 1 || r >= K) throw std::invalid_argument("params: need 1 <= r < K");
    if (L < 1) throw std::invalid_argument("params: L must be positive");
    if (t < (allow_zero_t ? 0 : 1)) throw std::invalid_argument("params: t out of range");
    if (static_cast<long long>(r) * t > K) throw std::invalid_argument("params: need r*t <= K");
    if (N < 0) throw std::invalid_argument("params: N must be positive");
}

// ---- interchange format -------------------------------------------------
//
//   macc-array v1
//   kind caching|delivery|epda
//   <key> <value>        (K F Z r [S L] [caching <hash>])
//   rows
//   <label> | <tok> ...  (tokens: '*' star, '.' null, or an integer)
//   end

namespace {

const char *kMagic = "macc-array v1";

void emit_rows(std::ostringstream &os, int F, int K, const std::vector<std::string> &labels,
               const std::function<std::string(int, int)> &tok) {
    os << "rows\n";
    for (int j = 1; j <= F; ++j) {
        os << (labels.empty() ? std::string("-") : labels[static_cast<std::size_t>(j - 1)]) << " |";
        for (int k = 1; k <= K; ++k) os << ' ' << tok(j, k);
        os << '\n';
    }
    os << "end\n";
}

struct Doc {
    std::string kind;
    std::map<std::string, std::string> header;
    std::vector<std::string> labels;
    std::vector<std::vector<std::string>> rows;
};

Doc read_doc(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kMagic)
        throw std::runtime_error("malformed document: missing 'macc-array v1' header");
    Doc d;
    bool in_rows = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (!in_rows) {
            if (line == "rows") {
                in_rows = true;
                continue;
            }
            std::istringstream ls(line);
            std::string key, value;
            ls >> key;
            std::getline(ls, value);
            if (!value.empty() && value.front() == ' ') value.erase(0, 1);
            if (key == "kind")
                d.kind = value;
            else
                d.header[key] = value;
            continue;
        }
        if (line == "end") return d;
        auto sep = line.find(" | ");
        if (sep == std::string::npos) throw std::runtime_error("malformed document: row without ' | ' separator");
        d.labels.push_back(line.substr(0, sep));
        std::istringstream ls(line.substr(sep + 3));
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        d.rows.push_back(std::move(toks));
    }
    throw std::runtime_error("malformed document: missing 'end'");
}

int header_int(const Doc &d, const std::string &key) {
    auto it = d.header.find(key);
    if (it == d.header.end()) throw std::runtime_error("malformed document: missing field '" + key + "'");
    return std::stoi(it->second);
}

bool all_default_labels(const std::vector<std::string> &labels) {
    for (const auto &l : labels)
        if (l != "-") return false;
    return true;
}

void require_clean(const std::vector<Violation> &vs) {
    if (!vs.empty()) throw std::runtime_error("invariant violation: " + to_string(vs.front()));
}

} // namespace

std::string serialize(const CachingArray &c) {
    std::ostringstream os;
    os << kMagic << "\nkind caching\nK " << c.K << "\nF " << c.F << "\nZ " << c.Z << "\nr " << c.r << '\n';
    emit_rows(os, c.F, c.K, c.row_labels, [&](int j, int k) { return c.star(j, k) ? "*" : "."; });
    return os.str();
}

std::string serialize(const DeliveryArray &d) {
    std::ostringstream os;
    os << kMagic << "\nkind delivery\nK " << d.K << "\nF " << d.F << "\nZ " << d.Z << "\nr " << d.r << "\nS " << d.S
       << "\nL " << d.L << '\n';
    if (!d.caching_hash.empty()) os << "caching " << d.caching_hash << '\n';
    emit_rows(os, d.F, d.K, d.row_labels,
              [&](int j, int k) { return d.star(j, k) ? std::string("*") : std::to_string(d.at(j, k)); });
    return os.str();
}

std::string serialize(const Epda &a) {
    std::ostringstream os;
    os << kMagic << "\nkind epda\nK " << a.K << "\nF " << a.F << "\nZ " << a.Z << "\nL " << a.L << "\nS " << a.S
       << '\n';
    emit_rows(os, a.F, a.K, {}, [&](int j, int k) { return a.star(j, k) ? std::string("*") : std::to_string(a.at(j, k)); });
    return os.str();
}

namespace {

// Shared grid reader for delivery/epda bodies. allow_null admits '.' cells.
template <typename Array>
void read_cells(Array &arr, const Doc &d, bool allow_null, const char *null_message) {
    if (static_cast<int>(d.rows.size()) != arr.F) throw std::runtime_error("malformed document: row count != F");
    arr.cells.assign(static_cast<std::size_t>(arr.F) * arr.K, kStar);
    for (int j = 1; j <= arr.F; ++j) {
        const auto &row = d.rows[static_cast<std::size_t>(j - 1)];
        if (static_cast<int>(row.size()) != arr.K) throw std::runtime_error("malformed document: row width != K");
        for (int k = 1; k <= arr.K; ++k) {
            const std::string &t = row[static_cast<std::size_t>(k - 1)];
            if (t == "*") continue;
            if (t == ".") throw std::runtime_error(null_message);
            int v = 0;
            try {
                v = std::stoi(t);
            } catch (const std::exception &) {
                throw std::runtime_error("malformed document: bad cell token '" + t + "'");
            }
            if (v < 1 || v > arr.S)
                throw std::runtime_error("invariant violation: integer " + t + " at row " + std::to_string(j) +
                                         ", column " + std::to_string(k) + " outside [1,S]");
            arr.set(j, k, v);
        }
    }
    (void)allow_null;
}

} // namespace

CachingArray parse_caching(const std::string &doc) {
    Doc d = read_doc(doc);
    if (d.kind != "caching") throw std::runtime_error("expected kind 'caching', got '" + d.kind + "'");
    CachingArray c;
    c.K = header_int(d, "K");
    c.F = header_int(d, "F");
    c.Z = header_int(d, "Z");
    c.r = header_int(d, "r");
    if (c.K < 1 || c.F < 0) throw std::runtime_error("malformed document: bad dimensions");
    if (static_cast<int>(d.rows.size()) != c.F) throw std::runtime_error("malformed document: row count != F");
    c.stars.assign(static_cast<std::size_t>(c.F) * c.K, 0);
    for (int j = 1; j <= c.F; ++j) {
        const auto &row = d.rows[static_cast<std::size_t>(j - 1)];
        if (static_cast<int>(row.size()) != c.K) throw std::runtime_error("malformed document: row width != K");
        for (int k = 1; k <= c.K; ++k) {
            const std::string &t = row[static_cast<std::size_t>(k - 1)];
            if (t == "*")
                c.set_star(j, k);
            else if (t != ".")
                throw std::runtime_error("malformed document: caching arrays hold only '*' and '.', got '" + t + "'");
        }
    }
    if (!all_default_labels(d.labels)) c.row_labels = d.labels;
    require_clean(check_caching_array(c, c.r));
    return c;
}

DeliveryArray parse_delivery(const std::string &doc) {
    Doc d = read_doc(doc);
    if (d.kind != "delivery") throw std::runtime_error("expected kind 'delivery', got '" + d.kind + "'");
    DeliveryArray arr;
    arr.K = header_int(d, "K");
    arr.F = header_int(d, "F");
    arr.Z = header_int(d, "Z");
    arr.r = header_int(d, "r");
    arr.S = header_int(d, "S");
    arr.L = header_int(d, "L");
    if (auto it = d.header.find("caching"); it != d.header.end()) arr.caching_hash = it->second;
    read_cells(arr, d, false, "delivery arrays admit no null cells");
    if (!all_default_labels(d.labels)) arr.row_labels = d.labels;
    // D1 proper needs the linked caching array; the star-count consequence of
    // B1/B2 plus D2/D3 are checkable from the document alone.
    for (int k = 1; k <= arr.K; ++k) {
        int stars = 0;
        for (int j = 1; j <= arr.F; ++j) stars += arr.star(j, k) ? 1 : 0;
        if (stars != arr.r * arr.Z)
            throw std::runtime_error("invariant violation: D1: column " + std::to_string(k) + " has " +
                                     std::to_string(stars) + " stars, expected r*Z = " + std::to_string(arr.r * arr.Z));
    }
    Epda view{arr.K, arr.F, arr.r * arr.Z, arr.L, arr.S, arr.cells};
    for (const auto &v : check_epda(view)) {
        Violation named = v;
        if (v.condition == "C2") named.condition = "D2";
        if (v.condition == "C3") named.condition = "D2";
        if (v.condition == "C4") named.condition = "D3";
        if (v.condition != "C1") throw std::runtime_error("invariant violation: " + to_string(named));
    }
    return arr;
}

Epda parse_epda(const std::string &doc) {
    Doc d = read_doc(doc);
    if (d.kind != "epda") throw std::runtime_error("expected kind 'epda', got '" + d.kind + "'");
    Epda a;
    a.K = header_int(d, "K");
    a.F = header_int(d, "F");
    a.Z = header_int(d, "Z");
    a.L = header_int(d, "L");
    a.S = header_int(d, "S");
    read_cells(a, d, false, "EPDAs admit no null cells");
    require_clean(check_epda(a));
    return a;
}

AnyArray parse_any(const std::string &doc) {
    Doc d = read_doc(doc);
    if (d.kind == "caching") return parse_caching(doc);
    if (d.kind == "delivery") return parse_delivery(doc);
    if (d.kind == "epda") return parse_epda(doc);
    throw std::runtime_error("unknown array kind '" + d.kind + "'");
}

std::string content_hash(const CachingArray &c) {
    std::string s = serialize(c);
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace macc

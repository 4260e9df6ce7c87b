#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library's enumerators, predicates, or series code.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <functional>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using Parts = std::vector<std::uint64_t>;

/// Every partition of n in reverse-lexicographic order via the classic successor rule.
inline std::vector<Parts> all_partitions(std::uint64_t n) {
    std::vector<Parts> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    Parts p{n};
    for (;;) {
        out.push_back(p);
        std::uint64_t ones = 0;
        while (!p.empty() && p.back() == 1) {
            p.pop_back();
            ++ones;
        }
        if (p.empty())
            break;
        std::uint64_t v = --p.back();
        std::uint64_t rest = ones + 1;
        while (rest > v) {
            p.push_back(v);
            rest -= v;
        }
        if (rest > 0)
            p.push_back(rest);
    }
    return out;
}

inline std::map<std::uint64_t, std::uint64_t> counts(const Parts& p) {
    std::map<std::uint64_t, std::uint64_t> c;
    for (auto v : p)
        ++c[v];
    return c;
}

inline bool in_A(const Parts& p, std::uint64_t k) {
    for (auto [v, c] : counts(p))
        if (c > k - 1) return false;
    return true;
}

inline bool in_B(const Parts& p, std::uint64_t k) {
    for (auto v : p)
        if (v % k == 0) return false;
    return true;
}

inline bool in_Bprime(const Parts& p, std::uint64_t k) {
    return !p.empty() && in_B(p, k) && (p.front() + 1) % k == 0;
}

inline bool in_C(const Parts& p, std::uint64_t k) {
    if (p.empty() || p.front() % k != 0) return false;
    for (auto [v, c] : counts(p))
        if (v * k <= p.front() && c > k - 1) return false;
    return true;
}

/// literal = false: values v with v <= i-1 restricted, where m = ki - r.
/// literal = true:  values v with v <= floor(m/k) - 1 restricted.
inline bool in_E(const Parts& p, std::uint64_t k, bool literal = false) {
    if (p.empty() || p.front() % k == 0) return false;
    std::uint64_t m = p.front();
    std::uint64_t i = (m + k - 1) / k;
    for (auto [v, c] : counts(p)) {
        bool restricted = literal ? (v + 1 <= m / k) : (v <= i - 1);
        if (restricted && c > k - 1) return false;
    }
    return true;
}

inline std::uint64_t count_if(std::uint64_t n, const std::function<bool(const Parts&)>& pred) {
    std::uint64_t total = 0;
    for (const auto& p : all_partitions(n))
        total += pred(p) ? 1 : 0;
    return total;
}

/// Class D: positive-part members (smallest exactly twice, others once) plus,
/// for every distinct-part partition of n, the same with two zeros appended.
inline std::uint64_t count_D(std::uint64_t n) {
    std::uint64_t total = 0;
    for (const auto& p : all_partitions(n)) {
        auto c = counts(p);
        bool distinct = true;
        for (auto [v, m] : c) distinct = distinct && m == 1;
        if (distinct) ++total;
        if (!p.empty() && c.begin()->second == 2) {
            bool rest_once = true;
            for (auto it = std::next(c.begin()); it != c.end(); ++it) rest_once = rest_once && it->second == 1;
            if (rest_once) ++total;
        }
    }
    return total;
}

/// p(n) by the coin-change recurrence over part sizes.
inline std::vector<std::uint64_t> partition_numbers(std::uint64_t n_max) {
    std::vector<std::uint64_t> ways(n_max + 1, 0);
    ways[0] = 1;
    for (std::uint64_t part = 1; part <= n_max; ++part)
        for (std::uint64_t n = part; n <= n_max; ++n)
            ways[n] += ways[n - part];
    return ways;
}

/// Naive int64 polynomial arithmetic modulo q^{order+1}.
using Poly = std::vector<std::int64_t>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

/// Multiplies by 1/(1 - q^e) through the geometric series.
inline Poly poly_div_one_minus(Poly a, std::size_t e) {
    for (std::size_t n = e; n < a.size(); ++n)
        a[n] += a[n - e];
    return a;
}

/// Random partition with parts drawn from [1, max_part].
inline Parts random_parts(std::mt19937_64& rng, std::size_t max_len, std::uint64_t max_part) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::uint64_t> part(1, max_part);
    Parts p(len(rng));
    for (auto& v : p) v = part(rng);
    std::sort(p.rbegin(), p.rend());
    return p;
}

}  // namespace oracle

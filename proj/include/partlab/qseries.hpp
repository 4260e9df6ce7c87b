#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "partlab/truncated_series.hpp"

namespace partlab {

using BigInt = boost::multiprecision::cpp_int;
using Series = TruncatedSeries<BigInt>;

/// prod_{j=0}^{count-1} (1 - q^{start + j*step}) mod q^{order+1}.
/// (q;q)_m = poch(1,1,m), (q^k;q^k)_m = poch(k,k,m), (q^{i+1};q)_m = poch(i+1,1,m).
Series poch(std::size_t start, std::size_t step, std::size_t count, std::size_t order);

/// sum_{i>=1} (q^k;q^k)_{i-1} q^{ki-1} / (q;q)_{ki-1}; counts B'_k(n).
Series gf_bprime(std::size_t k, std::size_t order);

/// sum_{i>=0} (q^k;q^k)_i / (q;q)_i * q^{ki} / (q^{i+1};q)_{(k-1)i}; counts C_k(n) for n >= 1, c_0 = 1.
Series gf_c(std::size_t k, std::size_t order);

/// prod_{k !| j} 1/(1-q^j); counts B_k(n).
Series gf_b(std::size_t k, std::size_t order);

/// prod_j (1-q^{kj})/(1-q^j); counts A_k(n).
Series gf_a(std::size_t k, std::size_t order);

enum class SeriesKind { A, B, BPrime, C };

/// CLI names: A, B, Bprime, C.
SeriesKind parse_series_kind(std::string_view name);
std::string_view series_kind_name(SeriesKind kind);
Series generating_function(SeriesKind kind, std::size_t k, std::size_t order);

/// Negative-control hook for verify_telescoping.
enum class Perturbation {
    none,
    drop_factor,  // drops the last (q^k;q^k) factor on the right of the per-term step
};

struct TelescopingDiscrepancy {
    std::string check;             // "termwise", "shifted-sum", or "c-summand"
    std::optional<std::size_t> i;  // summation index, when the check is per term
    std::size_t n;                 // first differing coefficient
    BigInt lhs;
    BigInt rhs;
};

struct TelescopingReport {
    std::size_t k;
    std::size_t order;
    std::size_t checks_run = 0;
    std::optional<TelescopingDiscrepancy> discrepancy;

    bool pass() const { return !discrepancy.has_value(); }
};

/// Checks, as truncated series:
///   termwise     (q^k;q^k)_{i-1} q^{ki} / (q;q)_{ki-1} = (q^k;q^k)_i q^{ki} / (q;q)_{ki}   (i >= 1)
///   shifted-sum  q * gf_bprime = gf_c - 1
///   c-summand    (q^k;q^k)_i q^{ki} / ((q;q)_i (q^{i+1};q)_{(k-1)i}) = (q^k;q^k)_i q^{ki} / (q;q)_{ki}   (i >= 0)
/// and reports the first discrepancy.
TelescopingReport verify_telescoping(std::size_t k, std::size_t order,
                                     Perturbation perturbation = Perturbation::none);

}  // namespace partlab

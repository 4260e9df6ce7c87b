#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "partlab/bijections.hpp"
#include "partlab/classes.hpp"
#include "partlab/limits.hpp"
#include "partlab/qseries.hpp"

namespace partlab {

enum class TheoremId {
    thm1_1,        // #A(n) = #B(n) = #C(n+1) = #D(n+1)/2
    thm1_2,        // #A_k(n) = #B_k(n)
    thm1_3,        // #B_k(n) = #E_k(n), n >= 1
    thm1_4,        // #B'_k(n) = #C_k(n+1)
    corollary_k2,  // thm1_3 at k = 2
    ek_threshold_experiment,
};

/// CLI names: thm1.1, thm1.2, thm1.3, thm1.4, corollary-k2, ek-threshold-experiment.
TheoremId parse_theorem_id(std::string_view name);
std::string_view theorem_id_name(TheoremId id);

struct NamedCount {
    std::string name;
    BigInt value;
};

struct ReportRow {
    part_t n;
    BigInt lhs;
    BigInt rhs;
    bool equal;
    bool counted;  // false for informational rows that the theorem does not claim
    std::vector<NamedCount> detail;
};

struct BijectionFailure {
    std::string kind;  // "membership", "round-trip", "weight", "injectivity", "domain"
    Partition witness;
    std::string detail;
};

struct BijectionStats {
    MapKind forward;
    std::uint64_t forward_attempted = 0;
    std::uint64_t forward_passed = 0;
    std::uint64_t inverse_attempted = 0;
    std::uint64_t inverse_passed = 0;
    std::uint64_t failure_count = 0;
    /// Sorted by (weight, lexicographic); the first entry is the minimal witness.
    std::vector<BijectionFailure> failures;
};

/// Outcome of comparing the literal E_k threshold against #B_k.
struct ThresholdFinding {
    std::optional<part_t> first_literal_mismatch;
    BigInt regular_count;
    BigInt literal_count;
    /// Literal-variant members rejected by the proof variant at that n.
    std::vector<Partition> witnesses;
};

struct VerificationReport {
    TheoremId theorem;
    part_t k;
    part_t n_min;
    part_t n_max;
    std::vector<ReportRow> rows;
    std::optional<BijectionStats> bijection;
    std::optional<ThresholdFinding> threshold_finding;

    /// Every counted row equal and no bijection failure.
    bool pass() const;
};

/// Compares both sides by enumeration for every n in [0, n_max] and, where a
/// bijection is available, runs it exhaustively in both directions. Throws
/// ScaleError when n_max exceeds the sweep bound (or, for thm1_1, the
/// enumeration bound).
VerificationReport verify_theorem(TheoremId id, part_t k, part_t n_max,
                                  const ScaleLimits& limits = ScaleLimits::from_environment());

/// Theorem 1.3 counts under both E_k thresholds for n in [1, n_max].
VerificationReport ek_threshold_experiment(part_t k, part_t n_max,
                                           const ScaleLimits& limits = ScaleLimits::from_environment());

/// Exhaustive two-way sweep of `forward` between the given domain and codomain
/// member lists; failures accumulate into `stats`.
void sweep_bijection(MapKind forward, part_t k, const std::vector<Partition>& domain,
                     const std::vector<Partition>& codomain, BijectionStats& stats);

/// p(n) by Euler's pentagonal-number recurrence.
BigInt oracle_partition_count(part_t n);

}  // namespace partlab

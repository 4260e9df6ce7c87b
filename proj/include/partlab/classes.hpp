#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "partlab/limits.hpp"
#include "partlab/partition.hpp"

namespace partlab {

/// Partition families.
///   A      every value appears at most k-1 times (k-distinct)
///   B      no part divisible by k (k-regular)
///   BPrime k-regular with largest part = -1 mod k
///   C      largest part m a positive multiple of k, values <= m/k appear at most k-1 times
///   D      nonnegative parts, smallest value exactly twice, all others once (k = 2 chain only)
///   E      largest part m not divisible by k, small values appear at most k-1 times
enum class Family { A, B, BPrime, C, D, E };

/// Which bound restricts the small values of an E_k partition with largest part m.
///   proof:   values <= floor(m/k)       (i-1 where m = ki-r, 1 <= r <= k-1)
///   literal: values <= floor(m/k) - 1
enum class EkThreshold { proof, literal };

class ClassSpec {
public:
    /// Throws std::invalid_argument when k < 2 (for families other than D) or
    /// when a literal threshold is requested for a family other than E.
    ClassSpec(Family family, part_t k, EkThreshold threshold = EkThreshold::proof);

    static ClassSpec A(part_t k) { return {Family::A, k}; }
    static ClassSpec B(part_t k) { return {Family::B, k}; }
    static ClassSpec BPrime(part_t k) { return {Family::BPrime, k}; }
    static ClassSpec C(part_t k) { return {Family::C, k}; }
    static ClassSpec D() { return {Family::D, 2}; }
    static ClassSpec E(part_t k, EkThreshold t = EkThreshold::proof) { return {Family::E, k, t}; }

    Family family() const { return family_; }
    part_t k() const { return k_; }
    EkThreshold threshold() const { return threshold_; }

    /// "A_3", "E_2[literal]", "D", ...
    std::string name() const;

    friend bool operator==(const ClassSpec&, const ClassSpec&) = default;

private:
    Family family_;
    part_t k_;
    EkThreshold threshold_;
};

/// CLI names: Ak, Bk, Bpk, Ck, D, Ek. Throws std::invalid_argument otherwise.
Family parse_family(std::string_view name);
std::string_view family_cli_name(Family family);
EkThreshold parse_ek_threshold(std::string_view name);

/// Largest value whose multiplicity an E_k partition with largest part m restricts;
/// nullopt when no value is restricted.
std::optional<part_t> ek_restricted_bound(part_t largest, part_t k, EkThreshold threshold);

/// First violated membership condition, or nullopt for members.
/// Throws std::invalid_argument for zero parts outside class D.
std::optional<std::string> membership_violation(const Partition& p, const ClassSpec& spec);

bool is_member(const Partition& p, const ClassSpec& spec);

/// Visits every member of the class with weight n, in lexicographically
/// decreasing order, without storing them. Throws ScaleError above the bound.
void for_each_member(const ClassSpec& spec, part_t n,
                     const std::function<void(const Partition&)>& visit,
                     const ScaleLimits& limits = ScaleLimits::from_environment());

std::vector<Partition> enumerate(const ClassSpec& spec, part_t n,
                                 const ScaleLimits& limits = ScaleLimits::from_environment());

std::uint64_t count(const ClassSpec& spec, part_t n,
                    const ScaleLimits& limits = ScaleLimits::from_environment());

/// Every partition of n, lexicographically decreasing.
void for_each_partition(part_t n, const std::function<void(const Partition&)>& visit,
                        const ScaleLimits& limits = ScaleLimits::from_environment());

}  // namespace partlab

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "partlab/classes.hpp"
#include "partlab/partition.hpp"

namespace partlab {

/// t = k^exponent * base with k not dividing base.
struct KAdic {
    part_t exponent;
    part_t base;
};

KAdic k_adic_decompose(part_t t, part_t k);

/// k^a copies of b, where t = k^a * b and k does not divide b.
Partition alpha_split(part_t t, part_t k);

/// Threshold flavour for the multiplicity regrouping: the top digit position t*
/// is the least j with k^j s >= i (non_strict) or k^j s > i (strict).
enum class Threshold { non_strict, strict };

/// Regroups s^f by the base-k digits f_0..f_m of f:
/// (s^{f_0}, (ks)^{f_1}, ..., (k^{t*-1}s)^{f_{t*-1}}, (k^{t*}s)^{floor(f / k^{t*})}).
/// Throws DomainError if k divides s, std::invalid_argument if f or i is 0.
Partition beta_regroup(part_t s, part_t f, part_t i, part_t k, Threshold threshold);

/// Smallest j >= 0 with k^j s >= i (or > i when strict).
part_t beta_threshold_exponent(part_t s, part_t i, part_t k, Threshold threshold);

/// Base-k digits of f, least significant first. Empty for f = 0.
std::vector<part_t> base_k_digits(part_t f, part_t k);

enum class MapKind { psi, psi_inv, phi, phi_inv, glaisher_to_regular, glaisher_to_distinct };

/// CLI names: psi, psi-inv, phi, phi-inv, glaisher-regular, glaisher-distinct.
MapKind parse_map_kind(std::string_view name);
std::string_view map_kind_name(MapKind kind);

/// Source and target classes of a map (E_k uses the proof threshold).
ClassSpec map_domain(MapKind kind, part_t k);
ClassSpec map_codomain(MapKind kind, part_t k);
MapKind inverse_of(MapKind kind);

namespace trace {

/// A source part split by alpha.
struct Split {
    part_t source;
    KAdic decomposition;
    Partition emitted;
};

/// One value block s^f regrouped by beta.
struct Regroup {
    part_t value;
    part_t multiplicity;
    std::vector<part_t> digits;
    part_t threshold_exponent;
    Partition emitted;
};

/// The distinguished largest part of phi (ki -> ki-1) or phi^{-1} (ki-1 -> ki).
struct LargestPart {
    part_t source;
    Partition emitted;
};

/// Glaisher merge of one value: `multiplicity` copies (including those carried
/// up from smaller values) leave `multiplicity mod k` copies and carry the rest.
struct Merge {
    part_t value;
    part_t multiplicity;
    part_t carried;
    Partition emitted;
};

using Step = std::variant<Split, Regroup, LargestPart, Merge>;

const Partition& emitted(const Step& step);

}  // namespace trace

/// Auditable record of one map application.
struct BijectionTrace {
    MapKind kind;
    part_t k;
    Partition input;
    std::vector<trace::Step> steps;
    Partition output;
};

/// Applies `kind` after checking that `input` lies in its domain.
/// Throws DomainError naming the first violated condition otherwise.
BijectionTrace apply_traced(MapKind kind, const Partition& input, part_t k);
Partition apply(MapKind kind, const Partition& input, part_t k);

// E_k -> B_k: union of alpha_split over all parts.
Partition psi(const Partition& lambda, part_t k);
// B_k -> E_k: beta_regroup each value block with i = ceil(mu_1 / k), non-strict.
Partition psi_inv(const Partition& mu, part_t k);
// C_k(n+1) -> B'_k(n): one largest part ki -> ki-1, the rest split by alpha.
Partition phi(const Partition& lambda, part_t k);
// B'_k(n) -> C_k(n+1): one largest part ki-1 -> ki, the rest regrouped strictly.
Partition phi_inv(const Partition& mu, part_t k);
// A_k -> B_k: union of alpha_split over all parts.
Partition glaisher_to_regular(const Partition& lambda, part_t k);
// B_k -> A_k: merge k equal parts t^k into kt until every multiplicity is < k.
Partition glaisher_to_distinct(const Partition& mu, part_t k);

}  // namespace partlab

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace partlab {

using part_t = std::uint64_t;

/// Whether a partition may contain the value 0. Only class D uses zero parts.
enum class ZeroParts { forbidden, allowed };

struct ValueCount {
    part_t value;
    part_t count;

    friend bool operator==(const ValueCount&, const ValueCount&) = default;
};

/// Multiplicity view (1^{f(1)}, 2^{f(2)}, ...) of a partition, values increasing.
class FrequencyView {
public:
    FrequencyView() = default;
    explicit FrequencyView(std::vector<ValueCount> pairs);

    std::span<const ValueCount> pairs() const { return pairs_; }
    part_t multiplicity(part_t value) const;
    std::vector<part_t> expand() const;

    auto begin() const { return pairs_.begin(); }
    auto end() const { return pairs_.end(); }
    std::size_t size() const { return pairs_.size(); }

    friend bool operator==(const FrequencyView&, const FrequencyView&) = default;

private:
    std::vector<ValueCount> pairs_;
};

/// A finite multiset of integer parts stored weakly decreasing, with its weight cached.
class Partition {
public:
    Partition() = default;

    /// Sorts and validates. Throws std::invalid_argument on negative values,
    /// or on zeros when `zeros` is forbidden.
    static Partition from_parts(std::span<const std::int64_t> values,
                                ZeroParts zeros = ZeroParts::forbidden);
    static Partition from_parts(std::initializer_list<std::int64_t> values,
                                ZeroParts zeros = ZeroParts::forbidden);

    /// Trusted constructor for parts that are already weakly decreasing and valid.
    static Partition from_sorted(std::vector<part_t> parts,
                                 ZeroParts zeros = ZeroParts::forbidden);

    static Partition from_frequencies(const FrequencyView& view);

    std::span<const part_t> parts() const { return parts_; }
    part_t weight() const { return weight_; }
    part_t largest_part() const { return parts_.empty() ? 0 : parts_.front(); }
    part_t smallest_part() const { return parts_.empty() ? 0 : parts_.back(); }
    std::size_t num_parts() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    ZeroParts zero_parts() const { return zeros_; }
    bool has_zero_part() const { return !parts_.empty() && parts_.back() == 0; }

    part_t frequency(part_t value) const;
    FrequencyView frequencies() const;

    part_t operator[](std::size_t j) const { return parts_[j]; }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    /// Lexicographic on the weakly decreasing part sequence.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<part_t> parts_;
    part_t weight_ = 0;
    ZeroParts zeros_ = ZeroParts::forbidden;
};

/// Multiset union: f_{a∪b}(t) = f_a(t) + f_b(t).
Partition multiset_union(const Partition& a, const Partition& b);

/// Union of an arbitrary number of partitions.
Partition multiset_union(std::span<const Partition> pieces);

/// Ordering used for witness selection: by weight, then lexicographically.
bool weight_then_lex_less(const Partition& a, const Partition& b);

}  // namespace partlab

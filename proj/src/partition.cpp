#include "partlab/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace partlab {

FrequencyView::FrequencyView(std::vector<ValueCount> pairs) : pairs_(std::move(pairs)) {
    for (std::size_t j = 0; j < pairs_.size(); ++j) {
        if (pairs_[j].count == 0)
            throw std::invalid_argument("frequency view: multiplicity must be positive");
        if (j > 0 && pairs_[j - 1].value >= pairs_[j].value)
            throw std::invalid_argument("frequency view: values must be strictly increasing");
    }
}

part_t FrequencyView::multiplicity(part_t value) const {
    auto it = std::ranges::lower_bound(pairs_, value, {}, &ValueCount::value);
    return (it != pairs_.end() && it->value == value) ? it->count : 0;
}

std::vector<part_t> FrequencyView::expand() const {
    std::vector<part_t> out;
    for (auto it = pairs_.rbegin(); it != pairs_.rend(); ++it)
        out.insert(out.end(), it->count, it->value);
    return out;
}

Partition Partition::from_parts(std::span<const std::int64_t> values, ZeroParts zeros) {
    std::vector<part_t> parts;
    parts.reserve(values.size());
    for (auto v : values) {
        if (v < 0)
            throw std::invalid_argument("partition: negative part " + std::to_string(v));
        if (v == 0 && zeros == ZeroParts::forbidden)
            throw std::invalid_argument("partition: zero part not allowed");
        parts.push_back(static_cast<part_t>(v));
    }
    std::ranges::sort(parts, std::greater<>{});
    return from_sorted(std::move(parts), zeros);
}

Partition Partition::from_parts(std::initializer_list<std::int64_t> values, ZeroParts zeros) {
    return from_parts(std::span<const std::int64_t>(values.begin(), values.size()), zeros);
}

Partition Partition::from_sorted(std::vector<part_t> parts, ZeroParts zeros) {
    Partition p;
    p.parts_ = std::move(parts);
    p.zeros_ = zeros;
    p.weight_ = std::accumulate(p.parts_.begin(), p.parts_.end(), part_t{0});
    return p;
}

Partition Partition::from_frequencies(const FrequencyView& view) {
    bool zero = view.size() > 0 && view.pairs().front().value == 0;
    return from_sorted(view.expand(), zero ? ZeroParts::allowed : ZeroParts::forbidden);
}

part_t Partition::frequency(part_t value) const {
    auto [lo, hi] = std::ranges::equal_range(parts_, value, std::greater<>{});
    return static_cast<part_t>(hi - lo);
}

FrequencyView Partition::frequencies() const {
    std::vector<ValueCount> pairs;
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
        if (!pairs.empty() && pairs.back().value == *it)
            ++pairs.back().count;
        else
            pairs.push_back({*it, 1});
    }
    return FrequencyView(std::move(pairs));
}

Partition multiset_union(const Partition& a, const Partition& b) {
    std::vector<part_t> merged;
    merged.reserve(a.num_parts() + b.num_parts());
    std::ranges::merge(a.parts(), b.parts(), std::back_inserter(merged), std::greater<>{});
    bool zero = a.zero_parts() == ZeroParts::allowed || b.zero_parts() == ZeroParts::allowed;
    return Partition::from_sorted(std::move(merged), zero ? ZeroParts::allowed : ZeroParts::forbidden);
}

Partition multiset_union(std::span<const Partition> pieces) {
    std::vector<part_t> all;
    bool zero = false;
    for (const auto& p : pieces) {
        all.insert(all.end(), p.parts().begin(), p.parts().end());
        zero = zero || p.zero_parts() == ZeroParts::allowed;
    }
    std::ranges::sort(all, std::greater<>{});
    return Partition::from_sorted(std::move(all), zero ? ZeroParts::allowed : ZeroParts::forbidden);
}

bool weight_then_lex_less(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight())
        return a.weight() < b.weight();
    return a < b;
}

}  // namespace partlab

#include "partlab/classes.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

#include "partlab/errors.hpp"

namespace partlab {

ClassSpec::ClassSpec(Family family, part_t k, EkThreshold threshold)
    : family_(family), k_(family == Family::D ? 2 : k), threshold_(threshold) {
    if (family != Family::D && k < 2)
        throw std::invalid_argument("class spec: modulus k must be at least 2");
    if (family != Family::E && threshold != EkThreshold::proof)
        throw std::invalid_argument("class spec: threshold variant applies to E_k only");
}

std::string ClassSpec::name() const {
    std::string base;
    switch (family_) {
        case Family::A: base = "A"; break;
        case Family::B: base = "B"; break;
        case Family::BPrime: base = "B'"; break;
        case Family::C: base = "C"; break;
        case Family::D: return "D";
        case Family::E: base = "E"; break;
    }
    base += "_" + std::to_string(k_);
    if (family_ == Family::E && threshold_ == EkThreshold::literal)
        base += "[literal]";
    return base;
}

Family parse_family(std::string_view name) {
    if (name == "Ak") return Family::A;
    if (name == "Bk") return Family::B;
    if (name == "Bpk") return Family::BPrime;
    if (name == "Ck") return Family::C;
    if (name == "D") return Family::D;
    if (name == "Ek") return Family::E;
    throw std::invalid_argument("unknown class \"" + std::string(name) + "\" (expected Ak, Bk, Bpk, Ck, D, Ek)");
}

std::string_view family_cli_name(Family family) {
    switch (family) {
        case Family::A: return "Ak";
        case Family::B: return "Bk";
        case Family::BPrime: return "Bpk";
        case Family::C: return "Ck";
        case Family::D: return "D";
        case Family::E: return "Ek";
    }
    return "?";
}

EkThreshold parse_ek_threshold(std::string_view name) {
    if (name == "proof") return EkThreshold::proof;
    if (name == "literal") return EkThreshold::literal;
    throw std::invalid_argument("unknown E_k threshold \"" + std::string(name) + "\" (expected proof or literal)");
}

std::optional<part_t> ek_restricted_bound(part_t largest, part_t k, EkThreshold threshold) {
    part_t bound = largest / k;
    if (threshold == EkThreshold::literal) {
        if (bound == 0)
            return std::nullopt;
        --bound;
    }
    if (bound == 0)
        return std::nullopt;
    return bound;
}

namespace {

std::string describe_excess(part_t value, part_t count, part_t k) {
    return "value " + std::to_string(value) + " appears " + std::to_string(count) +
           " times (at most " + std::to_string(k - 1) + " allowed)";
}

std::optional<std::string> excess_below(const FrequencyView& freq, part_t bound, part_t k) {
    for (const auto& [value, count] : freq) {
        if (value > bound)
            break;
        if (count > k - 1)
            return describe_excess(value, count, k);
    }
    return std::nullopt;
}

std::optional<std::string> divisible_part(const Partition& p, part_t k) {
    for (auto part : p.parts())
        if (part % k == 0)
            return "part " + std::to_string(part) + " is divisible by " + std::to_string(k);
    return std::nullopt;
}

}  // namespace

std::optional<std::string> membership_violation(const Partition& p, const ClassSpec& spec) {
    const part_t k = spec.k();
    if (spec.family() != Family::D && p.has_zero_part())
        throw std::invalid_argument("zero parts are only meaningful for class D");

    switch (spec.family()) {
        case Family::A:
            return excess_below(p.frequencies(), std::numeric_limits<part_t>::max(), k);
        case Family::B:
            return divisible_part(p, k);
        case Family::BPrime: {
            if (p.empty())
                return "empty partition has no largest part";
            if (auto v = divisible_part(p, k))
                return v;
            if (p.largest_part() % k != k - 1)
                return "largest part " + std::to_string(p.largest_part()) + " is not -1 mod " + std::to_string(k);
            return std::nullopt;
        }
        case Family::C: {
            if (p.empty())
                return "empty partition has no largest part";
            part_t m = p.largest_part();
            if (m % k != 0)
                return "largest part " + std::to_string(m) + " is not a multiple of " + std::to_string(k);
            return excess_below(p.frequencies(), m / k, k);
        }
        case Family::E: {
            if (p.empty())
                return "empty partition has no largest part";
            part_t m = p.largest_part();
            if (m % k == 0)
                return "largest part " + std::to_string(m) + " is divisible by " + std::to_string(k);
            auto bound = ek_restricted_bound(m, k, spec.threshold());
            if (!bound)
                return std::nullopt;
            return excess_below(p.frequencies(), *bound, k);
        }
        case Family::D: {
            if (p.empty())
                return "empty partition has no smallest part";
            auto freq = p.frequencies();
            auto pairs = freq.pairs();
            if (pairs.front().count != 2)
                return "smallest part " + std::to_string(pairs.front().value) + " appears " +
                       std::to_string(pairs.front().count) + " times (exactly 2 required)";
            for (const auto& [value, count] : pairs.subspan(1))
                if (count != 1)
                    return "value " + std::to_string(value) + " is repeated";
            return std::nullopt;
        }
    }
    return std::nullopt;
}

bool is_member(const Partition& p, const ClassSpec& spec) {
    return !membership_violation(p, spec).has_value();
}

namespace {

constexpr part_t unlimited = std::numeric_limits<part_t>::max();

using MaxCount = std::function<part_t(part_t)>;

/// Fills `rest` with values in [min_value, max_value], descending, with
/// multiplicity of v bounded by max_count(v) (0 forbids v).
class Generator {
public:
    Generator(const MaxCount& max_count, part_t min_value, ZeroParts zeros,
              const std::function<void(const Partition&)>& visit)
        : max_count_(max_count), min_value_(min_value), zeros_(zeros), visit_(visit) {}

    void run(std::vector<part_t>& prefix, part_t rest, part_t max_value,
             std::span<const part_t> suffix = {}) {
        prefix_ = &prefix;
        suffix_ = suffix;
        recurse(rest, max_value);
    }

private:
    void recurse(part_t rest, part_t max_value) {
        auto& prefix = *prefix_;
        if (rest == 0) {
            std::vector<part_t> parts = prefix;
            parts.insert(parts.end(), suffix_.begin(), suffix_.end());
            visit_(Partition::from_sorted(std::move(parts), zeros_));
            return;
        }
        for (part_t v = std::min(rest, max_value); v >= min_value_ && v >= 1; --v) {
            part_t limit = std::min(max_count_(v), rest / v);
            for (part_t c = limit; c >= 1; --c) {
                prefix.insert(prefix.end(), c, v);
                recurse(rest - c * v, v - 1);
                prefix.resize(prefix.size() - c);
            }
        }
    }

    const MaxCount& max_count_;
    part_t min_value_;
    ZeroParts zeros_;
    const std::function<void(const Partition&)>& visit_;
    std::vector<part_t>* prefix_ = nullptr;
    std::span<const part_t> suffix_;
};

void check_bound(part_t n, const ScaleLimits& limits) {
    if (n > limits.enumeration_max_n)
        throw ScaleError("n = " + std::to_string(n) + " exceeds the enumeration bound " +
                         std::to_string(limits.enumeration_max_n) + " (set PARTLAB_MAX_N to change it)");
}

// Chooses the largest part m (admissible per `largest_ok`) and its multiplicity,
// then fills the rest below m under the max-count rule built for that m.
void generate_by_largest(part_t n, const std::function<bool(part_t)>& largest_ok,
                         const std::function<MaxCount(part_t)>& rule_for,
                         const std::function<void(const Partition&)>& visit) {
    std::vector<part_t> prefix;
    for (part_t m = n; m >= 1; --m) {
        if (!largest_ok(m))
            continue;
        MaxCount rule = rule_for(m);
        Generator gen(rule, 1, ZeroParts::forbidden, visit);
        part_t limit = std::min(rule(m), n / m);
        for (part_t c = limit; c >= 1; --c) {
            prefix.assign(c, m);
            gen.run(prefix, n - c * m, m - 1);
        }
    }
}

void generate_class_d(part_t n, const std::function<void(const Partition&)>& visit) {
    std::vector<Partition> found;
    auto collect = [&found](const Partition& p) { found.push_back(p); };
    std::function<void(const Partition&)> sink = collect;
    MaxCount distinct = [](part_t) { return part_t{1}; };

    std::vector<part_t> prefix;
    const std::vector<part_t> zeros{0, 0};
    Generator(distinct, 1, ZeroParts::allowed, sink).run(prefix, n, n, zeros);
    for (part_t s = 1; 2 * s <= n; ++s) {
        const std::vector<part_t> smallest{s, s};
        prefix.clear();
        Generator(distinct, s + 1, ZeroParts::allowed, sink).run(prefix, n - 2 * s, n - 2 * s, smallest);
    }
    std::ranges::sort(found, std::greater<>{});
    for (const auto& p : found)
        visit(p);
}

}  // namespace

void for_each_member(const ClassSpec& spec, part_t n, const std::function<void(const Partition&)>& visit,
                     const ScaleLimits& limits) {
    check_bound(n, limits);
    const part_t k = spec.k();
    switch (spec.family()) {
        case Family::A: {
            MaxCount rule = [k](part_t) { return k - 1; };
            if (n == 0) {
                visit(Partition{});
                return;
            }
            generate_by_largest(n, [](part_t) { return true; }, [&](part_t) { return rule; }, visit);
            return;
        }
        case Family::B:
        case Family::BPrime: {
            if (n == 0) {
                if (spec.family() == Family::B)
                    visit(Partition{});
                return;
            }
            MaxCount regular = [k](part_t v) { return v % k == 0 ? part_t{0} : unlimited; };
            bool prime = spec.family() == Family::BPrime;
            generate_by_largest(
                n, [&](part_t m) { return m % k != 0 && (!prime || m % k == k - 1); },
                [&](part_t) { return regular; }, visit);
            return;
        }
        case Family::C: {
            generate_by_largest(
                n, [k](part_t m) { return m % k == 0; },
                [k](part_t m) -> MaxCount {
                    part_t bound = m / k;
                    return [k, bound](part_t v) { return v <= bound ? k - 1 : unlimited; };
                },
                visit);
            return;
        }
        case Family::E: {
            EkThreshold threshold = spec.threshold();
            generate_by_largest(
                n, [k](part_t m) { return m % k != 0; },
                [k, threshold](part_t m) -> MaxCount {
                    part_t bound = ek_restricted_bound(m, k, threshold).value_or(0);
                    return [k, bound](part_t v) { return v <= bound ? k - 1 : unlimited; };
                },
                visit);
            return;
        }
        case Family::D:
            generate_class_d(n, visit);
            return;
    }
}

std::vector<Partition> enumerate(const ClassSpec& spec, part_t n, const ScaleLimits& limits) {
    std::vector<Partition> out;
    for_each_member(spec, n, [&out](const Partition& p) { out.push_back(p); }, limits);
    return out;
}

std::uint64_t count(const ClassSpec& spec, part_t n, const ScaleLimits& limits) {
    std::uint64_t total = 0;
    for_each_member(spec, n, [&total](const Partition&) { ++total; }, limits);
    return total;
}

void for_each_partition(part_t n, const std::function<void(const Partition&)>& visit, const ScaleLimits& limits) {
    check_bound(n, limits);
    MaxCount any = [](part_t) { return unlimited; };
    std::vector<part_t> prefix;
    Generator(any, 1, ZeroParts::forbidden, visit).run(prefix, n, n);
}

}  // namespace partlab

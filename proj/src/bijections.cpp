#include "partlab/bijections.hpp"

#include <map>
#include <stdexcept>

#include "partlab/errors.hpp"

namespace partlab {

KAdic k_adic_decompose(part_t t, part_t k) {
    if (t == 0)
        throw std::invalid_argument("k-adic decomposition of 0");
    if (k < 2)
        throw std::invalid_argument("modulus k must be at least 2");
    KAdic d{0, t};
    while (d.base % k == 0) {
        d.base /= k;
        ++d.exponent;
    }
    return d;
}

Partition alpha_split(part_t t, part_t k) {
    auto d = k_adic_decompose(t, k);
    return Partition::from_sorted(std::vector<part_t>(t / d.base, d.base));
}

std::vector<part_t> base_k_digits(part_t f, part_t k) {
    std::vector<part_t> digits;
    for (; f > 0; f /= k)
        digits.push_back(f % k);
    return digits;
}

part_t beta_threshold_exponent(part_t s, part_t i, part_t k, Threshold threshold) {
    part_t j = 0;
    for (part_t power = s;; power *= k, ++j) {
        bool reached = threshold == Threshold::strict ? power > i : power >= i;
        if (reached)
            return j;
    }
}

namespace {

trace::Regroup regroup(part_t s, part_t f, part_t i, part_t k, Threshold threshold) {
    if (k < 2)
        throw std::invalid_argument("modulus k must be at least 2");
    if (s == 0 || s % k == 0)
        throw DomainError("beta: value " + std::to_string(s) + " is not k-free for k = " + std::to_string(k));
    if (f == 0 || i == 0)
        throw std::invalid_argument("beta: multiplicity and threshold base must be positive");

    trace::Regroup step{s, f, base_k_digits(f, k), beta_threshold_exponent(s, i, k, threshold), {}};
    std::vector<part_t> parts;
    part_t power = 1;
    for (part_t j = 0; j < step.threshold_exponent; ++j, power *= k) {
        part_t digit = j < step.digits.size() ? step.digits[j] : 0;
        parts.insert(parts.begin(), digit, power * s);
    }
    // Digits at positions >= t* collapse into one block of k^{t*} s.
    parts.insert(parts.begin(), f / power, power * s);
    step.emitted = Partition::from_sorted(std::move(parts));
    return step;
}

trace::Split split(part_t t, part_t k) {
    return {t, k_adic_decompose(t, k), alpha_split(t, k)};
}

void require_member(const Partition& p, const ClassSpec& spec, std::string_view map) {
    if (p.has_zero_part())
        throw DomainError(std::string(map) + ": input " + spec.name() + " partitions have no zero parts");
    if (auto why = membership_violation(p, spec))
        throw DomainError(std::string(map) + ": input is not in " + spec.name() + ": " + *why);
}

Partition union_of_steps(const std::vector<trace::Step>& steps) {
    std::vector<Partition> pieces;
    pieces.reserve(steps.size());
    for (const auto& s : steps)
        pieces.push_back(trace::emitted(s));
    return multiset_union(pieces);
}

void split_all(std::span<const part_t> parts, part_t k, std::vector<trace::Step>& steps) {
    for (auto t : parts)
        steps.emplace_back(split(t, k));
}

void regroup_all(const FrequencyView& freq, part_t i, part_t k, Threshold threshold,
                 std::vector<trace::Step>& steps) {
    for (const auto& [value, count] : freq)
        steps.emplace_back(regroup(value, count, i, k, threshold));
}

}  // namespace

Partition beta_regroup(part_t s, part_t f, part_t i, part_t k, Threshold threshold) {
    return regroup(s, f, i, k, threshold).emitted;
}

const Partition& trace::emitted(const Step& step) {
    return std::visit([](const auto& s) -> const Partition& { return s.emitted; }, step);
}

MapKind parse_map_kind(std::string_view name) {
    if (name == "psi") return MapKind::psi;
    if (name == "psi-inv") return MapKind::psi_inv;
    if (name == "phi") return MapKind::phi;
    if (name == "phi-inv") return MapKind::phi_inv;
    if (name == "glaisher-regular") return MapKind::glaisher_to_regular;
    if (name == "glaisher-distinct") return MapKind::glaisher_to_distinct;
    throw std::invalid_argument("unknown bijection \"" + std::string(name) +
                                "\" (expected psi, psi-inv, phi, phi-inv, glaisher-regular, glaisher-distinct)");
}

std::string_view map_kind_name(MapKind kind) {
    switch (kind) {
        case MapKind::psi: return "psi";
        case MapKind::psi_inv: return "psi-inv";
        case MapKind::phi: return "phi";
        case MapKind::phi_inv: return "phi-inv";
        case MapKind::glaisher_to_regular: return "glaisher-regular";
        case MapKind::glaisher_to_distinct: return "glaisher-distinct";
    }
    return "?";
}

ClassSpec map_domain(MapKind kind, part_t k) {
    switch (kind) {
        case MapKind::psi: return ClassSpec::E(k);
        case MapKind::psi_inv: return ClassSpec::B(k);
        case MapKind::phi: return ClassSpec::C(k);
        case MapKind::phi_inv: return ClassSpec::BPrime(k);
        case MapKind::glaisher_to_regular: return ClassSpec::A(k);
        case MapKind::glaisher_to_distinct: return ClassSpec::B(k);
    }
    throw std::logic_error("unhandled map kind");
}

ClassSpec map_codomain(MapKind kind, part_t k) {
    return map_domain(inverse_of(kind), k);
}

MapKind inverse_of(MapKind kind) {
    switch (kind) {
        case MapKind::psi: return MapKind::psi_inv;
        case MapKind::psi_inv: return MapKind::psi;
        case MapKind::phi: return MapKind::phi_inv;
        case MapKind::phi_inv: return MapKind::phi;
        case MapKind::glaisher_to_regular: return MapKind::glaisher_to_distinct;
        case MapKind::glaisher_to_distinct: return MapKind::glaisher_to_regular;
    }
    throw std::logic_error("unhandled map kind");
}

BijectionTrace apply_traced(MapKind kind, const Partition& input, part_t k) {
    if (k < 2)
        throw DomainError("modulus k must be at least 2");
    auto name = map_kind_name(kind);
    require_member(input, map_domain(kind, k), name);

    BijectionTrace t{kind, k, input, {}, {}};
    switch (kind) {
        case MapKind::psi:
        case MapKind::glaisher_to_regular:
            split_all(input.parts(), k, t.steps);
            break;
        case MapKind::psi_inv: {
            if (input.empty())
                throw DomainError("psi-inv: input must be a nonempty partition");
            part_t i = (input.largest_part() + k - 1) / k;
            regroup_all(input.frequencies(), i, k, Threshold::non_strict, t.steps);
            break;
        }
        case MapKind::phi: {
            part_t top = input.largest_part();
            t.steps.emplace_back(trace::LargestPart{top, Partition::from_sorted({top - 1})});
            split_all(input.parts().subspan(1), k, t.steps);
            break;
        }
        case MapKind::phi_inv: {
            part_t top = input.largest_part();
            part_t i = (top + 1) / k;
            t.steps.emplace_back(trace::LargestPart{top, Partition::from_sorted({top + 1})});
            auto rest = Partition::from_sorted({input.parts().begin() + 1, input.parts().end()});
            regroup_all(rest.frequencies(), i, k, Threshold::strict, t.steps);
            break;
        }
        case MapKind::glaisher_to_distinct: {
            std::map<part_t, part_t> counts;
            for (const auto& [value, count] : input.frequencies())
                counts[value] = count;
            for (auto it = counts.begin(); it != counts.end(); ++it) {
                auto [value, count] = *it;
                part_t carried = count / k;
                if (carried > 0)
                    counts[value * k] += carried;
                t.steps.emplace_back(trace::Merge{value, count, carried,
                                                  Partition::from_sorted(std::vector<part_t>(count % k, value))});
            }
            break;
        }
    }
    t.output = union_of_steps(t.steps);
    return t;
}

Partition apply(MapKind kind, const Partition& input, part_t k) {
    return apply_traced(kind, input, k).output;
}

Partition psi(const Partition& lambda, part_t k) { return apply(MapKind::psi, lambda, k); }
Partition psi_inv(const Partition& mu, part_t k) { return apply(MapKind::psi_inv, mu, k); }
Partition phi(const Partition& lambda, part_t k) { return apply(MapKind::phi, lambda, k); }
Partition phi_inv(const Partition& mu, part_t k) { return apply(MapKind::phi_inv, mu, k); }
Partition glaisher_to_regular(const Partition& lambda, part_t k) {
    return apply(MapKind::glaisher_to_regular, lambda, k);
}
Partition glaisher_to_distinct(const Partition& mu, part_t k) {
    return apply(MapKind::glaisher_to_distinct, mu, k);
}

}  // namespace partlab

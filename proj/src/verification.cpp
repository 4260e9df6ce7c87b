#include "partlab/verification.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "partlab/errors.hpp"
#include "partlab/partition_text.hpp"

namespace partlab {

TheoremId parse_theorem_id(std::string_view name) {
    if (name == "thm1.1") return TheoremId::thm1_1;
    if (name == "thm1.2") return TheoremId::thm1_2;
    if (name == "thm1.3") return TheoremId::thm1_3;
    if (name == "thm1.4") return TheoremId::thm1_4;
    if (name == "corollary-k2") return TheoremId::corollary_k2;
    if (name == "ek-threshold-experiment") return TheoremId::ek_threshold_experiment;
    throw std::invalid_argument("unknown theorem \"" + std::string(name) + "\"");
}

std::string_view theorem_id_name(TheoremId id) {
    switch (id) {
        case TheoremId::thm1_1: return "thm1.1";
        case TheoremId::thm1_2: return "thm1.2";
        case TheoremId::thm1_3: return "thm1.3";
        case TheoremId::thm1_4: return "thm1.4";
        case TheoremId::corollary_k2: return "corollary-k2";
        case TheoremId::ek_threshold_experiment: return "ek-threshold-experiment";
    }
    return "?";
}

bool VerificationReport::pass() const {
    for (const auto& row : rows)
        if (row.counted && !row.equal)
            return false;
    return !bijection || bijection->failure_count == 0;
}

namespace {

// Only the smallest failures by (weight, lex) survive each sweep.
constexpr std::size_t kept_failures = 20;

void record(BijectionStats& stats, std::string kind, const Partition& witness, std::string detail) {
    ++stats.failure_count;
    stats.failures.push_back({std::move(kind), witness, std::move(detail)});
}

void finalize(BijectionStats& stats) {
    std::ranges::stable_sort(stats.failures, weight_then_lex_less, &BijectionFailure::witness);
    if (stats.failures.size() > kept_failures)
        stats.failures.resize(kept_failures);
}

std::int64_t weight_shift(MapKind kind) {
    switch (kind) {
        case MapKind::phi: return -1;
        case MapKind::phi_inv: return 1;
        default: return 0;
    }
}

// Applies `kind` to every member of `sources`; returns the number that passed.
std::uint64_t sweep_one_way(MapKind kind, part_t k, const std::vector<Partition>& sources,
                            BijectionStats& stats) {
    const ClassSpec target = map_codomain(kind, k);
    const MapKind back = inverse_of(kind);
    const auto name = std::string(map_kind_name(kind));
    std::set<Partition> images;
    std::uint64_t passed = 0;

    for (const auto& x : sources) {
        Partition image;
        try {
            image = apply(kind, x, k);
        } catch (const DomainError& e) {
            record(stats, "domain", x, name + ": " + e.what());
            continue;
        }
        bool ok = true;
        auto expected_weight = static_cast<std::int64_t>(x.weight()) + weight_shift(kind);
        if (static_cast<std::int64_t>(image.weight()) != expected_weight) {
            record(stats, "weight", x, name + " changed weight to " + std::to_string(image.weight()));
            ok = false;
        }
        if (auto why = membership_violation(image, target)) {
            record(stats, "membership", x, name + " image " + format_partition(image) + " not in " +
                                               target.name() + ": " + *why);
            ok = false;
        } else {
            Partition round = apply(back, image, k);
            if (round != x) {
                record(stats, "round-trip", x, name + " then " + std::string(map_kind_name(back)) + " gave " +
                                                   format_partition(round));
                ok = false;
            }
        }
        if (!images.insert(image).second) {
            record(stats, "injectivity", x, name + " image " + format_partition(image) + " is repeated");
            ok = false;
        }
        passed += ok ? 1 : 0;
    }
    return passed;
}

void require_within(part_t n, part_t bound, std::string_view what) {
    if (n > bound)
        throw ScaleError("n_max = " + std::to_string(n) + " exceeds the " + std::string(what) + " bound " +
                         std::to_string(bound) + " (set PARTLAB_MAX_N to change it)");
}

BigInt big(std::uint64_t v) { return BigInt(v); }

}  // namespace

void sweep_bijection(MapKind forward, part_t k, const std::vector<Partition>& domain,
                     const std::vector<Partition>& codomain, BijectionStats& stats) {
    stats.forward_attempted += domain.size();
    stats.forward_passed += sweep_one_way(forward, k, domain, stats);
    stats.inverse_attempted += codomain.size();
    stats.inverse_passed += sweep_one_way(inverse_of(forward), k, codomain, stats);
    finalize(stats);
}

VerificationReport verify_theorem(TheoremId id, part_t k, part_t n_max, const ScaleLimits& limits) {
    if (id == TheoremId::ek_threshold_experiment)
        return ek_threshold_experiment(k, n_max, limits);
    if (id == TheoremId::thm1_1 || id == TheoremId::corollary_k2)
        k = 2;
    if (k < 2)
        throw std::invalid_argument("modulus k must be at least 2");

    VerificationReport report{id, k, 0, n_max, {}, {}, {}};
    const std::string ks = std::to_string(k);

    if (id == TheoremId::thm1_1) {
        require_within(n_max + 1, limits.enumeration_max_n, "enumeration");
        // lhs = #A(n), rhs = #C(n+1); equal requires the whole chain including #D(n+1) = 2 #A(n).
        for (part_t n = 0; n <= n_max; ++n) {
            auto a = count(ClassSpec::A(2), n, limits);
            auto b = count(ClassSpec::B(2), n, limits);
            auto c = count(ClassSpec::C(2), n + 1, limits);
            auto d = count(ClassSpec::D(), n + 1, limits);
            bool equal = a == b && b == c && d == 2 * a;
            report.rows.push_back({n, big(a), big(c), equal, n >= 1,
                                   {{"#A(n)", big(a)}, {"#B(n)", big(b)}, {"#C(n+1)", big(c)}, {"#D(n+1)", big(d)}}});
        }
        return report;
    }

    require_within(n_max, limits.sweep_max_n, "bijection sweep");
    BijectionStats stats;

    switch (id) {
        case TheoremId::thm1_2: {
            stats.forward = MapKind::glaisher_to_regular;
            Series ga = gf_a(k, n_max);
            Series gb = gf_b(k, n_max);
            for (part_t n = 0; n <= n_max; ++n) {
                auto a = enumerate(ClassSpec::A(k), n, limits);
                auto b = enumerate(ClassSpec::B(k), n, limits);
                bool equal = a.size() == b.size() && ga[n] == a.size() && gb[n] == b.size();
                report.rows.push_back({n, big(a.size()), big(b.size()), equal, true,
                                       {{"#A_" + ks + "(n)", big(a.size())},
                                        {"#B_" + ks + "(n)", big(b.size())},
                                        {"gf_A[n]", ga[n]},
                                        {"gf_B[n]", gb[n]}}});
                sweep_bijection(stats.forward, k, a, b, stats);
            }
            break;
        }
        case TheoremId::thm1_3:
        case TheoremId::corollary_k2: {
            stats.forward = MapKind::psi;
            for (part_t n = 0; n <= n_max; ++n) {
                auto b = enumerate(ClassSpec::B(k), n, limits);
                auto e = enumerate(ClassSpec::E(k), n, limits);
                report.rows.push_back({n, big(b.size()), big(e.size()), b.size() == e.size(), n >= 1,
                                       {{"#B_" + ks + "(n)", big(b.size())}, {"#E_" + ks + "(n)", big(e.size())}}});
                if (n >= 1)
                    sweep_bijection(stats.forward, k, e, b, stats);
            }
            break;
        }
        case TheoremId::thm1_4: {
            stats.forward = MapKind::phi;
            Series gbp = gf_bprime(k, n_max + 1);
            Series gc = gf_c(k, n_max + 1);
            for (part_t n = 0; n <= n_max; ++n) {
                auto bp = enumerate(ClassSpec::BPrime(k), n, limits);
                auto c = enumerate(ClassSpec::C(k), n + 1, limits);
                bool equal = bp.size() == c.size() && gbp[n] == bp.size() && gc[n + 1] == c.size();
                report.rows.push_back({n, big(bp.size()), big(c.size()), equal, true,
                                       {{"#B'_" + ks + "(n)", big(bp.size())},
                                        {"#C_" + ks + "(n+1)", big(c.size())},
                                        {"gf_Bprime[n]", gbp[n]},
                                        {"gf_C[n+1]", gc[n + 1]}}});
                sweep_bijection(stats.forward, k, c, bp, stats);
            }
            break;
        }
        default:
            throw std::logic_error("unhandled theorem id");
    }
    report.bijection = std::move(stats);
    return report;
}

VerificationReport ek_threshold_experiment(part_t k, part_t n_max, const ScaleLimits& limits) {
    if (k < 2)
        throw std::invalid_argument("modulus k must be at least 2");
    require_within(n_max, limits.enumeration_max_n, "enumeration");
    VerificationReport report{TheoremId::ek_threshold_experiment, k, 1, n_max, {}, {}, ThresholdFinding{}};
    auto& finding = *report.threshold_finding;
    const std::string ks = std::to_string(k);
    const ClassSpec proof = ClassSpec::E(k, EkThreshold::proof);
    const ClassSpec literal = ClassSpec::E(k, EkThreshold::literal);

    for (part_t n = 1; n <= n_max; ++n) {
        auto regular = count(ClassSpec::B(k), n, limits);
        auto proof_count = count(proof, n, limits);
        auto literal_count = count(literal, n, limits);
        report.rows.push_back({n, big(regular), big(proof_count), regular == proof_count, true,
                               {{"#B_" + ks + "(n)", big(regular)},
                                {"#E_" + ks + "(n)[proof]", big(proof_count)},
                                {"#E_" + ks + "(n)[literal]", big(literal_count)}}});
        if (!finding.first_literal_mismatch && literal_count != regular) {
            finding.first_literal_mismatch = n;
            finding.regular_count = regular;
            finding.literal_count = literal_count;
            for_each_member(literal, n, [&](const Partition& p) {
                if (!is_member(p, proof))
                    finding.witnesses.push_back(p);
            }, limits);
            std::ranges::sort(finding.witnesses);
        }
    }
    return report;
}

BigInt oracle_partition_count(part_t n) {
    std::vector<BigInt> p(n + 1);
    p[0] = 1;
    for (part_t m = 1; m <= n; ++m) {
        BigInt total = 0;
        // Generalized pentagonal numbers j(3j-1)/2 and j(3j+1)/2, signs + + - - ...
        for (part_t j = 1;; ++j) {
            part_t g1 = j * (3 * j - 1) / 2;
            if (g1 > m)
                break;
            const bool positive = j % 2 == 1;
            total += positive ? p[m - g1] : BigInt(-p[m - g1]);
            part_t g2 = j * (3 * j + 1) / 2;
            if (g2 <= m)
                total += positive ? p[m - g2] : BigInt(-p[m - g2]);
        }
        p[m] = total;
    }
    return p[n];
}

}  // namespace partlab

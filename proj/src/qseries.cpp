#include "partlab/qseries.hpp"

#include <stdexcept>

namespace partlab {

Series poch(std::size_t start, std::size_t step, std::size_t count, std::size_t order) {
    Series out = Series::one(order);
    for (std::size_t j = 0; j < count; ++j) {
        std::size_t e = start + j * step;
        if (e > order)
            break;  // the factor is 1 mod q^{order+1}, and so is every later one
        out -= out.shifted(e);
    }
    return out;
}

namespace {

void require_modulus(std::size_t k) {
    if (k < 2)
        throw std::invalid_argument("modulus k must be at least 2");
}

// (q^k;q^k)_{i-1} q^{ki-1} / (q;q)_{ki-1}
Series bprime_term(std::size_t k, std::size_t i, std::size_t order) {
    return (poch(k, k, i - 1, order) * poch(1, 1, k * i - 1, order).inverse()).shifted(k * i - 1);
}

// (q^k;q^k)_i / (q;q)_i * q^{ki} / (q^{i+1};q)_{(k-1)i}
Series c_term(std::size_t k, std::size_t i, std::size_t order) {
    return (poch(k, k, i, order) * poch(1, 1, i, order).inverse() *
            poch(i + 1, 1, (k - 1) * i, order).inverse())
        .shifted(k * i);
}

// (q^k;q^k)_i q^{ki} / (q;q)_{ki}
Series collapsed_term(std::size_t k, std::size_t i, std::size_t order) {
    return (poch(k, k, i, order) * poch(1, 1, k * i, order).inverse()).shifted(k * i);
}

std::optional<TelescopingDiscrepancy> compare(const Series& lhs, const Series& rhs, std::string check,
                                              std::optional<std::size_t> i) {
    if (auto n = first_difference(lhs, rhs))
        return TelescopingDiscrepancy{std::move(check), i, *n, lhs[*n], rhs[*n]};
    return std::nullopt;
}

}  // namespace

Series gf_bprime(std::size_t k, std::size_t order) {
    require_modulus(k);
    Series sum(order);
    for (std::size_t i = 1; k * i - 1 <= order; ++i)
        sum += bprime_term(k, i, order);
    return sum;
}

Series gf_c(std::size_t k, std::size_t order) {
    require_modulus(k);
    Series sum(order);
    for (std::size_t i = 0; k * i <= order; ++i)
        sum += c_term(k, i, order);
    return sum;
}

Series gf_b(std::size_t k, std::size_t order) {
    require_modulus(k);
    Series denominator = Series::one(order);
    for (std::size_t j = 1; j <= order; ++j)
        if (j % k != 0)
            denominator -= denominator.shifted(j);
    return denominator.inverse();
}

Series gf_a(std::size_t k, std::size_t order) {
    require_modulus(k);
    Series numerator = poch(k, k, order, order);
    return numerator * poch(1, 1, order, order).inverse();
}

SeriesKind parse_series_kind(std::string_view name) {
    if (name == "A") return SeriesKind::A;
    if (name == "B") return SeriesKind::B;
    if (name == "Bprime") return SeriesKind::BPrime;
    if (name == "C") return SeriesKind::C;
    throw std::invalid_argument("unknown series \"" + std::string(name) + "\" (expected A, B, Bprime, C)");
}

std::string_view series_kind_name(SeriesKind kind) {
    switch (kind) {
        case SeriesKind::A: return "A";
        case SeriesKind::B: return "B";
        case SeriesKind::BPrime: return "Bprime";
        case SeriesKind::C: return "C";
    }
    return "?";
}

Series generating_function(SeriesKind kind, std::size_t k, std::size_t order) {
    switch (kind) {
        case SeriesKind::A: return gf_a(k, order);
        case SeriesKind::B: return gf_b(k, order);
        case SeriesKind::BPrime: return gf_bprime(k, order);
        case SeriesKind::C: return gf_c(k, order);
    }
    throw std::logic_error("unhandled series kind");
}

TelescopingReport verify_telescoping(std::size_t k, std::size_t order, Perturbation perturbation) {
    require_modulus(k);
    TelescopingReport report{k, order, 0, std::nullopt};

    for (std::size_t i = 1; k * i - 1 <= order; ++i) {
        Series lhs = (poch(k, k, i - 1, order) * poch(1, 1, k * i - 1, order).inverse()).shifted(k * i);
        std::size_t kept = perturbation == Perturbation::drop_factor ? i - 1 : i;
        Series rhs = (poch(k, k, kept, order) * poch(1, 1, k * i, order).inverse()).shifted(k * i);
        ++report.checks_run;
        if ((report.discrepancy = compare(lhs, rhs, "termwise", i)))
            return report;
    }

    Series shifted = gf_bprime(k, order).shifted(1);
    Series c_minus_one = gf_c(k, order) - Series::one(order);
    ++report.checks_run;
    if ((report.discrepancy = compare(shifted, c_minus_one, "shifted-sum", std::nullopt)))
        return report;

    for (std::size_t i = 0; k * i <= order; ++i) {
        ++report.checks_run;
        if ((report.discrepancy = compare(c_term(k, i, order), collapsed_term(k, i, order), "c-summand", i)))
            return report;
    }
    return report;
}

}  // namespace partlab

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace partlab {

/// Formal power series in q with coefficients c_0..c_N, taken modulo q^{N+1}.
/// Binary operations on series of different order truncate to the smaller one.
template <class Coeff>
class TruncatedSeries {
public:
    using coefficient_type = Coeff;

    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, Coeff(0)) {}

    TruncatedSeries(std::size_t order, std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1, Coeff(0));
    }

    static TruncatedSeries one(std::size_t order) { return monomial(0, Coeff(1), order); }

    /// c q^exponent, or zero when exponent > order.
    static TruncatedSeries monomial(std::size_t exponent, Coeff c, std::size_t order) {
        TruncatedSeries s(order);
        if (exponent <= order)
            s.coeffs_[exponent] = std::move(c);
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    std::span<const Coeff> coefficients() const { return coeffs_; }

    const Coeff& operator[](std::size_t n) const { return coeffs_.at(n); }

    /// Smallest n with c_n != 0, or nullopt for the zero series.
    std::optional<std::size_t> valuation() const {
        for (std::size_t n = 0; n < coeffs_.size(); ++n)
            if (coeffs_[n] != 0)
                return n;
        return std::nullopt;
    }

    TruncatedSeries truncated(std::size_t order) const {
        return TruncatedSeries(std::min(order, this->order()),
                               {coeffs_.begin(), coeffs_.begin() + std::min(order, this->order()) + 1});
    }

    /// Multiplication by q^exponent.
    TruncatedSeries shifted(std::size_t exponent) const {
        TruncatedSeries out(order());
        for (std::size_t n = 0; n + exponent <= order(); ++n)
            out.coeffs_[n + exponent] = coeffs_[n];
        return out;
    }

    /// Multiplicative inverse; requires c_0 = +-1 so the result stays integral.
    TruncatedSeries inverse() const {
        const Coeff& c0 = coeffs_[0];
        if (c0 != 1 && c0 != -1)
            throw std::domain_error("series inverse requires a unit constant term");
        TruncatedSeries out(order());
        out.coeffs_[0] = c0;
        for (std::size_t n = 1; n <= order(); ++n) {
            Coeff acc(0);
            for (std::size_t j = 1; j <= n; ++j)
                if (coeffs_[j] != 0)
                    acc += coeffs_[j] * out.coeffs_[n - j];
            out.coeffs_[n] = -c0 * acc;
        }
        return out;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& rhs) {
        coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
        for (std::size_t n = 0; n < coeffs_.size(); ++n)
            coeffs_[n] += rhs.coeffs_[n];
        return *this;
    }

    TruncatedSeries& operator-=(const TruncatedSeries& rhs) {
        coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
        for (std::size_t n = 0; n < coeffs_.size(); ++n)
            coeffs_[n] -= rhs.coeffs_[n];
        return *this;
    }

    TruncatedSeries& operator*=(const TruncatedSeries& rhs) { return *this = *this * rhs; }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator-(TruncatedSeries a) {
        for (auto& c : a.coeffs_)
            c = -c;
        return a;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        const std::size_t order = std::min(a.order(), b.order());
        TruncatedSeries out(order);
        for (std::size_t i = 0; i <= order; ++i) {
            if (a.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; i + j <= order; ++j)
                if (b.coeffs_[j] != 0)
                    out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return out;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Coeff> coeffs_;
};

/// First index (up to the smaller order) where the coefficients differ.
template <class Coeff>
std::optional<std::size_t> first_difference(const TruncatedSeries<Coeff>& a, const TruncatedSeries<Coeff>& b) {
    const std::size_t order = std::min(a.order(), b.order());
    for (std::size_t n = 0; n <= order; ++n)
        if (a[n] != b[n])
            return n;
    return std::nullopt;
}

}  // namespace partlab

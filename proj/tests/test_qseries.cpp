#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "partlab/classes.hpp"
#include "partlab/qseries.hpp"

using namespace partlab;

namespace {

Series from(std::vector<long long> c, std::size_t order) {
    std::vector<BigInt> big(c.begin(), c.end());
    return Series(order, big);
}

Series random_series(std::mt19937_64& rng, std::size_t order) {
    std::uniform_int_distribution<long long> d(-9, 9);
    std::vector<BigInt> c(order + 1);
    for (auto& v : c) v = d(rng);
    return Series(order, c);
}

}  // namespace

TEST_CASE("q-Pochhammer products") {
    CHECK(poch(1, 1, 2, 5) == from({1, -1, -1, 1}, 5));
    CHECK(poch(4, 7, 0, 9) == Series::one(9));
    CHECK(poch(3, 3, 2, 10) == from({1, 0, 0, -1, 0, 0, -1, 0, 0, 1}, 10));
    // factors beyond the order are 1
    CHECK(poch(1, 1, 100, 3) == from({1, -1, -1, 0}, 3));
}

TEST_CASE("inverse and ring identities") {
    CHECK(from({1, -1}, 6).inverse() == from({1, 1, 1, 1, 1, 1, 1}, 6));
    CHECK(from({-1, 1}, 4).inverse() == from({-1, -1, -1, -1, -1}, 4));
    CHECK_THROWS_AS(from({2, 1}, 4).inverse(), std::domain_error);
    CHECK_THROWS_AS(from({0, 1}, 4).inverse(), std::domain_error);

    auto a = from({3, -2, 5, 7}, 3);
    CHECK(a * Series::one(3) == a);

    auto parts_le_3 = poch(1, 1, 3, 12).inverse();
    std::vector<long long> frozen{1, 1, 2, 3, 4, 5, 7, 8, 10, 12, 14, 16, 19};
    CHECK(parts_le_3 == from(frozen, 12));
    for (part_t n = 0; n <= 12; ++n) {
        std::uint64_t direct = 0;
        for (const auto& p : oracle::all_partitions(n)) direct += (p.empty() || p.front() <= 3) ? 1 : 0;
        CHECK(parts_le_3[n] == direct);
    }
}

TEST_CASE("mixed orders truncate to the smaller") {
    auto a = from({1, 1, 1, 1, 1}, 4);
    auto b = from({1, 2}, 2);
    CHECK((a + b).order() == 2);
    CHECK((a * b).order() == 2);
    CHECK((a + b) == from({2, 3, 1}, 2));
    CHECK(a.shifted(2) == from({0, 0, 1, 1, 1}, 4));
    CHECK(a.truncated(1) == from({1, 1}, 1));
}

TEST_CASE("ring axioms on random series") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        auto a = random_series(rng, 8), b = random_series(rng, 8), c = random_series(rng, 8);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + (-a) == Series(8));
        auto unit = a;
        unit = unit - Series::monomial(0, a[0], 8) + Series::one(8);
        CHECK(unit * unit.inverse() == Series::one(8));
    }
}

TEST_CASE("(q;q)_{ki} factorizes") {
    for (std::size_t k = 2; k <= 6; ++k)
        for (std::size_t i = 0; k * i <= 40; ++i)
            CHECK(poch(1, 1, k * i, 40) == poch(1, 1, i, 40) * poch(i + 1, 1, (k - 1) * i, 40));
}

TEST_CASE("generating functions against enumeration") {
    auto bp3 = gf_bprime(3, 30);
    CHECK(bp3[8] == 7);
    CHECK(bp3[0] == 0);
    auto c3 = gf_c(3, 30);
    CHECK(c3[0] == 1);
    CHECK(c3[27] == 323);
    CHECK(gf_b(2, 10)[5] == 3);
    CHECK(gf_a(5, 0)[0] == 1);
    CHECK(gf_b(5, 0)[0] == 1);

    for (part_t k = 2; k <= 4; ++k) {
        auto bp = gf_bprime(k, 30);
        auto c = gf_c(k, 30);
        auto a = gf_a(k, 30);
        auto b = gf_b(k, 30);
        CHECK(a == b);
        for (part_t n = 0; n <= 30; ++n) {
            INFO("k=" << k << " n=" << n);
            CHECK(bp[n] == count(ClassSpec::BPrime(k), n));
            if (n >= 1) CHECK(c[n] == count(ClassSpec::C(k), n));
            CHECK(b[n] == count(ClassSpec::B(k), n));
        }
    }
}

TEST_CASE("gf_b matches naive product expansion") {
    for (std::size_t k = 2; k <= 6; ++k) {
        oracle::Poly poly(41, 0);
        poly[0] = 1;
        for (std::size_t j = 1; j <= 40; ++j)
            if (j % k != 0) poly = oracle::poly_div_one_minus(poly, j);
        auto series = gf_b(k, 40);
        for (std::size_t n = 0; n <= 40; ++n) CHECK(series[n] == poly[n]);
    }
}

TEST_CASE("telescoping chain") {
    for (std::size_t k : {2, 3, 4, 5}) {
        auto report = verify_telescoping(k, 40);
        INFO("k=" << k);
        CHECK(report.pass());
        CHECK(report.checks_run > 2);
    }
    auto broken = verify_telescoping(3, 40, Perturbation::drop_factor);
    REQUIRE_FALSE(broken.pass());
    CHECK(broken.discrepancy->check == "termwise");
    CHECK(broken.discrepancy->i == 1u);
    CHECK(broken.discrepancy->lhs != broken.discrepancy->rhs);
    CHECK_THROWS_AS(verify_telescoping(1, 10), std::invalid_argument);
}

TEST_CASE("series names") {
    CHECK(parse_series_kind("Bprime") == SeriesKind::BPrime);
    CHECK(series_kind_name(SeriesKind::C) == "C");
    CHECK_THROWS_AS(parse_series_kind("E"), std::invalid_argument);
}

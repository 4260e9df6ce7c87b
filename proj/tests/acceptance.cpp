// Acceptance suite: one PASS/FAIL line per criterion. Run all criteria, or a
// single one with --criterion N.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "partlab/bijections.hpp"
#include "partlab/classes.hpp"
#include "partlab/partition_text.hpp"
#include "partlab/qseries.hpp"
#include "partlab/verification.hpp"

using namespace partlab;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream notes;

    void fail(const std::string& why) {
        if (pass) notes << why;  // keep the first failure only
        pass = false;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_time(Outcome& o, Clock::time_point start, double limit) {
    double elapsed = seconds_since(start);
    if (elapsed > limit) o.fail("took " + std::to_string(elapsed) + " s, limit " + std::to_string(limit) + " s");
    if (o.pass) o.notes << elapsed << " s";
}

// Equinumerosity sweeps for k in 2..6, n in 1..40.
Outcome criterion_1() {
    Outcome o;
    auto start = Clock::now();
    for (part_t k = 2; k <= 6; ++k) {
        for (part_t n = 1; n <= 40; ++n) {
            auto a = count(ClassSpec::A(k), n);
            auto b = count(ClassSpec::B(k), n);
            auto e = count(ClassSpec::E(k), n);
            auto bp = count(ClassSpec::BPrime(k), n);
            auto c = count(ClassSpec::C(k), n + 1);
            std::string at = " at k=" + std::to_string(k) + " n=" + std::to_string(n);
            if (a != b) o.fail("#A_k != #B_k" + at);
            if (b != e) o.fail("#B_k != #E_k" + at);
            if (bp != c) o.fail("#B'_k(n) != #C_k(n+1)" + at);
        }
    }
    require_time(o, start, 60.0);
    return o;
}

// #A(n) = #B(n) = #C(n+1) = #D(n+1)/2 for n in 0..35.
Outcome criterion_2() {
    Outcome o;
    auto start = Clock::now();
    for (part_t n = 0; n <= 35; ++n) {
        auto a = count(ClassSpec::A(2), n);
        auto b = count(ClassSpec::B(2), n);
        auto c = count(ClassSpec::C(2), n + 1);
        auto d = count(ClassSpec::D(), n + 1);
        if (a != b || b != c || d != 2 * a) {
            std::ostringstream why;
            why << "n=" << n << ": #A=" << a << " #B=" << b << " #C(n+1)=" << c << " #D(n+1)=" << d << "; ";
            o.fail(why.str());
        }
    }
    if (!o.pass) {
        // Report how far the chain does hold, for the record.
        bool rest = true;
        for (part_t n = 1; n <= 35; ++n)
            rest = rest && count(ClassSpec::A(2), n) == count(ClassSpec::C(2), n + 1) &&
                   count(ClassSpec::D(), n + 1) == 2 * count(ClassSpec::A(2), n) &&
                   count(ClassSpec::A(2), n) == count(ClassSpec::B(2), n);
        o.notes << (rest ? "chain holds for every n in 1..35" : "chain also fails for some n >= 1");
    }
    require_time(o, start, 10.0);
    return o;
}

// Exhaustive round trips and image membership for k in 2..5, n <= 30.
Outcome criterion_3() {
    Outcome o;
    auto start = Clock::now();
    std::uint64_t attempted = 0;
    for (part_t k = 2; k <= 5; ++k) {
        BijectionStats psi_stats{MapKind::psi}, phi_stats{MapKind::phi}, gl_stats{MapKind::glaisher_to_regular};
        for (part_t n = 0; n <= 30; ++n) {
            auto b = enumerate(ClassSpec::B(k), n);
            if (n >= 1) sweep_bijection(MapKind::psi, k, enumerate(ClassSpec::E(k), n), b, psi_stats);
            sweep_bijection(MapKind::phi, k, enumerate(ClassSpec::C(k), n + 1), enumerate(ClassSpec::BPrime(k), n),
                            phi_stats);
            sweep_bijection(MapKind::glaisher_to_regular, k, enumerate(ClassSpec::A(k), n), b, gl_stats);
        }
        for (auto* s : {&psi_stats, &phi_stats, &gl_stats}) {
            attempted += s->forward_attempted + s->inverse_attempted;
            if (s->failure_count > 0)
                o.fail(std::string(map_kind_name(s->forward)) + " k=" + std::to_string(k) + ": " +
                       std::to_string(s->failure_count) + " failures, first witness " +
                       format_partition(s->failures.front().witness) + " (" + s->failures.front().detail + ")");
        }
    }
    if (o.pass) o.notes << attempted << " maps checked, ";
    require_time(o, start, 600.0);
    return o;
}

// Worked examples, bit-exact.
Outcome criterion_4() {
    Outcome o;
    auto expect = [&](const std::string& what, const Partition& got, const std::string& want) {
        if (format_partition(got, Notation::compact) != want)
            o.fail(what + " gave " + format_partition(got, Notation::compact) + ", expected " + want);
    };
    expect("psi((7,6,6,3,2,2,1,1),3)", psi(parse_partition("7,6,6,3,2,2,1,1"), 3), "7,2^8,1^5");
    expect("psi_inv((7,2^8,1^5),3)", psi_inv(parse_partition("7,2^8,1^5"), 3), "7,6^2,3,2^2,1^2");
    expect("phi((9,9,3,2,2,1,1),3)", phi(parse_partition("9,9,3,2,2,1,1"), 3), "8,2^2,1^14");
    expect("phi_inv((8,2,2,1^14),3)", phi_inv(parse_partition("8,2,2,1^14"), 3), "9^2,3,2^2,1^2");
    if (o.pass) o.notes << "4 maps reproduced";
    return o;
}

// Generating functions at N = 50 against enumeration, plus the telescoping chain.
Outcome criterion_5() {
    Outcome o;
    auto start = Clock::now();
    constexpr std::size_t order = 50;
    for (part_t k = 2; k <= 5; ++k) {
        auto bp = gf_bprime(k, order);
        auto c = gf_c(k, order);
        std::string ks = " k=" + std::to_string(k);
        // c_0 = 1 is the i = 0 summand; C_k(0) itself is empty.
        if (c[0] != 1) o.fail("gf_C constant term is not 1 at" + ks);
        for (part_t n = 0; n <= order; ++n) {
            if (bp[n] != count(ClassSpec::BPrime(k), n)) o.fail("gf_Bprime differs at n=" + std::to_string(n) + ks);
            if (n >= 1 && c[n] != count(ClassSpec::C(k), n)) o.fail("gf_C differs at n=" + std::to_string(n) + ks);
        }
        auto tele = verify_telescoping(k, order);
        if (!tele.pass())
            o.fail("telescoping " + tele.discrepancy->check + " fails at q^" + std::to_string(tele.discrepancy->n) + ks);
    }
    require_time(o, start, 30.0);
    return o;
}

// Threshold adjudication.
Outcome criterion_6() {
    Outcome o;
    auto literal = ek_threshold_experiment(2, 10);
    const auto& f = *literal.threshold_finding;
    if (!f.first_literal_mismatch || f.witnesses.empty()) {
        o.fail("literal variant shows no mismatch for k=2, n<=10");
    } else {
        o.notes << "literal variant first differs at n=" << *f.first_literal_mismatch << " (#B=" << f.regular_count
                << ", #E_literal=" << f.literal_count << ", witness " << format_partition(f.witnesses.front())
                << "); ";
    }
    for (part_t k = 2; k <= 6; ++k) {
        auto proof = ek_threshold_experiment(k, 40);
        for (const auto& row : proof.rows)
            if (!row.equal)
                o.fail("proof variant mismatch at k=" + std::to_string(k) + " n=" + std::to_string(row.n));
    }
    if (o.pass) o.notes << "proof variant exact for k<=6, n<=40";
    return o;
}

// Unfiltered enumeration against the pentagonal recurrence.
Outcome criterion_7() {
    Outcome o;
    for (part_t n = 0; n <= 45; ++n) {
        std::uint64_t listed = 0;
        for_each_partition(n, [&](const Partition&) { ++listed; });
        if (oracle_partition_count(n) != listed) o.fail("cardinality differs at n=" + std::to_string(n));
    }
    if (o.pass) o.notes << "p(45) = " << oracle_partition_count(45);
    return o;
}

struct Criterion {
    int id;
    std::string title;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"partlab acceptance suite"};
    int only = 0;
    app.add_option("--criterion", only, "Run a single criterion (1-7)")->check(CLI::Range(1, 7));
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria{
        {1, "equinumerosity sweeps, k=2..6, n=1..40", criterion_1},
        {2, "k=2 chain #A(n)=#B(n)=#C(n+1)=#D(n+1)/2, n=0..35", criterion_2},
        {3, "bijection round trips and image membership, k=2..5, n<=30", criterion_3},
        {4, "worked examples for psi and phi", criterion_4},
        {5, "generating functions vs enumeration and telescoping, N=50, k=2..5", criterion_5},
        {6, "E_k threshold adjudication", criterion_6},
        {7, "unfiltered enumeration vs pentagonal recurrence, n<=45", criterion_7},
    };

    bool all = true;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        auto outcome = c.run();
        all = all && outcome.pass;
        std::cout << "criterion " << c.id << ": " << (outcome.pass ? "PASS" : "FAIL") << "  " << c.title << "  ["
                  << outcome.notes.str() << "]\n";
    }
    return all ? 0 : 1;
}

#include "partlab/serialize.hpp"

#include <sstream>

#include "partlab/partition_text.hpp"

namespace partlab {
namespace {

std::string_view family_of(MapKind kind) {
    switch (kind) {
        case MapKind::psi:
        case MapKind::psi_inv: return "psi";
        case MapKind::phi:
        case MapKind::phi_inv: return "phi";
        default: return "glaisher";
    }
}

bool is_forward(MapKind kind) {
    return kind == MapKind::psi || kind == MapKind::phi || kind == MapKind::glaisher_to_regular;
}

struct StepWriter {
    Json operator()(const trace::Split& s) const {
        return {{"type", "split"},
                {"source", s.source},
                {"exponent", s.decomposition.exponent},
                {"base", s.decomposition.base},
                {"emitted", format_partition(s.emitted, Notation::compact)}};
    }
    Json operator()(const trace::Regroup& s) const {
        return {{"type", "regroup"},
                {"value", s.value},
                {"multiplicity", s.multiplicity},
                {"digits", s.digits},
                {"threshold_exponent", s.threshold_exponent},
                {"emitted", format_partition(s.emitted, Notation::compact)}};
    }
    Json operator()(const trace::LargestPart& s) const {
        return {{"type", "largest-part"},
                {"source", s.source},
                {"emitted", format_partition(s.emitted, Notation::compact)}};
    }
    Json operator()(const trace::Merge& s) const {
        return {{"type", "merge"},
                {"value", s.value},
                {"multiplicity", s.multiplicity},
                {"carried", s.carried},
                {"emitted", format_partition(s.emitted, Notation::compact)}};
    }
};

std::string decimal(const BigInt& v) { return v.str(); }

}  // namespace

Json to_json(const BijectionTrace& trace) {
    Json steps = Json::array();
    part_t emitted_total = 0;
    for (const auto& step : trace.steps) {
        steps.push_back(std::visit(StepWriter{}, step));
        emitted_total += trace::emitted(step).weight();
    }
    return {{"map", family_of(trace.kind)},
            {"direction", is_forward(trace.kind) ? "forward" : "inverse"},
            {"k", trace.k},
            {"input", format_partition(trace.input)},
            {"steps", std::move(steps)},
            {"output", format_partition(trace.output)},
            {"weight", {{"input", trace.input.weight()},
                        {"emitted", emitted_total},
                        {"output", trace.output.weight()}}}};
}

Json to_json(const VerificationReport& report) {
    Json rows = Json::array();
    for (const auto& row : report.rows) {
        Json detail = Json::object();
        for (const auto& [name, value] : row.detail)
            detail[name] = decimal(value);
        rows.push_back({{"n", row.n},
                        {"lhs", decimal(row.lhs)},
                        {"rhs", decimal(row.rhs)},
                        {"equal", row.equal},
                        {"counted", row.counted},
                        {"detail", std::move(detail)}});
    }

    Json stats = nullptr;
    if (report.bijection) {
        const auto& b = *report.bijection;
        Json failures = Json::array();
        for (const auto& f : b.failures)
            failures.push_back({{"kind", f.kind}, {"witness", format_partition(f.witness)}, {"detail", f.detail}});
        stats = {{"forward_map", map_kind_name(b.forward)},
                 {"inverse_map", map_kind_name(inverse_of(b.forward))},
                 {"forward_attempted", b.forward_attempted},
                 {"forward_passed", b.forward_passed},
                 {"inverse_attempted", b.inverse_attempted},
                 {"inverse_passed", b.inverse_passed},
                 {"failure_count", b.failure_count},
                 {"failures", std::move(failures)}};
    }

    Json finding = nullptr;
    if (report.threshold_finding) {
        const auto& f = *report.threshold_finding;
        Json witnesses = Json::array();
        for (const auto& w : f.witnesses)
            witnesses.push_back(format_partition(w));
        finding = {{"first_literal_mismatch", f.first_literal_mismatch ? Json(*f.first_literal_mismatch) : Json()},
                   {"regular_count", decimal(f.regular_count)},
                   {"literal_count", decimal(f.literal_count)},
                   {"witnesses", std::move(witnesses)}};
    }

    return {{"theorem", theorem_id_name(report.theorem)},
            {"k", report.k},
            {"range", {{"n_min", report.n_min}, {"n_max", report.n_max}}},
            {"rows", std::move(rows)},
            {"bijection_stats", std::move(stats)},
            {"threshold_finding", std::move(finding)},
            {"verdict", report.pass() ? "pass" : "fail"}};
}

std::string to_csv(const VerificationReport& report) {
    std::ostringstream out;
    out << "n,lhs,rhs,equal,counted";
    if (!report.rows.empty())
        for (const auto& d : report.rows.front().detail)
            out << ',' << d.name;
    out << '\n';
    for (const auto& row : report.rows) {
        out << row.n << ',' << row.lhs << ',' << row.rhs << ',' << (row.equal ? "true" : "false") << ','
            << (row.counted ? "true" : "false");
        for (const auto& d : row.detail)
            out << ',' << d.value;
        out << '\n';
    }
    return out.str();
}

std::string series_to_csv(const Series& s) {
    std::ostringstream out;
    for (std::size_t n = 0; n <= s.order(); ++n)
        out << n << ',' << s[n] << '\n';
    return out.str();
}

Json series_to_json(const Series& s) {
    Json arr = Json::array();
    for (const auto& c : s.coefficients())
        arr.push_back(decimal(c));
    return arr;
}

}  // namespace partlab

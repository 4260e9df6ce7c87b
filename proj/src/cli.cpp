#include "partlab/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "partlab/bijections.hpp"
#include "partlab/classes.hpp"
#include "partlab/errors.hpp"
#include "partlab/partition_text.hpp"
#include "partlab/qseries.hpp"
#include "partlab/serialize.hpp"
#include "partlab/verification.hpp"

namespace partlab::cli {
namespace {

struct Range {
    part_t lo;
    part_t hi;
};

part_t parse_count(std::string_view text) {
    part_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("malformed n \"" + std::string(text) + "\"");
    return v;
}

/// "lo..hi" inclusive, or a single n.
Range parse_range(std::string_view text) {
    auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        auto n = parse_count(text);
        return {n, n};
    }
    Range r{parse_count(text.substr(0, dots)), parse_count(text.substr(dots + 2))};
    if (r.lo > r.hi)
        throw std::invalid_argument("empty range \"" + std::string(text) + "\"");
    return r;
}

std::string quote_csv(const std::string& field) {
    return field.find(',') == std::string::npos ? field : '"' + field + '"';
}

struct Options {
    std::string cls;
    std::string n = "0";
    std::string ek_threshold = "proof";
    std::string format;
    std::string bijection;
    std::string partition;
    std::string series;
    std::string theorem;
    std::string output;
    part_t k = 2;
    part_t order = 50;
    part_t n_max = 0;
    bool trace = false;
    bool compact = false;
};

ClassSpec class_spec(const Options& o) {
    return ClassSpec(parse_family(o.cls), o.k, parse_ek_threshold(o.ek_threshold));
}

std::string cmd_count(const Options& o) {
    auto spec = class_spec(o);
    auto range = parse_range(o.n);
    std::ostringstream doc;
    if (o.format == "json") {
        Json counts = Json::array();
        for (part_t n = range.lo; n <= range.hi; ++n)
            counts.push_back({{"n", n}, {"count", std::to_string(count(spec, n))}});
        Json j = {{"class", spec.name()}, {"k", spec.k()}, {"counts", std::move(counts)}};
        doc << j.dump(2) << '\n';
    } else {
        if (o.format == "csv")
            doc << "n,count\n";
        for (part_t n = range.lo; n <= range.hi; ++n)
            doc << n << (o.format == "csv" ? "," : " ") << count(spec, n) << '\n';
    }
    return doc.str();
}

std::string cmd_enumerate(const Options& o) {
    auto spec = class_spec(o);
    auto range = parse_range(o.n);
    auto notation = o.compact ? Notation::compact : Notation::expanded;
    std::ostringstream doc;
    if (o.format == "json") {
        Json blocks = Json::array();
        for (part_t n = range.lo; n <= range.hi; ++n) {
            Json parts = Json::array();
            for (const auto& p : enumerate(spec, n))
                parts.push_back(format_partition(p, notation));
            blocks.push_back({{"n", n}, {"count", parts.size()}, {"partitions", std::move(parts)}});
        }
        Json j = {{"class", spec.name()}, {"k", spec.k()}, {"enumeration", std::move(blocks)}};
        doc << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        doc << "n,partition\n";
        for (part_t n = range.lo; n <= range.hi; ++n)
            for (const auto& p : enumerate(spec, n))
                doc << n << ',' << quote_csv(format_partition(p, notation)) << '\n';
    } else {
        for (part_t n = range.lo; n <= range.hi; ++n) {
            if (range.lo != range.hi)
                doc << "# n = " << n << '\n';
            for (const auto& p : enumerate(spec, n))
                doc << '(' << format_partition(p, notation) << ")\n";
        }
    }
    return doc.str();
}

std::string cmd_map(const Options& o, std::istream& in) {
    auto kind = parse_map_kind(o.bijection);
    std::string text = o.partition;
    if (text == "-") {
        std::getline(in, text);
    }
    auto input = parse_partition(text);
    auto t = apply_traced(kind, input, o.k);
    auto notation = o.compact ? Notation::compact : Notation::expanded;
    std::ostringstream doc;
    if (o.format == "json") {
        Json j = {{"output", format_partition(t.output, notation)}};
        if (o.trace)
            j["trace"] = to_json(t);
        doc << j.dump(2) << '\n';
    } else {
        doc << format_partition(t.output, notation) << '\n';
        if (o.trace)
            doc << to_json(t).dump(2) << '\n';
    }
    return doc.str();
}

std::string cmd_gf(const Options& o) {
    auto s = generating_function(parse_series_kind(o.series), o.k, o.order);
    if (o.format == "json") {
        Json j = {{"series", series_kind_name(parse_series_kind(o.series))},
                  {"k", o.k},
                  {"order", o.order},
                  {"coefficients", series_to_json(s)}};
        return j.dump(2) + '\n';
    }
    return series_to_csv(s);
}

std::string cmd_verify(const Options& o, bool& passed) {
    auto report = verify_theorem(parse_theorem_id(o.theorem), o.k, o.n_max);
    passed = report.pass();
    if (o.format == "csv")
        return to_csv(report);
    if (o.format == "text") {
        std::ostringstream doc;
        doc << theorem_id_name(report.theorem) << " k=" << report.k << " n=" << report.n_min << ".."
            << report.n_max << '\n';
        for (const auto& row : report.rows)
            doc << "  n=" << row.n << "  " << row.lhs << (row.equal ? " == " : " != ") << row.rhs
                << (row.counted ? "" : "  (informational)") << '\n';
        if (report.bijection)
            doc << "  bijection " << map_kind_name(report.bijection->forward) << ": forward "
                << report.bijection->forward_passed << '/' << report.bijection->forward_attempted << ", inverse "
                << report.bijection->inverse_passed << '/' << report.bijection->inverse_attempted << '\n';
        if (report.threshold_finding && report.threshold_finding->first_literal_mismatch)
            doc << "  literal threshold first differs at n=" << *report.threshold_finding->first_literal_mismatch
                << '\n';
        doc << "verdict: " << (passed ? "pass" : "fail") << '\n';
        return doc.str();
    }
    return to_json(report).dump(2) + '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"partlab: k-regular partition classes, bijections, and q-series checks"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--output,-o", o.output, "Write the document to this file instead of stdout");

    const std::vector<std::string> classes{"Ak", "Bk", "Bpk", "Ck", "D", "Ek"};
    auto add_class_opts = [&](CLI::App* sub) {
        sub->add_option("--class", o.cls, "Partition class")->required()->check(CLI::IsMember(classes));
        sub->add_option("--k", o.k, "Modulus k >= 2");
        sub->add_option("--n", o.n, "n or inclusive range lo..hi")->required();
        sub->add_option("--ek-threshold", o.ek_threshold, "E_k threshold variant")
            ->check(CLI::IsMember({"proof", "literal"}));
    };

    auto* count_cmd = app.add_subcommand("count", "Count the members of a class");
    add_class_opts(count_cmd);
    count_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "csv", "json"}));

    auto* enum_cmd = app.add_subcommand("enumerate", "List the members of a class");
    add_class_opts(enum_cmd);
    enum_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "csv", "json"}));
    enum_cmd->add_flag("--compact", o.compact, "Exponent notation a^b");

    auto* map_cmd = app.add_subcommand("map", "Apply a bijection to one partition");
    map_cmd->add_option("--bijection", o.bijection)->required();
    map_cmd->add_option("--k", o.k, "Modulus k >= 2");
    map_cmd->add_option("--partition", o.partition, "Comma-separated parts, or - for stdin")->required();
    map_cmd->add_flag("--trace", o.trace, "Emit the full trace");
    map_cmd->add_flag("--compact", o.compact, "Exponent notation a^b");
    map_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));

    auto* gf_cmd = app.add_subcommand("gf", "Generating function coefficients");
    gf_cmd->add_option("--series", o.series)->required()->check(CLI::IsMember({"A", "B", "Bprime", "C"}));
    gf_cmd->add_option("--k", o.k, "Modulus k >= 2");
    gf_cmd->add_option("--order", o.order, "Truncation order N");
    gf_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "csv", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "Verify a theorem exhaustively");
    verify_cmd->add_option("--theorem", o.theorem)
        ->required()
        ->check(CLI::IsMember({"thm1.1", "thm1.2", "thm1.3", "thm1.4", "corollary-k2", "ek-threshold-experiment"}));
    verify_cmd->add_option("--k", o.k, "Modulus k >= 2");
    verify_cmd->add_option("--n-max", o.n_max)->required();
    verify_cmd->add_option("--format", o.format)->check(CLI::IsMember({"text", "csv", "json"}));

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return invalid_input;
    }

    std::string document;
    int status = ok;
    try {
        if (count_cmd->parsed()) {
            document = cmd_count(o);
        } else if (enum_cmd->parsed()) {
            document = cmd_enumerate(o);
        } else if (map_cmd->parsed()) {
            document = cmd_map(o, in);
        } else if (gf_cmd->parsed()) {
            document = cmd_gf(o);
        } else if (verify_cmd->parsed()) {
            bool passed = false;
            document = cmd_verify(o, passed);
            status = passed ? ok : verification_failed;
        }
    } catch (const std::invalid_argument& e) {  // DomainError, malformed input
        err << "error: " << e.what() << '\n';
        return invalid_input;
    } catch (const std::out_of_range& e) {  // ScaleError
        err << "error: " << e.what() << '\n';
        return invalid_input;
    }

    if (o.output.empty()) {
        out << document;
    } else {
        std::ofstream file(o.output, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << o.output << " for writing\n";
            return invalid_input;
        }
        file << document;
    }
    return status;
}

}  // namespace partlab::cli

#include "partlab/partition_text.hpp"

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace partlab {
namespace {

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::int64_t parse_integer(std::string_view token, std::string_view whole) {
    token = trim(token);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
        throw std::invalid_argument("malformed partition \"" + std::string(whole) + "\": bad token \"" +
                                    std::string(token) + "\"");
    return value;
}

}  // namespace

Partition parse_partition(std::string_view text, ZeroParts zeros) {
    auto body = trim(text);
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')')
        body = trim(body.substr(1, body.size() - 2));
    std::vector<std::int64_t> values;
    if (body.empty())
        return Partition::from_parts(values, zeros);

    // Repetition counts above this would exhaust memory long before they mean anything.
    constexpr std::int64_t max_repeat = 1'000'000;
    std::size_t start = 0;
    while (start <= body.size()) {
        auto comma = body.find(',', start);
        auto token = body.substr(start, comma == std::string_view::npos ? body.size() - start : comma - start);
        auto caret = token.find('^');
        if (caret == std::string_view::npos) {
            values.push_back(parse_integer(token, text));
        } else {
            auto value = parse_integer(token.substr(0, caret), text);
            auto repeat = parse_integer(token.substr(caret + 1), text);
            if (repeat < 0 || repeat > max_repeat)
                throw std::invalid_argument("malformed partition \"" + std::string(text) +
                                            "\": bad exponent in \"" + std::string(trim(token)) + "\"");
            values.insert(values.end(), static_cast<std::size_t>(repeat), value);
        }
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return Partition::from_parts(values, zeros);
}

std::string format_partition(const Partition& p, Notation notation) {
    std::string out;
    auto parts = p.parts();
    for (std::size_t j = 0; j < parts.size();) {
        std::size_t run = 1;
        if (notation == Notation::compact)
            while (j + run < parts.size() && parts[j + run] == parts[j])
                ++run;
        if (!out.empty())
            out += ',';
        out += std::to_string(parts[j]);
        if (run > 1)
            out += '^' + std::to_string(run);
        j += run;
    }
    return out;
}

}  // namespace partlab

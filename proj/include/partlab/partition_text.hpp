#pragma once

#include <string>
#include <string_view>

#include "partlab/partition.hpp"

namespace partlab {

enum class Notation {
    expanded,  // "8,2,2,1,1,1"
    compact,   // "8,2^2,1^3"
};

/// Parses comma-separated parts in any order. "a^b" expands to b copies of a.
/// Optional surrounding parentheses and whitespace are ignored; "" is the
/// empty partition. Throws std::invalid_argument on malformed text.
Partition parse_partition(std::string_view text, ZeroParts zeros = ZeroParts::forbidden);

/// Canonical text form, weakly decreasing. The empty partition formats as "".
std::string format_partition(const Partition& p, Notation notation = Notation::expanded);

}  // namespace partlab

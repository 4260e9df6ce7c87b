#include "partlab/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace partlab {

ScaleLimits ScaleLimits::from_environment() {
    ScaleLimits limits;
    const char* raw = std::getenv("PARTLAB_MAX_N");
    if (raw == nullptr)
        return limits;
    std::uint64_t value = 0;
    auto end = raw + std::strlen(raw);
    auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec == std::errc{} && ptr == end && ptr != raw) {
        limits.enumeration_max_n = value;
        limits.sweep_max_n = value;
    }
    return limits;
}

}  // namespace partlab

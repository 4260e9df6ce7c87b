#pragma once

#include <cstdint>

namespace partlab {

struct ScaleLimits {
    std::uint64_t enumeration_max_n = 80;  // count-only sweeps and enumerate()
    std::uint64_t sweep_max_n = 45;        // exhaustive bijection sweeps

    /// Defaults, overridden by PARTLAB_MAX_N when it holds a nonnegative integer.
    static ScaleLimits from_environment();
};

}  // namespace partlab

#pragma once

#include <stdexcept>
#include <string>

namespace partlab {

/// An input lies outside the domain on which an operation is defined,
/// e.g. mapping a partition that is not a member of the source class.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A requested size exceeds the configured enumeration bound.
class ScaleError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

}  // namespace partlab

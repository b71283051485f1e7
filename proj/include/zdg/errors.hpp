#pragma once

#include <stdexcept>

namespace zdg {

/// An operation was called on input outside its domain (for example a
/// disconnected graph where connectivity is required).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

} // namespace zdg

#ifndef MDIM_ERROR_HPP
#define MDIM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mdim {

// Input-contract violations: bad vertex ids, malformed files, disconnected
// graphs passed to metric operations, oversized parameters.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Raised when a construction that is guaranteed to succeed fails its own
// verification step. Seeing one of these means a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace mdim

#endif

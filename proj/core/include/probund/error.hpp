#pragma once

#include <stdexcept>
#include <string>

namespace probund {

/// Thrown on contract violations: malformed algebraic data, incompatible
/// cospans, ring mismatches, out-of-range indices, and the like.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& what)
{
    if (!cond) throw Error(what);
}

} // namespace probund

#include "tfstar/errors.hpp"

#include <fmt/core.h>

namespace tfstar {

ParseError::ParseError(std::size_t position, const std::string& what)
    : std::runtime_error(fmt::format("parse error at position {}: {}", position, what)),
      position_(position)
{
}

ResourceError::ResourceError(double estimate, const std::string& what)
    : std::runtime_error(fmt::format("{} (estimated size {:.3g})", what, estimate)),
      estimate_(estimate)
{
}

Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("exponent arithmetic overflowed 64 bits");
    return r;
}

Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("exponent arithmetic overflowed 64 bits");
    return r;
}

Int checked_neg(Int a)
{
    return checked_sub(0, a);
}

} // namespace tfstar

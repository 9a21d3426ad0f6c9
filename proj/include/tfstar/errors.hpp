#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace tfstar {

using Int = std::int64_t;

/// Malformed representation text. `position` is the 0-based byte offset of
/// the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& what);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Caller broke a documented precondition.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Two gold monomials do not differ by a product of gold pairs.
class NamesIncomparable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The spectral-sequence engine reached a state that well-formed input
/// cannot produce. Carries a dump of the page state.
class InternalInvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A bounded search would exceed its configured ceiling.
class ResourceError : public std::runtime_error {
public:
    ResourceError(double estimate, const std::string& what);
    double estimate() const noexcept { return estimate_; }

private:
    double estimate_;
};

// Exponent arithmetic is exact; overflow of the 64-bit range is reported
// rather than wrapped.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_neg(Int a);

} // namespace tfstar

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tfstar/errors.hpp"

namespace tfstar {

/// A virtual T-representation in dimension-sequence form (d_0,...,d_{L-1}; d_inf),
/// optionally desuspended once (shift = -1 encodes alpha - 1).
///
/// The encoding length L is part of the value: (1;1) and (1,1;1) are equal as
/// gradings but give different spectral sequences, so operator== compares the
/// encoding exactly. Use same_grading() for padding-insensitive comparison.
struct VirtualRep {
    std::vector<Int> dims{0};
    Int d_inf = 0;
    int shift = 0;

    VirtualRep() = default;
    VirtualRep(std::vector<Int> dims_, Int d_inf_, int shift_ = 0);

    std::size_t length() const noexcept { return dims.size(); }
    /// d_r for any r >= 0; entries past the encoding equal d_inf.
    Int dim(std::size_t r) const noexcept { return r < dims.size() ? dims[r] : d_inf; }

    friend bool operator==(const VirtualRep&, const VirtualRep&) = default;
};

/// Coefficients in the irreducible decomposition k_0 l_0 + ... + k_{L-1} l_{L-1} + k_inf l_inf.
struct IrredDecomp {
    std::vector<Int> coeffs;
    Int k_inf = 0;

    friend bool operator==(const IrredDecomp&, const IrredDecomp&) = default;
};

/// Parses "(d_0,...,d_n;d_inf)". Whitespace is allowed between tokens.
VirtualRep parse_rep(std::string_view text);

/// Canonical form: "(1,-1,2;0)", no whitespace, shift not rendered.
std::string to_string(const VirtualRep& rep);

IrredDecomp irreducible_coeffs(const VirtualRep& rep);
VirtualRep from_irreducible(const IrredDecomp& dec);

/// alpha^(r): the dimension sequence starting at d_r. Requires r < L.
VirtualRep fixed_part(const VirtualRep& rep, std::size_t r);

VirtualRep add_rep(const VirtualRep& x, const VirtualRep& y);
/// alpha + lambda_i, padding first when i >= L.
VirtualRep add_lambda(const VirtualRep& rep, std::size_t i);
/// Appends copies of d_inf until the encoding has length new_length.
VirtualRep pad_rep(const VirtualRep& rep, std::size_t new_length);
/// The representation lambda_i encoded with length max(L, i + 1).
VirtualRep lambda_rep(std::size_t i, std::size_t length = 0);

/// Equality after padding both operands to a common length (shift included).
bool same_grading(const VirtualRep& x, const VirtualRep& y);

} // namespace tfstar

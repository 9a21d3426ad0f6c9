#pragma once

#include <utility>
#include <vector>

#include "tfstar/group.hpp"

namespace tfstar {

/// e_r = min(d_r, s_r) with s_r = -(e_{r+1} + ... + e_{L-1}), computed from the top
/// index down. For d_r > 0, e_r is the exponent of what survives of row r.
struct ESequence {
    std::vector<Int> e;
    std::vector<Int> s;
};

ESequence e_sequence(const VirtualRep& alpha);

/// Transversal summand intervals [s, r]: maximal runs of nonnegative d_i
/// (ending right before a negative entry when d_inf >= 0).
std::vector<std::pair<Int, Int>> subsequences_transversal(const VirtualRep& alpha);

/// Crystalline gluing chains as increasing index lists, lowest first index first.
std::vector<std::vector<Int>> chains_crystalline(const VirtualRep& alpha);

/// TF_alpha read off the closed-form description, with no spectral sequence.
GradedGroup closed_tf(const VirtualRep& alpha, PrismKind kind);
/// closed_tf without the generator degree check.
GradedGroup closed_tf_unchecked(const VirtualRep& alpha, PrismKind kind);

} // namespace tfstar

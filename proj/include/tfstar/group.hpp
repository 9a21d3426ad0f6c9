#pragma once

#include <string>
#include <vector>

#include "tfstar/gold.hpp"
#include "tfstar/prism.hpp"
#include "tfstar/rep.hpp"

namespace tfstar {

/// One cyclic summand A/I<generator> of a graded group. `filtration` is the
/// HOTFSS filtration the summand (or its lowest glued piece) comes from.
struct GroupSummand {
    CyclicIdeal ideal;
    GoldMonomial generator;
    Int filtration = 0;

    friend bool operator==(const GroupSummand&, const GroupSummand&) = default;
};

/// TF_grading as a direct sum. An empty summand list is the zero group.
struct GradedGroup {
    VirtualRep grading;
    PrismKind kind = PrismKind::transversal;
    std::vector<GroupSummand> summands;

    bool is_zero() const noexcept { return summands.empty(); }
    /// Sorts summands by descending filtration of origin.
    void normalize_order();

    friend bool operator==(const GradedGroup&, const GradedGroup&) = default;
};

/// Multiset comparison of (annihilator, generator) pairs; filtration and order ignored.
bool same_summands(const GradedGroup& x, const GradedGroup& y);

/// Summands whose generator degree (with suspension) differs from the grading.
std::vector<std::size_t> degree_violations(const GradedGroup& group);
/// Throws InternalInvariantError when degree_violations is nonempty.
void check_degrees(const GradedGroup& group);

/// "A/p<S^-1 a_0^-2 u_1^-1> ⊕ A<u_0>", or "0".
std::string to_string(const GradedGroup& group);
std::string to_latex(const GradedGroup& group);

} // namespace tfstar

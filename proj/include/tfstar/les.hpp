#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tfstar/group.hpp"

namespace tfstar {

/// Multiplication by a_{lambda_n} = a_0 ... a_n from TF_{alpha+lambda_n} to TF_alpha
/// in even degree, as a scalar on the free generators. nullopt is the zero map.
/// alpha is padded to length n + 1 first when shorter.
std::optional<PrismScalar> a_lambda_mul_even(const VirtualRep& alpha, Int n, PrismKind kind);

/// The single step a_i: TF_{alpha + delta_i} -> TF_alpha, where delta_i raises d_i by one.
std::optional<PrismScalar> a_mul_even(const VirtualRep& alpha, Int i, PrismKind kind);

struct KernelStatus {
    bool exact = false;
    /// Kernel summands A/ideal <coefficient * generator>, one per source summand that
    /// meets the kernel; generators are those of TF_{alpha+lambda_n-1}.
    GradedGroup kernel;
    std::vector<PrismScalar> coefficients;
    std::string reason;
};

/// The piece TF_{alpha+lambda_n} -> TF_alpha -> TR^{n+1}_alpha -> TF_{alpha+lambda_n-1} -> TF_{alpha-1}
/// of the long exact sequence.
struct TrReport {
    VirtualRep alpha;
    Int level = 0;
    PrismKind kind = PrismKind::transversal;
    GradedGroup tf_plus;
    GradedGroup tf_alpha;
    GradedGroup tf_plus_odd;
    GradedGroup tf_alpha_odd;
    std::optional<PrismScalar> even_map;
    GradedGroup cokernel;
    KernelStatus kernel;

    /// Crystalline p-length of TR^{n+1}_alpha when everything is finite and exact.
    std::optional<Int> tr_length() const;
};

TrReport tr_report(const VirtualRep& alpha, Int n, PrismKind kind);

std::string to_string(const TrReport& report);

} // namespace tfstar

#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tfstar/group.hpp"

namespace tfstar {

/// One cell of a homotopy-fixed-point spectral sequence page.
struct Summand {
    CyclicIdeal ideal;
    GoldMonomial generator;
    Int filtration = 0;

    friend bool operator==(const Summand&, const Summand&) = default;
};

/// A page E^k. Column -1 holds torsion keyed by filtration L - r; column 0 holds
/// at most the free summand at filtration 0.
struct SpectralPage {
    int page_index = 1;
    bool infinity = false;
    std::map<Int, Summand> torsion;
    std::optional<Summand> free;
    /// Pairs (upper, lower) of filtrations joined by a nontrivial extension; E^inf only.
    std::vector<std::pair<Int, Int>> extension_links;

    friend bool operator==(const SpectralPage&, const SpectralPage&) = default;
};

/// E^1: A/phi^r(xi)^{d_r} <S^-1 theta_r> at filtration L - r for every d_r > 0,
/// plus A<theta_{L-1}> at filtration 0 when d_inf >= 0.
SpectralPage e1_page(const VirtualRep& alpha, PrismKind kind);

/// E^1, E^2, ..., E^{L+1} = E^inf. The last page carries extension links.
std::vector<SpectralPage> run_pages(const VirtualRep& alpha, PrismKind kind);

/// After d^k kills kernel phi^r(xi)^k (or p^k) of the free class, the surviving
/// free generator is g (a_r u_r)^k.
GoldMonomial rename_kernel_generator(const GoldMonomial& g, Int r, const PrismScalar& kernel);

/// Links between torsion rows of E^inf. Rows s < r (as encoding indices) are
/// linked when theta_s = ann(r) theta_r holds on names and no row strictly
/// between them is related to either end the same way.
std::vector<std::pair<Int, Int>> find_extension_links(const SpectralPage& einf, std::size_t length);

/// Assembles E^inf into TF_{alpha-1} (shift -1) or TF_alpha (shift 0).
GradedGroup resolve_extensions(const SpectralPage& einf, const VirtualRep& alpha, PrismKind kind);

/// TF_alpha computed by running the spectral sequence.
GradedGroup tf(const VirtualRep& alpha, PrismKind kind);
/// tf without the generator degree check.
GradedGroup tf_unchecked(const VirtualRep& alpha, PrismKind kind);

} // namespace tfstar

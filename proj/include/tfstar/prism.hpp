#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tfstar/errors.hpp"

namespace tfstar {

/// Transversal: the phi^i(xi) are mutually regular and kept apart.
/// Crystalline: xi = p, so every phi^i(xi) collapses to p.
enum class PrismKind { transversal, crystalline };

std::string_view to_string(PrismKind kind);
std::optional<PrismKind> parse_prism_kind(std::string_view text);

/// A formal monomial prod_i phi^i(xi)^{k_i} (transversal) or p^k (crystalline).
/// Exponents are nonnegative; zero exponents are never stored.
class PrismScalar {
public:
    PrismScalar() = default;
    explicit PrismScalar(PrismKind kind) : kind_(kind) {}

    static PrismScalar one(PrismKind kind) { return PrismScalar(kind); }
    /// phi^i(xi)^k; in the crystalline backend this is p^k.
    static PrismScalar phi_power(PrismKind kind, Int i, Int k);
    static PrismScalar p_power(Int k);

    PrismKind kind() const noexcept { return kind_; }
    bool is_one() const noexcept { return phi_.empty() && p_ == 0; }
    /// Transversal exponent of phi^i(xi); zero in the crystalline backend.
    Int phi_exponent(Int i) const;
    const std::map<Int, Int>& phi_exponents() const noexcept { return phi_; }
    /// Crystalline exponent of p; the sum of all exponents when transversal.
    Int p_exponent() const;

    /// Applies the Frobenius: phi^i(xi) -> phi^{i+1}(xi). Identity when crystalline.
    PrismScalar frobenius() const;

    friend bool operator==(const PrismScalar&, const PrismScalar&) = default;
    friend auto operator<=>(const PrismScalar&, const PrismScalar&) = default;
    friend PrismScalar scalar_mul(const PrismScalar& x, const PrismScalar& y);

private:
    PrismKind kind_ = PrismKind::transversal;
    std::map<Int, Int> phi_;
    Int p_ = 0;
};

PrismScalar scalar_mul(const PrismScalar& x, const PrismScalar& y);
/// Transversal -> crystalline: sums every exponent into a p-power.
PrismScalar specialize(const PrismScalar& x);
/// [p^n]_A = xi phi(xi) ... phi^{n-1}(xi).
PrismScalar q_analog(PrismKind kind, Int n);

/// Monomial gcd and exact quotient; `divide` requires y | x.
PrismScalar scalar_gcd(const PrismScalar& x, const PrismScalar& y);
bool divides(const PrismScalar& y, const PrismScalar& x);
PrismScalar divide(const PrismScalar& x, const PrismScalar& y);

/// An ideal of A generated by 0, 1, or 2 scalars, kept unreduced.
/// No generators means the zero ideal, i.e. the free module A.
struct CyclicIdeal {
    std::vector<PrismScalar> gens;

    bool is_zero_ideal() const noexcept { return gens.empty(); }
    /// True when some generator is a unit, so A/I = 0.
    bool is_unit_ideal() const noexcept;
    /// p-length of A/I for crystalline ideals; nullopt when A/I is free.
    std::optional<Int> p_length() const;

    friend bool operator==(const CyclicIdeal&, const CyclicIdeal&) = default;
    friend auto operator<=>(const CyclicIdeal&, const CyclicIdeal&) = default;
};

CyclicIdeal specialize(const CyclicIdeal& ideal);

struct KernelCokernel {
    PrismScalar kernel;
    CyclicIdeal surviving_quotient;
};

/// The map A -> A/phi^r(xi)^d (or A/p^d) given by multiplication by `map_scalar`.
/// Returns a generator of its kernel and the ideal presenting the cokernel.
KernelCokernel kernel_cokernel(const PrismScalar& map_scalar, Int r, Int d);

std::string to_string(const PrismScalar& x);
std::string to_latex(const PrismScalar& x);
/// "A/p^3", "A/(xi, phi(xi))", "A" for the zero ideal.
std::string module_string(const CyclicIdeal& ideal);
std::string module_latex(const CyclicIdeal& ideal);

} // namespace tfstar

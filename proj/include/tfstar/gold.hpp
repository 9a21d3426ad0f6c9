#pragma once

#include <map>
#include <string>
#include <utility>

#include "tfstar/errors.hpp"
#include "tfstar/prism.hpp"
#include "tfstar/rep.hpp"

namespace tfstar {

/// A Laurent monomial in the gold elements a_i, u_i (i >= 0) and
/// u_{lambda_j} (j >= -1), times an optional desuspension.
///
/// Exponent maps never hold zeros, so structural equality is equality of
/// names. Names are modulo units throughout.
struct GoldMonomial {
    std::map<Int, Int> a;
    std::map<Int, Int> u;
    std::map<Int, Int> ulam;
    int suspension = 0;

    static GoldMonomial a_pow(Int i, Int k);
    static GoldMonomial u_pow(Int i, Int k);
    static GoldMonomial ulam_pow(Int j, Int k);
    /// (a_i u_i)^k, the name of phi^i(xi)^k.
    static GoldMonomial gold_pair(Int i, Int k);
    static GoldMonomial desuspension();

    Int a_exp(Int i) const;
    Int u_exp(Int i) const;
    Int ulam_exp(Int j) const;
    bool is_identity() const noexcept { return a.empty() && u.empty() && ulam.empty() && suspension == 0; }

    friend bool operator==(const GoldMonomial&, const GoldMonomial&) = default;
    friend auto operator<=>(const GoldMonomial&, const GoldMonomial&) = default;
};

/// Free commutative product; suspensions add and must stay in {0, -1}.
GoldMonomial monomial_mul(const GoldMonomial& x, const GoldMonomial& y);
/// Exponentwise negation of a, u, u_lambda. Suspension is left unchanged.
GoldMonomial monomial_inverse_names(const GoldMonomial& m);
/// x / y on names; suspensions must agree and the result has suspension 0.
GoldMonomial monomial_ratio(const GoldMonomial& x, const GoldMonomial& y);

/// The RO(T)-degree of a name: a_i lowers d_i, u_i raises d_i, u_{lambda_j}
/// raises d_r for all r > j and d_inf. Length is 1 + the largest index used.
VirtualRep degree(const GoldMonomial& m);

/// theta_r^alpha = a_0^{-d_0} ... a_r^{-d_r} u_{r+1}^{d_{r+1}} ... u_{L-1}^{d_{L-1}} u_{lambda_{L-1}}^{d_inf},
/// for -1 <= r <= L-1. The shift of alpha is ignored.
GoldMonomial theta(const VirtualRep& alpha, Int r);

/// Pulls every same-index gold pair a_i u_i out as phi^i(xi). No cross-index rewriting.
std::pair<PrismScalar, GoldMonomial> normalize(const GoldMonomial& m);

/// Succeeds when num / den is a product of gold pairs prod (a_i u_i)^{k_i}.
/// Transversal needs every k_i >= 0 and returns prod phi^i(xi)^{k_i}.
/// Crystalline identifies every a_i u_i with p, so only sum k_i >= 0 is needed
/// and the result is p^{sum k_i}. Throws NamesIncomparable otherwise.
PrismScalar divide_names(const GoldMonomial& num, const GoldMonomial& den, PrismKind kind);

/// Rewrites u_{lambda_j} = u_{j+1} ... u_top u_{lambda_top} for every j < top,
/// so names from encodings of different lengths can be compared.
GoldMonomial canonicalize_after_padding(const GoldMonomial& m, Int top);

/// "S^-1 a_0^-2 u_1 u_2^-2 u_3^3 u_l3"; the identity renders as "1".
std::string to_string(const GoldMonomial& m);
/// LaTeX, factors in index order.
std::string to_latex(const GoldMonomial& m);

} // namespace tfstar

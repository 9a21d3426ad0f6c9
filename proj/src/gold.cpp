#include "tfstar/gold.hpp"

#include <algorithm>
#include <set>

#include <fmt/core.h>

namespace tfstar {

namespace {

void bump(std::map<Int, Int>& exps, Int i, Int k)
{
    if (k == 0)
        return;
    Int v = checked_add(exps.count(i) ? exps[i] : 0, k);
    if (v == 0)
        exps.erase(i);
    else
        exps[i] = v;
}

Int lookup(const std::map<Int, Int>& exps, Int i)
{
    auto it = exps.find(i);
    return it == exps.end() ? 0 : it->second;
}

} // namespace

GoldMonomial GoldMonomial::a_pow(Int i, Int k)
{
    GoldMonomial m;
    bump(m.a, i, k);
    return m;
}

GoldMonomial GoldMonomial::u_pow(Int i, Int k)
{
    GoldMonomial m;
    bump(m.u, i, k);
    return m;
}

GoldMonomial GoldMonomial::ulam_pow(Int j, Int k)
{
    if (j < -1)
        throw ContractViolation("u_{lambda_j} needs j >= -1");
    GoldMonomial m;
    bump(m.ulam, j, k);
    return m;
}

GoldMonomial GoldMonomial::gold_pair(Int i, Int k)
{
    GoldMonomial m;
    bump(m.a, i, k);
    bump(m.u, i, k);
    return m;
}

GoldMonomial GoldMonomial::desuspension()
{
    GoldMonomial m;
    m.suspension = -1;
    return m;
}

Int GoldMonomial::a_exp(Int i) const { return lookup(a, i); }
Int GoldMonomial::u_exp(Int i) const { return lookup(u, i); }
Int GoldMonomial::ulam_exp(Int j) const { return lookup(ulam, j); }

GoldMonomial monomial_mul(const GoldMonomial& x, const GoldMonomial& y)
{
    int susp = x.suspension + y.suspension;
    if (susp < -1)
        throw ContractViolation("monomial_mul: combined suspension below -1 is not a grading in scope");
    GoldMonomial out = x;
    for (auto& [i, k] : y.a)
        bump(out.a, i, k);
    for (auto& [i, k] : y.u)
        bump(out.u, i, k);
    for (auto& [j, k] : y.ulam)
        bump(out.ulam, j, k);
    out.suspension = susp;
    return out;
}

GoldMonomial monomial_inverse_names(const GoldMonomial& m)
{
    GoldMonomial out;
    for (auto& [i, k] : m.a)
        out.a[i] = checked_neg(k);
    for (auto& [i, k] : m.u)
        out.u[i] = checked_neg(k);
    for (auto& [j, k] : m.ulam)
        out.ulam[j] = checked_neg(k);
    out.suspension = m.suspension;
    return out;
}

GoldMonomial monomial_ratio(const GoldMonomial& x, const GoldMonomial& y)
{
    if (x.suspension != y.suspension)
        throw ContractViolation("monomial_ratio: suspensions differ");
    GoldMonomial inv = monomial_inverse_names(y);
    inv.suspension = 0;
    GoldMonomial xs = x;
    xs.suspension = 0;
    return monomial_mul(xs, inv);
}

VirtualRep degree(const GoldMonomial& m)
{
    Int top = 0;
    for (auto& [i, k] : m.a)
        top = std::max(top, i);
    for (auto& [i, k] : m.u)
        top = std::max(top, i);
    for (auto& [j, k] : m.ulam)
        top = std::max(top, j);
    std::vector<Int> dims(static_cast<std::size_t>(top) + 1, 0);
    Int d_inf = 0;
    for (auto& [i, k] : m.a)
        dims[static_cast<std::size_t>(i)] = checked_sub(dims[static_cast<std::size_t>(i)], k);
    for (auto& [i, k] : m.u)
        dims[static_cast<std::size_t>(i)] = checked_add(dims[static_cast<std::size_t>(i)], k);
    for (auto& [j, k] : m.ulam) {
        for (Int r = j + 1; r <= top; ++r)
            dims[static_cast<std::size_t>(r)] = checked_add(dims[static_cast<std::size_t>(r)], k);
        d_inf = checked_add(d_inf, k);
    }
    return VirtualRep(std::move(dims), d_inf, m.suspension);
}

GoldMonomial theta(const VirtualRep& alpha, Int r)
{
    Int top = static_cast<Int>(alpha.length()) - 1;
    if (r < -1 || r > top)
        throw std::out_of_range(fmt::format("theta: r = {} outside [-1, {}]", r, top));
    GoldMonomial m;
    for (Int i = 0; i <= top; ++i) {
        Int d = alpha.dims[static_cast<std::size_t>(i)];
        if (i <= r)
            bump(m.a, i, checked_neg(d));
        else
            bump(m.u, i, d);
    }
    bump(m.ulam, top, alpha.d_inf);
    return m;
}

std::pair<PrismScalar, GoldMonomial> normalize(const GoldMonomial& m)
{
    PrismScalar scalar = PrismScalar::one(PrismKind::transversal);
    GoldMonomial out = m;
    for (auto& [i, ka] : m.a) {
        Int ku = m.u_exp(i);
        if (ka > 0 && ku > 0) {
            Int k = std::min(ka, ku);
            scalar = scalar_mul(scalar, PrismScalar::phi_power(PrismKind::transversal, i, k));
            bump(out.a, i, -k);
            bump(out.u, i, -k);
        }
    }
    return {scalar, out};
}

PrismScalar divide_names(const GoldMonomial& num, const GoldMonomial& den, PrismKind kind)
{
    if (num.suspension != den.suspension)
        throw ContractViolation("divide_names: suspensions differ");
    GoldMonomial diff = monomial_ratio(num, den);
    auto incomparable = [&] {
        return NamesIncomparable(fmt::format("names incomparable: ({}) / ({}) = {} is not a product of gold pairs",
                                             to_string(num), to_string(den), to_string(diff)));
    };
    if (!diff.ulam.empty() || diff.a != diff.u)
        throw incomparable();
    if (kind == PrismKind::crystalline) {
        Int total = 0;
        for (auto& [i, k] : diff.a)
            total = checked_add(total, k);
        if (total < 0)
            throw incomparable();
        return PrismScalar::p_power(total);
    }
    PrismScalar out = PrismScalar::one(kind);
    for (auto& [i, k] : diff.a) {
        if (k < 0)
            throw incomparable();
        out = scalar_mul(out, PrismScalar::phi_power(kind, i, k));
    }
    return out;
}

GoldMonomial canonicalize_after_padding(const GoldMonomial& m, Int top)
{
    GoldMonomial out = m;
    for (auto& [j, k] : m.ulam) {
        if (j >= top)
            continue;
        bump(out.ulam, j, -k);
        for (Int i = j + 1; i <= top; ++i)
            bump(out.u, i, k);
        bump(out.ulam, top, k);
    }
    return out;
}

namespace {

// "a_2", "u_3^3", "u_l3", "u_l-1^2"
std::string factor(std::string_view prefix, Int i, Int k)
{
    std::string idx = fmt::format("{}{}", prefix, i);
    return k == 1 ? idx : fmt::format("{}^{}", idx, k);
}

std::string latex_factor(char letter, Int i, Int k, bool lambda)
{
    std::string base = lambda ? fmt::format("u_{{\\lambda_{{{}}}}}", i) : fmt::format("{}_{{{}}}", letter, i);
    return k == 1 ? base : fmt::format("{}^{{{}}}", base, k);
}

} // namespace

std::string to_string(const GoldMonomial& m)
{
    std::string out;
    auto add = [&](std::string f) {
        if (!out.empty())
            out += ' ';
        out += f;
    };
    if (m.suspension == -1)
        add("S^-1");
    for (auto& [i, k] : m.a)
        add(factor("a_", i, k));
    for (auto& [i, k] : m.u)
        add(factor("u_", i, k));
    for (auto& [j, k] : m.ulam)
        add(factor("u_l", j, k));
    if (m.a.empty() && m.u.empty() && m.ulam.empty())
        return m.suspension == 0 ? "1" : out;
    return out;
}

std::string to_latex(const GoldMonomial& m)
{
    std::set<Int> indices;
    for (auto& [i, k] : m.a)
        indices.insert(i);
    for (auto& [i, k] : m.u)
        indices.insert(i);
    std::string out = m.suspension == -1 ? "\\Sigma^{-1} " : "";
    std::string body;
    for (Int i : indices) {
        if (Int k = m.u_exp(i))
            body += latex_factor('u', i, k, false);
        if (Int k = m.a_exp(i))
            body += latex_factor('a', i, k, false);
    }
    for (auto& [j, k] : m.ulam)
        body += latex_factor('u', j, k, true);
    return out + (body.empty() ? "1" : body);
}

} // namespace tfstar

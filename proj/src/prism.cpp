#include "tfstar/prism.hpp"

#include <algorithm>

#include <fmt/core.h>

namespace tfstar {

std::string_view to_string(PrismKind kind)
{
    return kind == PrismKind::transversal ? "transversal" : "crystalline";
}

std::optional<PrismKind> parse_prism_kind(std::string_view text)
{
    if (text == "transversal")
        return PrismKind::transversal;
    if (text == "crystalline")
        return PrismKind::crystalline;
    return std::nullopt;
}

PrismScalar PrismScalar::phi_power(PrismKind kind, Int i, Int k)
{
    if (k < 0)
        throw ContractViolation("prism scalars have nonnegative exponents");
    if (i < 0)
        throw ContractViolation("phi^i(xi) needs i >= 0");
    PrismScalar s(kind);
    if (k == 0)
        return s;
    if (kind == PrismKind::transversal)
        s.phi_[i] = k;
    else
        s.p_ = k;
    return s;
}

PrismScalar PrismScalar::p_power(Int k)
{
    return phi_power(PrismKind::crystalline, 0, k);
}

Int PrismScalar::phi_exponent(Int i) const
{
    auto it = phi_.find(i);
    return it == phi_.end() ? 0 : it->second;
}

Int PrismScalar::p_exponent() const
{
    if (kind_ == PrismKind::crystalline)
        return p_;
    Int total = 0;
    for (auto& [i, k] : phi_)
        total = checked_add(total, k);
    return total;
}

PrismScalar PrismScalar::frobenius() const
{
    PrismScalar out(kind_);
    out.p_ = p_;
    for (auto& [i, k] : phi_)
        out.phi_[i + 1] = k;
    return out;
}

PrismScalar scalar_mul(const PrismScalar& x, const PrismScalar& y)
{
    if (x.kind() != y.kind())
        throw ContractViolation("scalar_mul: transversal and crystalline scalars cannot be mixed");
    if (x.kind() == PrismKind::crystalline)
        return PrismScalar::p_power(checked_add(x.p_exponent(), y.p_exponent()));
    PrismScalar out = x;
    for (auto& [i, k] : y.phi_)
        out.phi_[i] = checked_add(out.phi_exponent(i), k);
    return out;
}

PrismScalar specialize(const PrismScalar& x)
{
    return PrismScalar::p_power(x.p_exponent());
}

PrismScalar q_analog(PrismKind kind, Int n)
{
    if (n < 0)
        throw ContractViolation("q_analog needs n >= 0");
    if (kind == PrismKind::crystalline)
        return PrismScalar::p_power(n);
    PrismScalar out(kind);
    for (Int i = 0; i < n; ++i)
        out = scalar_mul(out, PrismScalar::phi_power(kind, i, 1));
    return out;
}

PrismScalar scalar_gcd(const PrismScalar& x, const PrismScalar& y)
{
    if (x.kind() != y.kind())
        throw ContractViolation("scalar_gcd: kind mismatch");
    if (x.kind() == PrismKind::crystalline)
        return PrismScalar::p_power(std::min(x.p_exponent(), y.p_exponent()));
    PrismScalar out(x.kind());
    for (auto& [i, k] : x.phi_exponents())
        out = scalar_mul(out, PrismScalar::phi_power(x.kind(), i, std::min(k, y.phi_exponent(i))));
    return out;
}

bool divides(const PrismScalar& y, const PrismScalar& x)
{
    return scalar_gcd(x, y) == y;
}

PrismScalar divide(const PrismScalar& x, const PrismScalar& y)
{
    if (!divides(y, x))
        throw ContractViolation(fmt::format("divide: {} does not divide {}", to_string(y), to_string(x)));
    if (x.kind() == PrismKind::crystalline)
        return PrismScalar::p_power(x.p_exponent() - y.p_exponent());
    PrismScalar out(x.kind());
    for (auto& [i, k] : x.phi_exponents())
        out = scalar_mul(out, PrismScalar::phi_power(x.kind(), i, k - y.phi_exponent(i)));
    return out;
}

bool CyclicIdeal::is_unit_ideal() const noexcept
{
    return std::any_of(gens.begin(), gens.end(), [](const PrismScalar& g) { return g.is_one(); });
}

std::optional<Int> CyclicIdeal::p_length() const
{
    if (gens.empty())
        return std::nullopt;
    Int len = gens.front().p_exponent();
    for (auto& g : gens)
        len = std::min(len, g.p_exponent());
    return len;
}

CyclicIdeal specialize(const CyclicIdeal& ideal)
{
    CyclicIdeal out;
    for (auto& g : ideal.gens)
        out.gens.push_back(specialize(g));
    return out;
}

KernelCokernel kernel_cokernel(const PrismScalar& map_scalar, Int r, Int d)
{
    if (d <= 0)
        throw ContractViolation("kernel_cokernel: target exponent must be positive");
    PrismKind kind = map_scalar.kind();
    if (kind == PrismKind::transversal) {
        if (map_scalar.phi_exponent(r) != 0)
            throw ContractViolation(fmt::format(
                "kernel_cokernel: map scalar {} involves phi^{}(xi), the target's own generator",
                to_string(map_scalar), r));
        // phi^r(xi) is regular modulo the other phi^i(xi), so the kernel is
        // exactly the target's annihilator.
        PrismScalar target = PrismScalar::phi_power(kind, r, d);
        return {target, CyclicIdeal{{target, map_scalar}}};
    }
    Int s = map_scalar.p_exponent();
    Int kernel_exp = std::max<Int>(checked_sub(d, s), 0);
    return {PrismScalar::p_power(kernel_exp), CyclicIdeal{{PrismScalar::p_power(std::min(d, s))}}};
}

namespace {

std::string power_suffix(Int k)
{
    return k == 1 ? std::string() : fmt::format("^{}", k);
}

std::string latex_power_suffix(Int k)
{
    return k == 1 ? std::string() : fmt::format("^{{{}}}", k);
}

} // namespace

std::string to_string(const PrismScalar& x)
{
    if (x.is_one())
        return "1";
    if (x.kind() == PrismKind::crystalline)
        return "p" + power_suffix(x.p_exponent());
    std::string out;
    for (auto& [i, k] : x.phi_exponents()) {
        if (!out.empty())
            out += "*";
        if (i == 0)
            out += "xi";
        else if (i == 1)
            out += "phi(xi)";
        else
            out += fmt::format("phi^{}(xi)", i);
        out += power_suffix(k);
    }
    return out;
}

std::string to_latex(const PrismScalar& x)
{
    if (x.is_one())
        return "1";
    if (x.kind() == PrismKind::crystalline)
        return "p" + latex_power_suffix(x.p_exponent());
    std::string out;
    for (auto& [i, k] : x.phi_exponents()) {
        if (i == 0)
            out += "\\xi";
        else if (i == 1)
            out += "\\phi(\\xi)";
        else
            out += fmt::format("\\phi^{{{}}}(\\xi)", i);
        out += latex_power_suffix(k);
    }
    return out;
}

namespace {

bool is_single_factor(const PrismScalar& x)
{
    return x.kind() == PrismKind::crystalline || x.phi_exponents().size() <= 1;
}

} // namespace

std::string module_string(const CyclicIdeal& ideal)
{
    if (ideal.gens.empty())
        return "A";
    if (ideal.gens.size() == 1 && is_single_factor(ideal.gens[0]))
        return "A/" + to_string(ideal.gens[0]);
    std::string out = "A/(";
    for (std::size_t i = 0; i < ideal.gens.size(); ++i) {
        if (i)
            out += ", ";
        out += to_string(ideal.gens[i]);
    }
    return out + ")";
}

std::string module_latex(const CyclicIdeal& ideal)
{
    if (ideal.gens.empty())
        return "A";
    if (ideal.gens.size() == 1)
        return "A/" + to_latex(ideal.gens[0]);
    std::string out = "A/(";
    for (std::size_t i = 0; i < ideal.gens.size(); ++i) {
        if (i)
            out += ",";
        out += to_latex(ideal.gens[i]);
    }
    return out + ")";
}

} // namespace tfstar

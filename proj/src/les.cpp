#include "tfstar/les.hpp"

#include <set>

#include <fmt/core.h>

#include "tfstar/closedform.hpp"

namespace tfstar {

namespace {

VirtualRep padded(const VirtualRep& alpha, Int n)
{
    return pad_rep(alpha, std::max(alpha.length(), static_cast<std::size_t>(n) + 1));
}

VirtualRep with_shift(VirtualRep rep, int shift)
{
    rep.shift = shift;
    return rep;
}

GoldMonomial a_lambda_name(Int n)
{
    GoldMonomial m;
    for (Int i = 0; i <= n; ++i)
        m = monomial_mul(m, GoldMonomial::a_pow(i, 1));
    return m;
}

std::optional<PrismScalar> even_scalar(const VirtualRep& source, const VirtualRep& target, const GoldMonomial& a_name,
                                       PrismKind kind)
{
    GradedGroup g1 = closed_tf(source, kind);
    GradedGroup g0 = closed_tf(target, kind);
    if (g1.is_zero() || g0.is_zero())
        return std::nullopt;
    try {
        return divide_names(monomial_mul(g1.summands.front().generator, a_name), g0.summands.front().generator, kind);
    } catch (const NamesIncomparable&) {
        return std::nullopt;
    }
}

// x / gcd(x, c): the generator of ((x) : c).
PrismScalar colon(const PrismScalar& x, const PrismScalar& c)
{
    return divide(x, scalar_gcd(x, c));
}

struct DiagonalKernel {
    bool cyclic = true;
    PrismScalar coefficient;
    CyclicIdeal ideal;
};

// Kernel of A/I --c--> A/J, presented as A/(I : g) <g> with (g) = (J : c).
DiagonalKernel diagonal_kernel(const CyclicIdeal& source, const CyclicIdeal& target, const PrismScalar& c)
{
    std::vector<PrismScalar> quotient;
    for (auto& j : target.gens)
        quotient.push_back(colon(j, c));
    DiagonalKernel k;
    PrismKind kind = c.kind();
    bool unit = std::any_of(quotient.begin(), quotient.end(), [](const PrismScalar& q) { return q.is_one(); });
    if (unit) {
        k.coefficient = PrismScalar::one(kind);
    } else if (quotient.size() == 1) {
        k.coefficient = quotient[0];
    } else if (divides(quotient[0], quotient[1])) {
        k.coefficient = quotient[0];
    } else if (divides(quotient[1], quotient[0])) {
        k.coefficient = quotient[1];
    } else {
        k.cyclic = false;
        return k;
    }
    for (auto& i : source.gens)
        k.ideal.gens.push_back(colon(i, k.coefficient));
    return k;
}

KernelStatus odd_kernel(const GradedGroup& source, const GradedGroup& target, const GoldMonomial& a_name,
                        PrismKind kind)
{
    KernelStatus status;
    status.kernel = GradedGroup{source.grading, kind, {}};
    if (source.is_zero()) {
        status.exact = true;
        return status;
    }
    if (target.is_zero()) {
        status.exact = true;
        status.kernel.summands = source.summands;
        status.coefficients.assign(source.summands.size(), PrismScalar::one(kind));
        return status;
    }
    std::set<std::size_t> used;
    for (auto& s : source.summands) {
        GoldMonomial image = monomial_mul(s.generator, a_name);
        std::vector<std::pair<std::size_t, PrismScalar>> hits;
        for (std::size_t t = 0; t < target.summands.size(); ++t) {
            try {
                hits.emplace_back(t, divide_names(image, target.summands[t].generator, kind));
            } catch (const NamesIncomparable&) {
            }
        }
        if (hits.size() != 1) {
            status.reason = fmt::format(
                "the image of {} is {} by name comparison; odd-degree maps between torsion "
                "summands are not determined by names alone",
                to_string(s.generator), hits.empty() ? "comparable with no target summand" : "comparable with several target summands");
            return status;
        }
        auto [t, c] = hits.front();
        if (!used.insert(t).second) {
            status.reason = "two source summands map to the same target summand; the map is not diagonal";
            return status;
        }
        DiagonalKernel k = diagonal_kernel(s.ideal, target.summands[t].ideal, c);
        if (!k.cyclic) {
            status.reason = fmt::format("the kernel on {} is not cyclic", to_string(s.generator));
            return status;
        }
        if (k.ideal.is_unit_ideal())
            continue;
        status.kernel.summands.push_back({k.ideal, s.generator, s.filtration});
        status.coefficients.push_back(k.coefficient);
    }
    status.exact = true;
    return status;
}

} // namespace

std::optional<PrismScalar> a_lambda_mul_even(const VirtualRep& alpha, Int n, PrismKind kind)
{
    if (alpha.shift != 0)
        throw ContractViolation("a_lambda_mul_even needs shift 0");
    if (n < 0)
        throw ContractViolation("a_lambda_mul_even needs n >= 0");
    VirtualRep base = padded(alpha, n);
    return even_scalar(add_lambda(base, static_cast<std::size_t>(n)), base, a_lambda_name(n), kind);
}

std::optional<PrismScalar> a_mul_even(const VirtualRep& alpha, Int i, PrismKind kind)
{
    if (alpha.shift != 0)
        throw ContractViolation("a_mul_even needs shift 0");
    if (i < 0)
        throw ContractViolation("a_mul_even needs i >= 0");
    VirtualRep base = padded(alpha, i);
    VirtualRep source = base;
    auto idx = static_cast<std::size_t>(i);
    source.dims[idx] = checked_add(source.dims[idx], 1);
    return even_scalar(source, base, GoldMonomial::a_pow(i, 1), kind);
}

std::optional<Int> TrReport::tr_length() const
{
    if (kind != PrismKind::crystalline || !kernel.exact)
        return std::nullopt;
    Int total = 0;
    for (const GradedGroup* g : {&cokernel, &kernel.kernel})
        for (auto& s : g->summands) {
            auto len = s.ideal.p_length();
            if (!len)
                return std::nullopt;
            total = checked_add(total, *len);
        }
    return total;
}

TrReport tr_report(const VirtualRep& alpha, Int n, PrismKind kind)
{
    if (alpha.shift != 0)
        throw ContractViolation("tr_report needs shift 0");
    if (n < 0)
        throw ContractViolation("tr_report needs n >= 0");
    TrReport rep;
    rep.alpha = padded(alpha, n);
    rep.level = n;
    rep.kind = kind;
    VirtualRep plus = add_lambda(rep.alpha, static_cast<std::size_t>(n));
    rep.tf_plus = closed_tf(plus, kind);
    rep.tf_alpha = closed_tf(rep.alpha, kind);
    rep.tf_plus_odd = closed_tf(with_shift(plus, -1), kind);
    rep.tf_alpha_odd = closed_tf(with_shift(rep.alpha, -1), kind);
    rep.even_map = a_lambda_mul_even(rep.alpha, n, kind);

    rep.cokernel = GradedGroup{rep.alpha, kind, {}};
    if (!rep.tf_alpha.is_zero()) {
        const GroupSummand& free = rep.tf_alpha.summands.front();
        if (!rep.even_map)
            rep.cokernel.summands.push_back(free);
        else if (!rep.even_map->is_one())
            rep.cokernel.summands.push_back({CyclicIdeal{{*rep.even_map}}, free.generator, free.filtration});
    }
    rep.kernel = odd_kernel(rep.tf_plus_odd, rep.tf_alpha_odd, a_lambda_name(n), kind);
    return rep;
}

std::string to_string(const TrReport& r)
{
    std::string out = fmt::format("TR^{}_alpha for alpha = {} ({})\n", r.level + 1, to_string(r.alpha), to_string(r.kind));
    out += fmt::format("  TF_(alpha+lambda_{})   = {}\n", r.level, to_string(r.tf_plus));
    out += fmt::format("  TF_alpha              = {}\n", to_string(r.tf_alpha));
    out += fmt::format("  TF_(alpha+lambda_{}-1) = {}\n", r.level, to_string(r.tf_plus_odd));
    out += fmt::format("  TF_(alpha-1)          = {}\n", to_string(r.tf_alpha_odd));
    out += fmt::format("  even map a_lambda_{}   = {}\n", r.level, r.even_map ? to_string(*r.even_map) : "0");
    out += fmt::format("  cokernel              = {}\n", to_string(r.cokernel));
    if (r.kernel.exact) {
        std::string k = "0";
        if (!r.kernel.kernel.is_zero()) {
            k.clear();
            for (std::size_t i = 0; i < r.kernel.kernel.summands.size(); ++i) {
                auto& s = r.kernel.kernel.summands[i];
                const PrismScalar& c = r.kernel.coefficients[i];
                if (!k.empty())
                    k += " ⊕ ";
                k += fmt::format("{}⟨{}{}⟩", module_string(s.ideal), c.is_one() ? "" : to_string(c) + " ",
                                 to_string(s.generator));
            }
        }
        out += fmt::format("  kernel                = {}\n", k);
    } else {
        out += fmt::format("  kernel                = undetermined: {}\n", r.kernel.reason);
    }
    out += fmt::format("  TR^{}_alpha is an extension of the kernel by the cokernel", r.level + 1);
    if (auto len = r.tr_length())
        out += fmt::format("; total p-length {}", *len);
    return out + "\n";
}

} // namespace tfstar

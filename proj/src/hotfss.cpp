#include "tfstar/hotfss.hpp"

#include <algorithm>

#include <fmt/core.h>

namespace tfstar {

namespace {

Int length_of(const VirtualRep& alpha)
{
    return static_cast<Int>(alpha.length());
}

std::string page_dump(const SpectralPage& page)
{
    std::string out = fmt::format("E^{}:", page.page_index);
    for (auto& [f, s] : page.torsion)
        out += fmt::format(" [f={}] {}<{}>", f, module_string(s.ideal), to_string(s.generator));
    if (page.free)
        out += fmt::format(" [f=0] A<{}>", to_string(page.free->generator));
    return out;
}

GoldMonomial unsuspended(GoldMonomial m)
{
    m.suspension = 0;
    return m;
}

// theta_s = ann(r) * theta_r on names, with ann(r) the row's primary generator.
bool related(const Summand& upper, const Summand& lower)
{
    try {
        PrismScalar q = divide_names(upper.generator, lower.generator, lower.ideal.gens.front().kind());
        return q == lower.ideal.gens.front();
    } catch (const NamesIncomparable&) {
        return false;
    }
}

} // namespace

SpectralPage e1_page(const VirtualRep& alpha, PrismKind kind)
{
    SpectralPage page;
    Int len = length_of(alpha);
    for (Int r = 0; r < len; ++r) {
        Int d = alpha.dims[static_cast<std::size_t>(r)];
        if (d <= 0)
            continue;
        Summand s{CyclicIdeal{{PrismScalar::phi_power(kind, r, d)}},
                  monomial_mul(GoldMonomial::desuspension(), theta(alpha, r)), len - r};
        page.torsion.emplace(len - r, std::move(s));
    }
    if (alpha.d_inf >= 0)
        page.free = Summand{CyclicIdeal{}, theta(alpha, len - 1), 0};
    return page;
}

GoldMonomial rename_kernel_generator(const GoldMonomial& g, Int r, const PrismScalar& kernel)
{
    Int k = kernel.kind() == PrismKind::crystalline ? kernel.p_exponent() : kernel.phi_exponent(r);
    if (kernel.kind() == PrismKind::transversal && kernel.p_exponent() != k)
        throw ContractViolation("rename_kernel_generator: transversal kernel must be a power of phi^r(xi)");
    return monomial_mul(g, GoldMonomial::gold_pair(r, k));
}

std::vector<SpectralPage> run_pages(const VirtualRep& alpha, PrismKind kind)
{
    Int len = length_of(alpha);
    std::vector<SpectralPage> pages;
    pages.push_back(e1_page(alpha, kind));
    for (Int k = 1; k <= len; ++k) {
        SpectralPage next = pages.back();
        next.page_index = static_cast<int>(k + 1);
        auto row = next.torsion.find(k);
        if (next.free && row != next.torsion.end()) {
            Int r = len - k;
            Int d = alpha.dims[static_cast<std::size_t>(r)];
            const GoldMonomial& g = next.free->generator;
            PrismScalar map_scalar;
            try {
                map_scalar = divide_names(g, unsuspended(row->second.generator), kind);
            } catch (const NamesIncomparable& e) {
                throw InternalInvariantError(fmt::format("d^{} on {}: {}; page {}", k, to_string(alpha), e.what(),
                                                         page_dump(pages.back())));
            }
            KernelCokernel kc = kernel_cokernel(map_scalar, r, d);
            next.free->generator = rename_kernel_generator(g, r, kc.kernel);
            if (kc.surviving_quotient.is_unit_ideal())
                next.torsion.erase(row);
            else
                row->second.ideal = kc.surviving_quotient;
        }
        pages.push_back(std::move(next));
    }
    pages.back().infinity = true;
    pages.back().extension_links = find_extension_links(pages.back(), alpha.length());
    return pages;
}

std::vector<std::pair<Int, Int>> find_extension_links(const SpectralPage& einf, std::size_t length)
{
    (void)length;
    // Rows in increasing encoding index r = L - filtration.
    std::vector<const Summand*> rows;
    for (auto it = einf.torsion.rbegin(); it != einf.torsion.rend(); ++it)
        rows.push_back(&it->second);
    std::size_t n = rows.size();
    std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t r = s + 1; r < n; ++r)
            rel[s][r] = related(*rows[s], *rows[r]);
    std::vector<std::pair<Int, Int>> links;
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t r = s + 1; r < n; ++r) {
            if (!rel[s][r])
                continue;
            bool blocked = false;
            for (std::size_t m = s + 1; m < r && !blocked; ++m)
                blocked = rel[s][m] || rel[m][r];
            if (!blocked)
                links.emplace_back(rows[s]->filtration, rows[r]->filtration);
        }
    return links;
}

GradedGroup resolve_extensions(const SpectralPage& einf, const VirtualRep& alpha, PrismKind kind)
{
    GradedGroup out{alpha, kind, {}};
    if (alpha.shift == 0) {
        if (einf.free)
            out.summands.push_back({einf.free->ideal, einf.free->generator, 0});
        return out;
    }
    auto links = find_extension_links(einf, alpha.length());
    std::map<Int, Int> next, prev;
    for (auto [upper, lower] : links) {
        if (next.count(upper) || prev.count(lower))
            throw InternalInvariantError(fmt::format("extension links branch at filtration {} for {}: {}", upper,
                                                     to_string(alpha), page_dump(einf)));
        next[upper] = lower;
        prev[lower] = upper;
    }
    // Highest filtration first, so chains start at their top row.
    for (auto it = einf.torsion.rbegin(); it != einf.torsion.rend(); ++it) {
        Int f = it->first;
        if (prev.count(f))
            continue;
        Summand glued = it->second;
        PrismScalar primary = glued.ideal.gens.front();
        while (next.count(f)) {
            f = next[f];
            const Summand& lower = einf.torsion.at(f);
            primary = scalar_mul(primary, lower.ideal.gens.front());
            std::vector<PrismScalar> rest(lower.ideal.gens.begin() + 1, lower.ideal.gens.end());
            std::vector<PrismScalar> mine(glued.ideal.gens.begin() + 1, glued.ideal.gens.end());
            if (!mine.empty() && rest != mine)
                throw InternalInvariantError(fmt::format("glued rows disagree on secondary annihilators for {}: {}",
                                                         to_string(alpha), page_dump(einf)));
            glued = lower;
            glued.ideal.gens = {primary};
            glued.ideal.gens.insert(glued.ideal.gens.end(), rest.begin(), rest.end());
        }
        out.summands.push_back({glued.ideal, glued.generator, glued.filtration});
    }
    out.normalize_order();
    return out;
}

GradedGroup tf(const VirtualRep& alpha, PrismKind kind)
{
    GradedGroup out = tf_unchecked(alpha, kind);
    check_degrees(out);
    return out;
}

GradedGroup tf_unchecked(const VirtualRep& alpha, PrismKind kind)
{
    return resolve_extensions(run_pages(alpha, kind).back(), alpha, kind);
}

} // namespace tfstar

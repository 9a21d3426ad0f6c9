#include "tfstar/closedform.hpp"

#include <map>

namespace tfstar {

namespace {

Int len_of(const VirtualRep& alpha)
{
    return static_cast<Int>(alpha.length());
}

Int d_at(const VirtualRep& alpha, Int i)
{
    return alpha.dims[static_cast<std::size_t>(i)];
}

Int sum_d(const VirtualRep& alpha, Int lo, Int hi)
{
    Int total = 0;
    for (Int i = lo; i <= hi; ++i)
        total = checked_add(total, d_at(alpha, i));
    return total;
}

GoldMonomial suspended_theta(const VirtualRep& alpha, Int r)
{
    return monomial_mul(GoldMonomial::desuspension(), theta(alpha, r));
}

GradedGroup closed_free(const VirtualRep& alpha, PrismKind kind)
{
    GradedGroup out{alpha, kind, {}};
    if (alpha.d_inf < 0)
        return out;
    Int len = len_of(alpha);
    GoldMonomial g;
    if (kind == PrismKind::transversal) {
        for (Int i = 0; i < len; ++i) {
            Int d = d_at(alpha, i);
            g = monomial_mul(g, d > 0 ? GoldMonomial::u_pow(i, d) : GoldMonomial::a_pow(i, -d));
        }
        g = monomial_mul(g, GoldMonomial::ulam_pow(len - 1, alpha.d_inf));
    } else {
        ESequence es = e_sequence(alpha);
        g = theta(alpha, len - 1);
        for (Int r = 0; r < len; ++r)
            if (d_at(alpha, r) > 0)
                g = monomial_mul(g, GoldMonomial::gold_pair(r, d_at(alpha, r) - es.e[static_cast<std::size_t>(r)]));
    }
    out.summands.push_back({CyclicIdeal{}, g, 0});
    return out;
}

GradedGroup closed_torsion_transversal(const VirtualRep& alpha)
{
    const PrismKind kind = PrismKind::transversal;
    GradedGroup out{alpha, kind, {}};
    Int len = len_of(alpha);
    for (auto [s, r] : subsequences_transversal(alpha)) {
        PrismScalar o = PrismScalar::one(kind);
        Int last_positive = -1;
        for (Int i = s; i <= r; ++i) {
            o = scalar_mul(o, PrismScalar::phi_power(kind, i, d_at(alpha, i)));
            if (d_at(alpha, i) > 0)
                last_positive = i;
        }
        if (o.is_one())
            continue;
        CyclicIdeal ideal{{o}};
        if (alpha.d_inf >= 0) {
            PrismScalar f = PrismScalar::one(kind);
            for (Int i = r + 1; i < len; ++i)
                if (d_at(alpha, i) < 0)
                    f = scalar_mul(f, PrismScalar::phi_power(kind, i, -d_at(alpha, i)));
            ideal.gens.push_back(f);
        }
        out.summands.push_back({ideal, suspended_theta(alpha, r), len - last_positive});
    }
    return out;
}

GradedGroup closed_torsion_crystalline(const VirtualRep& alpha)
{
    GradedGroup out{alpha, PrismKind::crystalline, {}};
    Int len = len_of(alpha);
    bool region3 = alpha.d_inf >= 0;
    std::vector<Int> w(static_cast<std::size_t>(len));
    if (region3)
        w = e_sequence(alpha).e;
    else
        for (Int i = 0; i < len; ++i)
            w[static_cast<std::size_t>(i)] = d_at(alpha, i);
    for (auto& chain : chains_crystalline(alpha)) {
        Int o = 0;
        for (Int i : chain)
            o = checked_add(o, w[static_cast<std::size_t>(i)]);
        Int last = chain.back();
        out.summands.push_back({CyclicIdeal{{PrismScalar::p_power(o)}}, suspended_theta(alpha, last), len - last});
    }
    return out;
}

} // namespace

ESequence e_sequence(const VirtualRep& alpha)
{
    Int len = len_of(alpha);
    ESequence es{std::vector<Int>(static_cast<std::size_t>(len)), std::vector<Int>(static_cast<std::size_t>(len))};
    Int acc = 0;
    for (Int r = len - 1; r >= 0; --r) {
        auto idx = static_cast<std::size_t>(r);
        es.s[idx] = acc;
        es.e[idx] = std::min(d_at(alpha, r), acc);
        acc = checked_sub(acc, es.e[idx]);
    }
    return es;
}

std::vector<std::pair<Int, Int>> subsequences_transversal(const VirtualRep& alpha)
{
    Int len = len_of(alpha);
    std::vector<std::pair<Int, Int>> out;
    Int i = 0;
    while (i < len) {
        if (d_at(alpha, i) < 0) {
            ++i;
            continue;
        }
        Int s = i;
        while (i + 1 < len && d_at(alpha, i + 1) >= 0)
            ++i;
        Int r = i;
        ++i;
        // With d_inf >= 0 the run must be capped by a negative entry.
        if (alpha.d_inf >= 0 && r == len - 1)
            continue;
        out.emplace_back(s, r);
    }
    return out;
}

std::vector<std::vector<Int>> chains_crystalline(const VirtualRep& alpha)
{
    Int len = len_of(alpha);
    bool region3 = alpha.d_inf >= 0;
    std::vector<Int> e = region3 ? e_sequence(alpha).e : std::vector<Int>{};
    std::vector<Int> q;
    for (Int i = 0; i < len; ++i)
        if ((region3 ? e[static_cast<std::size_t>(i)] : d_at(alpha, i)) > 0)
            q.push_back(i);
    auto pair_ok = [&](Int s, Int r) {
        if (region3)
            return sum_d(alpha, s + 1, r) == e[static_cast<std::size_t>(r)];
        return sum_d(alpha, s + 1, r - 1) == 0;
    };
    std::map<Int, Int> next;
    std::map<Int, bool> has_prev;
    for (std::size_t a = 0; a < q.size(); ++a)
        for (std::size_t b = a + 1; b < q.size(); ++b) {
            if (!pair_ok(q[a], q[b]))
                continue;
            bool blocked = false;
            for (std::size_t m = a + 1; m < b && !blocked; ++m)
                blocked = pair_ok(q[a], q[m]) || pair_ok(q[m], q[b]);
            if (!blocked) {
                next[q[a]] = q[b];
                has_prev[q[b]] = true;
            }
        }
    std::vector<std::vector<Int>> chains;
    for (Int i : q) {
        if (has_prev.count(i))
            continue;
        std::vector<Int> chain{i};
        while (next.count(chain.back()))
            chain.push_back(next[chain.back()]);
        chains.push_back(std::move(chain));
    }
    return chains;
}

GradedGroup closed_tf(const VirtualRep& alpha, PrismKind kind)
{
    GradedGroup out = closed_tf_unchecked(alpha, kind);
    check_degrees(out);
    return out;
}

GradedGroup closed_tf_unchecked(const VirtualRep& alpha, PrismKind kind)
{
    GradedGroup out;
    if (alpha.shift == 0)
        out = closed_free(alpha, kind);
    else
        out = kind == PrismKind::transversal ? closed_torsion_transversal(alpha) : closed_torsion_crystalline(alpha);
    out.normalize_order();
    return out;
}

} // namespace tfstar

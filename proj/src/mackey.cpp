#include "tfstar/mackey.hpp"

#include <algorithm>

#include <fmt/core.h>

namespace tfstar {

MackeySymbol MackeySymbol::witt()
{
    return MackeySymbol();
}

MackeySymbol MackeySymbol::transfer(Int m)
{
    if (m < 0)
        throw ContractViolation("tr_m W needs m >= 0");
    MackeySymbol s;
    s.shape_ = Shape::transfer;
    s.m_ = m;
    return s;
}

MackeySymbol MackeySymbol::phi(Int r)
{
    if (r < 0)
        throw ContractViolation("Phi^r W needs r >= 0");
    MackeySymbol s;
    s.shape_ = Shape::phi;
    s.r_ = r;
    return s;
}

MackeySymbol MackeySymbol::phi_quotient(Int r, PrismScalar q)
{
    MackeySymbol s = phi(r);
    s.shape_ = Shape::phi_quotient;
    s.s_ = std::move(q);
    return s;
}

MackeySymbol MackeySymbol::transfer_phi(Int m, Int r)
{
    if (r == -1)
        return transfer(m);
    MackeySymbol s = phi(r);
    if (m < 0)
        throw ContractViolation("tr_m Phi^r W needs m >= 0");
    s.shape_ = Shape::transfer_phi;
    s.m_ = m;
    return s;
}

namespace {

CyclicIdeal principal(PrismScalar g)
{
    return CyclicIdeal{{std::move(g)}};
}

PrismScalar p_to(Int k)
{
    return PrismScalar::p_power(std::max<Int>(k, 0));
}

LevelValue evaluate_crystalline(const MackeySymbol& sym, Int n)
{
    using Shape = MackeySymbol::Shape;
    LevelValue v;
    Int r = sym.phi_index();
    Int m = sym.transfer_level();
    switch (sym.shape()) {
    case Shape::witt:
        v.value = principal(p_to(n + 1));
        break;
    case Shape::transfer:
        v.value = principal(p_to(std::min(n, m) + 1));
        v.embedding = p_to(n - m);
        v.ambient = principal(p_to(n + 1));
        break;
    case Shape::phi:
        v.value = principal(p_to(n - r));
        break;
    case Shape::phi_quotient:
        v.value = principal(p_to(std::min(std::max<Int>(n - r, 0), sym.quotient()->p_exponent())));
        break;
    case Shape::transfer_phi: {
        Int ambient = std::max<Int>(n - r, 0);
        Int shift = std::max<Int>(n - m, 0);
        v.value = principal(p_to(ambient - shift));
        v.embedding = p_to(shift);
        v.ambient = principal(p_to(ambient));
        break;
    }
    }
    return v;
}

LevelValue evaluate_transversal(const MackeySymbol& sym, Int n)
{
    using Shape = MackeySymbol::Shape;
    const PrismKind kind = PrismKind::transversal;
    LevelValue v;
    PrismScalar frob_qn = q_analog(kind, n).frobenius();
    bool pinned_index = sym.phi_index() == 0 && sym.transfer_level() == 0;
    switch (sym.shape()) {
    case Shape::witt:
        v.value = principal(q_analog(kind, n + 1));
        return v;
    case Shape::transfer:
        if (!pinned_index)
            break;
        v.value = principal(PrismScalar::phi_power(kind, 0, 1));
        v.embedding = frob_qn;
        v.ambient = principal(q_analog(kind, n + 1));
        return v;
    case Shape::phi:
        if (!pinned_index)
            break;
        v.value = principal(frob_qn);
        return v;
    case Shape::phi_quotient:
        if (!pinned_index)
            break;
        v.value = CyclicIdeal{{frob_qn, *sym.quotient()}};
        return v;
    case Shape::transfer_phi:
        break;
    }
    v.pinned = false;
    v.note = fmt::format("level values of {} are not pinned for transversal prisms", to_string(sym));
    return v;
}

} // namespace

LevelValue evaluate_level(const MackeySymbol& sym, Int n, PrismKind kind)
{
    if (n < 0)
        throw ContractViolation("evaluate_level needs n >= 0");
    if (sym.quotient() && sym.quotient()->kind() != kind)
        throw ContractViolation("evaluate_level: quotient scalar has the wrong prism kind");
    return kind == PrismKind::crystalline ? evaluate_crystalline(sym, n) : evaluate_transversal(sym, n);
}

LewisDiagram lewis_diagram(const MackeySymbol& sym, PrismKind kind)
{
    using Shape = MackeySymbol::Shape;
    bool ok = sym.shape() == Shape::witt || (sym.shape() == Shape::transfer && sym.transfer_level() == 0) ||
              ((sym.shape() == Shape::phi || sym.shape() == Shape::phi_quotient) && sym.phi_index() == 0);
    if (!ok)
        throw ContractViolation(fmt::format("no Lewis diagram is recorded for {}", to_string(sym)));
    LewisDiagram d{evaluate_level(sym, 1, kind), evaluate_level(sym, 0, kind), "", "", "", ""};
    bool crys = kind == PrismKind::crystalline;
    if (sym.shape() == Shape::witt) {
        d.res = d.res_latex = "1";
        d.tr = crys ? "p" : "phi(xi)";
        d.tr_latex = crys ? "p" : "\\phi(\\xi)";
    } else if (sym.shape() == Shape::transfer) {
        d.res = d.res_latex = "p";
        d.tr = d.tr_latex = "1";
    }
    return d;
}

CyclicIdeal erase_structure(const MackeySymbol& sym, PrismKind kind)
{
    using Shape = MackeySymbol::Shape;
    if (sym.shape() == Shape::phi_quotient) {
        const PrismScalar& s = *sym.quotient();
        if (kind == PrismKind::crystalline) {
            LevelValue v = evaluate_level(sym, sym.phi_index() + s.p_exponent(), kind);
            return v.value;
        }
        return principal(s);
    }
    return CyclicIdeal{};
}

MackeyPage mackey_e1(const VirtualRep& alpha, PrismKind kind)
{
    MackeyPage page;
    Int len = static_cast<Int>(alpha.length());
    for (Int r = 0; r < len; ++r) {
        Int d = alpha.dims[static_cast<std::size_t>(r)];
        if (d <= 0)
            continue;
        Int m = kind == PrismKind::transversal ? r : checked_add(r, d);
        MackeyCell transfer_part{MackeySymbol::transfer_phi(m, r - 1), theta(alpha, r - 1)};
        MackeyCell torsion{MackeySymbol::phi_quotient(r, PrismScalar::phi_power(kind, r, d)),
                           monomial_mul(GoldMonomial::desuspension(), theta(alpha, r))};
        page.rows.emplace(len - r, MackeyRow{r, std::move(transfer_part), std::move(torsion)});
    }
    if (alpha.d_inf >= 0)
        page.free = MackeyCell{MackeySymbol::phi(len - 1), theta(alpha, len - 1)};
    return page;
}

WarmupTables warmup_tables(const VirtualRep& alpha, Int n, PrismKind kind)
{
    if (alpha.length() != 1)
        throw ContractViolation("warmup_tables needs a representation of length 1");
    if (n < 0)
        throw ContractViolation("warmup_tables needs n >= 0");
    Int d0 = alpha.dims[0];
    GoldMonomial ulam = GoldMonomial::ulam_pow(0, alpha.d_inf);
    GoldMonomial u_name = monomial_mul(GoldMonomial::u_pow(0, std::max<Int>(d0, 0)), ulam);
    GoldMonomial a_name = monomial_mul(GoldMonomial::a_pow(0, -d0), ulam);
    GoldMonomial shifted = monomial_mul(GoldMonomial::desuspension(), a_name);
    PrismScalar one = PrismScalar::one(kind);
    CyclicIdeal zero_module{{one}};
    WarmupTables t;
    if (kind == PrismKind::transversal) {
        PrismScalar frob_qn = q_analog(kind, n).frobenius();
        t.homotopy = d0 >= 0 ? WarmupEntry{principal(q_analog(kind, n + 1)), one, u_name}
                             : WarmupEntry{principal(frob_qn), one, a_name};
        t.tate = WarmupEntry{principal(frob_qn), one, a_name};
        if (d0 >= 0) {
            t.orbits = WarmupEntry{principal(PrismScalar::phi_power(kind, 0, 1)), frob_qn, u_name};
            t.orbits_shifted = WarmupEntry{CyclicIdeal{{frob_qn, PrismScalar::phi_power(kind, 0, d0)}}, one, shifted};
        } else {
            t.orbits = WarmupEntry{zero_module, one, u_name};
            t.orbits_shifted = WarmupEntry{zero_module, one, shifted};
        }
        return t;
    }
    t.homotopy = d0 >= 0 ? WarmupEntry{principal(p_to(n + 1)), one, u_name} : WarmupEntry{principal(p_to(n)), one, a_name};
    t.tate = WarmupEntry{principal(p_to(n)), one, a_name};
    if (d0 >= 0) {
        Int k = std::min(n, d0);
        t.orbits = WarmupEntry{principal(p_to(k + 1)), p_to(n - k), u_name};
        t.orbits_shifted = WarmupEntry{principal(p_to(k)), one, shifted};
    } else {
        t.orbits = WarmupEntry{zero_module, one, u_name};
        t.orbits_shifted = WarmupEntry{zero_module, one, shifted};
    }
    return t;
}

std::string to_string(const MackeySymbol& sym)
{
    using Shape = MackeySymbol::Shape;
    switch (sym.shape()) {
    case Shape::witt:
        return "W";
    case Shape::transfer:
        return fmt::format("tr_{} W", sym.transfer_level());
    case Shape::phi:
        return fmt::format("Phi^{} W", sym.phi_index());
    case Shape::phi_quotient:
        return fmt::format("Phi^{} W/{}", sym.phi_index(), to_string(*sym.quotient()));
    case Shape::transfer_phi:
        return fmt::format("tr_{} Phi^{} W", sym.transfer_level(), sym.phi_index());
    }
    return "?";
}

namespace {

// Exponent k when s is a pure power of xi (or of p).
std::optional<Int> bullet_subscript(const PrismScalar& s)
{
    if (s.kind() == PrismKind::crystalline)
        return s.p_exponent();
    if (s.phi_exponents().size() == 1 && s.phi_exponents().begin()->first == 0)
        return s.phi_exponents().begin()->second;
    return std::nullopt;
}

} // namespace

std::string glyph(const MackeySymbol& sym)
{
    using Shape = MackeySymbol::Shape;
    switch (sym.shape()) {
    case Shape::witt:
        return "W";
    case Shape::transfer:
        return sym.transfer_level() == 0 ? "♦" : fmt::format("♦_{}", sym.transfer_level());
    case Shape::phi:
        return sym.phi_index() == 0 ? "•" : fmt::format("•^{}", sym.phi_index());
    case Shape::phi_quotient:
        if (auto k = bullet_subscript(*sym.quotient()); k && sym.phi_index() == 0)
            return fmt::format("•_{}", *k);
        break;
    case Shape::transfer_phi:
        break;
    }
    return to_string(sym);
}

std::string to_latex(const MackeySymbol& sym)
{
    using Shape = MackeySymbol::Shape;
    switch (sym.shape()) {
    case Shape::witt:
        return "\\underline W";
    case Shape::transfer:
        return fmt::format("\\tr_{{{}}}\\underline W", sym.transfer_level());
    case Shape::phi:
        return fmt::format("\\Phi^{{{}}}\\underline W", sym.phi_index());
    case Shape::phi_quotient:
        return fmt::format("\\Phi^{{{}}}\\underline W/{}", sym.phi_index(), to_latex(*sym.quotient()));
    case Shape::transfer_phi:
        return fmt::format("\\tr_{{{}}}\\Phi^{{{}}}\\underline W", sym.transfer_level(), sym.phi_index());
    }
    return "?";
}

std::string to_string(const LevelValue& v)
{
    if (!v.pinned)
        return "not pinned";
    if (v.value.is_unit_ideal())
        return "0";
    return module_string(v.value);
}

std::string to_latex(const LevelValue& v)
{
    if (!v.pinned)
        return "?";
    if (v.value.is_unit_ideal())
        return "0";
    return module_latex(v.value);
}

std::string to_string(const LewisDiagram& d)
{
    std::string top = to_string(d.top);
    if (!d.res.empty())
        top += fmt::format("   res: {}  tr: {}", d.res, d.tr);
    return top + "\n" + to_string(d.bottom);
}

std::string to_latex(const LewisDiagram& d)
{
    return fmt::format("\\Lewis{{{}}}{{{}}}{{{}}}{{{}}}", to_latex(d.top), to_latex(d.bottom), d.res_latex,
                       d.tr_latex);
}

} // namespace tfstar

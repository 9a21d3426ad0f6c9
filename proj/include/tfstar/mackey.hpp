#pragma once

#include <map>
#include <optional>
#include <string>

#include "tfstar/gold.hpp"
#include "tfstar/prism.hpp"
#include "tfstar/rep.hpp"

namespace tfstar {

/// Symbolic T-Mackey functors built from W (level n value A/[p^{n+1}]_A).
/// Only W, tr_m W, Phi^r W, Phi^r W / s and tr_m Phi^r W can be formed.
class MackeySymbol {
public:
    enum class Shape { witt, transfer, phi, phi_quotient, transfer_phi };

    static MackeySymbol witt();
    static MackeySymbol transfer(Int m);
    static MackeySymbol phi(Int r);
    static MackeySymbol phi_quotient(Int r, PrismScalar s);
    /// tr_m Phi^r W; r = -1 means Phi^{-1} W = W and gives tr_m W.
    static MackeySymbol transfer_phi(Int m, Int r);

    Shape shape() const noexcept { return shape_; }
    Int transfer_level() const noexcept { return m_; }
    Int phi_index() const noexcept { return r_; }
    const std::optional<PrismScalar>& quotient() const noexcept { return s_; }

    friend bool operator==(const MackeySymbol&, const MackeySymbol&) = default;

private:
    Shape shape_ = Shape::witt;
    Int m_ = 0;
    Int r_ = 0;
    std::optional<PrismScalar> s_;
};

/// Value at T/C_{p^n}. `embedding` is the generator inside `ambient` when the
/// value is realized as a submodule (tr_m W, tr_m Phi^r W).
struct LevelValue {
    bool pinned = true;
    CyclicIdeal value;
    std::optional<PrismScalar> embedding;
    std::optional<CyclicIdeal> ambient;
    std::string note;

    bool is_zero() const noexcept { return pinned && value.is_unit_ideal(); }
};

LevelValue evaluate_level(const MackeySymbol& sym, Int n, PrismKind kind);

/// The C_p Lewis diagram: level 1 over level 0 with restriction and transfer labels.
struct LewisDiagram {
    LevelValue top;
    LevelValue bottom;
    std::string res;
    std::string tr;
    std::string res_latex;
    std::string tr_latex;
};

/// Only for W, tr_0 W, Phi^0 W and Phi^0 W / s; anything else is a ContractViolation.
LewisDiagram lewis_diagram(const MackeySymbol& sym, PrismKind kind);

/// The underlying ideal once Mackey structure is forgotten (the value at a level
/// high enough to be stable, or the defining scalar when not pinned).
CyclicIdeal erase_structure(const MackeySymbol& sym, PrismKind kind);

struct MackeyCell {
    MackeySymbol symbol;
    GoldMonomial generator;
};

struct MackeyRow {
    Int r = 0;
    MackeyCell transfer_part;
    MackeyCell torsion;
};

/// E^1 of the Mackey-valued spectral sequence. Rows keyed by filtration L - r.
struct MackeyPage {
    std::map<Int, MackeyRow> rows;
    std::optional<MackeyCell> free;
};

MackeyPage mackey_e1(const VirtualRep& alpha, PrismKind kind);

/// One entry of the C_p warm-up tables: A/ideal <coefficient * generator>.
struct WarmupEntry {
    CyclicIdeal ideal;
    PrismScalar coefficient;
    GoldMonomial generator;

    bool is_zero() const noexcept { return ideal.is_unit_ideal(); }
};

/// Level-n homotopy of T^h, T^t and Sigma T_h in degrees alpha and alpha - 1,
/// for alpha = (d_0; d_inf).
struct WarmupTables {
    WarmupEntry homotopy;
    WarmupEntry tate;
    WarmupEntry orbits;
    WarmupEntry orbits_shifted;
};

WarmupTables warmup_tables(const VirtualRep& alpha, Int n, PrismKind kind);

/// "tr_2 Phi^0 W", "Phi^1 W/p^3".
std::string to_string(const MackeySymbol& sym);
/// Figure glyphs where they exist (W, ♦, ♦_m, •, •^r, •_k), else the name.
std::string glyph(const MackeySymbol& sym);
std::string to_latex(const MackeySymbol& sym);
std::string to_string(const LevelValue& v);
std::string to_latex(const LevelValue& v);
/// Two-line block: level 1 with res/tr labels, then level 0.
std::string to_string(const LewisDiagram& d);
std::string to_latex(const LewisDiagram& d);

} // namespace tfstar

#include "tfstar/rep.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include <fmt/core.h>
#include <fmt/ranges.h>

namespace tfstar {

VirtualRep::VirtualRep(std::vector<Int> dims_, Int d_inf_, int shift_)
    : dims(std::move(dims_)), d_inf(d_inf_), shift(shift_)
{
    if (dims.empty())
        throw ContractViolation("a dimension sequence needs at least one entry");
    if (shift != 0 && shift != -1)
        throw ContractViolation("shift must be 0 or -1");
}

namespace {

class RepLexer {
public:
    explicit RepLexer(std::string_view text) : text_(text) {}

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    void expect(char c)
    {
        skip_ws();
        if (pos_ >= text_.size())
            throw ParseError(pos_, fmt::format("expected '{}' but input ended", c));
        if (text_[pos_] != c)
            throw ParseError(pos_, fmt::format("expected '{}' but found '{}'", c, text_[pos_]));
        ++pos_;
    }

    Int integer()
    {
        skip_ws();
        std::size_t start = pos_;
        std::size_t end = pos_;
        if (end < text_.size() && (text_[end] == '-' || text_[end] == '+'))
            ++end;
        std::size_t digits = end;
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end])))
            ++end;
        if (end == digits) {
            if (start >= text_.size())
                throw ParseError(start, "expected an integer but input ended");
            throw ParseError(start, fmt::format("expected an integer but found '{}'", text_[start]));
        }
        const char* first = text_.data() + start + (text_[start] == '+' ? 1 : 0);
        Int value = 0;
        auto [ptr, ec] = std::from_chars(first, text_.data() + end, value);
        if (ec != std::errc())
            throw ParseError(start, "integer does not fit in 64 bits");
        pos_ = end;
        return value;
    }

    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    std::size_t pos() const { return pos_; }
    bool done()
    {
        skip_ws();
        return pos_ == text_.size();
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

VirtualRep parse_rep(std::string_view text)
{
    RepLexer lex(text);
    lex.expect('(');
    std::vector<Int> dims;
    dims.push_back(lex.integer());
    while (lex.peek() == ',') {
        lex.expect(',');
        dims.push_back(lex.integer());
    }
    if (lex.peek() != ';') {
        if (lex.peek() == '\0')
            throw ParseError(lex.pos(), "missing ';' before d_inf");
        throw ParseError(lex.pos(), fmt::format("expected ',' or ';' but found '{}'", lex.peek()));
    }
    lex.expect(';');
    Int d_inf = lex.integer();
    lex.expect(')');
    if (!lex.done())
        throw ParseError(lex.pos(), "trailing characters after ')'");
    return VirtualRep(std::move(dims), d_inf, 0);
}

std::string to_string(const VirtualRep& rep)
{
    return fmt::format("({};{})", fmt::join(rep.dims, ","), rep.d_inf);
}

IrredDecomp irreducible_coeffs(const VirtualRep& rep)
{
    IrredDecomp dec;
    dec.coeffs.resize(rep.length());
    for (std::size_t i = 0; i < rep.length(); ++i)
        dec.coeffs[i] = checked_sub(rep.dims[i], rep.dim(i + 1));
    dec.k_inf = rep.d_inf;
    return dec;
}

VirtualRep from_irreducible(const IrredDecomp& dec)
{
    if (dec.coeffs.empty())
        throw ContractViolation("irreducible decomposition needs at least one coefficient");
    std::vector<Int> dims(dec.coeffs.size());
    Int acc = dec.k_inf;
    for (std::size_t i = dec.coeffs.size(); i-- > 0;) {
        acc = checked_add(acc, dec.coeffs[i]);
        dims[i] = acc;
    }
    return VirtualRep(std::move(dims), dec.k_inf, 0);
}

VirtualRep fixed_part(const VirtualRep& rep, std::size_t r)
{
    if (r >= rep.length())
        throw std::out_of_range(fmt::format("fixed_part: r = {} but the encoding has length {}", r, rep.length()));
    std::vector<Int> dims(rep.dims.begin() + static_cast<std::ptrdiff_t>(r), rep.dims.end());
    return VirtualRep(std::move(dims), rep.d_inf, rep.shift);
}

VirtualRep pad_rep(const VirtualRep& rep, std::size_t new_length)
{
    if (new_length < rep.length())
        throw ContractViolation("pad_rep cannot shorten an encoding");
    VirtualRep out = rep;
    out.dims.resize(new_length, rep.d_inf);
    return out;
}

VirtualRep add_rep(const VirtualRep& x, const VirtualRep& y)
{
    if (x.shift != 0 || y.shift != 0)
        throw ContractViolation("add_rep is defined on complex representations only (shift 0)");
    std::size_t len = std::max(x.length(), y.length());
    VirtualRep out = pad_rep(x, len);
    for (std::size_t i = 0; i < len; ++i)
        out.dims[i] = checked_add(out.dims[i], y.dim(i));
    out.d_inf = checked_add(x.d_inf, y.d_inf);
    return out;
}

VirtualRep lambda_rep(std::size_t i, std::size_t length)
{
    std::vector<Int> dims(std::max(length, i + 1), 0);
    std::fill(dims.begin(), dims.begin() + static_cast<std::ptrdiff_t>(i + 1), 1);
    return VirtualRep(std::move(dims), 0, 0);
}

VirtualRep add_lambda(const VirtualRep& rep, std::size_t i)
{
    VirtualRep out = rep.length() <= i ? pad_rep(rep, i + 1) : rep;
    for (std::size_t r = 0; r <= i; ++r)
        out.dims[r] = checked_add(out.dims[r], 1);
    return out;
}

bool same_grading(const VirtualRep& x, const VirtualRep& y)
{
    if (x.shift != y.shift || x.d_inf != y.d_inf)
        return false;
    std::size_t len = std::max(x.length(), y.length());
    for (std::size_t i = 0; i < len; ++i)
        if (x.dim(i) != y.dim(i))
            return false;
    return true;
}

} // namespace tfstar

#pragma once

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tfstar/group.hpp"

namespace testing_support {

using tfstar::GoldMonomial;
using tfstar::GradedGroup;
using tfstar::Int;
using tfstar::VirtualRep;

/// Builds a name from "S^-1 a_0^-2 u_1 u_2^-2 u_l3", written by hand in tests.
inline GoldMonomial name(const std::string& text)
{
    GoldMonomial m;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "S^-1") {
            m.suspension = -1;
            continue;
        }
        if (tok == "1")
            continue;
        Int exp = 1;
        auto caret = tok.find('^');
        std::string base = tok.substr(0, caret);
        if (caret != std::string::npos)
            exp = std::stoll(tok.substr(caret + 1));
        if (base.rfind("u_l", 0) == 0)
            m.ulam[std::stoll(base.substr(3))] += exp;
        else if (base.rfind("a_", 0) == 0)
            m.a[std::stoll(base.substr(2))] += exp;
        else if (base.rfind("u_", 0) == 0)
            m.u[std::stoll(base.substr(2))] += exp;
        else
            throw std::invalid_argument("bad name token " + tok);
    }
    for (auto* map : {&m.a, &m.u, &m.ulam})
        std::erase_if(*map, [](auto& kv) { return kv.second == 0; });
    return m;
}

/// "module⟨generator⟩" for each summand, sorted, so order conventions do not matter.
inline std::vector<std::string> summand_texts(const GradedGroup& g)
{
    std::vector<std::string> out;
    for (auto& s : g.summands)
        out.push_back(tfstar::module_string(s.ideal) + "⟨" + tfstar::to_string(s.generator) + "⟩");
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::string> sorted(std::vector<std::string> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

/// Seeded generator for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    Int uniform(Int lo, Int hi)
    {
        return std::uniform_int_distribution<Int>(lo, hi)(rng_);
    }

    bool coin() { return uniform(0, 1) == 1; }

    VirtualRep rep(Int max_len = 8, Int max_coeff = 5, Int max_dinf = 3)
    {
        VirtualRep r;
        r.dims.resize(static_cast<std::size_t>(uniform(1, max_len)));
        for (auto& d : r.dims)
            d = uniform(-max_coeff, max_coeff);
        r.d_inf = uniform(-max_dinf, max_dinf);
        r.shift = coin() ? 0 : -1;
        return r;
    }

    GoldMonomial monomial(Int max_index = 5, Int max_exp = 3)
    {
        GoldMonomial m;
        for (Int i = 0; i <= max_index; ++i) {
            if (Int k = uniform(-max_exp, max_exp); coin())
                m.a[i] = k;
            if (Int k = uniform(-max_exp, max_exp); coin())
                m.u[i] = k;
        }
        if (Int k = uniform(-max_exp, max_exp); coin())
            m.ulam[uniform(-1, max_index)] = k;
        std::erase_if(m.a, [](auto& kv) { return kv.second == 0; });
        std::erase_if(m.u, [](auto& kv) { return kv.second == 0; });
        std::erase_if(m.ulam, [](auto& kv) { return kv.second == 0; });
        return m;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace testing_support

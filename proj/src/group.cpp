#include "tfstar/group.hpp"

#include <algorithm>

#include <fmt/core.h>

namespace tfstar {

void GradedGroup::normalize_order()
{
    std::stable_sort(summands.begin(), summands.end(),
                     [](const GroupSummand& x, const GroupSummand& y) { return x.filtration > y.filtration; });
}

bool same_summands(const GradedGroup& x, const GradedGroup& y)
{
    if (x.summands.size() != y.summands.size())
        return false;
    using Key = std::pair<CyclicIdeal, GoldMonomial>;
    auto keys = [](const GradedGroup& g) {
        std::vector<Key> out;
        for (auto& s : g.summands)
            out.emplace_back(s.ideal, s.generator);
        std::sort(out.begin(), out.end());
        return out;
    };
    return keys(x) == keys(y);
}

std::vector<std::size_t> degree_violations(const GradedGroup& group)
{
    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < group.summands.size(); ++i)
        if (!same_grading(degree(group.summands[i].generator), group.grading))
            bad.push_back(i);
    return bad;
}

void check_degrees(const GradedGroup& group)
{
    auto bad = degree_violations(group);
    if (bad.empty())
        return;
    auto& s = group.summands[bad.front()];
    throw InternalInvariantError(fmt::format("generator {} has degree {} (shift {}) but the grading is {} (shift {})",
                                             to_string(s.generator), to_string(degree(s.generator)),
                                             degree(s.generator).shift, to_string(group.grading),
                                             group.grading.shift));
}

std::string to_string(const GradedGroup& group)
{
    if (group.is_zero())
        return "0";
    std::string out;
    for (auto& s : group.summands) {
        if (!out.empty())
            out += " ⊕ ";
        out += fmt::format("{}⟨{}⟩", module_string(s.ideal), to_string(s.generator));
    }
    return out;
}

std::string to_latex(const GradedGroup& group)
{
    if (group.is_zero())
        return "0";
    std::string out;
    for (auto& s : group.summands) {
        if (!out.empty())
            out += " \\oplus ";
        out += fmt::format("{}\\<{}\\>", module_latex(s.ideal), to_latex(s.generator));
    }
    return out;
}

} // namespace tfstar

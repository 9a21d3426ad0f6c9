#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tfstar/consistency.hpp"
#include "tfstar/group.hpp"
#include "tfstar/hotfss.hpp"
#include "tfstar/les.hpp"
#include "tfstar/mackey.hpp"

namespace tfstar {

using Json = nlohmann::ordered_json;

enum class OutputFormat { text, latex, json };

/// Marker value added under "exts" when some integer was emitted as a decimal string.
inline constexpr const char* big_integer_ext = "integers-as-decimal-strings";

/// Builders. Integers outside the 53-bit range become decimal strings and the
/// top level gets an "exts" marker.
Json to_json(const GradedGroup& group);
Json to_json(const std::vector<SpectralPage>& pages, const VirtualRep& alpha, PrismKind kind);
Json to_json(const MackeyPage& page, const VirtualRep& alpha, PrismKind kind);
Json to_json(const TrReport& report);
Json to_json(const CheckReport& report);
Json to_json(const ObstructionResult& result, const ObstructionProblem& problem);

/// Inverse of to_json(GradedGroup). Throws ParseError on malformed input.
GradedGroup group_from_json(const Json& j);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

/// One line per cell: "E^1  4 -1  A/xi^2 <S^-1 a_0^-2 ...>", links as "link 4 3".
std::string pages_text(const std::vector<SpectralPage>& pages);

/// Chart tabulars in the figure layout: one filtration row per line from L down
/// to 0, columns -1 and 0, pages stacked and separated by a double rule.
/// Extension links become brace annotations (transversal) or a textual list of
/// connecting lines below the chart (crystalline).
std::string pages_latex(const std::vector<SpectralPage>& pages, const VirtualRep& alpha, PrismKind kind);

std::string mackey_text(const MackeyPage& page);
std::string mackey_latex(const MackeyPage& page, const VirtualRep& alpha);

std::string check_text(const CheckReport& report);
std::string obstruction_text(const ObstructionResult& result, const ObstructionProblem& problem);
std::string tr_latex(const TrReport& report);

} // namespace tfstar

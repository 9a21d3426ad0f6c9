#include "tfstar/cli.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "tfstar/closedform.hpp"
#include "tfstar/render.hpp"

namespace tfstar {

namespace {

struct Options {
    std::string prism = "transversal";
    std::string rep;
    int shift = 0;
    std::string format = "text";
    Int samples = 1000;
    std::uint64_t seed = 1;
    Int max_len = 8;
    Int max_coeff = 5;
    Int max_dinf = 3;
    bool serial = false;
    bool prism_given = false;
    Int level = 0;
    Int p = 2;
    std::string source;
    std::string target;
    Int c = 1;
    std::optional<Int> working_exponent;
    std::vector<std::string> page_filter;
};

std::vector<Int> parse_list(const std::string& text, const char* what)
{
    std::vector<Int> out;
    std::string token;
    std::string body;
    for (char ch : text)
        if (ch != '(' && ch != ')' && ch != ' ')
            body += ch;
    std::stringstream ss(body);
    while (std::getline(ss, token, ',')) {
        std::size_t used = 0;
        Int v = 0;
        try {
            v = std::stoll(token, &used);
        } catch (const std::exception&) {
            used = std::string::npos;
        }
        if (used != token.size())
            throw ParseError(0, fmt::format("{}: \"{}\" is not an integer", what, token));
        out.push_back(v);
    }
    if (out.empty())
        throw ParseError(0, fmt::format("{}: empty list", what));
    return out;
}

PrismKind kind_of(const Options& o)
{
    auto k = parse_prism_kind(o.prism);
    if (!k)
        throw ParseError(0, fmt::format("unknown prism \"{}\"", o.prism));
    return *k;
}

VirtualRep rep_of(const Options& o)
{
    if (o.rep.empty())
        throw ParseError(0, "--rep is required");
    VirtualRep rep = parse_rep(o.rep);
    rep.shift = o.shift;
    return rep;
}

OutputFormat format_of(const Options& o)
{
    if (o.format == "text")
        return OutputFormat::text;
    if (o.format == "latex")
        return OutputFormat::latex;
    if (o.format == "json")
        return OutputFormat::json;
    throw ParseError(0, fmt::format("unknown format \"{}\"", o.format));
}

std::string render_group(const GradedGroup& g, OutputFormat f)
{
    switch (f) {
    case OutputFormat::text: return to_string(g) + "\n";
    case OutputFormat::latex: return "$" + to_latex(g) + "$\n";
    case OutputFormat::json: return dump(to_json(g));
    }
    return {};
}

std::vector<SpectralPage> select_pages(const std::vector<SpectralPage>& all, const std::vector<std::string>& filter)
{
    if (filter.empty())
        return all;
    std::vector<SpectralPage> out;
    for (auto& p : all) {
        bool keep = false;
        for (auto& want : filter)
            keep = keep || (want == "inf" ? p.infinity : want == std::to_string(p.page_index));
        if (keep)
            out.push_back(p);
    }
    for (auto& want : filter) {
        bool known = want == "inf";
        for (auto& p : all)
            known = known || want == std::to_string(p.page_index);
        if (!known)
            throw ParseError(0, fmt::format("no page \"{}\" (pages run 1..{} and inf)", want, all.size()));
    }
    return out;
}

std::string render_pages(const std::vector<SpectralPage>& pages, const VirtualRep& alpha, PrismKind kind, OutputFormat f)
{
    switch (f) {
    case OutputFormat::text: return pages_text(pages);
    case OutputFormat::latex: return pages_latex(pages, alpha, kind);
    case OutputFormat::json: return dump(to_json(pages, alpha, kind));
    }
    return {};
}

// Result of one subcommand: text for stdout and the exit code.
struct Outcome {
    std::string text;
    int code = 0;
};

Outcome dispatch(const std::string& cmd, const Options& o)
{
    OutputFormat f = format_of(o);
    if (cmd == "tf" || cmd == "closed") {
        VirtualRep alpha = rep_of(o);
        PrismKind kind = kind_of(o);
        return {render_group(cmd == "tf" ? tf(alpha, kind) : closed_tf(alpha, kind), f)};
    }
    if (cmd == "e1" || cmd == "pages") {
        VirtualRep alpha = rep_of(o);
        PrismKind kind = kind_of(o);
        std::vector<SpectralPage> pages = cmd == "e1" ? std::vector<SpectralPage>{e1_page(alpha, kind)}
                                                      : select_pages(run_pages(alpha, kind), o.page_filter);
        return {render_pages(pages, alpha, kind, f)};
    }
    if (cmd == "mackey-e1") {
        VirtualRep alpha = rep_of(o);
        PrismKind kind = kind_of(o);
        MackeyPage page = mackey_e1(alpha, kind);
        switch (f) {
        case OutputFormat::text: return {mackey_text(page)};
        case OutputFormat::latex: return {mackey_latex(page, alpha)};
        case OutputFormat::json: return {dump(to_json(page, alpha, kind))};
        }
    }
    if (cmd == "tr") {
        VirtualRep alpha = rep_of(o);
        if (alpha.shift != 0)
            throw ParseError(0, "tr works in even degree; use --shift 0");
        TrReport report = tr_report(alpha, o.level, kind_of(o));
        switch (f) {
        case OutputFormat::text: return {to_string(report)};
        case OutputFormat::latex: return {tr_latex(report)};
        case OutputFormat::json: return {dump(to_json(report))};
        }
    }
    if (cmd == "check") {
        CheckConfig cfg;
        cfg.samples = o.samples;
        cfg.seed = o.seed;
        cfg.max_len = o.max_len;
        cfg.max_coeff = o.max_coeff;
        cfg.max_dinf = o.max_dinf;
        if (o.prism_given)
            cfg.kinds = {kind_of(o)};
        cfg.validate();
        CheckReport report = o.serial ? crosscheck_serial(cfg) : crosscheck_parallel(cfg);
        int code = report.ok() ? 0 : 2;
        if (f == OutputFormat::json)
            return {dump(to_json(report)), code};
        return {check_text(report), code};
    }
    if (cmd == "obstruction") {
        if (o.source.empty() || o.target.empty())
            throw ParseError(0, "obstruction needs --source and --target");
        ObstructionProblem prob =
            ObstructionProblem::mult_by_p(o.p, parse_list(o.source, "--source"), parse_list(o.target, "--target"));
        prob.composite_au.assign(prob.target.size(), o.c);
        prob.composite_ua.assign(prob.source.size(), o.c);
        prob.modulus_exponent = o.working_exponent;
        ObstructionResult r = obstruction_search(prob);
        if (f == OutputFormat::json)
            return {dump(to_json(r, prob))};
        return {obstruction_text(r, prob)};
    }
    throw ParseError(0, fmt::format("unknown subcommand \"{}\"", cmd));
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact RO(T)-graded TF of perfectoid rings", "tfstar"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--prism", o.prism, "transversal or crystalline")
            ->check(CLI::IsMember({"transversal", "crystalline"}));
        sub->add_option("--rep", o.rep, "dimension sequence (d_0,...,d_{L-1};d_inf)");
        sub->add_option("--shift", o.shift, "0 for TF_alpha, -1 for TF_{alpha-1}")->check(CLI::IsMember({0, -1}));
        sub->add_option("--format", o.format, "text, latex or json")->check(CLI::IsMember({"text", "latex", "json"}));
    };

    auto* tf_cmd = app.add_subcommand("tf", "TF by the spectral sequence");
    auto* closed_cmd = app.add_subcommand("closed", "TF by the closed form");
    auto* e1_cmd = app.add_subcommand("e1", "the E^1 page");
    auto* pages_cmd = app.add_subcommand("pages", "every page through E^inf");
    auto* mackey_cmd = app.add_subcommand("mackey-e1", "Mackey-valued E^1 page");
    auto* tr_cmd = app.add_subcommand("tr", "TR^{n+1} from the long exact sequence");
    auto* check_cmd = app.add_subcommand("check", "seeded engine vs closed form cross-check");
    auto* obs_cmd = app.add_subcommand("obstruction", "search for A, U with AU = p, UA = p");
    for (auto* sub : {tf_cmd, closed_cmd, e1_cmd, pages_cmd, mackey_cmd, tr_cmd, check_cmd, obs_cmd})
        common(sub);

    pages_cmd->add_option("--page", o.page_filter, "pages to show: numbers or inf")->delimiter(',');
    tr_cmd->add_option("--level", o.level, "n, for TR^{n+1}")->check(CLI::NonNegativeNumber);

    check_cmd->add_option("--samples", o.samples)->check(CLI::PositiveNumber);
    check_cmd->add_option("--seed", o.seed);
    check_cmd->add_option("--max-len", o.max_len)->check(CLI::PositiveNumber);
    check_cmd->add_option("--max-coeff", o.max_coeff)->check(CLI::PositiveNumber);
    check_cmd->add_option("--max-dinf", o.max_dinf)->check(CLI::PositiveNumber);
    check_cmd->add_flag("--serial", o.serial, "run the serial reference");

    obs_cmd->add_option("--p", o.p, "prime");
    obs_cmd->add_option("--source", o.source, "source exponents, e.g. 2,3");
    obs_cmd->add_option("--target", o.target, "target exponents, e.g. 2,2,3");
    obs_cmd->add_option("--c", o.c, "AU and UA are multiplication by p^c")->check(CLI::NonNegativeNumber);
    obs_cmd->add_option("--working-exponent", o.working_exponent, "truncate every exponent to this first");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o_out, o_err;
        int code = app.exit(e, o_out, o_err);
        out << o_out.str();
        err << o_err.str();
        return code == 0 ? 0 : 1;
    }

    CLI::App* chosen = app.get_subcommands().front();
    o.prism_given = chosen->count("--prism") > 0;
    try {
        Outcome result = dispatch(chosen->get_name(), o);
        out << result.text;
        out.flush();
        return result.code;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const ContractViolation& e) {
        err << "error: " << e.what() << "\n";
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const InternalInvariantError& e) {
        err << "internal error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return 1;
}

} // namespace tfstar

#include "tfstar/render.hpp"

#include <map>
#include <set>

#include <fmt/core.h>

namespace tfstar {

namespace {

constexpr Int json_safe = Int{1} << 53;

// Collects integers for one document and remembers whether any needed the string form.
class Emitter {
public:
    Json num(Int x)
    {
        if (x > json_safe || x < -json_safe) {
            big_ = true;
            return std::to_string(x);
        }
        return x;
    }

    Json num(std::uint64_t x)
    {
        if (x > static_cast<std::uint64_t>(json_safe)) {
            big_ = true;
            return std::to_string(x);
        }
        return x;
    }

    Json ints(const std::vector<Int>& xs)
    {
        Json out = Json::array();
        for (Int x : xs)
            out.push_back(num(x));
        return out;
    }

    Json exponents(const std::map<Int, Int>& m)
    {
        Json out = Json::object();
        for (auto& [i, k] : m)
            out[std::to_string(i)] = num(k);
        return out;
    }

    Json grading(const VirtualRep& rep)
    {
        Json g;
        g["dims"] = ints(rep.dims);
        g["d_inf"] = num(rep.d_inf);
        g["shift"] = rep.shift;
        return g;
    }

    Json scalar(const PrismScalar& x)
    {
        Json out = Json::array();
        if (x.kind() == PrismKind::crystalline) {
            if (!x.is_one())
                out.push_back(Json::array({"p", num(x.p_exponent())}));
            return out;
        }
        for (auto& [i, k] : x.phi_exponents())
            out.push_back(Json::array({"phi", num(i), num(k)}));
        return out;
    }

    Json ideal(const CyclicIdeal& ideal)
    {
        Json out = Json::array();
        for (auto& g : ideal.gens)
            out.push_back(scalar(g));
        return out;
    }

    Json generator(const GoldMonomial& m)
    {
        Json g;
        g["a"] = exponents(m.a);
        g["u"] = exponents(m.u);
        g["u_lambda"] = exponents(m.ulam);
        g["suspension"] = m.suspension;
        return g;
    }

    Json summands(const GradedGroup& group)
    {
        Json out = Json::array();
        for (auto& s : group.summands) {
            Json j;
            j["annihilator"] = ideal(s.ideal);
            j["generator"] = generator(s.generator);
            j["filtration"] = num(s.filtration);
            out.push_back(std::move(j));
        }
        return out;
    }

    Json group(const GradedGroup& g)
    {
        Json j;
        j["grading"] = grading(g.grading);
        j["kind"] = std::string(to_string(g.kind));
        j["summands"] = summands(g);
        return j;
    }

    Json symbol(const MackeySymbol& sym)
    {
        Json j;
        j["name"] = to_string(sym);
        j["glyph"] = glyph(sym);
        return j;
    }

    Json cell(const MackeyCell& c)
    {
        Json j;
        j["symbol"] = symbol(c.symbol);
        j["generator"] = generator(c.generator);
        return j;
    }

    Json finish(Json j) const
    {
        if (big_)
            j["exts"] = Json::array({big_integer_ext});
        return j;
    }

private:
    bool big_ = false;
};

[[noreturn]] void bad_json(const std::string& what)
{
    throw ParseError(0, "JSON: " + what);
}

Int read_int(const Json& j, const char* what)
{
    if (j.is_number_integer())
        return j.get<Int>();
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        std::size_t used = 0;
        Int v = 0;
        try {
            v = std::stoll(s, &used);
        } catch (const std::exception&) {
            bad_json(fmt::format("{} is not an integer", what));
        }
        if (used != s.size())
            bad_json(fmt::format("{} is not an integer", what));
        return v;
    }
    bad_json(fmt::format("{} is not an integer", what));
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        bad_json(fmt::format("missing \"{}\"", key));
    return j.at(key);
}

std::map<Int, Int> read_exponents(const Json& j, const char* what)
{
    if (!j.is_object())
        bad_json(fmt::format("{} is not an object", what));
    std::map<Int, Int> out;
    for (auto& [key, value] : j.items()) {
        Int i = read_int(Json(key), what);
        Int k = read_int(value, what);
        if (k != 0)
            out[i] = k;
    }
    return out;
}

PrismScalar read_scalar(const Json& j, PrismKind kind)
{
    if (!j.is_array())
        bad_json("annihilator generator is not a list");
    PrismScalar out = PrismScalar::one(kind);
    for (auto& f : j) {
        if (!f.is_array() || f.empty() || !f[0].is_string())
            bad_json("malformed annihilator factor");
        std::string tag = f[0].get<std::string>();
        if (tag == "phi" && f.size() == 3 && kind == PrismKind::transversal)
            out = scalar_mul(out, PrismScalar::phi_power(kind, read_int(f[1], "phi index"), read_int(f[2], "exponent")));
        else if (tag == "p" && f.size() == 2 && kind == PrismKind::crystalline)
            out = scalar_mul(out, PrismScalar::p_power(read_int(f[1], "exponent")));
        else
            bad_json(fmt::format("factor \"{}\" does not fit a {} annihilator", tag, to_string(kind)));
    }
    return out;
}

VirtualRep read_grading(const Json& j)
{
    const Json& dims = field(j, "dims");
    if (!dims.is_array() || dims.empty())
        bad_json("dims must be a nonempty list");
    std::vector<Int> d;
    for (auto& x : dims)
        d.push_back(read_int(x, "dims entry"));
    Int shift = read_int(field(j, "shift"), "shift");
    if (shift != 0 && shift != -1)
        bad_json("shift must be 0 or -1");
    return VirtualRep(std::move(d), read_int(field(j, "d_inf"), "d_inf"), static_cast<int>(shift));
}

std::string cell_latex(const CyclicIdeal& ideal, const GoldMonomial& g)
{
    return fmt::format("${}\\<{}\\>$", module_latex(ideal), to_latex(g));
}

std::string page_label(const SpectralPage& p)
{
    return p.infinity ? "$E^\\infty$" : fmt::format("$E^{}$", p.page_index < 10 ? std::to_string(p.page_index)
                                                                              : "{" + std::to_string(p.page_index) + "}");
}

struct Chain {
    Int top = 0;
    Int bottom = 0;
    std::vector<Int> rows;
};

std::vector<Chain> chains_of(const SpectralPage& p)
{
    std::map<Int, Int> next;
    std::set<Int> has_prev;
    for (auto [upper, lower] : p.extension_links) {
        next[upper] = lower;
        has_prev.insert(lower);
    }
    std::vector<Chain> out;
    for (auto it = p.torsion.rbegin(); it != p.torsion.rend(); ++it) {
        Int f = it->first;
        if (has_prev.count(f) || !next.count(f))
            continue;
        Chain c{f, f, {f}};
        while (next.count(f)) {
            f = next[f];
            c.rows.push_back(f);
        }
        c.bottom = f;
        out.push_back(std::move(c));
    }
    return out;
}

const GroupSummand* glued_summand(const GradedGroup& g, Int bottom)
{
    for (auto& s : g.summands)
        if (s.filtration == bottom)
            return &s;
    return nullptr;
}

std::string join(const std::vector<std::string>& parts, const char* sep)
{
    std::string out;
    for (auto& p : parts) {
        if (!out.empty())
            out += sep;
        out += p;
    }
    return out;
}

} // namespace

Json to_json(const GradedGroup& group)
{
    Emitter e;
    return e.finish(e.group(group));
}

Json to_json(const std::vector<SpectralPage>& pages, const VirtualRep& alpha, PrismKind kind)
{
    Emitter e;
    Json j;
    j["grading"] = e.grading(alpha);
    j["kind"] = std::string(to_string(kind));
    Json list = Json::array();
    for (auto& p : pages) {
        Json pj;
        pj["page"] = p.page_index;
        pj["infinity"] = p.infinity;
        Json cells = Json::array();
        auto add = [&](const Summand& s, int column) {
            Json c;
            c["filtration"] = e.num(s.filtration);
            c["column"] = column;
            c["annihilator"] = e.ideal(s.ideal);
            c["generator"] = e.generator(s.generator);
            cells.push_back(std::move(c));
        };
        for (auto it = p.torsion.rbegin(); it != p.torsion.rend(); ++it)
            add(it->second, -1);
        if (p.free)
            add(*p.free, 0);
        pj["cells"] = std::move(cells);
        Json links = Json::array();
        for (auto [u, l] : p.extension_links)
            links.push_back(Json::array({e.num(u), e.num(l)}));
        pj["extension_links"] = std::move(links);
        list.push_back(std::move(pj));
    }
    j["pages"] = std::move(list);
    return e.finish(std::move(j));
}

Json to_json(const MackeyPage& page, const VirtualRep& alpha, PrismKind kind)
{
    Emitter e;
    Json j;
    j["grading"] = e.grading(alpha);
    j["kind"] = std::string(to_string(kind));
    Json rows = Json::array();
    for (auto it = page.rows.rbegin(); it != page.rows.rend(); ++it) {
        Json r;
        r["filtration"] = e.num(it->first);
        r["r"] = e.num(it->second.r);
        r["torsion"] = e.cell(it->second.torsion);
        r["transfer"] = e.cell(it->second.transfer_part);
        rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
    j["free"] = page.free ? e.cell(*page.free) : Json(nullptr);
    return e.finish(std::move(j));
}

Json to_json(const TrReport& r)
{
    Emitter e;
    Json j;
    j["grading"] = e.grading(r.alpha);
    j["level"] = e.num(r.level);
    j["kind"] = std::string(to_string(r.kind));
    j["tf_alpha_plus_lambda"] = e.group(r.tf_plus);
    j["tf_alpha"] = e.group(r.tf_alpha);
    j["tf_alpha_plus_lambda_minus_1"] = e.group(r.tf_plus_odd);
    j["tf_alpha_minus_1"] = e.group(r.tf_alpha_odd);
    j["even_map"] = r.even_map ? e.scalar(*r.even_map) : Json(nullptr);
    j["cokernel"] = e.group(r.cokernel);
    j["kernel_status"] = r.kernel.exact ? "exact" : "undetermined";
    if (r.kernel.exact) {
        j["kernel"] = e.group(r.kernel.kernel);
        Json coeffs = Json::array();
        for (auto& c : r.kernel.coefficients)
            coeffs.push_back(e.scalar(c));
        j["kernel_coefficients"] = std::move(coeffs);
    } else {
        j["kernel"] = nullptr;
        j["reason"] = r.kernel.reason;
    }
    auto len = r.tr_length();
    j["tr_length"] = len ? e.num(*len) : Json(nullptr);
    return e.finish(std::move(j));
}

Json to_json(const CheckReport& r)
{
    Emitter e;
    Json j;
    j["seed"] = e.num(r.seed);
    j["samples"] = e.num(r.samples);
    j["comparisons"] = e.num(r.comparisons);
    j["mismatches"] = e.num(r.mismatches);
    j["summands_checked"] = e.num(r.summands_checked);
    j["degree_failures"] = e.num(r.degree_failures);
    j["padding_checks"] = e.num(r.padding_checks);
    j["padding_failures"] = e.num(r.padding_failures);
    j["length_checks"] = e.num(r.length_checks);
    j["length_failures"] = e.num(r.length_failures);
    j["errors"] = e.num(r.errors);
    j["ok"] = r.ok();
    Json fails = Json::array();
    for (auto& f : r.failures) {
        Json fj;
        fj["index"] = e.num(f.index);
        fj["grading"] = e.grading(f.rep);
        fj["kind"] = std::string(to_string(f.kind));
        fj["category"] = f.category;
        fj["detail"] = f.detail;
        fails.push_back(std::move(fj));
    }
    j["failures"] = std::move(fails);
    return e.finish(std::move(j));
}

Json to_json(const ObstructionResult& r, const ObstructionProblem& prob)
{
    Emitter e;
    Json j;
    j["p"] = e.num(prob.p);
    j["source"] = e.ints(prob.source);
    j["target"] = e.ints(prob.target);
    j["composite_au"] = e.ints(prob.composite_au);
    j["composite_ua"] = e.ints(prob.composite_ua);
    j["feasible"] = r.feasible;
    j["method"] = r.method;
    j["working_exponent"] = e.num(r.working_exponent);
    j["search_space"] = r.search_space;
    if (r.witness) {
        Json w;
        Json a = Json::array();
        for (auto& row : r.witness->a)
            a.push_back(e.ints(row));
        Json u = Json::array();
        for (auto& row : r.witness->u)
            u.push_back(e.ints(row));
        w["a"] = std::move(a);
        w["u"] = std::move(u);
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    return e.finish(std::move(j));
}

GradedGroup group_from_json(const Json& j)
{
    GradedGroup g;
    g.grading = read_grading(field(j, "grading"));
    const Json& kind = field(j, "kind");
    auto parsed = kind.is_string() ? parse_prism_kind(kind.get<std::string>()) : std::nullopt;
    if (!parsed)
        bad_json("kind must be \"transversal\" or \"crystalline\"");
    g.kind = *parsed;
    const Json& summands = field(j, "summands");
    if (!summands.is_array())
        bad_json("summands must be a list");
    for (auto& s : summands) {
        GroupSummand out;
        const Json& ann = field(s, "annihilator");
        if (!ann.is_array())
            bad_json("annihilator must be a list");
        for (auto& gen : ann)
            out.ideal.gens.push_back(read_scalar(gen, g.kind));
        const Json& gen = field(s, "generator");
        out.generator.a = read_exponents(field(gen, "a"), "a");
        out.generator.u = read_exponents(field(gen, "u"), "u");
        out.generator.ulam = read_exponents(field(gen, "u_lambda"), "u_lambda");
        Int susp = read_int(field(gen, "suspension"), "suspension");
        if (susp != 0 && susp != -1)
            bad_json("suspension must be 0 or -1");
        out.generator.suspension = static_cast<int>(susp);
        if (s.contains("filtration"))
            out.filtration = read_int(s.at("filtration"), "filtration");
        g.summands.push_back(std::move(out));
    }
    return g;
}

std::string dump(const Json& j)
{
    return j.dump(2) + "\n";
}

std::string pages_text(const std::vector<SpectralPage>& pages)
{
    std::string out;
    for (auto& p : pages) {
        std::string label = p.infinity ? "E^inf" : fmt::format("E^{}", p.page_index);
        out += label + "\n";
        if (p.torsion.empty() && !p.free)
            out += "  0\n";
        for (auto it = p.torsion.rbegin(); it != p.torsion.rend(); ++it)
            out += fmt::format("  {} -1  {}⟨{}⟩\n", it->first, module_string(it->second.ideal),
                               to_string(it->second.generator));
        if (p.free)
            out += fmt::format("  0 0  {}⟨{}⟩\n", module_string(p.free->ideal), to_string(p.free->generator));
        for (auto [u, l] : p.extension_links)
            out += fmt::format("  link {} {}\n", u, l);
    }
    return out;
}

std::string pages_latex(const std::vector<SpectralPage>& pages, const VirtualRep& alpha, PrismKind kind)
{
    auto top = static_cast<Int>(alpha.length());
    bool braces = kind == PrismKind::transversal;
    VirtualRep odd = alpha;
    odd.shift = -1;
    std::string out = "\\begin{tabular}{c|cc}\n";
    std::vector<std::string> lines_below;
    for (std::size_t k = 0; k < pages.size(); ++k) {
        const SpectralPage& p = pages[k];
        std::map<Int, std::string> brace;
        if (!p.extension_links.empty()) {
            GradedGroup glued = resolve_extensions(p, odd, kind);
            for (auto& c : chains_of(p)) {
                const GroupSummand* s = glued_summand(glued, c.bottom);
                std::string label = s ? cell_latex(s->ideal, s->generator) : "?";
                if (braces) {
                    brace[c.top] = fmt::format("\\rdelim\\}}{{{}}}{{16em}}[{}]", c.top - c.bottom + 1, label);
                } else {
                    std::vector<std::string> rows;
                    for (Int f : c.rows)
                        rows.push_back(std::to_string(f));
                    lines_below.push_back(fmt::format("{}: lines join filtrations {} in column $-1$ to {} in column $0$",
                                                      page_label(p), join(rows, ", "), label));
                }
            }
        }
        if (k > 0)
            out += "\\\\\\hline\\hline\n";
        for (Int f = top; f >= 0; --f) {
            std::string row = fmt::format("  {} &", f);
            auto t = p.torsion.find(f);
            bool has_free = f == 0 && p.free;
            if (t != p.torsion.end())
                row += " " + cell_latex(t->second.ideal, t->second.generator);
            if (has_free)
                row += " & " + cell_latex(p.free->ideal, p.free->generator);
            else if (brace.count(f))
                row += " & " + brace[f];
            row += f > 0 ? "\\\\\n" : "\\\\\\hline\n";
            out += row;
        }
        out += fmt::format("  {} & $-1$ & $0$", page_label(p));
    }
    out += "\n\\end{tabular}\n";
    for (auto& l : lines_below)
        out += l + "\\\\\n";
    return out;
}

std::string mackey_text(const MackeyPage& page)
{
    std::string out = "E^1\n";
    for (auto it = page.rows.rbegin(); it != page.rows.rend(); ++it) {
        auto& row = it->second;
        out += fmt::format("  {} -1  {}⟨{}⟩\n", it->first, to_string(row.torsion.symbol), to_string(row.torsion.generator));
        out += fmt::format("  {} 0  {}⟨{}⟩\n", it->first, to_string(row.transfer_part.symbol),
                           to_string(row.transfer_part.generator));
    }
    if (page.free)
        out += fmt::format("  0 0  {}⟨{}⟩\n", to_string(page.free->symbol), to_string(page.free->generator));
    if (page.rows.empty() && !page.free)
        out += "  0\n";
    return out;
}

std::string mackey_latex(const MackeyPage& page, const VirtualRep& alpha)
{
    auto top = static_cast<Int>(alpha.length());
    auto cell = [](const MackeyCell& c) { return fmt::format("${}\\<{}\\>$", to_latex(c.symbol), to_latex(c.generator)); };
    std::string out = "\\begin{tabular}{c|cc}\n";
    for (Int f = top; f >= 0; --f) {
        std::string row = fmt::format("  {} &", f);
        auto it = page.rows.find(f);
        if (it != page.rows.end())
            row += " " + cell(it->second.torsion) + " & " + cell(it->second.transfer_part);
        else if (f == 0 && page.free)
            row += " & " + cell(*page.free);
        row += f > 0 ? "\\\\\n" : "\\\\\\hline\n";
        out += row;
    }
    return out + "  $E^1$ & $-1$ & $0$\n\\end{tabular}\n";
}

std::string check_text(const CheckReport& r)
{
    std::string out = fmt::format("seed {}  samples {}\n", r.seed, r.samples);
    out += fmt::format("engine vs closed form: {} comparisons, {} mismatches, {} errors\n", r.comparisons, r.mismatches,
                       r.errors);
    out += fmt::format("degree check: {} summands, {} failures\n", r.summands_checked, r.degree_failures);
    out += fmt::format("padding check: {} cases, {} failures\n", r.padding_checks, r.padding_failures);
    out += fmt::format("crystalline length check: {} cases, {} failures\n", r.length_checks, r.length_failures);
    for (auto& f : r.failures) {
        VirtualRep rep = f.rep;
        out += fmt::format("  [{}] sample {} {} shift {} {}: {}\n", f.category, f.index, to_string(rep), rep.shift,
                           to_string(f.kind), f.detail);
    }
    out += r.ok() ? "OK\n" : "FAILED\n";
    return out;
}

std::string obstruction_text(const ObstructionResult& r, const ObstructionProblem& prob)
{
    auto list = [](const std::vector<Int>& xs) {
        std::vector<std::string> parts;
        for (Int x : xs)
            parts.push_back(std::to_string(x));
        return join(parts, ",");
    };
    std::string out = fmt::format("p = {}, source exponents ({}), target exponents ({})\n", prob.p, list(prob.source),
                                  list(prob.target));
    out += fmt::format("AU = diag(p^({})), UA = diag(p^({}))\n", list(prob.composite_au), list(prob.composite_ua));
    out += fmt::format("{} ({}, working exponent {}, search space {:.3g})\n", r.feasible ? "feasible" : "infeasible",
                       r.method, r.working_exponent, r.search_space);
    if (r.witness) {
        out += "A =\n";
        for (auto& row : r.witness->a)
            out += "  " + list(row) + "\n";
        out += "U =\n";
        for (auto& row : r.witness->u)
            out += "  " + list(row) + "\n";
    }
    return out;
}

std::string tr_latex(const TrReport& r)
{
    std::string lam = fmt::format("\\lambda_{{{}}}", r.level);
    std::string out = "\\begin{align*}\n";
    out += fmt::format("  \\mathrm{{TF}}_{{\\alpha+{}}} &= {}\\\\\n", lam, to_latex(r.tf_plus));
    out += fmt::format("  \\mathrm{{TF}}_{{\\alpha}} &= {}\\\\\n", to_latex(r.tf_alpha));
    out += fmt::format("  \\mathrm{{TF}}_{{\\alpha+{}-1}} &= {}\\\\\n", lam, to_latex(r.tf_plus_odd));
    out += fmt::format("  \\mathrm{{TF}}_{{\\alpha-1}} &= {}\\\\\n", to_latex(r.tf_alpha_odd));
    out += fmt::format("  a_{{{}}} &= {}\\\\\n", lam, r.even_map ? to_latex(*r.even_map) : "0");
    out += fmt::format("  \\operatorname{{coker}} &= {}\\\\\n", to_latex(r.cokernel));
    if (r.kernel.exact)
        out += fmt::format("  \\ker &= {}\n", to_latex(r.kernel.kernel));
    else
        out += fmt::format("  \\ker &= \\text{{undetermined}}\n");
    return out + "\\end{align*}\n";
}

} // namespace tfstar

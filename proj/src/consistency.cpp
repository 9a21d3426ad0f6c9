#include "tfstar/consistency.hpp"

#include <algorithm>
#include <cmath>
#include <atomic>
#include <limits>
#include <random>
#include <tuple>

#include <fmt/core.h>

#include "tfstar/closedform.hpp"
#include "tfstar/hotfss.hpp"

namespace tfstar {

void CheckConfig::validate() const
{
    if (samples < 1 || max_len < 1 || max_coeff < 1 || max_dinf < 1)
        throw ContractViolation("crosscheck bounds must all be at least 1");
    if (kinds.empty())
        throw ContractViolation("crosscheck needs at least one prism kind");
}

namespace {

// Uniform in [lo, hi] by rejection, so draws do not depend on the library's
// distribution implementation.
Int draw(std::mt19937_64& gen, Int lo, Int hi)
{
    auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do
        x = gen();
    while (x >= limit);
    return lo + static_cast<Int>(x % span);
}

using Key = std::pair<CyclicIdeal, GoldMonomial>;

std::vector<Key> canonical_keys(const GradedGroup& g, Int top)
{
    std::vector<Key> out;
    for (auto& s : g.summands)
        out.emplace_back(s.ideal, canonicalize_after_padding(s.generator, top));
    std::sort(out.begin(), out.end());
    return out;
}

void check_one(const CheckConfig& cfg, Int index, CheckReport& rep)
{
    VirtualRep base = sample_rep(cfg, index);
    for (PrismKind kind : cfg.kinds)
        for (int shift : {0, -1}) {
            VirtualRep alpha = base;
            alpha.shift = shift;
            auto fail = [&](std::string category, std::string detail) {
                rep.failures.push_back({index, alpha, kind, std::move(category), std::move(detail)});
            };
            try {
                GradedGroup engine = tf_unchecked(alpha, kind);
                GradedGroup closed = closed_tf_unchecked(alpha, kind);
                ++rep.comparisons;
                if (!same_summands(engine, closed)) {
                    ++rep.mismatches;
                    fail("mismatch", fmt::format("engine {} vs closed form {}", to_string(engine), to_string(closed)));
                }
                rep.summands_checked += static_cast<Int>(engine.summands.size() + closed.summands.size());
                auto bad = degree_violations(engine).size() + degree_violations(closed).size();
                if (bad) {
                    rep.degree_failures += static_cast<Int>(bad);
                    fail("degree", fmt::format("{} summand(s) with the wrong degree", bad));
                }

                VirtualRep longer = pad_rep(alpha, alpha.length() + 1);
                Int top = static_cast<Int>(longer.length()) - 1;
                GradedGroup padded = tf_unchecked(longer, kind);
                ++rep.padding_checks;
                if (canonical_keys(engine, top) != canonical_keys(padded, top)) {
                    ++rep.padding_failures;
                    fail("padding", fmt::format("{} vs padded {}", to_string(engine), to_string(padded)));
                }

                if (kind == PrismKind::crystalline && shift == -1 && alpha.d_inf < 0) {
                    Int expected = 0, got = 0;
                    for (Int d : alpha.dims)
                        expected += std::max<Int>(d, 0);
                    for (auto& s : engine.summands)
                        got += s.ideal.p_length().value_or(0);
                    ++rep.length_checks;
                    if (got != expected) {
                        ++rep.length_failures;
                        fail("length", fmt::format("p-length {} but the positive entries sum to {}", got, expected));
                    }
                }
            } catch (const std::exception& e) {
                ++rep.errors;
                fail("error", e.what());
            }
        }
}

void merge(CheckReport& into, CheckReport&& part)
{
    into.comparisons += part.comparisons;
    into.mismatches += part.mismatches;
    into.summands_checked += part.summands_checked;
    into.degree_failures += part.degree_failures;
    into.padding_checks += part.padding_checks;
    into.padding_failures += part.padding_failures;
    into.length_checks += part.length_checks;
    into.length_failures += part.length_failures;
    into.errors += part.errors;
    for (auto& f : part.failures)
        into.failures.push_back(std::move(f));
}

void sort_failures(CheckReport& rep)
{
    std::stable_sort(rep.failures.begin(), rep.failures.end(),
                     [](const CheckFailure& x, const CheckFailure& y) { return x.index < y.index; });
}

} // namespace

VirtualRep sample_rep(const CheckConfig& cfg, Int index)
{
    auto u = static_cast<std::uint64_t>(index);
    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                      static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(u >> 32)};
    std::mt19937_64 gen(seq);
    Int len = draw(gen, 1, cfg.max_len);
    std::vector<Int> dims(static_cast<std::size_t>(len));
    for (auto& d : dims)
        d = draw(gen, -cfg.max_coeff, cfg.max_coeff);
    Int d_inf = draw(gen, -cfg.max_dinf, cfg.max_dinf);
    return VirtualRep(std::move(dims), d_inf, 0);
}

CheckReport crosscheck_serial(const CheckConfig& cfg)
{
    cfg.validate();
    CheckReport rep;
    rep.seed = cfg.seed;
    rep.samples = cfg.samples;
    for (Int i = 0; i < cfg.samples; ++i)
        check_one(cfg, i, rep);
    sort_failures(rep);
    return rep;
}

CheckReport crosscheck_parallel(const CheckConfig& cfg)
{
    cfg.validate();
    CheckReport rep;
    rep.seed = cfg.seed;
    rep.samples = cfg.samples;
#pragma omp parallel
    {
        CheckReport local;
#pragma omp for schedule(dynamic, 64) nowait
        for (Int i = 0; i < cfg.samples; ++i)
            check_one(cfg, i, local);
#pragma omp critical
        merge(rep, std::move(local));
    }
    sort_failures(rep);
    return rep;
}

CheckReport crosscheck(const CheckConfig& cfg)
{
    return crosscheck_parallel(cfg);
}

// ---------------------------------------------------------------------------
// Obstruction search

ObstructionProblem ObstructionProblem::mult_by_p(Int p, std::vector<Int> source, std::vector<Int> target)
{
    ObstructionProblem prob;
    prob.p = p;
    prob.composite_au.assign(target.size(), 1);
    prob.composite_ua.assign(source.size(), 1);
    prob.source = std::move(source);
    prob.target = std::move(target);
    return prob;
}

void ObstructionProblem::validate() const
{
    if (p < 2)
        throw ContractViolation("obstruction_search needs a prime p");
    for (Int q = 2; q * q <= p; ++q)
        if (p % q == 0)
            throw ContractViolation(fmt::format("obstruction_search: {} is not prime", p));
    if (source.empty() || target.empty())
        throw ContractViolation("obstruction_search needs nonempty exponent lists");
    if (composite_au.size() != target.size() || composite_ua.size() != source.size())
        throw ContractViolation("obstruction_search: one composite exponent per summand is required");
    auto positive = [](const std::vector<Int>& v) { return std::all_of(v.begin(), v.end(), [](Int e) { return e >= 1; }); };
    auto nonneg = [](const std::vector<Int>& v) { return std::all_of(v.begin(), v.end(), [](Int e) { return e >= 0; }); };
    if (!positive(source) || !positive(target))
        throw ContractViolation("obstruction_search: module exponents must be at least 1");
    if (!nonneg(composite_au) || !nonneg(composite_ua))
        throw ContractViolation("obstruction_search: composite exponents must be nonnegative");
    if (modulus_exponent && *modulus_exponent < 1)
        throw ContractViolation("obstruction_search: working modulus exponent must be at least 1");
    auto fits = [&](Int e) {
        Int v = 1;
        for (Int i = 0; i < e; ++i)
            if ((v *= p) > (Int{1} << 31))
                return false;
        return true;
    };
    for (const auto* list : {&source, &target})
        for (Int e : *list)
            if (!fits(e))
                throw ContractViolation(fmt::format("obstruction_search: p^{} exceeds 2^31", e));
}

namespace {

// Moduli stay below 2^31, so products of reduced residues fit in 64 bits.
struct Layout {
    Int p = 2;
    std::vector<Int> a, b;      // source / target exponents
    std::vector<Int> pa, pb;    // p^a_j, p^b_i
    std::vector<Int> want_au;   // p^{c} mod p^{b_i}
    std::vector<Int> want_ua;   // p^{c} mod p^{a_j}
    // U[j][i]: Hom(Z/p^{b_i}, Z/p^{a_j}); A[i][j]: Hom(Z/p^{a_j}, Z/p^{b_i}).
    std::vector<std::vector<Int>> u_step, u_count, a_step, a_count;
    double u_total = 1;
    std::vector<double> row_total;
};

Int ipow(Int p, Int k)
{
    Int out = 1;
    for (Int i = 0; i < k; ++i)
        out *= p;
    return out;
}

Layout make_layout(Int p, const std::vector<Int>& src, const std::vector<Int>& tgt, const std::vector<Int>& c_au,
                   const std::vector<Int>& c_ua)
{
    Layout l;
    l.p = p;
    l.a = src;
    l.b = tgt;
    std::size_t ns = src.size(), nt = tgt.size();
    for (Int e : src)
        l.pa.push_back(ipow(p, e));
    for (Int e : tgt)
        l.pb.push_back(ipow(p, e));
    for (std::size_t i = 0; i < nt; ++i)
        l.want_au.push_back(c_au[i] >= l.b[i] ? 0 : ipow(p, c_au[i]));
    for (std::size_t j = 0; j < ns; ++j)
        l.want_ua.push_back(c_ua[j] >= l.a[j] ? 0 : ipow(p, c_ua[j]));
    l.u_step.assign(ns, std::vector<Int>(nt));
    l.u_count.assign(ns, std::vector<Int>(nt));
    l.a_step.assign(nt, std::vector<Int>(ns));
    l.a_count.assign(nt, std::vector<Int>(ns));
    for (std::size_t j = 0; j < ns; ++j)
        for (std::size_t i = 0; i < nt; ++i) {
            l.u_step[j][i] = ipow(p, std::max<Int>(l.a[j] - l.b[i], 0));
            l.u_count[j][i] = ipow(p, std::min(l.a[j], l.b[i]));
            l.a_step[i][j] = ipow(p, std::max<Int>(l.b[i] - l.a[j], 0));
            l.a_count[i][j] = ipow(p, std::min(l.a[j], l.b[i]));
            l.u_total *= static_cast<double>(l.u_count[j][i]);
        }
    l.row_total.assign(nt, 1);
    for (std::size_t i = 0; i < nt; ++i)
        for (std::size_t j = 0; j < ns; ++j)
            l.row_total[i] *= static_cast<double>(l.a_count[i][j]);
    return l;
}

double space_of(const Layout& l)
{
    double rows = 0;
    for (double r : l.row_total)
        rows += r;
    return l.u_total * std::max(rows, 1.0);
}

using Matrix = std::vector<std::vector<Int>>;

Int inverse_mod(Int x, Int mod)
{
    Int r0 = mod, r1 = x % mod, t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    }
    return ((t0 % mod) + mod) % mod;
}

// Per-thread buffers. U is stored flat as u[j * nt + i], A as a[i * ns + j].
struct Workspace {
    explicit Workspace(const Layout& layout)
        : l(layout), ns(layout.a.size()), nt(layout.b.size()), u(ns * nt), c(ns * nt), coeff(ns), resid(nt),
          cands(nt), pick(nt), a(nt * ns)
    {
    }

    const Layout& l;
    std::size_t ns, nt;
    std::vector<Int> u, c, coeff, resid;
    std::vector<std::vector<Int>> cands;  // row i candidates, ns entries each
    std::vector<std::size_t> pick;
    std::vector<Int> a;

    Matrix u_matrix() const
    {
        Matrix out(ns, std::vector<Int>(nt));
        for (std::size_t j = 0; j < ns; ++j)
            for (std::size_t i = 0; i < nt; ++i)
                out[j][i] = u[j * nt + i];
        return out;
    }

    Matrix a_matrix() const
    {
        Matrix out(nt, std::vector<Int>(ns));
        for (std::size_t i = 0; i < nt; ++i)
            for (std::size_t j = 0; j < ns; ++j)
                out[i][j] = a[i * ns + j];
        return out;
    }
};

void decode_u(Workspace& w, std::uint64_t index)
{
    // Last entry varies fastest.
    for (std::size_t jj = w.ns; jj-- > 0;)
        for (std::size_t ii = w.nt; ii-- > 0;) {
            auto count = static_cast<std::uint64_t>(w.l.u_count[jj][ii]);
            w.u[jj * w.nt + ii] = static_cast<Int>(index % count) * w.l.u_step[jj][ii];
            index /= count;
        }
}

// Rows A[i][*] with (A U)[i][k] = delta_ik p^c mod p^{b_i}, in lexicographic order.
// Every coordinate but the last is enumerated; the last is solved for.
void row_candidates(Workspace& w, std::size_t i)
{
    const Layout& l = w.l;
    std::size_t ns = w.ns, nt = w.nt, last = ns - 1;
    std::vector<Int>& out = w.cands[i];
    out.clear();
    Int mod = l.pb[i];
    Int want = l.want_au[i] % mod;
    for (std::size_t j = 0; j < ns; ++j)
        for (std::size_t k = 0; k < nt; ++k)
            w.c[j * nt + k] = l.a_step[i][j] % mod * (w.u[j * nt + k] % mod) % mod;
    // Column where the last coordinate has the smallest p-valuation.
    std::size_t pivot = nt;
    Int pivot_pow = mod, pivot_inv = 0;
    for (std::size_t k = 0; k < nt; ++k) {
        Int x = w.c[last * nt + k];
        if (x == 0)
            continue;
        Int pw = 1;
        while (x % (pw * l.p) == 0)
            pw *= l.p;
        if (pw < pivot_pow) {
            pivot = k;
            pivot_pow = pw;
        }
    }
    if (pivot < nt)
        pivot_inv = inverse_mod(w.c[last * nt + pivot] / pivot_pow, mod / pivot_pow);
    Int last_count = l.a_count[i][last];
    std::fill(w.coeff.begin(), w.coeff.end(), 0);
    auto accept = [&](Int x) {
        for (std::size_t k = 0; k < nt; ++k)
            if (x * w.c[last * nt + k] % mod != w.resid[k])
                return;
        for (std::size_t j = 0; j < ns; ++j)
            out.push_back((j == last ? x : w.coeff[j]) * l.a_step[i][j] % mod);
    };
    while (true) {
        for (std::size_t k = 0; k < nt; ++k) {
            Int acc = k == i ? want : 0;
            for (std::size_t j = 0; j < last; ++j)
                acc = (acc - w.coeff[j] * w.c[j * nt + k]) % mod;
            w.resid[k] = (acc + mod) % mod;
        }
        if (pivot == nt) {
            for (Int x = 0; x < last_count; ++x)
                accept(x);
        } else if (w.resid[pivot] % pivot_pow == 0) {
            // x = x0 + m (mod / pivot_pow); the period never exceeds last_count.
            Int period = mod / pivot_pow;
            Int x0 = w.resid[pivot] / pivot_pow % period * pivot_inv % period;
            for (Int x = x0; x < last_count; x += period)
                accept(x);
        }
        std::size_t j = last;
        while (j-- > 0) {
            if (++w.coeff[j] < l.a_count[i][j])
                break;
            w.coeff[j] = 0;
        }
        if (j == static_cast<std::size_t>(-1))
            break;
    }
}

bool ua_ok(const Workspace& w)
{
    const Layout& l = w.l;
    for (std::size_t j = 0; j < w.ns; ++j) {
        Int mod = l.pa[j];
        for (std::size_t m = 0; m < w.ns; ++m) {
            Int acc = 0;
            for (std::size_t i = 0; i < w.nt; ++i)
                acc = (acc + (w.u[j * w.nt + i] % mod) * (w.a[i * w.ns + m] % mod)) % mod;
            if (acc != (j == m ? l.want_ua[j] % mod : 0))
                return false;
        }
    }
    return true;
}

// First A (lexicographic over row candidates) completing the current U, left in w.a.
bool complete(Workspace& w)
{
    std::size_t nt = w.nt, ns = w.ns;
    for (std::size_t i = 0; i < nt; ++i) {
        row_candidates(w, i);
        if (w.cands[i].empty())
            return false;
    }
    std::fill(w.pick.begin(), w.pick.end(), 0);
    while (true) {
        for (std::size_t i = 0; i < nt; ++i)
            std::copy_n(w.cands[i].begin() + static_cast<std::ptrdiff_t>(w.pick[i] * ns), ns,
                        w.a.begin() + static_cast<std::ptrdiff_t>(i * ns));
        if (ua_ok(w))
            return true;
        std::size_t i = nt;
        while (i-- > 0) {
            if (++w.pick[i] < w.cands[i].size() / ns)
                break;
            w.pick[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1))
            return false;
    }
}

std::optional<ObstructionWitness> witness_at(const Layout& l, std::uint64_t idx)
{
    Workspace w(l);
    decode_u(w, idx);
    if (!complete(w))
        return std::nullopt;
    return ObstructionWitness{w.a_matrix(), w.u_matrix()};
}

std::optional<ObstructionWitness> search_serial(const Layout& l)
{
    auto total = static_cast<std::uint64_t>(l.u_total);
    Workspace w(l);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        decode_u(w, idx);
        if (complete(w))
            return ObstructionWitness{w.a_matrix(), w.u_matrix()};
    }
    return std::nullopt;
}

std::optional<ObstructionWitness> search_parallel(const Layout& l)
{
    auto total = static_cast<std::int64_t>(l.u_total);
    std::atomic<std::int64_t> best{total};
#pragma omp parallel
    {
        Workspace w(l);
#pragma omp for schedule(dynamic, 1024)
        for (std::int64_t idx = 0; idx < total; ++idx) {
            if (idx >= best.load(std::memory_order_relaxed))
                continue;
            decode_u(w, static_cast<std::uint64_t>(idx));
            if (complete(w)) {
                std::int64_t cur = best.load();
                while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                }
            }
        }
    }
    if (best.load() == total)
        return std::nullopt;
    return witness_at(l, static_cast<std::uint64_t>(best.load()));
}

bool uniform(const Layout& l)
{
    auto same = [&](Int e) { return e == l.a.front(); };
    return std::all_of(l.a.begin(), l.a.end(), same) && std::all_of(l.b.begin(), l.b.end(), same);
}

// All exponents equal t: over Z/p^t every U is equivalent, under automorphisms of
// source and target, to a diagonal diag(p^k_1, ..., p^k_r). (gAh^-1, hUg^-1) solves
// the problem whenever (A, U) does, so the diagonal U are enough. k runs from t
// down to 0, so the zero matrix comes first.
std::optional<ObstructionWitness> search_diagonal(const Layout& l)
{
    Workspace w(l);
    std::size_t r = std::min(w.ns, w.nt);
    Int t = l.a.front();
    std::vector<Int> k(r, t);
    while (true) {
        std::fill(w.u.begin(), w.u.end(), 0);
        for (std::size_t d = 0; d < r; ++d)
            w.u[d * w.nt + d] = ipow(l.p, k[d]) % l.pa.front();
        if (complete(w))
            return ObstructionWitness{w.a_matrix(), w.u_matrix()};
        std::size_t d = r;
        while (d-- > 0) {
            if (--k[d] >= 0)
                break;
            k[d] = t;
        }
        if (d == static_cast<std::size_t>(-1))
            return std::nullopt;
    }
}

double diagonal_space(const Layout& l)
{
    return std::pow(static_cast<double>(l.a.front() + 1), static_cast<double>(std::min(l.a.size(), l.b.size())));
}

template <class Search>
ObstructionResult run_search(const ObstructionProblem& prob, Search search)
{
    prob.validate();
    std::vector<Int> src = prob.source, tgt = prob.target;
    if (prob.modulus_exponent) {
        for (auto& e : src)
            e = std::min(e, *prob.modulus_exponent);
        for (auto& e : tgt)
            e = std::min(e, *prob.modulus_exponent);
    }
    Int lo = std::min(*std::min_element(src.begin(), src.end()), *std::min_element(tgt.begin(), tgt.end()));
    Int hi = std::max(*std::max_element(src.begin(), src.end()), *std::max_element(tgt.begin(), tgt.end()));
    Int c_max = std::max(*std::max_element(prob.composite_au.begin(), prob.composite_au.end()),
                         *std::max_element(prob.composite_ua.begin(), prob.composite_ua.end()));
    Int t = std::min(lo, c_max + 1);
    ObstructionResult result;
    // Tensoring with Z/p^t (t <= every exponent) carries any solution to a solution
    // of the truncated problem, so infeasibility there settles the original.
    if (t < hi) {
        std::vector<Int> s2(src.size(), t), t2(tgt.size(), t);
        Layout small = make_layout(prob.p, s2, t2, prob.composite_au, prob.composite_ua);
        if (!search_diagonal(small)) {
            result.method = fmt::format("reduction mod p^{}", t);
            result.working_exponent = t;
            result.search_space = diagonal_space(small);
            return result;
        }
    }
    Layout full = make_layout(prob.p, src, tgt, prob.composite_au, prob.composite_ua);
    result.working_exponent = hi;
    if (uniform(full)) {
        result.method = "diagonal";
        result.search_space = diagonal_space(full);
        result.witness = search_diagonal(full);
        result.feasible = result.witness.has_value();
        return result;
    }
    double space = space_of(full);
    if (space > prob.ceiling)
        throw ResourceError(space,
                            fmt::format("obstruction search space {:.3g} exceeds the ceiling {:.3g}", space, prob.ceiling));
    result.method = "exhaustive";
    result.search_space = space;
    result.witness = search(full);
    result.feasible = result.witness.has_value();
    return result;
}

} // namespace

double obstruction_search_space(const ObstructionProblem& prob)
{
    prob.validate();
    return space_of(make_layout(prob.p, prob.source, prob.target, prob.composite_au, prob.composite_ua));
}

ObstructionResult obstruction_search_serial(const ObstructionProblem& prob)
{
    return run_search(prob, search_serial);
}

ObstructionResult obstruction_search_parallel(const ObstructionProblem& prob)
{
    return run_search(prob, search_parallel);
}

ObstructionResult obstruction_search(const ObstructionProblem& prob)
{
    return obstruction_search_parallel(prob);
}

bool verify_witness(const ObstructionProblem& prob, const ObstructionWitness& w)
{
    prob.validate();
    Layout l = make_layout(prob.p, prob.source, prob.target, prob.composite_au, prob.composite_ua);
    std::size_t ns = l.a.size(), nt = l.b.size();
    if (w.a.size() != nt || w.u.size() != ns)
        return false;
    for (std::size_t i = 0; i < nt; ++i) {
        if (w.a[i].size() != ns)
            return false;
        for (std::size_t j = 0; j < ns; ++j)
            if (w.a[i][j] % l.a_step[i][j] != 0)
                return false;
    }
    for (std::size_t j = 0; j < ns; ++j) {
        if (w.u[j].size() != nt)
            return false;
        for (std::size_t i = 0; i < nt; ++i)
            if (w.u[j][i] % l.u_step[j][i] != 0)
                return false;
    }
    for (std::size_t i = 0; i < nt; ++i)
        for (std::size_t k = 0; k < nt; ++k) {
            Int mod = l.pb[i], acc = 0;
            for (std::size_t j = 0; j < ns; ++j)
                acc = (acc + (w.a[i][j] % mod) * (w.u[j][k] % mod)) % mod;
            if ((acc + mod) % mod != (i == k ? l.want_au[i] % mod : 0))
                return false;
        }
    for (std::size_t j = 0; j < ns; ++j)
        for (std::size_t m = 0; m < ns; ++m) {
            Int mod = l.pa[j], acc = 0;
            for (std::size_t i = 0; i < nt; ++i)
                acc = (acc + (w.u[j][i] % mod) * (w.a[i][m] % mod)) % mod;
            if ((acc + mod) % mod != (j == m ? l.want_ua[j] % mod : 0))
                return false;
        }
    return true;
}

} // namespace tfstar

#pragma once

// JSON documents for the command-line tool.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>

#include "schubert/components.hpp"
#include "schubert/kl.hpp"
#include "schubert/slice.hpp"
#include "schubert/smoothness.hpp"
#include "schubert/tangent.hpp"
#include "schubert/verify.hpp"

namespace schubert {

using nlohmann::json;

inline json to_json(const PatternOccurrence& p)
{
    return {{"kind", to_string(p.kind)}, {"positions", p.positions}};
}

inline json smoothness_json(const Permutation& w)
{
    json witnesses = json::array();
    for (const auto& p : find_patterns(w))
        witnesses.push_back(to_json(p));
    return {{"smooth", witnesses.empty()}, {"witnesses", witnesses}};
}

inline json to_json(const TangentReport& t) { return {{"m", t.m}, {"excess", t.excess}}; }

inline json to_json(const KLPoly& p) { return p.coeffs; }

inline json to_json(const SliceVerdict& v)
{
    return {{"tangent_ok", v.tangent_ok},
            {"dim_ok", v.dim_ok},
            {"containment_ok", v.containment_ok},
            {"exclusion_ok", v.exclusion_ok},
            {"equivalence_ok", v.equivalence_ok},
            {"samples", v.samples},
            {"expected_dim", v.expected_dim},
            {"parametrization_dim", v.parametrization_dim},
            {"equation_dim", v.equation_dim},
            {"failures", v.failures}};
}

inline json shape_json(const SliceModel& s)
{
    if (const auto* r = std::get_if<RankOneShape>(&s.shape))
        return {{"kind", "rank-one"}, {"rows", r->rows}, {"cols", r->cols}};
    if (const auto* q = std::get_if<QuadricShape>(&s.shape)) {
        json pairs = json::array();
        for (const auto& [a, b] : q->pairs)
            pairs.push_back({s.variable_name(a), s.variable_name(b)});
        json unpaired = json::array();
        for (int u : q->unpaired)
            unpaired.push_back(s.variable_name(u));
        return {{"kind", "quadric"}, {"row", q->row}, {"col", q->col}, {"pairs", pairs},
                {"unpaired", unpaired}};
    }
    if (const auto* p = std::get_if<PairedBlocksShape>(&s.shape))
        return {{"kind", "paired-blocks"}, {"a_rows", p->a_rows}, {"a_cols", p->a_cols},
                {"b_rows", p->b_rows}, {"b_cols", p->b_cols}};
    return {{"kind", "trivial"}};
}

inline json slice_json(const SliceModel& s, const SliceVerdict* verdict)
{
    json free = json::array();
    for (const auto& p : s.free)
        free.push_back({p.row, p.col});
    auto name = [&s](int i) { return s.variable_name(i); };
    json equations = json::array();
    for (const auto& e : s.closed_equations)
        equations.push_back(e.to_string(name));
    json det = json::array();
    for (const auto& e : s.determinantal_equations)
        det.push_back(e.to_string(name));
    json out = {{"v", s.v.to_string()},
                {"w", s.w.to_string()},
                {"type", to_string(s.type)},
                {"free", free},
                {"shape", shape_json(s)},
                {"equations", equations},
                {"determinantal_equations", det}};
    if (verdict)
        out["verdict"] = to_json(*verdict);
    return out;
}

inline json component_json(const Component& c, const Permutation& w, KLContext& kl, int trials,
                           std::uint64_t seed)
{
    json out = {{"v", c.v.to_string()},
                {"type", to_string(c.type)},
                {"l", c.l},
                {"m", c.m ? json(*c.m) : json(nullptr)},
                {"codim", c.codim},
                {"excess", c.excess},
                {"tangent_dim", c.tangent_dim},
                {"formulas_ok", verify_formulas(c, w)},
                {"kl", to_json(kl_closed_form(c))},
                {"kl_recursion", to_json(kl.polynomial(c.v, w))}};
    if (c.type == SingularityType::T3412Empty)
        out["l_plus_m"] = c.l;
    json region = json::array();
    for (const auto& cell : c.region.cells())
        region.push_back({cell.p, cell.q});
    out["region"] = region;
    const SliceModel s = build_slice(c, w);
    const SliceVerdict verdict = verify_slice(s, c.tangent_dim, trials, pair_seed(seed, c.v, w));
    out["slice"] = slice_json(s, &verdict);
    return out;
}

/// Every component of Sing(X_w) with its type, KL polynomial and slice.
inline json singular_locus_json(const Permutation& w, int trials, std::uint64_t seed)
{
    KLContext kl(w.size());
    json out = json::array();
    for (const auto& c : enumerate_components(w))
        out.push_back(component_json(c, w, kl, trials, seed));
    return out;
}

/// Smoothness, components, KL polynomials, slices and verdicts for w.
inline json cmd_report(const Permutation& w, int trials = 50, std::uint64_t seed = SweepOptions{}.seed)
{
    json out = smoothness_json(w);
    out["permutation"] = w.to_string();
    out["length"] = length(w);
    out["components"] = singular_locus_json(w, trials, seed);
    return out;
}

inline json kl_json(const Permutation& v, const Permutation& w)
{
    KLContext ctx(w.size());
    const KLPoly rec = ctx.polynomial(v, w);
    json closed = nullptr;
    bool agree = true;
    for (const auto& c : enumerate_components(w)) {
        if (c.v == v) {
            const KLPoly cf = kl_closed_form(c);
            closed = to_json(cf);
            agree = cf == rec;
        }
    }
    return {{"closed_form", closed}, {"recursion", to_json(rec)}, {"agree", agree}};
}

inline json to_json(const SweepReport& r)
{
    json witnesses = json::array();
    for (const auto& f : r.failure_witnesses)
        witnesses.push_back({{"w", f.w.to_string()},
                             {"v", f.v.size() ? json(f.v.to_string()) : json(nullptr)},
                             {"check", f.check},
                             {"detail", f.detail}});
    return {{"n", r.n},
            {"trials", r.trials},
            {"seed", r.seed},
            {"permutations_checked", r.permutations_checked},
            {"singular_count", r.singular_count},
            {"smooth_count", r.permutations_checked - r.singular_count},
            {"component_pairs", r.component_pairs},
            {"by_type", r.by_type},
            {"checks",
             {{"smoothness_mismatches", r.smooth_mismatches},
              {"classification_failures", r.classification_failures},
              {"formula_failures", r.formula_failures},
              {"kl_mismatches", r.kl_mismatches},
              {"free_count_failures", r.free_count_failures},
              {"slice_failures", r.slice_failures}}},
            {"failures", r.failures},
            {"failure_witnesses", witnesses}};
}

} // namespace schubert

#pragma once

// Exhaustive verification over S_n: pattern smoothness against the tangent
// oracle, classification and formulas for every component, closed-form KL
// polynomials against the recursion, and the full slice verdict.

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "schubert/components.hpp"
#include "schubert/kl.hpp"
#include "schubert/permutation.hpp"
#include "schubert/slice.hpp"
#include "schubert/smoothness.hpp"
#include "schubert/tangent.hpp"

namespace schubert {

struct FailureWitness {
    Permutation w;
    Permutation v; // empty when the failure is not tied to a component
    std::string check;
    std::string detail;
};

struct SweepReport {
    int n = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    long permutations_checked = 0;
    long singular_count = 0;
    long component_pairs = 0;
    long failures = 0;
    std::map<std::string, long> by_type;
    // per-check counters, keyed by the criterion they feed
    long smooth_mismatches = 0;
    long classification_failures = 0;
    long formula_failures = 0;
    long kl_mismatches = 0;
    long free_count_failures = 0;
    long slice_failures = 0;
    std::vector<FailureWitness> failure_witnesses;

    void merge(const SweepReport& o)
    {
        permutations_checked += o.permutations_checked;
        singular_count += o.singular_count;
        component_pairs += o.component_pairs;
        failures += o.failures;
        for (const auto& [k, c] : o.by_type)
            by_type[k] += c;
        smooth_mismatches += o.smooth_mismatches;
        classification_failures += o.classification_failures;
        formula_failures += o.formula_failures;
        kl_mismatches += o.kl_mismatches;
        free_count_failures += o.free_count_failures;
        slice_failures += o.slice_failures;
        failure_witnesses.insert(failure_witnesses.end(), o.failure_witnesses.begin(),
                                 o.failure_witnesses.end());
    }
};

struct SweepOptions {
    int trials = 50;
    std::uint64_t seed = 20010501;
    int threads = 1;
    bool check_slices = true;
    /// Called after each permutation with (done, total); may be empty. With
    /// several threads it is called concurrently.
    std::function<void(long, long)> progress;
};

namespace detail {

inline void record_failure(SweepReport& r, long& counter, const Permutation& w, const Permutation& v,
                           std::string check, std::string what)
{
    ++counter;
    ++r.failures;
    r.failure_witnesses.push_back({w, v, std::move(check), std::move(what)});
}

inline void sweep_one(const Permutation& w, KLContext& kl, const SweepOptions& opt, SweepReport& r)
{
    ++r.permutations_checked;
    const auto singular = singular_points(w);
    const bool pattern_smooth = is_smooth(w);
    if (pattern_smooth != singular.empty())
        record_failure(r, r.smooth_mismatches, w, {}, "smoothness",
                       pattern_smooth ? "patterns absent but singular points found"
                                      : "patterns present but no singular point");
    if (singular.empty())
        return;
    ++r.singular_count;

    for (const Permutation& v : bruhat_maximal(singular)) {
        ++r.component_pairs;
        Component c;
        try {
            c = classify_component(v, w);
        } catch (const ClassificationError& e) {
            record_failure(r, r.classification_failures, w, v, "classification", e.what());
            continue;
        }
        ++r.by_type[to_string(c.type)];

        if (!verify_formulas(c, w))
            record_failure(r, r.formula_failures, w, v, "formulas", "tangent/codimension formula mismatch");

        const KLPoly closed = kl_closed_form(c);
        const KLPoly rec = kl.polynomial(v, w);
        if (closed != rec)
            record_failure(r, r.kl_mismatches, w, v, "kl",
                           "closed form " + closed.to_string() + " vs recursion " + rec.to_string());

        const auto free = free_coordinates(v, w);
        if (static_cast<int>(free.size()) != c.tangent_dim - length(v))
            record_failure(r, r.free_count_failures, w, v, "free-count",
                           std::to_string(free.size()) + " free vs m(w,v)-l(v) = " +
                               std::to_string(c.tangent_dim - length(v)));

        if (!opt.check_slices)
            continue;
        try {
            const SliceVerdict verdict =
                verify_slice(build_slice(c, w), c.tangent_dim, opt.trials, pair_seed(opt.seed, v, w));
            if (!verdict.all_ok())
                record_failure(r, r.slice_failures, w, v, "slice",
                               verdict.failures.empty() ? "slice check failed" : verdict.failures.front());
        } catch (const SliceStructureError& e) {
            record_failure(r, r.slice_failures, w, v, "slice", e.what());
        }
    }
}

} // namespace detail

/// Runs every check over S_n. Output does not depend on the thread count.
inline SweepReport verify_all(int n, const SweepOptions& opt = {})
{
    if (n < 2 || n > 8)
        throw std::invalid_argument("verify_all: n must be in 2..8");
    const auto perms = all_permutations(n);
    const int workers = std::max(1, opt.threads);
    std::vector<SweepReport> parts(workers);

    // contiguous blocks keep the merged order equal to lexicographic order
    const std::size_t block = (perms.size() + workers - 1) / workers;
    std::atomic<long> done{0};
    auto run = [&](int id) {
        KLContext kl(n);
        const std::size_t begin = std::min(perms.size(), id * block);
        const std::size_t end = std::min(perms.size(), begin + block);
        for (std::size_t i = begin; i < end; ++i) {
            detail::sweep_one(perms[i], kl, opt, parts[id]);
            const long d = ++done;
            if (opt.progress)
                opt.progress(d, static_cast<long>(perms.size()));
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int id = 0; id < workers; ++id)
            pool.emplace_back(run, id);
        for (auto& t : pool)
            t.join();
    }

    SweepReport report;
    report.n = n;
    report.trials = opt.trials;
    report.seed = opt.seed;
    for (const auto& p : parts)
        report.merge(p);
    return report;
}

} // namespace schubert

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Usage: acceptance [--extended]   (--extended adds the S_7 sweep)

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <thread>

#include "schubert/schubert.hpp"

namespace {

using namespace schubert;
using Clock = std::chrono::steady_clock;

constexpr int kMaxN = 6;
constexpr int kTrials = 50;
constexpr std::uint64_t kSeed = 20010501;
constexpr double kSmoothnessBudgetSeconds = 120.0;

int failures = 0;

void report(bool ok, int id, const std::string& what, const std::string& detail)
{
    std::printf("[%s] %d %s (%s)\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Pair {
    Permutation w;
    Component c;
};

void criterion_smoothness()
{
    const auto t0 = Clock::now();
    long checked = 0, mismatches = 0;
    for (int n = 1; n <= kMaxN; ++n)
        for (const auto& w : all_permutations(n)) {
            ++checked;
            mismatches += is_smooth(w) != singular_points(w).empty() ? 1 : 0;
        }
    const double secs = seconds_since(t0);
    std::ostringstream d;
    d << checked << " permutations, " << mismatches << " mismatches, " << secs << " s (budget "
      << kSmoothnessBudgetSeconds << " s)";
    report(mismatches == 0 && secs < kSmoothnessBudgetSeconds, 1,
           "pattern smoothness agrees with the tangent oracle, n <= 6", d.str());
}

// Classifies every Bruhat-maximal singular point found by the oracle and
// collects the pairs for the later criteria.
std::vector<Pair> criterion_classification()
{
    std::vector<Pair> pairs;
    long bad = 0;
    std::string first;
    for (int n = 1; n <= kMaxN; ++n)
        for (const auto& w : all_permutations(n)) {
            const auto oracle = singular_components_oracle(w);
            std::vector<Permutation> enumerated;
            for (const auto& c : enumerate_components(w))
                enumerated.push_back(c.v);
            if (enumerated != oracle) {
                ++bad;
                if (first.empty())
                    first = "component list differs for " + w.to_string();
            }
            for (const auto& v : oracle) {
                try {
                    const Component c = classify_component(v, w);
                    if (!verify_formulas(c, w)) {
                        ++bad;
                        if (first.empty())
                            first = "formula mismatch at (" + v.to_string() + ", " + w.to_string() + ")";
                    }
                    pairs.push_back({w, c});
                } catch (const std::exception& e) {
                    ++bad;
                    if (first.empty())
                        first = e.what();
                }
            }
        }
    std::map<SingularityType, long> by_type;
    for (const auto& p : pairs)
        ++by_type[p.c.type];
    std::ostringstream d;
    d << pairs.size() << " pairs: ";
    for (const auto& [t, k] : by_type)
        d << to_string(t) << "=" << k << " ";
    d << "failures=" << bad;
    if (!first.empty())
        d << "; first: " << first;
    report(bad == 0 && by_type.size() == 3, 2, "every component classifies with matching tangent formulas",
           d.str());
    return pairs;
}

void criterion_kl(const std::vector<Pair>& pairs)
{
    long bad = 0;
    std::map<int, KLContext> contexts;
    for (const auto& p : pairs) {
        const int n = p.w.size();
        auto it = contexts.try_emplace(n, n).first;
        bad += kl_closed_form(p.c) == it->second.polynomial(p.c.v, p.w) ? 0 : 1;
    }
    const bool spot = kl_recursion(parse_permutation("2143"), parse_permutation("4231")) == KLPoly({1, 1}) &&
                      kl_recursion(parse_permutation("1324"), parse_permutation("3412")) == KLPoly({1, 1});
    report(bad == 0 && spot, 3, "closed-form KL polynomials equal the recursion",
           std::to_string(pairs.size()) + " pairs, " + std::to_string(bad) +
               " mismatches; P_{2143,4231} = P_{1324,3412} = 1 + q: " + (spot ? "yes" : "no"));
}

void criterion_free_count(const std::vector<Pair>& pairs)
{
    long bad = 0;
    for (const auto& p : pairs)
        bad += static_cast<int>(free_coordinates(p.c.v, p.w).size()) == p.c.tangent_dim - length(p.c.v) ? 0 : 1;
    report(bad == 0, 4, "|free coordinates| = m(w,v) - l(v)",
           std::to_string(pairs.size()) + " pairs, " + std::to_string(bad) + " exceptions");
}

void criterion_slices(const std::vector<Pair>& pairs)
{
    long bad = 0, samples = 0;
    std::string first;
    for (const auto& p : pairs) {
        try {
            const SliceVerdict v = verify_slice(p.c, p.w, kTrials, pair_seed(kSeed, p.c.v, p.w));
            samples += v.samples;
            const bool ok = v.all_ok() && v.parametrization_dim == length(p.w) - length(p.c.v);
            if (!ok) {
                ++bad;
                if (first.empty())
                    first = "(" + p.c.v.to_string() + ", " + p.w.to_string() + ") " +
                            (v.failures.empty() ? "" : v.failures.front());
            }
        } catch (const std::exception& e) {
            ++bad;
            if (first.empty())
                first = e.what();
        }
    }
    std::ostringstream d;
    d << pairs.size() << " pairs, " << samples << " samples, trials=" << kTrials << ", seed=" << kSeed
      << ", failures=" << bad;
    if (!first.empty())
        d << "; first: " << first;
    report(bad == 0, 5, "slices: containment, exclusion, dimension, determinantal equivalence", d.str());
}

void criterion_spot_values()
{
    bool ok = true;
    std::ostringstream d;
    {
        const auto w = parse_permutation("4231");
        const auto comps = enumerate_components(w);
        ok = ok && comps.size() == 1;
        if (comps.size() == 1) {
            const auto& c = comps[0];
            const SliceModel s = build_slice(c, w);
            const auto* shape = std::get_if<RankOneShape>(&s.shape);
            const SliceVerdict v = verify_slice(s, c.tangent_dim, kTrials, pair_seed(kSeed, c.v, w));
            ok = ok && c.v == parse_permutation("2143") && c.type == SingularityType::T4231 && c.l == 1 &&
                 c.m == 1 && c.codim == 3 && c.excess == 1 && shape && shape->rows.size() == 2 &&
                 shape->cols.size() == 2 && v.all_ok();
            d << "4231: v=" << c.v.to_string() << " " << to_string(c.type) << " l=" << c.l
              << " m=" << c.m.value_or(-1) << " d=" << c.codim << " e=" << c.excess << "; ";
        }
    }
    {
        const auto w = parse_permutation("3412");
        const auto comps = enumerate_components(w);
        ok = ok && comps.size() == 1;
        if (comps.size() == 1) {
            const auto& c = comps[0];
            const SliceModel s = build_slice(c, w);
            const SliceVerdict v = verify_slice(s, c.tangent_dim, kTrials, pair_seed(kSeed, c.v, w));
            ok = ok && c.v == parse_permutation("1324") && c.type == SingularityType::T3412Star && c.l == 0 &&
                 !c.m && c.codim == 3 && c.excess == 1 && std::holds_alternative<QuadricShape>(s.shape) &&
                 s.closed_equations.size() == 1 && v.parametrization_dim == 3 && v.all_ok();
            d << "3412: v=" << c.v.to_string() << " " << to_string(c.type) << " l=" << c.l << " d=" << c.codim
              << " e=" << c.excess << " cone dim=" << v.parametrization_dim;
        }
    }
    report(ok, 6, "spot values for 4231 and 3412", d.str());
}

void criterion_s4_count()
{
    int smooth = 0;
    for (const auto& w : all_permutations(4))
        smooth += is_smooth(w) ? 1 : 0;
    report(smooth == 22, 7, "S_4 has 22 smooth permutations", std::to_string(smooth) + " smooth");
}

void criterion_extended(bool run)
{
    if (!run) {
        std::printf("[SKIP] 8 extended S_7 sweep (pass --extended)\n");
        return;
    }
    SweepOptions opt;
    opt.trials = kTrials;
    opt.seed = kSeed;
    opt.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    const auto t0 = Clock::now();
    const SweepReport r = verify_all(7, opt);
    std::ostringstream d;
    d << r.permutations_checked << " permutations, " << r.singular_count << " singular, " << r.component_pairs
      << " pairs, failures=" << r.failures << ", " << seconds_since(t0) << " s";
    report(r.failures == 0, 8, "criteria 1-5 on S_7", d.str());
}

} // namespace

int main(int argc, char** argv)
{
    bool extended = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--extended") == 0) {
            extended = true;
        } else {
            std::fprintf(stderr, "usage: %s [--extended]\n", argv[0]);
            return 2;
        }
    }
    criterion_smoothness();
    const auto pairs = criterion_classification();
    criterion_kl(pairs);
    criterion_free_count(pairs);
    criterion_slices(pairs);
    criterion_spot_values();
    criterion_s4_count();
    criterion_extended(extended);
    std::printf("%s: %d failing criteria\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}

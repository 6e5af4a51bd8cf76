// Command-line front end: smoothness, tangent dimensions, singular-locus
// components, KL polynomials, transversal slices and the exhaustive sweep.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "schubert/report.hpp"

namespace {

using namespace schubert;

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Permutation parse_arg(const std::string& text)
{
    try {
        return parse_permutation(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void require_leq(const Permutation& v, const Permutation& w)
{
    if (v.size() != w.size())
        throw UsageError("permutations have different sizes");
    if (!bruhat_leq(v, w))
        throw UsageError(v.to_string() + " is not below " + w.to_string() + " in Bruhat order");
}

void emit(const json& doc) { std::cout << doc.dump() << "\n"; }

std::string poly_text(const json& coeffs)
{
    if (coeffs.is_null())
        return "-";
    return KLPoly(coeffs.get<std::vector<long long>>()).to_string();
}

void print_components_table(const json& comps)
{
    std::cout << std::left << std::setw(10) << "v" << std::setw(11) << "type" << std::setw(4) << "l"
              << std::setw(4) << "m" << std::setw(7) << "codim" << std::setw(8) << "excess"
              << std::setw(16) << "KL" << "slice\n";
    for (const auto& c : comps) {
        const bool ok = c["slice"]["verdict"].value("tangent_ok", false) &&
                        c["slice"]["verdict"].value("dim_ok", false) &&
                        c["slice"]["verdict"].value("containment_ok", false) &&
                        c["slice"]["verdict"].value("exclusion_ok", false) &&
                        c["slice"]["verdict"].value("equivalence_ok", false);
        std::cout << std::setw(10) << c["v"].get<std::string>() << std::setw(11)
                  << c["type"].get<std::string>() << std::setw(4) << c["l"].dump() << std::setw(4)
                  << (c["m"].is_null() ? "-" : c["m"].dump()) << std::setw(7) << c["codim"].dump()
                  << std::setw(8) << c["excess"].dump() << std::setw(16) << poly_text(c["kl"])
                  << (ok ? "ok" : "FAILED") << "\n";
    }
}

bool components_ok(const json& comps)
{
    for (const auto& c : comps) {
        const auto& v = c["slice"]["verdict"];
        if (!(v["tangent_ok"] && v["dim_ok"] && v["containment_ok"] && v["exclusion_ok"] &&
              v["equivalence_ok"] && c["formulas_ok"] && c["kl"] == c["kl_recursion"]))
            return false;
    }
    return true;
}

int cmd_smooth(const std::string& perm, bool pretty)
{
    const Permutation w = parse_arg(perm);
    const json doc = smoothness_json(w);
    if (pretty) {
        std::cout << w.to_string() << ": " << (doc["smooth"] ? "smooth" : "singular") << "\n";
        for (const auto& p : doc["witnesses"])
            std::cout << "  " << p["kind"].get<std::string>() << " at positions " << p["positions"].dump()
                      << "\n";
    } else {
        emit(doc);
    }
    return kOk;
}

int cmd_tangent(const std::string& vs, const std::string& ws, bool pretty)
{
    const Permutation v = parse_arg(vs), w = parse_arg(ws);
    require_leq(v, w);
    const TangentReport t = tangent_dimension(v, w);
    if (pretty)
        std::cout << "m(" << w.to_string() << ", " << v.to_string() << ") = " << t.m << "  (l(w) = "
                  << length(w) << ", excess " << t.excess << ")\n";
    else
        emit(to_json(t));
    return kOk;
}

int cmd_singular_locus(const std::string& perm, int trials, std::uint64_t seed, bool pretty)
{
    const Permutation w = parse_arg(perm);
    const json comps = singular_locus_json(w, trials, seed);
    if (pretty) {
        std::cout << "Sing(X_" << w.to_string() << "): " << comps.size() << " component(s)\n";
        print_components_table(comps);
    } else {
        emit(comps);
    }
    return components_ok(comps) ? kOk : kVerificationFailure;
}

int cmd_kl(const std::string& vs, const std::string& ws, bool pretty)
{
    const Permutation v = parse_arg(vs), w = parse_arg(ws);
    require_leq(v, w);
    const json doc = kl_json(v, w);
    if (pretty) {
        std::cout << "P_{" << v.to_string() << "," << w.to_string() << "}(q) = " << poly_text(doc["recursion"])
                  << "\n";
        if (!doc["closed_form"].is_null())
            std::cout << "closed form: " << poly_text(doc["closed_form"])
                      << (doc["agree"] ? " (agrees)" : " (DISAGREES)") << "\n";
    } else {
        emit(doc);
    }
    return doc["agree"] ? kOk : kVerificationFailure;
}

int cmd_slice(const std::string& vs, const std::string& ws, int trials, std::uint64_t seed, bool pretty)
{
    const Permutation v = parse_arg(vs), w = parse_arg(ws);
    require_leq(v, w);
    json doc;
    bool ok = true;
    bool found = false;
    for (const auto& c : enumerate_components(w)) {
        if (c.v != v)
            continue;
        found = true;
        const SliceModel s = build_slice(c, w);
        const SliceVerdict verdict = verify_slice(s, c.tangent_dim, trials, pair_seed(seed, v, w));
        doc = slice_json(s, &verdict);
        doc["seed"] = seed;
        ok = verdict.all_ok();
    }
    if (!found) {
        // not a component: report the raw slice chart only
        SliceModel s;
        s.v = v;
        s.w = w;
        s.codim = length(w) - length(v);
        s.free = free_coordinates(v, w);
        s.determinantal_equations = determinantal_model(v, w);
        doc = slice_json(s, nullptr);
        doc["type"] = nullptr;
    }
    if (pretty) {
        std::cout << "slice (" << v.to_string() << ", " << w.to_string() << "), type "
                  << (doc["type"].is_null() ? "none" : doc["type"].get<std::string>()) << "\n";
        std::cout << "free entries: " << doc["free"].dump() << "\n";
        std::cout << "equations:\n";
        for (const auto& e : doc["equations"])
            std::cout << "  " << e.get<std::string>() << " = 0\n";
        if (doc.contains("verdict"))
            std::cout << "verdict: " << doc["verdict"].dump(2) << "\n";
    } else {
        emit(doc);
    }
    return ok ? kOk : kVerificationFailure;
}

int cmd_report_perm(const std::string& perm, int trials, std::uint64_t seed, bool pretty)
{
    const Permutation w = parse_arg(perm);
    const json doc = cmd_report(w, trials, seed);
    if (pretty) {
        std::cout << w.to_string() << " (length " << doc["length"] << "): "
                  << (doc["smooth"] ? "smooth" : "singular") << "\n";
        if (!doc["components"].empty())
            print_components_table(doc["components"]);
    } else {
        emit(doc);
    }
    return components_ok(doc["components"]) ? kOk : kVerificationFailure;
}

int cmd_verify_all(int n, int trials, std::uint64_t seed, int threads, bool extended, bool pretty)
{
    if (n < 2 || n > 8)
        throw UsageError("--n must be between 2 and 8");
    if (n >= 7 && !extended)
        throw UsageError("n >= 7 sweeps take minutes; pass --extended to run them");
    SweepOptions opt;
    opt.trials = trials;
    opt.seed = seed;
    opt.threads = threads;
    if (n >= 7) {
        opt.progress = [](long done, long total) {
            if (done % 250 == 0 || done == total)
                std::cerr << "verify-all: " << done << "/" << total << "\n";
        };
    }
    const SweepReport report = verify_all(n, opt);
    if (pretty) {
        std::cout << "S_" << n << ": " << report.permutations_checked << " permutations, "
                  << report.singular_count << " singular, " << report.component_pairs
                  << " component pairs\n";
        for (const auto& [type, count] : report.by_type)
            std::cout << "  " << std::left << std::setw(10) << type << count << "\n";
        std::cout << "failures: " << report.failures << "\n";
        for (const auto& f : report.failure_witnesses)
            std::cout << "  w=" << f.w.to_string() << " v=" << (f.v.size() ? f.v.to_string() : "-") << " ["
                      << f.check << "] " << f.detail << "\n";
    } else {
        emit(to_json(report));
    }
    return report.failures == 0 ? kOk : kVerificationFailure;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Singular loci of Schubert varieties in type A"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Human-readable text instead of JSON");

    int trials = 50;
    std::uint64_t seed = SweepOptions{}.seed;
    std::string a, b;

    auto* smooth = app.add_subcommand("smooth", "Pattern-based smoothness test");
    smooth->add_option("perm", a, "Permutation, e.g. 4231 or 4,2,3,1")->required();

    auto* tangent = app.add_subcommand("tangent", "Tangent dimension of X_w at e_v");
    tangent->add_option("v", a)->required();
    tangent->add_option("w", b)->required();

    auto* locus = app.add_subcommand("singular-locus", "Components of Sing(X_w)");
    locus->add_option("perm", a)->required();
    locus->add_option("--trials", trials, "Samples per slice check")->check(CLI::NonNegativeNumber);
    locus->add_option("--seed", seed);

    auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig polynomial P_{v,w}");
    kl->add_option("v", a)->required();
    kl->add_option("w", b)->required();

    auto* slice = app.add_subcommand("slice", "Transversal slice of X_w along X_v");
    slice->add_option("v", a)->required();
    slice->add_option("w", b)->required();
    slice->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
    slice->add_option("--seed", seed);

    auto* report = app.add_subcommand("report", "Everything about one permutation");
    report->add_option("perm", a)->required();
    report->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
    report->add_option("--seed", seed);

    int n = 6;
    int threads = 1;
    bool extended = false;
    auto* verify = app.add_subcommand("verify-all", "Exhaustive verification over S_n");
    verify->add_option("--n", n, "Size of the symmetric group (2..8)");
    verify->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", seed);
    verify->add_option("--threads", threads)->check(CLI::PositiveNumber);
    verify->add_flag("--extended", extended, "Allow n >= 7");

    for (auto* sub : {smooth, tangent, locus, kl, slice, report, verify})
        sub->add_flag("--pretty", pretty, "Human-readable text instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    try {
        if (*smooth)
            return cmd_smooth(a, pretty);
        if (*tangent)
            return cmd_tangent(a, b, pretty);
        if (*locus)
            return cmd_singular_locus(a, trials, seed, pretty);
        if (*kl)
            return cmd_kl(a, b, pretty);
        if (*slice)
            return cmd_slice(a, b, trials, seed, pretty);
        if (*report)
            return cmd_report_perm(a, trials, seed, pretty);
        if (*verify)
            return cmd_verify_all(n, trials, seed, threads, extended, pretty);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return kVerificationFailure;
    }
    return kUsageError;
}

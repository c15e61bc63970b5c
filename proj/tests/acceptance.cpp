// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "g2forge/dev_certify.hpp"
#include "g2forge/hitchin_solver.hpp"
#include "g2forge/suites.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

namespace {

using namespace g2f;
using clock_type = std::chrono::steady_clock;

// Tolerances and sample sizes.
constexpr int kIdentitySamples = 1000;
constexpr int kGrid = 64;
constexpr int kMaxIterations = 50;
constexpr double kSolveTol = 1e-10;
constexpr double kNormTol = 1e-8;
constexpr double kSolveSeconds = 10;
constexpr int kMaxPrincipleSolves = 20;
constexpr int kMaxPrincipleGrid = 32;
constexpr long long kImmersionSamples = 1000000;
constexpr int kOracleSamples = 1000;
constexpr double kOracleTol = 1e-10;
constexpr double kSpotTol = 1e-12;
constexpr double kSturmSeconds = 1;
constexpr double kEigenTol = 1e-12;
constexpr int kSpanSweep = 100;
constexpr int kFiberSamples = 10000;
constexpr int kOrbitPairs = 1000;
constexpr int kTransversalityGrid = 256;
constexpr double kEigenResidualTol = 1e-10;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

Outcome tables() {
    const auto r = suites::table_reproduction();
    return {r.pass() && r.seconds < 1,
            fmt("table1 %d/49, table2 %d/49, %.3f s", r.product_matched, r.cross_matched, r.seconds)};
}

Outcome identities() {
    const auto r = suites::identity_suite(kIdentitySamples, true);
    return {r.pass() && r.exact && r.samples == kIdentitySamples,
            fmt("exact, %d samples: failures composition %d, dcp %d, alternating %d, conjugation %d", r.samples,
                r.composition, r.double_cross, r.alternating, r.conjugation)};
}

Outcome derivations() {
    const auto r = suites::g2_checks();
    return {r.pass(), fmt("dim %d, defects %g %g, round trips %d %d", r.dimension, r.defect_alpha, r.defect_beta,
                          r.roundtrip_alpha, r.roundtrip_beta)};
}

Outcome regularity() {
    const auto r = suites::regularity_checks();
    return {r.pass(), fmt("I = %s, %s, %s; sweep %d points, %d mismatches", r.at_alpha.c_str(), r.at_beta.c_str(),
                          r.at_hitchin.c_str(), r.sweep, r.mismatches)};
}

hitchin::HitchinState perturbed(hitchin::HitchinState s, std::mt19937_64& rng, double amp) {
    s.v1 += hitchin::smooth_random_field(int(s.v1.rows()), rng, amp);
    s.v2 += hitchin::smooth_random_field(int(s.v2.rows()), rng, amp);
    return s;
}

Outcome hitchin_solves() {
    using namespace hitchin;
    const auto t0 = clock_type::now();
    std::mt19937_64 rng(5);
    SolveOptions opt;
    opt.tol = kSolveTol;
    opt.max_iterations = kMaxIterations;

    const HitchinData flat = flat_constant_preset(kGrid);
    const SolveReport rf = solve(flat, perturbed(flat_constant_solution(kGrid), rng, 0.1), opt);
    const Norms nf = norms(flat, rf.state);
    const double beta_err = (nf.beta - std::pow(2.0, -1.0 / 3)).abs().maxCoeff();

    const HitchinData hp = hitchin_preset(kGrid);
    const SolveReport rh = solve(hp, perturbed(zero_state(kGrid), rng, 0.1), opt);
    const Norms nh = norms(hp, rh.state);
    const double alpha_err = (nh.alpha - 5).abs().maxCoeff(), beta3_err = (nh.beta - 3).abs().maxCoeff();
    const double ratio_err = ((nh.alpha / nh.beta).sqrt() - std::sqrt(5.0 / 3.0)).abs().maxCoeff();
    const double secs = seconds_since(t0);

    const bool ok = rf.final_residual < kSolveTol && rh.final_residual < kSolveTol &&
                    rf.iterations <= kMaxIterations && rh.iterations <= kMaxIterations && beta_err < kNormTol &&
                    alpha_err < kNormTol && beta3_err < kNormTol && ratio_err < kNormTol && secs < kSolveSeconds;
    return {ok, fmt("flat: %d it, res %.1e, |beta|^2 err %.1e; hitchin: %d it, res %.1e, (5,3) err %.1e %.1e, "
                    "ratio err %.1e; %.2f s",
                    rf.iterations, rf.final_residual, beta_err, rh.iterations, rh.final_residual, alpha_err,
                    beta3_err, ratio_err, secs)};
}

Outcome max_principles() {
    using namespace hitchin;
    std::mt19937_64 rng(31);
    const int n = kMaxPrincipleGrid;
    int failures = 0, unconverged = 0;
    double worst_ab = -1, worst_db = -1, worst_ba = -1;
    for (int t = 0; t < kMaxPrincipleSolves; ++t) {
        const HitchinData db = random_beta_family_data(n, rng);
        const SolveReport rb = solve(db, perturbed(flat_constant_solution(n), rng, 0.1));
        const auto mb = check_max_principles(rb.state, db, Family::beta);
        const HitchinData da = random_alpha_family_data(n, rng);
        const SolveReport ra = solve(da, perturbed(hitchin_constant_solution(n), rng, 0.1));
        const auto ma = check_max_principles(ra.state, da, Family::alpha);
        unconverged += (rb.final_residual >= kSolveTol) + (ra.final_residual >= kSolveTol);
        failures += !mb.pass() + !ma.pass();
        for (const auto& c : mb.checks) {
            double& w = c.name == "alpha_over_beta" ? worst_ab : worst_db;
            w = std::max(w, c.sup - c.bound);
        }
        for (const auto& c : ma.checks) worst_ba = std::max(worst_ba, c.sup - c.bound);
    }
    return {failures == 0 && unconverged == 0,
            fmt("%d beta + %d alpha solves: %d failures, %d unconverged; max sup - bound: a/b %.1e, d/b %.1e, b/a %.1e",
                kMaxPrincipleSolves, kMaxPrincipleSolves, failures, unconverged, worst_ab, worst_db, worst_ba)};
}

Outcome immersions() {
    using namespace certify;
    const auto b = certify_beta_immersion(kImmersionSamples, 1, kDeltaMargin, kOracleSamples);
    const auto a = certify_alpha_immersion(kImmersionSamples, 1, kOracleSamples);
    BetaSample s;
    s.x0 = 1;
    const double spot_b = beta_immersion_quantity(s);
    const double spot_a = alpha_immersion_quantity(AlphaSample{0, 1, 1, 0, 0});
    const double gb = b.details["oracle_max_gap"], ga = a.details["oracle_max_gap"];
    const bool ok = b.pass && a.pass && b.min_value > 0 && a.min_value > 0 && gb < kOracleTol && ga < kOracleTol &&
                    std::abs(spot_b - 20) < kSpotTol && std::abs(spot_a - 16) < kSpotTol;
    return {ok, fmt("%lld samples each: min beta %.4g, min alpha %.4g; oracle gaps %.1e %.1e; spots %.15g %.15g",
                    kImmersionSamples, b.min_value, a.min_value, gb, ga, spot_b, spot_a)};
}

Outcome sturm() {
    const auto t0 = clock_type::now();
    const auto c = certify::certify_pho_polynomials();
    const double secs = seconds_since(t0);
    const bool ok = c.pass && c.details["C_XX"] == "positive" && c.details["C_XY"] == "positive" &&
                    c.details["C_YY"] == "positive" && secs < kSturmSeconds;
    return {ok, fmt("C_XX %s, C_XY %s, C_YY %s; %.3f s", c.details["C_XX"].get<std::string>().c_str(),
                    c.details["C_XY"].get<std::string>().c_str(), c.details["C_YY"].get<std::string>().c_str(),
                    secs)};
}

Outcome hitchin_span() {
    const auto ev = certify::hitchin_top_eigenvalues();
    const double expect[3] = {std::sqrt(6.0), 2 * std::sqrt(2.0 / 3), std::sqrt(2.0 / 3)};
    double err = 0;
    for (int k = 0; k < 3; ++k) err = std::max(err, std::abs(ev[k] - expect[k]));
    const auto c = certify::certify_hitchin_span(kSpanSweep);
    return {err < kEigenTol && c.pass && c.samples == kSpanSweep,
            fmt("eigenvalue error %.1e; %lld values of a_t, min leading minor %.4g", err, c.samples, c.min_value)};
}

Outcome fibers() {
    const auto r = suites::fiber_validity(kFiberSamples, kFiberSamples, kFiberSamples);
    return {r.pass() && r.ein_samples == kFiberSamples && r.pho_samples == kFiberSamples,
            fmt("ein %d (%d failures), pho %d (%d failures), base equivalence %d (%d failures); residuals %.1e %.1e",
                r.ein_samples, r.ein_failures, r.pho_samples, r.pho_failures, r.equivalence_samples,
                r.equivalence_failures, r.max_null_residual, r.max_photon_residual)};
}

Outcome orbits() {
    const auto r = suites::orbit_classifiers(kOrbitPairs);
    return {r.pass() && r.pairs == kOrbitPairs,
            fmt("representatives %d %d; %d pairs: %d orbit, %d thickening mismatches", r.iso3_representatives,
                r.pair_representatives, r.pairs, r.orbit_mismatches, r.thickening_mismatches)};
}

Outcome transversality() {
    const auto r = certify::fuchsian_pho_transversality(kTransversalityGrid);
    return {r.min_value > 0 && r.eigen_residual < kEigenResidualTol && r.eigen_top,
            fmt("grid %d: min %.6g at (%.4f, %.4f); eigenvector residual %.1e", r.grid, r.min_value, r.theta, r.phi,
                r.eigen_residual)};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"table reproduction", tables},
        {"algebraic identity suite", identities},
        {"g2 dimension and root vectors", derivations},
        {"regularity invariant", regularity},
        {"Hitchin solver presets", hitchin_solves},
        {"maximum principles", max_principles},
        {"immersion certificates", immersions},
        {"Sturm certificates", sturm},
        {"Hitchin span positivity", hitchin_span},
        {"fiber validity", fibers},
        {"orbit classifiers", orbits},
        {"transversality", transversality},
    };
    int failed = 0, k = 0;
    for (const auto& [name, run] : criteria) {
        ++k;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", k, name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%d criteria pass\n", k - failed, k);
    return failed == 0 ? 0 : 1;
}

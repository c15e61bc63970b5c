// g2forge: verification suites, Hitchin solves, fiber sampling and certificates from the command line.

#include "CLI11.hpp"

#include "g2forge/dev_certify.hpp"
#include "g2forge/hitchin_solver.hpp"
#include "g2forge/pencil_bases.hpp"
#include "g2forge/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

using nlohmann::json;

namespace {

constexpr int kDigits = 12;

double round_sig(double x) {
    if (!std::isfinite(x)) return x;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.*g", kDigits, x);
    return std::stod(buf);
}

void round_all(json& j) {
    if (j.is_number_float())
        j = round_sig(j.get<double>());
    else if (j.is_structured())
        for (auto& v : j) round_all(v);
}

// Any "fail" / "not_positive" string anywhere in the report fails the run.
bool all_pass(const json& j) {
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        return s != "fail" && s != "not_positive";
    }
    if (j.is_structured())
        for (const auto& v : j)
            if (!all_pass(v)) return false;
    return true;
}

int emit(json report, const std::string& path) {
    round_all(report);
    const std::string text = report.dump(2);
    if (path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream os(path);
        if (!os) throw std::runtime_error("cannot write " + path);
        os << text << "\n";
    }
    return all_pass(report) ? 0 : 1;
}

const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

json verify_algebra(bool exact, int samples) {
    using namespace g2f::suites;
    const TableReport t = table_reproduction();
    const IdentityReport id = identity_suite(samples, exact);
    const G2Report g = g2_checks();
    const RegularityReport reg = regularity_checks();
    return {{"table1", std::to_string(t.product_matched) + "/49"},
            {"table2", std::to_string(t.cross_matched) + "/49"},
            {"table_seconds", t.seconds},
            {"exact", exact},
            {"samples", samples},
            {"composition", verdict(id.composition == 0)},
            {"dcp", verdict(id.double_cross == 0)},
            {"alternating", verdict(id.alternating == 0)},
            {"conjugation", verdict(id.conjugation == 0)},
            {"g2_dim", g.dimension},
            {"derivations", to_json(g)},
            {"regularity", to_json(reg)},
            {"verdict", verdict(t.pass() && id.pass() && g.pass() && reg.pass())}};
}

json field_range(const g2f::hitchin::Field& f) { return {{"min", f.minCoeff()}, {"max", f.maxCoeff()}}; }

struct SolveArgs {
    std::string preset = "hitchin", data, family, fields_prefix;
    int grid = 64;
    double tol = 1e-10, perturbation = 0.1;
    int max_iterations = 50;
    std::uint64_t seed = 5;
};

json run_solve(const SolveArgs& a) {
    using namespace g2f;
    using namespace g2f::hitchin;
    HitchinData data;
    HitchinState init;
    std::vector<Family> families;
    std::mt19937_64 rng(a.seed);
    if (a.preset == "flat-constant") {
        data = flat_constant_preset(a.grid);
        init = flat_constant_solution(a.grid);
        families = {Family::beta};
    } else if (a.preset == "hitchin") {
        data = hitchin_preset(a.grid);
        init = zero_state(a.grid);
        families = {Family::beta, Family::alpha};
    } else {
        if (a.data.empty()) throw CLI::ValidationError("--data", "required for --preset custom");
        data = read_data_csv(a.data);
        init = zero_state(data.n());
        const bool delta_zero = data.delta0sq.maxCoeff() == 0;
        if (a.family.empty())
            families = {delta_zero ? Family::alpha : Family::beta};
        else
            families = {a.family == "alpha" ? Family::alpha : Family::beta};
    }
    if (a.perturbation > 0) {
        init.v1 += smooth_random_field(data.n(), rng, a.perturbation);
        init.v2 += smooth_random_field(data.n(), rng, a.perturbation);
    }
    SolveOptions opt;
    opt.tol = a.tol;
    opt.max_iterations = a.max_iterations;
    const SolveReport rep = solve(data, init, opt);
    const Norms nm = norms(data, rep.state);

    json out;
    out["preset"] = a.preset;
    out["grid"] = data.n();
    out["iterations"] = rep.iterations;
    out["final_residual"] = rep.final_residual;
    out["converged"] = verdict(rep.final_residual < a.tol);
    out["norms_sq"] = {{"alpha", field_range(nm.alpha)}, {"beta", field_range(nm.beta)}, {"delta", field_range(nm.delta)}};
    const Field ab = (nm.alpha / nm.beta).sqrt(), db = (nm.delta / nm.beta).sqrt();
    out["ratios"] = {{"alpha_over_beta", ab.maxCoeff()}, {"delta_over_beta", db.maxCoeff()}};
    json mp = json::object();
    for (Family f : families) {
        const MaxPrincipleReport r = check_max_principles(rep.state, data, f);
        json checks = json::object();
        for (const auto& c : r.checks) checks[c.name] = {{"sup", c.sup}, {"bound", c.bound}, {"verdict", verdict(c.pass)}};
        mp[to_string(f)] = checks;
    }
    out["max_principles"] = mp;
    if (!a.fields_prefix.empty()) {
        for (const auto& [suffix, f] : {std::pair{"_v1.csv", &rep.state.v1}, std::pair{"_v2.csv", &rep.state.v2}}) {
            std::ofstream os(a.fields_prefix + suffix);
            if (!os) throw std::runtime_error("cannot write " + a.fields_prefix + suffix);
            write_field_csv(os, *f);
        }
    }
    return out;
}

json run_certify(const std::string& name, long long samples, std::uint64_t seed, int grid) {
    using namespace g2f::certify;
    if (name == "beta-immersion") return certify_beta_immersion(samples, seed).to_json();
    if (name == "alpha-immersion") return certify_alpha_immersion(samples, seed).to_json();
    if (name == "pho-polynomials") return certify_pho_polynomials().to_json();
    if (name == "hitchin-span") return certify_hitchin_span().to_json();
    return certify_pho_transversality(grid).to_json();
}

json vec_json(const g2f::Vec7<double>& v) { return std::vector<double>(v.data(), v.data() + 7); }

json run_sample_fiber(const std::string& kind, int res) {
    using namespace g2f;
    using namespace g2f::hitchin;
    const double pi = std::numbers::pi;
    const auto f = model_frenet<double>();
    json samples = json::array();
    int members = 0, count = 0;
    double worst = 0;
    if (kind == "ein") {
        const Pencil<double> pen = beta_pencil(f);
        for (int i = 0; i < res; ++i)
            for (int j = 0; j < res; ++j)
                for (int k = 0; k < res; ++k) {
                    const NullLine<double> l =
                        ein_fiber_sample(f, pi * i / res, 2 * pi * j / res, 2 * pi * k / res);
                    worst = std::max(worst, std::abs(qform_m<double>(l.rep, l.rep)));
                    members += beta_base_membership(pen, l, 1e-9) && beta_base_membership_so34(pen, l, 1e-9) &&
                               beta_base_membership_g2(pen, l, 1e-9);
                    ++count;
                    samples.push_back(vec_json(l.rep));
                }
    } else {
        const Pencil<double> pen = alpha_pencil(f);
        for (int i = 0; i < res; ++i)
            for (int j = 0; j < res; ++j)
                for (int k = 0; k < res; ++k) {
                    const Photon<double> w =
                        pho_fiber_sample(f, pen, pi * (i + 0.5) / res, 2 * pi * j / res, 2 * pi * k / res);
                    const Vec7<double> a = w.w1(), b = w.w2();
                    worst = std::max({worst, cross_m<double>(a, b).norm(), std::abs(qform_m<double>(a, a)),
                                      std::abs(qform_m<double>(b, b)), std::abs(qform_m<double>(a, b))});
                    members += pho_base_membership(pen, w, 1e-9);
                    ++count;
                    samples.push_back(json::array({vec_json(a), vec_json(b)}));
                }
    }
    const bool ok = members == count && worst < 1e-12;
    return {{"kind", kind},         {"resolution", res},     {"count", count},
            {"members", members},   {"max_residual", worst}, {"samples", samples},
            {"verdict", verdict(ok)}};
}

struct ClassifyArgs {
    std::string family = "beta";
    int genus = 2, degree = 0;
    std::vector<std::string> zero;
    bool same_divisor = false;
    int pairs = 0;
};

json run_classify(const ClassifyArgs& a) {
    using namespace g2f;
    using namespace g2f::hitchin;
    auto nonzero = [&](const char* s) { return std::find(a.zero.begin(), a.zero.end(), s) == a.zero.end(); };
    StabilityInput in{a.family == "alpha" ? Family::alpha : Family::beta, a.genus, a.degree,
                      nonzero("alpha"), nonzero("beta"), nonzero("delta"), a.same_divisor};
    json out{{"family", a.family},
             {"genus", a.genus},
             {"degree", a.degree},
             {"stability", to_string(classify_stability(in))}};
    if (a.pairs > 0) out["orbits"] = suites::to_json(suites::orbit_classifiers(a.pairs));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"g2forge: split-octonion G2' structures, pencil bases, cyclic Hitchin solves and certificates"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string json_path;
    app.add_option("--json", json_path, "write the report to this file instead of stdout");

    auto* va = app.add_subcommand("verify-algebra", "multiplication tables, identity suite, derivation algebra");
    bool exact = false;
    int id_samples = 1000;
    va->add_flag("--exact", exact, "identity suite in exact arithmetic");
    va->add_option("--samples", id_samples, "random samples per identity")->check(CLI::PositiveNumber);

    auto* so = app.add_subcommand("solve", "cyclic Hitchin system on a periodic grid");
    SolveArgs sa;
    so->add_option("--preset", sa.preset)->check(CLI::IsMember({"flat-constant", "hitchin", "custom"}));
    so->add_option("--grid", sa.grid)->check(CLI::Range(8, 4096));
    so->add_option("--tol", sa.tol)->check(CLI::PositiveNumber);
    so->add_option("--data", sa.data, "CSV with alpha0sq, beta0sq, delta0sq, kappa grids");
    so->add_option("--family", sa.family, "max-principle family for custom data")
        ->check(CLI::IsMember({"beta", "alpha"}));
    so->add_option("--perturbation", sa.perturbation, "amplitude of the smooth perturbation of the initial state")
        ->check(CLI::NonNegativeNumber);
    so->add_option("--max-iterations", sa.max_iterations)->check(CLI::PositiveNumber);
    so->add_option("--seed", sa.seed);
    so->add_option("--fields", sa.fields_prefix, "write solution grids to PREFIX_v1.csv, PREFIX_v2.csv");

    auto* ce = app.add_subcommand("certify", "positivity certificates for the developing maps");
    std::string cert_case;
    long long cert_samples = 100000;
    std::uint64_t cert_seed = 1;
    int cert_grid = 256;
    ce->add_option("--case", cert_case)
        ->required()
        ->check(CLI::IsMember(
            {"beta-immersion", "alpha-immersion", "pho-polynomials", "hitchin-span", "pho-transversality"}));
    ce->add_option("--samples", cert_samples)->check(CLI::PositiveNumber);
    ce->add_option("--seed", cert_seed);
    ce->add_option("--grid", cert_grid, "phase grid for pho-transversality")->check(CLI::Range(64, 1 << 14));

    auto* sf = app.add_subcommand("sample-fiber", "point clouds of base fibers over the model splitting");
    std::string kind;
    int resolution = 8;
    sf->add_option("--kind", kind)->required()->check(CLI::IsMember({"ein", "pho"}));
    sf->add_option("--resolution", resolution, "samples per angle")->check(CLI::Range(4, 128));

    auto* cl = app.add_subcommand("classify", "stability of cyclic Higgs bundles; optional orbit checks");
    ClassifyArgs ca;
    cl->add_option("--family", ca.family)->check(CLI::IsMember({"beta", "alpha"}));
    cl->add_option("--genus", ca.genus)->check(CLI::Range(2, 1000));
    cl->add_option("--degree", ca.degree, "deg B (beta) or deg T (alpha)");
    cl->add_option("--zero", ca.zero, "components of the Higgs field that vanish")
        ->check(CLI::IsMember({"alpha", "beta", "delta"}));
    cl->add_flag("--same-divisor", ca.same_divisor);
    cl->add_option("--orbit-pairs", ca.pairs, "also run the orbit classifiers on this many random pairs")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        if (code != 0) std::cerr << "\n" << app.help();
        return code;
    }

    try {
        if (*va) return emit(verify_algebra(exact, id_samples), json_path);
        if (*so) return emit(run_solve(sa), json_path);
        if (*ce) return emit(run_certify(cert_case, cert_samples, cert_seed, cert_grid), json_path);
        if (*sf) return emit(run_sample_fiber(kind, resolution), json_path);
        return emit(run_classify(ca), json_path);
    } catch (const CLI::ValidationError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

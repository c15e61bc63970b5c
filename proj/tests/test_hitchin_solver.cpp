#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2forge/hitchin_solver.hpp"

#include <cmath>
#include <sstream>

using namespace g2f::hitchin;

namespace {

constexpr double kPi = 3.14159265358979323846;

double max_abs(const Field& f) { return f.abs().maxCoeff(); }

HitchinState perturbed(HitchinState s, std::mt19937_64& rng, double amp) {
    s.v1 += smooth_random_field(int(s.v1.rows()), rng, amp);
    s.v2 += smooth_random_field(int(s.v1.rows()), rng, amp);
    return s;
}

}  // namespace

TEST_CASE("discrete Laplacian eigenvalues") {
    const int n = 16;
    const double h = 2 * kPi / n;
    for (int k = 1; k < 4; ++k) {
        Field f(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) f(r, c) = std::cos(2 * kPi * k * r / n) * std::sin(2 * kPi * (k + 1) * c / n);
        const double lam = (2 * std::cos(2 * kPi * k / n) - 2 + 2 * std::cos(2 * kPi * (k + 1) / n) - 2) / (h * h);
        CHECK(max_abs(laplacian(f, h) - lam * f) < 1e-12);
    }
    CHECK(max_abs(laplacian(Field::Constant(n, n, 3.0), h)) == 0.0);
}

TEST_CASE("residual at algebraic fixed points") {
    const int n = 16;
    SUBCASE("flat constants") {
        const Residual r = residual(flat_constant_preset(n), flat_constant_solution(n));
        CHECK(r.max_norm() < 1e-12);
        const Norms nm = norms(flat_constant_preset(n), flat_constant_solution(n));
        CHECK(std::abs(nm.beta(0, 0) - std::pow(2.0, -1.0 / 3)) < 1e-14);
        CHECK(std::abs(nm.alpha(0, 0) - 2 * nm.beta(0, 0)) < 1e-14);
        CHECK(std::abs(nm.delta(0, 0) - nm.beta(0, 0)) < 1e-14);
    }
    SUBCASE("Hitchin constants (5, 3)") {
        const Residual r = residual(hitchin_preset(n), hitchin_constant_solution(n));
        CHECK(r.max_norm() < 1e-12);
        const Norms nm = norms(hitchin_preset(n), hitchin_constant_solution(n));
        CHECK(std::abs(nm.alpha(3, 5) - 5) < 1e-13);
        CHECK(std::abs(nm.beta(3, 5) - 3) < 1e-13);
    }
    SUBCASE("zero state with only beta data") {
        HitchinData d{Field::Zero(n, n), Field::Ones(n, n), Field::Zero(n, n), Field::Zero(n, n)};
        const Residual r = residual(d, zero_state(n));
        // 2*0 - 3*1 - 0 and 2*1 - 0
        CHECK(max_abs(r.alpha + 3) < 1e-15);
        CHECK(max_abs(r.beta - 2) < 1e-15);
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(residual(flat_constant_preset(n), zero_state(n + 1)), SolverError);
    }
}

TEST_CASE("Newton solves") {
    std::mt19937_64 rng(17);
    SUBCASE("flat preset from zero") {
        const int n = 32;
        const SolveReport rep = solve(flat_constant_preset(n), zero_state(n));
        CHECK(rep.final_residual < 1e-10);
        const Norms nm = norms(flat_constant_preset(n), rep.state);
        CHECK(max_abs(nm.beta - std::pow(2.0, -1.0 / 3)) < 1e-8);
    }
    SUBCASE("flat preset, perturbed start, grid 64") {
        const int n = 64;
        const SolveReport rep = solve(flat_constant_preset(n), perturbed(flat_constant_solution(n), rng, 0.1));
        CHECK(rep.iterations <= 50);
        CHECK(rep.final_residual < 1e-10);
        CHECK(max_abs(norms(flat_constant_preset(n), rep.state).beta - std::pow(2.0, -1.0 / 3)) < 1e-8);
    }
    SUBCASE("Hitchin preset, perturbed start, grid 64") {
        const int n = 64;
        const SolveReport rep = solve(hitchin_preset(n), perturbed(zero_state(n), rng, 0.1));
        CHECK(rep.iterations <= 50);
        const Norms nm = norms(hitchin_preset(n), rep.state);
        CHECK(max_abs(nm.alpha - 5) < 1e-8);
        CHECK(max_abs(nm.beta - 3) < 1e-8);
        CHECK(std::abs(std::sqrt((nm.alpha / nm.beta).maxCoeff()) - std::sqrt(5.0 / 3)) < 1e-9);
    }
    SUBCASE("deterministic") {
        const int n = 16;
        const auto init = perturbed(zero_state(n), rng, 0.1);
        const SolveReport a = solve(hitchin_preset(n), init), b = solve(hitchin_preset(n), init);
        CHECK((a.state.v1 == b.state.v1).all());
        CHECK(a.iterations == b.iterations);
    }
    SUBCASE("degenerate and invalid data") {
        const int n = 16;
        HitchinData d = flat_constant_preset(n);
        d.alpha0sq.setZero();
        d.beta0sq.setZero();
        try {
            solve(d, zero_state(n));
            FAIL("expected an error");
        } catch (const SolverError& e) {
            CHECK(e.kind == SolverError::Kind::degenerate);
        }
        HitchinData small = flat_constant_preset(4);
        CHECK_THROWS_AS(solve(small, zero_state(4)), SolverError);
        HitchinData neg = flat_constant_preset(n);
        neg.delta0sq(2, 2) = -1;
        CHECK_THROWS_AS(solve(neg, zero_state(n)), SolverError);
        CHECK_THROWS_AS(solve(flat_constant_preset(n), zero_state(n), SolveOptions{0.0}), SolverError);
    }
    SUBCASE("no solution: alpha data zero") {
        // mean of the beta equation forces 2|beta|^2 = -kappa while the alpha equation forces 3|beta|^2 = kappa
        const int n = 16;
        HitchinData d{Field::Zero(n, n), Field::Ones(n, n), Field::Zero(n, n), Field::Constant(n, n, -1.0)};
        CHECK_THROWS_AS(solve(d, zero_state(n)), SolverError);
    }
}

TEST_CASE("dependent delta equation") {
    std::mt19937_64 rng(23);
    const int n = 32;
    for (int t = 0; t < 3; ++t) {
        const HitchinData d = random_beta_family_data(n, rng);
        CHECK(max_abs(compatibility_defect(d)) < 1e-10);
        const HitchinState s = perturbed(flat_constant_solution(n), rng, 0.3);
        const Residual r = residual(d, s);
        const Field rd = delta_residual(d, s);
        CHECK(max_abs(rd - (-2 * r.alpha - 3 * r.beta)) < 1e-10);
        // at a solution all three vanish
        const SolveReport rep = solve(d, flat_constant_solution(n));
        CHECK(max_abs(delta_residual(d, rep.state)) < 1e-9);
    }
    SUBCASE("incompatible data: the gap is exactly the defect") {
        const HitchinData d = flat_constant_preset(n);
        HitchinData e = d;
        e.kappa += 0.25;
        const HitchinState s = flat_constant_solution(n);
        const Residual r = residual(e, s);
        CHECK(max_abs(delta_residual(e, s) - (-2 * r.alpha - 3 * r.beta) - compatibility_defect(e)) < 1e-12);
        CHECK(std::abs(compatibility_defect(e)(0, 0) - 1.5) < 1e-14);
    }
}

TEST_CASE("gauge scale family with zero delta data") {
    std::mt19937_64 rng(29);
    const int n = 32;
    const HitchinData d = random_alpha_family_data(n, rng);
    const SolveReport rep = solve(d, hitchin_constant_solution(n));
    for (double s : {-1.0, 0.5, 2.0}) {
        HitchinData e = d;
        e.alpha0sq *= std::exp(-s);
        e.beta0sq *= std::exp(-s);
        const HitchinState moved{rep.state.v1 + s, rep.state.v2 + 2 * s};
        CHECK(residual(e, moved).max_norm() < 1e-9);
        const Norms a = norms(d, rep.state), b = norms(e, moved);
        CHECK(max_abs(a.alpha - b.alpha) < 1e-12 * a.alpha.maxCoeff());
        CHECK(max_abs(a.beta - b.beta) < 1e-12 * a.beta.maxCoeff());
    }
}

TEST_CASE("maximum principles") {
    const int n = 16;
    SUBCASE("Hitchin constants") {
        const auto rep = check_max_principles(hitchin_constant_solution(n), hitchin_preset(n), Family::beta);
        CHECK(rep.pass());
        CHECK(std::abs(rep.checks[0].sup - std::sqrt(5.0 / 3)) < 1e-12);
        const auto ra = check_max_principles(hitchin_constant_solution(n), hitchin_preset(n), Family::alpha);
        CHECK(ra.pass());
        CHECK(std::abs(ra.checks[0].sup - std::sqrt(3.0 / 5)) < 1e-12);
    }
    SUBCASE("flat constants attain equality") {
        const auto rep = check_max_principles(flat_constant_solution(n), flat_constant_preset(n), Family::beta);
        CHECK(rep.pass());
        CHECK(std::abs(rep.checks[0].sup - std::sqrt(2.0)) < 1e-12);
        CHECK(std::abs(rep.checks[1].sup - 1) < 1e-12);
    }
    SUBCASE("violations are reported") {
        const HitchinState s = constant_state(n, 0, 1);  // |alpha|^2 = e, |beta|^2 = 1
        CHECK(!check_max_principles(s, flat_constant_preset(n), Family::beta).pass());
        const HitchinState s2 = constant_state(n, 1, 0);
        CHECK(!check_max_principles(s2, flat_constant_preset(n), Family::alpha).pass());
    }
    SUBCASE("randomized smooth data") {
        std::mt19937_64 rng(31);
        for (int t = 0; t < 6; ++t) {
            const HitchinData db = random_beta_family_data(24, rng);
            const SolveReport rb = solve(db, flat_constant_solution(24));
            const auto mb = check_max_principles(rb.state, db, Family::beta);
            CHECK(mb.pass());
            // on a closed torus the min principle gives the reverse inequalities: |alpha|^2 = 2|beta|^2, |delta| = |beta|
            const Norms nb = norms(db, rb.state);
            CHECK(max_abs(nb.alpha / nb.beta - 2) < 1e-8);
            CHECK(max_abs(nb.delta / nb.beta - 1) < 1e-8);
            const HitchinData da = random_alpha_family_data(24, rng);
            const SolveReport ra = solve(da, hitchin_constant_solution(24));
            CHECK(check_max_principles(ra.state, da, Family::alpha).pass());
        }
    }
}

TEST_CASE("stability tables") {
    auto beta = [](int g, int d, bool a, bool dl) {
        return classify_stability({Family::beta, g, d, a, true, dl});
    };
    auto alpha = [](int g, int d, bool b, bool dl, bool same = false) {
        return classify_stability({Family::alpha, g, d, true, b, dl, same});
    };
    using S = Stability;
    SUBCASE("beta family") {
        CHECK(beta(2, 6, true, false) == S::stable);
        CHECK(beta(2, 0, true, false) == S::not_polystable);
        CHECK(beta(2, 0, true, true) == S::strictly_polystable);
        CHECK(beta(3, 1, true, true) == S::stable);
        CHECK(beta(3, 2, true, false) == S::not_polystable);
        CHECK(beta(3, 3, true, false) == S::stable);
        CHECK(beta(3, 12, true, true) == S::stable);
        CHECK(beta(3, 2, false, false) == S::strictly_polystable);
        CHECK(beta(3, 3, false, false) == S::not_polystable);
        CHECK(beta(3, 0, false, true) == S::strictly_polystable);
        CHECK(beta(3, 3, false, true) == S::stable);
        CHECK(beta(3, 4, false, true) == S::not_polystable);
        CHECK(beta(3, -1, false, false) == S::not_polystable);
        CHECK_THROWS_AS(beta(2, 7, true, false), std::invalid_argument);
        CHECK_THROWS_AS(beta(2, -1, false, true), std::invalid_argument);
        CHECK_THROWS_AS(classify_stability({Family::beta, 2, 1, true, false, false}), std::invalid_argument);
    }
    SUBCASE("alpha family") {
        CHECK(alpha(2, 2, true, false) == S::stable);
        CHECK(alpha(3, -2, true, false) == S::not_polystable);
        CHECK(alpha(3, -1, true, false) == S::stable);
        CHECK(alpha(3, -2, true, true, true) == S::strictly_polystable);
        CHECK(alpha(3, -2, true, true) == S::stable);
        CHECK(alpha(3, 4, true, true) == S::stable);
        CHECK(alpha(3, -4, true, true) == S::stable);
        CHECK(alpha(3, -3, false, true) == S::strictly_polystable);
        CHECK(alpha(3, -2, false, true) == S::not_polystable);
        CHECK(alpha(3, -2, false, false) == S::strictly_polystable);
        CHECK(alpha(3, 0, false, false) == S::not_polystable);
        CHECK(alpha(3, 5, false, false) == S::not_polystable);
        CHECK_THROWS_AS(alpha(2, 3, true, false), std::invalid_argument);
        CHECK_THROWS_AS(alpha(2, -3, false, true), std::invalid_argument);
        CHECK_THROWS_AS(alpha(3, 0, true, true, true), std::invalid_argument);
        CHECK_THROWS_AS(alpha(3, -2, true, false, true), std::invalid_argument);
        CHECK_THROWS_AS(classify_stability({Family::alpha, 1, 0, true, true, false}), std::invalid_argument);
    }
}

TEST_CASE("grid CSV") {
    std::mt19937_64 rng(2);
    const Field f = smooth_random_field(8, rng, 1.0);
    std::stringstream ss;
    write_field_csv(ss, f);
    const std::string text = ss.str();
    CHECK(text.rfind("# g2-forge grid v1 8 8\n", 0) == 0);
    const Field g = read_field_csv(ss);
    CHECK((f == g).all());
    std::istringstream bad1("# g2-forge grid v1 2 2\n1,2\n"), bad2("1,2\n3,4\n"), bad3("# g2-forge grid v1 1 2\n1,x\n");
    CHECK_THROWS(read_field_csv(bad1));
    CHECK_THROWS(read_field_csv(bad2));
    CHECK_THROWS(read_field_csv(bad3));
    CHECK_THROWS(read_data_csv("/nonexistent/data.csv"));
}

#pragma once

/**
 * @file hitchin_solver.hpp
 * @brief Damped Newton solver for the reduced cyclic G2' Hitchin system on a periodic
 * grid, maximum-principle monitors, and the stability decision tables.
 *
 * Unknowns are v1 = log g1, v2 = log g2. Norms reconstruct as
 * |beta|^2 = b0 e^{v1}, |alpha|^2 = a0 e^{v2 - v1}, |delta|^2 = d0 e^{-v1 - 2 v2}.
 * Residuals are right-hand side minus discrete Laplacian of the log-norm, so the
 * log of the data enters through its own Laplacian (zero for constant data).
 */

#include <Eigen/Dense>

#include <iosfwd>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2f::hitchin {

using Field = Eigen::ArrayXXd;

struct SolverError : std::runtime_error {
    enum class Kind { invalid_data, degenerate, dimension, singular, diverged };
    Kind kind;
    SolverError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

struct HitchinData {
    Field alpha0sq, beta0sq, delta0sq, kappa;
    /// Side length of the periodic square.
    double extent = 2 * 3.14159265358979323846;

    int n() const { return int(alpha0sq.rows()); }
    double spacing() const { return extent / n(); }
    /// Throws SolverError on violated invariants.
    void validate() const;
};

struct HitchinState {
    Field v1, v2;
};

struct Norms {
    Field alpha, beta, delta;  // squared norms
};

struct Residual {
    Field alpha, beta;
    double max_norm() const;
};

/// Five-point periodic Laplacian with spacing h.
Field laplacian(const Field& f, double h);

/// log of a nonnegative field, with zeros masked to 0.
Field masked_log(const Field& f);

Norms norms(const HitchinData& data, const HitchinState& s);
Residual residual(const HitchinData& data, const HitchinState& s);

/// Residual of the third (dependent) log-norm equation, computed from the delta norm directly.
Field delta_residual(const HitchinData& data, const HitchinState& s);

/// 6 kappa - Lap(log d0 + 2 log a0 + 3 log b0); zero when the three equations are consistent.
Field compatibility_defect(const HitchinData& data);

struct SolveOptions {
    double tol = 1e-10;
    int max_iterations = 200;
    int max_halvings = 40;
};

struct SolveReport {
    HitchinState state;
    int iterations = 0;
    double final_residual = 0;
};

SolveReport solve(const HitchinData& data, const HitchinState& init, const SolveOptions& opt = {});

HitchinState zero_state(int n);
HitchinState constant_state(int n, double v1, double v2);

/// Unit data, kappa = 0.
HitchinData flat_constant_preset(int n);
/// a0 = b0 = 1, d0 = 0, kappa = -1.
HitchinData hitchin_preset(int n);
/// v1 = -ln2/3, v2 = ln2/3: |alpha|^2 = 2^{2/3}, |beta|^2 = |delta|^2 = 2^{-1/3}.
HitchinState flat_constant_solution(int n);
/// |alpha|^2 = 5, |beta|^2 = 3.
HitchinState hitchin_constant_solution(int n);

/// Sum of low Fourier modes with random coefficients, max amplitude about `amplitude`.
Field smooth_random_field(int n, std::mt19937_64& rng, double amplitude, int modes = 3);

enum class Family { beta, alpha };
const char* to_string(Family f);

/// Positive smooth data with compatible kappa = Lap(log d0 + 2 log a0 + 3 log b0) / 6.
HitchinData random_beta_family_data(int n, std::mt19937_64& rng, double amplitude = 0.5);
/// delta0 = 0, smooth positive a0, b0, kappa = -1 plus a zero-mean smooth perturbation.
HitchinData random_alpha_family_data(int n, std::mt19937_64& rng, double amplitude = 0.5);

struct RatioCheck {
    std::string name;
    double sup = 0, bound = 0;
    bool pass = false;
};

struct MaxPrincipleReport {
    Family family;
    std::vector<RatioCheck> checks;
    bool pass() const;
};

inline constexpr double kMaxPrincipleSlack = 1e-8;

/// beta: sup |alpha|/|beta| <= sqrt2, sup |delta|/|beta| <= 1; alpha: sup |beta|/|alpha| <= sqrt(3/5).
MaxPrincipleReport check_max_principles(const HitchinState& s, const HitchinData& data, Family family);

enum class Stability { stable, strictly_polystable, not_polystable };
const char* to_string(Stability s);

struct StabilityInput {
    Family family;
    int genus;
    int degree;  // deg B (beta) or deg T (alpha)
    bool alpha_nonzero, beta_nonzero, delta_nonzero;
    bool same_divisor = false;
};

/// Decision tables; throws std::invalid_argument on inconsistent flags.
Stability classify_stability(const StabilityInput& in);

/// Row-major CSV with header "# g2-forge grid v1 rows cols".
void write_field_csv(std::ostream& os, const Field& f);
/// Reads one grid block; throws std::runtime_error on malformed input.
Field read_field_csv(std::istream& is);

/// Four consecutive grids: alpha0sq, beta0sq, delta0sq, kappa.
HitchinData read_data_csv(const std::string& path, double extent = 2 * 3.14159265358979323846);
void write_data_csv(const std::string& path, const HitchinData& data);

}  // namespace g2f::hitchin

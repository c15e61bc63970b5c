#pragma once

/**
 * @file dev_certify.hpp
 * @brief Positivity certificates for the developing maps: the two immersion quantities with
 * their matrix-pairing oracles, exact Sturm certificates for the coefficient polynomials,
 * the Hitchin span positivity form, and the Fuchsian photon transversality sweep.
 */

#include <Eigen/Dense>
#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace g2f::certify {

using cplx = std::complex<double>;
using CMat7 = Eigen::Matrix<cplx, 7, 7>;
using CVec7 = Eigen::Matrix<cplx, 7, 1>;

// ---------------------------------------------------------------------------
// Ein^{2,3} immersion quantity. Basis e_3 .. e_{-3}, h-unitary.

/// Fiber point (sqrt2 i x0 z, lam z2, conj(z2) z, lam x0, z2 conj(z), lam conj(z2), -sqrt2 i x0 conj(z)),
/// lam^2 = 2 x0^2 + |z2|^2, with Higgs coefficients alpha0, delta0 relative to |beta|.
struct BetaSample {
    double x0 = 1;
    cplx z2, z{1 / std::numbers::sqrt2, 0}, alpha0, delta0;

    double lambda_sq() const { return 2 * x0 * x0 + std::norm(z2); }
    /// Throws std::invalid_argument unless x0^2 + 2|z2|^2 = 1, |z|^2 = 1/2, |alpha0| <= sqrt2, |delta0| <= 1.
    void validate(double tol = 1e-9) const;
};

inline constexpr double kDeltaMargin = 1e-3;

/// Closed form of A / |beta|^2.
double beta_immersion_quantity(const BetaSample& s);

/// psi0 / |beta| and psi / |beta| at the sample's Higgs coefficients.
CMat7 beta_pencil_matrix();
CMat7 beta_higgs_matrix(cplx alpha0, cplx delta0);
CVec7 beta_fiber_vector(const BetaSample& s);
/// h((psi psi0 + psi0 psi) Z, Z) with the endomorphism formed by matrix products.
double beta_immersion_pairing(const BetaSample& s);

/// x (12 x + 4 - 6 sqrt2 sqrt(x (1 - x))), x = x0^2.
double beta_lower_bound(double x0);

/// Uniform phases; |alpha0|, |delta0| area-uniform in their discs, a quarter of draws on the bounding circles.
BetaSample random_beta_sample(std::mt19937_64& rng, double delta_max = 1 - kDeltaMargin);

// ---------------------------------------------------------------------------
// Pho^x immersion quantity.

/// a^2 + b^2 = 1, x^2 + y^2 = 1. Fiber phases are gauge-fixed to z = 1, w = x + i y, so that
/// x = Re(z^2 conj w), y = Re(i z^2 conj w) and beta0 conj(z) w = beta0 (x + i y).
struct AlphaSample {
    double a = 1, b = 0, x = 1, y = 0;
    cplx beta0;

    double lambda_inv_sq() const { return a * a + 4 * b * b; }
    void validate(double tol = 1e-9) const;
};

/// Closed form of 2 lambda^{-2} A / |alpha|^2.
double alpha_immersion_quantity(const AlphaSample& s);

/// Reduces general fiber phases (|z| = |w| = 1) to the gauge of AlphaSample.
AlphaSample alpha_sample_from_fiber(double a, double b, cplx z, cplx w, cplx beta0);

/// The ten-term h-pairing in the basis e_3 .. e_{-3}, scaled by 2 lambda^{-2}. |z| = |w| = 1.
double alpha_immersion_pairing(double a, double b, cplx z, cplx w, cplx beta0);

/// A1 - x^2 A2 - y^2 A3 - sqrt(3/5) sqrt(x^2 A4^2 + y^2 A5^2).
double alpha_lower_bound(const AlphaSample& s);

AlphaSample random_alpha_sample(std::mt19937_64& rng, double beta_max = std::sqrt(3.0 / 5.0));

// ---------------------------------------------------------------------------
// Exact univariate polynomials.

struct RationalPoly {
    std::vector<mpq_class> coefficients;  // ascending degree, no trailing zeros

    RationalPoly() = default;
    explicit RationalPoly(std::vector<mpq_class> c);
    static RationalPoly integers(std::initializer_list<long> c);
    static RationalPoly monomial(mpq_class c, int degree);

    bool is_zero() const { return coefficients.empty(); }
    int degree() const { return int(coefficients.size()) - 1; }
    const mpq_class& leading() const { return coefficients.back(); }
    mpq_class operator()(const mpq_class& x) const;
    double eval(double x) const;
    RationalPoly derivative() const;

    friend RationalPoly operator+(const RationalPoly& p, const RationalPoly& q);
    friend RationalPoly operator-(const RationalPoly& p, const RationalPoly& q);
    friend RationalPoly operator*(const RationalPoly& p, const RationalPoly& q);
    friend RationalPoly operator*(const mpq_class& c, const RationalPoly& p);
    friend bool operator==(const RationalPoly& p, const RationalPoly& q) { return p.coefficients == q.coefficients; }
};

/// Remainder of p by q (q nonzero).
RationalPoly remainder(const RationalPoly& p, const RationalPoly& q);

std::vector<RationalPoly> sturm_sequence(const RationalPoly& p);
/// Distinct real roots in (lo, hi].
int count_roots(const std::vector<RationalPoly>& sturm, const mpq_class& lo, const mpq_class& hi);
int count_real_roots(const std::vector<RationalPoly>& sturm);
/// Every real root has modulus below this.
mpq_class root_bound(const RationalPoly& p);

struct PolyCertificate {
    bool positive = false;
    int real_roots = 0;
    mpq_class value_at_zero;
    /// A root in [lo, hi] when real_roots > 0.
    std::optional<std::pair<mpq_class, mpq_class>> root_interval;
};

/// Positive on R iff no real roots and p(0) > 0. Throws std::invalid_argument on the zero polynomial.
PolyCertificate certify_polynomial_positive(const RationalPoly& p);

/// Coefficient polynomials in b after substituting a^2 = 1 - b^2.
struct AlphaCoefficientPolys {
    RationalPoly A1, A2, A3, A4sq, A5sq;
    RationalPoly Cxx, Cxy, Cyy;
    /// A1 - A2 - A3, the lower bound of A1 - x^2 A2 - y^2 A3.
    RationalPoly floor;
};
AlphaCoefficientPolys alpha_coefficient_polys();

// ---------------------------------------------------------------------------
// Hitchin case, Ein^{2,3}.

/// Tridiagonal form with off-diagonal (1, a_t, sqrt2, sqrt2, a_t, 1), scaled by 1/|beta|.
Eigen::Matrix<double, 7, 7> hitchin_interpolated_matrix(double a_t);
inline constexpr double kHitchinAlpha = 1.2909944487358056;  // sqrt(5/3)
/// Top three eigenvectors of the a_t = sqrt(5/3) matrix, unnormalized, and their eigenvalues.
std::array<Eigen::Matrix<double, 7, 1>, 3> hitchin_top_eigenvectors();
std::array<double, 3> hitchin_top_eigenvalues();

struct SpanForm {
    Eigen::Matrix3d gram;                 // v_i^T A_t v_j
    Eigen::Vector3d leading_minors;
    Eigen::Vector3d image_norms;          // |A_t v_i|^2
    bool positive_definite = false;
};
/// Throws std::invalid_argument outside [0, sqrt(5/3)].
SpanForm hitchin_span_form(double a_t);
bool hitchin_span_positivity(double a_t);

// ---------------------------------------------------------------------------
// Hitchin case, Pho^x.

/// Psi / |alpha| with off-diagonals sqrt(3/5), 1, i sqrt(6/5).
CMat7 fuchsian_alpha_matrix();
/// Top two eigenvectors, spanning the limit photon.
std::array<CVec7, 2> fuchsian_limit_photon();
/// Complex bilinear quadratic form pairing e_k with e_{-k} with sign (-1)^{k+1}.
cplx cross_basis_pairing(const CVec7& x, const CVec7& y);
/// |x.E1|^2 + |x.E2|^2 for x = (e^{i theta}, e^{i phi}, 0, 0, 0, e^{-i phi}, e^{-i theta}).
double transversality_residual(double theta, double phi);

struct TransversalityReport {
    double min_value = 0;
    double theta = 0, phi = 0;            // argmin
    double eigen_residual = 0;            // max_k |A E_k - lambda_k E_k|
    bool eigen_top = false;               // lambda_1, lambda_2 are the two largest eigenvalues
    int grid = 0;
};
/// Sweep of a grid_n x grid_n phase grid. Throws std::invalid_argument if grid_n < 64.
TransversalityReport fuchsian_pho_transversality(int grid_n);

// ---------------------------------------------------------------------------

struct Certificate {
    std::string name;
    bool pass = false;
    std::optional<std::string> witness;
    double min_value = 0;
    long long samples = 0;
    /// Extra per-case fields.
    nlohmann::json details = nlohmann::json::object();

    nlohmann::json to_json() const;
};

/// Positivity, the lower-bound chain and, on the first `oracle_samples`, the matrix oracle.
Certificate certify_beta_immersion(long long samples, std::uint64_t seed = 1, double delta_margin = kDeltaMargin,
                                   int oracle_samples = 1000);
Certificate certify_alpha_immersion(long long samples, std::uint64_t seed = 1, int oracle_samples = 1000);
/// Sturm certificates for Cxx, Cxy, Cyy and A1 - A2 - A3.
Certificate certify_pho_polynomials();
Certificate certify_hitchin_span(int sweep = 100);
Certificate certify_pho_transversality(int grid_n = 256);

}  // namespace g2f::certify

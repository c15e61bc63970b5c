#include "g2forge/dev_certify.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace g2f::certify {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
const cplx I{0, 1};

double re(cplx z) { return z.real(); }

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

cplx random_in_disc(std::mt19937_64& rng, double radius, bool on_circle) {
    std::uniform_real_distribution<double> u(0, 1);
    const double r = on_circle ? radius : radius * std::sqrt(u(rng));
    return std::polar(r, 2 * kPi * u(rng));
}

/// h(x, y) = Re(sum x_k conj(y_k)).
double hre(const CVec7& x, const CVec7& y) { return y.dot(x).real(); }

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

std::string fmt(cplx v) { return fmt(v.real()) + (v.imag() < 0 ? "" : "+") + fmt(v.imag()) + "i"; }

std::string describe(const BetaSample& s) {
    return "x0=" + fmt(s.x0) + " z2=" + fmt(s.z2) + " z=" + fmt(s.z) + " alpha0=" + fmt(s.alpha0) +
           " delta0=" + fmt(s.delta0);
}

std::string describe(const AlphaSample& s) {
    return "a=" + fmt(s.a) + " b=" + fmt(s.b) + " x=" + fmt(s.x) + " y=" + fmt(s.y) + " beta0=" + fmt(s.beta0);
}

}  // namespace

// ---------------------------------------------------------------------------

void BetaSample::validate(double tol) const {
    require(std::abs(x0 * x0 + 2 * std::norm(z2) - 1) <= tol, "beta sample: x0^2 + 2|z2|^2 != 1");
    require(std::abs(std::norm(z) - 0.5) <= tol, "beta sample: |z|^2 != 1/2");
    require(std::abs(alpha0) <= kSqrt2 + tol, "beta sample: |alpha0| > sqrt2");
    require(std::abs(delta0) <= 1 + tol, "beta sample: |delta0| > 1");
}

double beta_immersion_quantity(const BetaSample& s) {
    s.validate();
    const double x2 = s.x0 * s.x0, l2 = s.lambda_sq(), n2 = std::norm(s.z2);
    const cplx zb = std::conj(s.z);
    return 4 * x2 + 4 * l2 * n2 + 4 * n2 + 8 * l2 * x2 - 8 * re(s.z2 * s.z2 * zb * zb) -
           2 * kSqrt2 * s.x0 * (2 * l2 - 1) * re(I * s.alpha0 * s.z2) +
           re(4.0 * s.delta0 * (-2 * x2 * zb * zb + l2 * std::conj(s.z2) * std::conj(s.z2)));
}

CMat7 beta_pencil_matrix() {
    CMat7 P = CMat7::Zero();
    P(0, 1) = P(1, 0) = P(5, 6) = P(6, 5) = 1;
    P(2, 3) = P(3, 4) = I * kSqrt2;
    P(3, 2) = P(4, 3) = -I * kSqrt2;
    return P;
}

CMat7 beta_higgs_matrix(cplx alpha0, cplx delta0) {
    CMat7 P = beta_pencil_matrix();
    P(1, 2) = P(4, 5) = std::conj(alpha0);
    P(2, 1) = P(5, 4) = alpha0;
    P(0, 5) = P(1, 6) = delta0;
    P(5, 0) = P(6, 1) = std::conj(delta0);
    return P;
}

CVec7 beta_fiber_vector(const BetaSample& s) {
    const double lam = std::sqrt(s.lambda_sq());
    CVec7 Z;
    Z << kSqrt2 * I * s.x0 * s.z, lam * s.z2, std::conj(s.z2) * s.z, lam * s.x0, s.z2 * std::conj(s.z),
        lam * std::conj(s.z2), -kSqrt2 * I * s.x0 * std::conj(s.z);
    return Z;
}

double beta_immersion_pairing(const BetaSample& s) {
    s.validate();
    const CMat7 p0 = beta_pencil_matrix(), p = beta_higgs_matrix(s.alpha0, s.delta0);
    const CMat7 M = p * p0 + p0 * p;
    const CVec7 Z = beta_fiber_vector(s);
    return hre(M * Z, Z);
}

double beta_lower_bound(double x0) {
    const double x = x0 * x0;
    return x * (12 * x + 4 - 6 * kSqrt2 * std::sqrt(std::max(0.0, x * (1 - x))));
}

BetaSample random_beta_sample(std::mt19937_64& rng, double delta_max) {
    std::uniform_real_distribution<double> u(0, 1);
    BetaSample s;
    s.x0 = 2 * u(rng) - 1;
    s.z2 = std::polar(std::sqrt((1 - s.x0 * s.x0) / 2), 2 * kPi * u(rng));
    s.z = std::polar(1 / kSqrt2, 2 * kPi * u(rng));
    const bool edge = u(rng) < 0.25;
    s.alpha0 = random_in_disc(rng, kSqrt2, edge);
    s.delta0 = random_in_disc(rng, delta_max, edge);
    return s;
}

// ---------------------------------------------------------------------------

void AlphaSample::validate(double tol) const {
    require(std::abs(a * a + b * b - 1) <= tol, "alpha sample: a^2 + b^2 != 1");
    require(std::abs(x * x + y * y - 1) <= tol, "alpha sample: x^2 + y^2 != 1");
    require(std::abs(beta0) <= std::sqrt(3.0 / 5.0) + tol, "alpha sample: |beta0| > sqrt(3/5)");
}

double alpha_immersion_quantity(const AlphaSample& s) {
    s.validate();
    const double b2 = s.b * s.b, b4 = b2 * b2, b6 = b4 * b2, b8 = b4 * b4, ab = s.a * s.b;
    const cplx w{s.x, s.y};
    const double p = re(s.beta0 * w), q = re(I * s.beta0 * w);
    return 4 + 16 * b2 + 4 * b4 - 8 * b6 - 4 * s.x * s.x * (2 * b2 + 2 * b4 - 4 * b8) -
           2 * s.y * s.y * (1 + b2 - b4 - b6) - s.x * p * 6 * ab * (1 + 3 * b2 - 8 * b6) -
           s.y * q * 6 * ab * (2 + 3 * b2 - b4);
}

AlphaSample alpha_sample_from_fiber(double a, double b, cplx z, cplx w, cplx beta0) {
    const cplx t = z * z * std::conj(w);
    return {a, b, t.real(), (I * t).real(), beta0 * z};
}

double alpha_immersion_pairing(double a, double b, cplx z, cplx w, cplx beta0) {
    require(std::abs(std::abs(z) - 1) < 1e-9 && std::abs(std::abs(w) - 1) < 1e-9, "alpha pairing: |z|, |w| != 1");
    const double lam = 1 / std::sqrt(a * a + 4 * b * b);
    const cplx bb = std::conj(beta0), zb = std::conj(z), wb = std::conj(w);

    CMat7 psi = CMat7::Zero(), psi0 = CMat7::Zero();
    psi(0, 1) = bb;
    psi(1, 0) = beta0;
    psi(1, 2) = psi(2, 1) = 1;
    psi(2, 3) = psi(3, 4) = I * kSqrt2 * bb;
    psi(3, 2) = psi(4, 3) = -I * kSqrt2 * beta0;
    psi(4, 5) = psi(5, 4) = 1;
    psi(5, 6) = bb;
    psi(6, 5) = beta0;
    psi0(1, 2) = psi0(2, 1) = psi0(4, 5) = psi0(5, 4) = 1;

    const double c = a * a + 2 * b * b, d = 3 * a * b * b + a * a * a, r = lam / kSqrt2;
    CVec7 u0 = CVec7::Zero(), v0 = CVec7::Zero(), z0, w0;
    u0(1) = z / kSqrt2;
    u0(5) = zb / kSqrt2;
    v0(1) = b * I * z / kSqrt2;
    v0(3) = a;
    v0(5) = -b * I * zb / kSqrt2;
    z0 << r * c * w, 0, r * a * b * w * zb, 0, r * a * b * wb * z, 0, r * c * wb;
    w0 << -r * 2 * b * b * b * I * w, 0, r * d * I * w * zb, 0, -r * d * I * wb * z, 0, r * 2 * b * b * b * I * wb;

    const CMat7 P = psi0 * psi;
    double A = hre(P * u0, u0) + hre(P * v0, v0) + hre(P * z0, z0) + hre(P * w0, w0);
    A -= 2 * hre(psi0 * u0, z0) * hre(psi * u0, z0);
    A -= 2 * hre(psi0 * v0, w0) * hre(psi * v0, w0);
    A -= hre(psi0 * u0, w0) * hre(psi * u0, w0);
    A -= hre(psi0 * u0, w0) * hre(psi * v0, z0);
    A -= hre(psi0 * v0, z0) * hre(psi * u0, w0);
    A -= hre(psi0 * v0, z0) * hre(psi * v0, z0);
    return 2 * A / (lam * lam);
}

double alpha_lower_bound(const AlphaSample& s) {
    const double b2 = s.b * s.b, b4 = b2 * b2, b6 = b4 * b2, b8 = b4 * b4, ab = s.a * s.b;
    const double A1 = 4 + 16 * b2 + 4 * b4 - 8 * b6, A2 = 8 * b2 + 8 * b4 - 16 * b8, A3 = 2 + 2 * b2 - 2 * b4 - 2 * b6;
    const double A4 = 6 * ab * (1 + 3 * b2 - 8 * b6), A5 = 6 * ab * (2 + 3 * b2 - b4);
    return A1 - s.x * s.x * A2 - s.y * s.y * A3 -
           std::sqrt(3.0 / 5.0) * std::sqrt(s.x * s.x * A4 * A4 + s.y * s.y * A5 * A5);
}

AlphaSample random_alpha_sample(std::mt19937_64& rng, double beta_max) {
    std::uniform_real_distribution<double> u(0, 1);
    const double t = 2 * kPi * u(rng), f = 2 * kPi * u(rng);
    return {std::cos(t), std::sin(t), std::cos(f), std::sin(f), random_in_disc(rng, beta_max, u(rng) < 0.25)};
}

// ---------------------------------------------------------------------------

RationalPoly::RationalPoly(std::vector<mpq_class> c) : coefficients(std::move(c)) {
    while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
}

RationalPoly RationalPoly::integers(std::initializer_list<long> c) {
    std::vector<mpq_class> v;
    for (long x : c) v.emplace_back(x);
    return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::monomial(mpq_class c, int degree) {
    std::vector<mpq_class> v(degree + 1, mpq_class(0));
    v[degree] = std::move(c);
    return RationalPoly(std::move(v));
}

mpq_class RationalPoly::operator()(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double RationalPoly::eval(double x) const {
    double acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

RationalPoly RationalPoly::derivative() const {
    std::vector<mpq_class> d;
    for (std::size_t k = 1; k < coefficients.size(); ++k) d.push_back(coefficients[k] * long(k));
    return RationalPoly(std::move(d));
}

RationalPoly operator+(const RationalPoly& p, const RationalPoly& q) {
    std::vector<mpq_class> c(std::max(p.coefficients.size(), q.coefficients.size()), mpq_class(0));
    for (std::size_t k = 0; k < p.coefficients.size(); ++k) c[k] += p.coefficients[k];
    for (std::size_t k = 0; k < q.coefficients.size(); ++k) c[k] += q.coefficients[k];
    return RationalPoly(std::move(c));
}

RationalPoly operator*(const mpq_class& s, const RationalPoly& p) {
    std::vector<mpq_class> c = p.coefficients;
    for (auto& x : c) x *= s;
    return RationalPoly(std::move(c));
}

RationalPoly operator-(const RationalPoly& p, const RationalPoly& q) { return p + mpq_class(-1) * q; }

RationalPoly operator*(const RationalPoly& p, const RationalPoly& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<mpq_class> c(p.coefficients.size() + q.coefficients.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < p.coefficients.size(); ++i)
        for (std::size_t j = 0; j < q.coefficients.size(); ++j) c[i + j] += p.coefficients[i] * q.coefficients[j];
    return RationalPoly(std::move(c));
}

RationalPoly remainder(const RationalPoly& p, const RationalPoly& q) {
    require(!q.is_zero(), "polynomial remainder by zero");
    RationalPoly r = p;
    while (!r.is_zero() && r.degree() >= q.degree())
        r = r - RationalPoly::monomial(r.leading() / q.leading(), r.degree() - q.degree()) * q;
    return r;
}

std::vector<RationalPoly> sturm_sequence(const RationalPoly& p) {
    require(!p.is_zero(), "Sturm sequence of the zero polynomial");
    std::vector<RationalPoly> s{p};
    RationalPoly d = p.derivative();
    while (!d.is_zero()) {
        s.push_back(d);
        d = mpq_class(-1) * remainder(s[s.size() - 2], s.back());
    }
    return s;
}

namespace {

int sign_changes(const std::vector<int>& signs) {
    int n = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++n;
        last = s;
    }
    return n;
}

int changes_at(const std::vector<RationalPoly>& seq, const mpq_class& x) {
    std::vector<int> s;
    for (const auto& p : seq) s.push_back(sgn(p(x)));
    return sign_changes(s);
}

int changes_at_infinity(const std::vector<RationalPoly>& seq, int side) {
    std::vector<int> s;
    for (const auto& p : seq) s.push_back(sgn(p.leading()) * ((side < 0 && p.degree() % 2) ? -1 : 1));
    return sign_changes(s);
}

}  // namespace

int count_roots(const std::vector<RationalPoly>& sturm, const mpq_class& lo, const mpq_class& hi) {
    return changes_at(sturm, lo) - changes_at(sturm, hi);
}

int count_real_roots(const std::vector<RationalPoly>& sturm) {
    return changes_at_infinity(sturm, -1) - changes_at_infinity(sturm, +1);
}

mpq_class root_bound(const RationalPoly& p) {
    mpq_class m = 0;
    for (int k = 0; k < p.degree(); ++k) m = std::max<mpq_class>(m, abs(p.coefficients[k] / p.leading()));
    return 1 + m;
}

PolyCertificate certify_polynomial_positive(const RationalPoly& p) {
    require(!p.is_zero(), "certify_polynomial_positive: zero polynomial");
    const auto seq = sturm_sequence(p);
    PolyCertificate c;
    c.real_roots = count_real_roots(seq);
    c.value_at_zero = p(0);
    c.positive = c.real_roots == 0 && c.value_at_zero > 0;
    if (c.real_roots > 0) {
        mpq_class hi = root_bound(p), lo = -hi;
        // p(lo) != 0, so (lo, hi] holds every root
        for (int it = 0; it < 64; ++it) {
            mpq_class mid = (lo + hi) / 2;
            if (p(mid) == 0) {
                lo = hi = mid;
                break;
            }
            if (count_roots(seq, lo, mid) > 0)
                hi = mid;
            else
                lo = mid;
        }
        c.root_interval = std::make_pair(lo, hi);
    }
    return c;
}

AlphaCoefficientPolys alpha_coefficient_polys() {
    using P = RationalPoly;
    AlphaCoefficientPolys c;
    const P a2 = P::integers({1, 0, -1});
    c.A1 = P::integers({4, 0, 16, 0, 4, 0, -8});
    c.A2 = P::integers({0, 0, 8, 0, 8, 0, 0, 0, -16});
    c.A3 = P::integers({2, 0, 2, 0, -2, 0, -2});
    const P f4 = P::integers({1, 0, 3, 0, 0, 0, -8}), f5 = P::integers({2, 0, 3, 0, -1});
    const P ab2 = mpq_class(36) * a2 * P::integers({0, 0, 1});
    c.A4sq = ab2 * f4 * f4;
    c.A5sq = ab2 * f5 * f5;
    const mpq_class k(3, 5);
    const P d2 = c.A1 - c.A2, d3 = c.A1 - c.A3;
    c.Cxx = d2 * d2 - k * c.A4sq;
    c.Cxy = mpq_class(2) * d2 * d3 - k * c.A4sq - k * c.A5sq;
    c.Cyy = d3 * d3 - k * c.A5sq;
    c.floor = c.A1 - c.A2 - c.A3;
    return c;
}

// ---------------------------------------------------------------------------

Eigen::Matrix<double, 7, 7> hitchin_interpolated_matrix(double a_t) {
    Eigen::Matrix<double, 7, 7> A = Eigen::Matrix<double, 7, 7>::Zero();
    const double off[6] = {1, a_t, kSqrt2, kSqrt2, a_t, 1};
    for (int k = 0; k < 6; ++k) A(k, k + 1) = A(k + 1, k) = off[k];
    return A;
}

std::array<Eigen::Matrix<double, 7, 1>, 3> hitchin_top_eigenvectors() {
    const double s6 = std::sqrt(6.0), s15 = std::sqrt(15.0), s5 = std::sqrt(5.0);
    const double r23 = std::sqrt(2.0 / 3), r53 = std::sqrt(5.0 / 3), r115 = std::sqrt(1.0 / 15), r45 = std::sqrt(4.0 / 5);
    std::array<Eigen::Matrix<double, 7, 1>, 3> v;
    v[0] << 1, s6, s15, 2 * s5, s15, s6, 1;
    v[1] << -1, -2 * r23, -r53, 0, r53, 2 * r23, 1;
    v[2] << 1, r23, -r115, -r45, -r115, r23, 1;
    return v;
}

std::array<double, 3> hitchin_top_eigenvalues() {
    return {std::sqrt(6.0), 2 * std::sqrt(2.0 / 3), std::sqrt(2.0 / 3)};
}

SpanForm hitchin_span_form(double a_t) {
    require(a_t >= 0 && a_t <= kHitchinAlpha + 1e-12, "hitchin_span_form: a_t outside [0, sqrt(5/3)]");
    const auto A = hitchin_interpolated_matrix(a_t);
    const auto v = hitchin_top_eigenvectors();
    SpanForm f;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) f.gram(i, j) = v[i].dot(A * v[j]);
        f.image_norms(i) = (A * v[i]).squaredNorm();
    }
    f.leading_minors << f.gram(0, 0), f.gram.topLeftCorner<2, 2>().determinant(), f.gram.determinant();
    f.positive_definite = (f.leading_minors.array() > 0).all();
    return f;
}

bool hitchin_span_positivity(double a_t) { return hitchin_span_form(a_t).positive_definite; }

// ---------------------------------------------------------------------------

CMat7 fuchsian_alpha_matrix() {
    const double s35 = std::sqrt(3.0 / 5), s65 = std::sqrt(6.0 / 5);
    CMat7 A = CMat7::Zero();
    A(0, 1) = A(1, 0) = A(5, 6) = A(6, 5) = s35;
    A(1, 2) = A(2, 1) = A(4, 5) = A(5, 4) = 1;
    A(2, 3) = A(3, 4) = I * s65;
    A(3, 2) = A(4, 3) = -I * s65;
    return A;
}

std::array<CVec7, 2> fuchsian_limit_photon() {
    const double s6 = std::sqrt(6.0), s15 = std::sqrt(15.0), s5 = std::sqrt(5.0), s3 = std::sqrt(3.0);
    std::array<CVec7, 2> E;
    E[0] << -I, -s6 * I, -s15 * I, -2 * s5, s15 * I, s6 * I, I;
    E[1] << s3, 2 * kSqrt2, s5, 0, s5, 2 * kSqrt2, s3;
    return E;
}

cplx cross_basis_pairing(const CVec7& x, const CVec7& y) {
    cplx s = 0;
    for (int i = 0; i < 7; ++i) s += (i % 2 ? -1.0 : 1.0) * x(i) * y(6 - i);
    return s;
}

double transversality_residual(double theta, double phi) {
    static const auto E = fuchsian_limit_photon();
    CVec7 x = CVec7::Zero();
    x(0) = std::polar(1.0, theta);
    x(1) = std::polar(1.0, phi);
    x(5) = std::conj(x(1));
    x(6) = std::conj(x(0));
    return std::norm(cross_basis_pairing(x, E[0])) + std::norm(cross_basis_pairing(x, E[1]));
}

TransversalityReport fuchsian_pho_transversality(int grid_n) {
    require(grid_n >= 64, "fuchsian_pho_transversality: grid_n < 64");
    TransversalityReport r;
    r.grid = grid_n;

    const CMat7 A = fuchsian_alpha_matrix();
    const auto E = fuchsian_limit_photon();
    const double lam[2] = {std::sqrt(18.0 / 5), std::sqrt(8.0 / 5)};
    for (int k = 0; k < 2; ++k)
        r.eigen_residual = std::max(r.eigen_residual, (A * E[k] - lam[k] * E[k]).norm() / E[k].norm());
    Eigen::SelfAdjointEigenSolver<CMat7> es(A);
    const auto& ev = es.eigenvalues();  // ascending
    r.eigen_top = std::abs(ev(6) - lam[0]) < 1e-12 && std::abs(ev(5) - lam[1]) < 1e-12 && ev(4) < lam[1] - 1e-6;

    r.min_value = std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_n; ++i)
        for (int j = 0; j < grid_n; ++j) {
            const double th = 2 * kPi * i / grid_n, ph = 2 * kPi * j / grid_n;
            const double v = transversality_residual(th, ph);
            if (v < r.min_value) r = {v, th, ph, r.eigen_residual, r.eigen_top, grid_n};
        }
    return r;
}

// ---------------------------------------------------------------------------

nlohmann::json Certificate::to_json() const {
    nlohmann::json j = details;
    j["name"] = name;
    j["verdict"] = pass ? "pass" : "fail";
    if (witness) j["witness"] = *witness;
    j["min_value"] = min_value;
    j["samples"] = samples;
    return j;
}

Certificate certify_beta_immersion(long long samples, std::uint64_t seed, double delta_margin, int oracle_samples) {
    std::mt19937_64 rng(seed);
    Certificate c;
    c.name = "beta-immersion";
    c.samples = samples;
    c.min_value = std::numeric_limits<double>::infinity();
    double oracle_gap = 0, bound_gap = std::numeric_limits<double>::infinity();
    long long below = 0;
    BetaSample worst;
    for (long long n = 0; n < samples; ++n) {
        const BetaSample s = random_beta_sample(rng, 1 - delta_margin);
        const double v = beta_immersion_quantity(s);
        if (n < oracle_samples) oracle_gap = std::max(oracle_gap, std::abs(v - beta_immersion_pairing(s)));
        const double g = v - beta_lower_bound(s.x0);
        bound_gap = std::min(bound_gap, g);
        below += !(g > 0);
        if (v < c.min_value) {
            c.min_value = v;
            worst = s;
        }
    }
    c.witness = describe(worst);
    c.pass = samples > 0 && c.min_value > 0 && below == 0 && oracle_gap <= 1e-10;
    c.details["oracle_max_gap"] = oracle_gap;
    c.details["min_gap_to_lower_bound"] = bound_gap;
    c.details["delta_max"] = 1 - delta_margin;
    return c;
}

Certificate certify_alpha_immersion(long long samples, std::uint64_t seed, int oracle_samples) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0, 2 * kPi);
    Certificate c;
    c.name = "alpha-immersion";
    c.samples = samples;
    c.min_value = std::numeric_limits<double>::infinity();
    double oracle_gap = 0, bound_min = std::numeric_limits<double>::infinity();
    long long chain_fail = 0;
    AlphaSample worst;
    for (long long n = 0; n < samples; ++n) {
        const AlphaSample s = random_alpha_sample(rng);
        const double v = alpha_immersion_quantity(s);
        if (n < oracle_samples) {
            // rotate the sample back to general phases
            const cplx z = std::polar(1.0, u(rng));
            const cplx w = z * z * cplx(s.x, s.y);
            const double o = alpha_immersion_pairing(s.a, s.b, z, w, s.beta0 / z);
            oracle_gap = std::max(oracle_gap, std::abs(v - o));
        }
        const double lb = alpha_lower_bound(s);
        bound_min = std::min(bound_min, lb);
        chain_fail += !(v >= lb - 1e-12 && lb > 0);
        if (v < c.min_value) {
            c.min_value = v;
            worst = s;
        }
    }
    c.witness = describe(worst);
    c.pass = samples > 0 && c.min_value > 0 && chain_fail == 0 && oracle_gap <= 1e-10;
    c.details["oracle_max_gap"] = oracle_gap;
    c.details["min_lower_bound"] = bound_min;
    return c;
}

Certificate certify_pho_polynomials() {
    const auto polys = alpha_coefficient_polys();
    const std::pair<const char*, const RationalPoly*> items[] = {
        {"C_XX", &polys.Cxx}, {"C_XY", &polys.Cxy}, {"C_YY", &polys.Cyy}, {"floor", &polys.floor}};
    Certificate c;
    c.name = "pho-polynomials";
    c.pass = true;
    c.min_value = std::numeric_limits<double>::infinity();
    for (const auto& [name, p] : items) {
        const PolyCertificate pc = certify_polynomial_positive(*p);
        c.pass = c.pass && pc.positive;
        c.details[name] = pc.positive ? "positive" : "counterexample";
        c.details[std::string(name) + "_at_zero"] = pc.value_at_zero.get_str();
        c.min_value = std::min(c.min_value, pc.value_at_zero.get_d());
        if (pc.root_interval && !c.witness)
            c.witness = std::string(name) + " root in [" + pc.root_interval->first.get_str() + ", " +
                        pc.root_interval->second.get_str() + "]";
    }
    return c;
}

Certificate certify_hitchin_span(int sweep) {
    Certificate c;
    c.name = "hitchin-span";
    c.samples = sweep;
    c.min_value = std::numeric_limits<double>::infinity();
    const auto A = hitchin_interpolated_matrix(kHitchinAlpha);
    const auto v = hitchin_top_eigenvectors();
    const auto lam = hitchin_top_eigenvalues();
    double eig_err = 0;
    for (int i = 0; i < 3; ++i) eig_err = std::max(eig_err, (A * v[i] - lam[i] * v[i]).norm() / v[i].norm());
    bool all = true;
    for (int k = 0; k < sweep; ++k) {
        const double at = sweep == 1 ? 0 : kHitchinAlpha * k / (sweep - 1);
        const SpanForm f = hitchin_span_form(at);
        const double m = f.leading_minors.minCoeff();
        if (m < c.min_value) {
            c.min_value = m;
            c.witness = "a_t=" + fmt(at);
        }
        all = all && f.positive_definite;
    }
    c.pass = sweep > 0 && all && eig_err < 1e-12;
    c.details["eigenvector_residual"] = eig_err;
    return c;
}

Certificate certify_pho_transversality(int grid_n) {
    const TransversalityReport r = fuchsian_pho_transversality(grid_n);
    Certificate c;
    c.name = "pho-transversality";
    c.samples = (long long)grid_n * grid_n;
    c.min_value = r.min_value;
    c.witness = "theta=" + fmt(r.theta) + " phi=" + fmt(r.phi);
    c.pass = r.min_value > 0 && r.eigen_residual < 1e-10 && r.eigen_top;
    c.details["eigenvector_residual"] = r.eigen_residual;
    return c;
}

}  // namespace g2f::certify

#include "g2forge/hitchin_solver.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

namespace g2f::hitchin {

namespace {

constexpr double kPi = 3.14159265358979323846;

using Kind = SolverError::Kind;

void same_shape(const Field& a, const Field& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw SolverError(Kind::dimension, what);
}

Field unknown_field(const Eigen::VectorXd& x, int n, int block) {
    Field f(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) f(r, c) = x(block * n * n + r * n + c);
    return f;
}

Eigen::VectorXd pack(const Field& a, const Field& b) {
    const int n = int(a.rows());
    Eigen::VectorXd x(2 * n * n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            x(r * n + c) = a(r, c);
            x(n * n + r * n + c) = b(r, c);
        }
    return x;
}

// Laplacians of the log data, fixed during a solve.
struct Prepared {
    Field lap_log_alpha, lap_log_beta;
};

Prepared prepare(const HitchinData& d) {
    const double h = d.spacing();
    return {laplacian(masked_log(d.alpha0sq), h), laplacian(masked_log(d.beta0sq), h)};
}

Residual residual_with(const HitchinData& d, const Prepared& p, const HitchinState& s) {
    const double h = d.spacing();
    const Norms nm = norms(d, s);
    Residual r;
    r.alpha = 2 * nm.alpha - 3 * nm.beta - nm.delta + d.kappa - laplacian(s.v2 - s.v1, h) - p.lap_log_alpha;
    r.beta = 2 * nm.beta - nm.alpha + d.kappa - laplacian(s.v1, h) - p.lap_log_beta;
    return r;
}

double merit(const Residual& r) { return 0.5 * (r.alpha.square().sum() + r.beta.square().sum()); }

bool finite(const Field& f) { return f.allFinite(); }

}  // namespace

void HitchinData::validate() const {
    const int n0 = int(alpha0sq.rows());
    if (n0 < 8 || alpha0sq.cols() != n0) throw SolverError(Kind::dimension, "grid must be N x N with N >= 8");
    same_shape(alpha0sq, beta0sq, "beta0sq shape mismatch");
    same_shape(alpha0sq, delta0sq, "delta0sq shape mismatch");
    same_shape(alpha0sq, kappa, "kappa shape mismatch");
    if (!(extent > 0)) throw SolverError(Kind::invalid_data, "extent must be positive");
    for (const Field* f : {&alpha0sq, &beta0sq, &delta0sq, &kappa})
        if (!finite(*f)) throw SolverError(Kind::invalid_data, "data fields must be finite");
    for (const Field* f : {&alpha0sq, &beta0sq, &delta0sq})
        if ((*f < 0).any()) throw SolverError(Kind::invalid_data, "squared norms must be nonnegative");
    if (!(alpha0sq > 0).any() && !(beta0sq > 0).any())
        throw SolverError(Kind::degenerate, "alpha0sq and beta0sq vanish identically");
}

double Residual::max_norm() const { return std::max(alpha.abs().maxCoeff(), beta.abs().maxCoeff()); }

Field laplacian(const Field& f, double h) {
    const int R = int(f.rows()), C = int(f.cols());
    Field out(R, C);
    const double ih2 = 1.0 / (h * h);
    for (int r = 0; r < R; ++r)
        for (int c = 0; c < C; ++c) {
            const double s = f((r + 1) % R, c) + f((r + R - 1) % R, c) + f(r, (c + 1) % C) + f(r, (c + C - 1) % C);
            out(r, c) = (s - 4 * f(r, c)) * ih2;
        }
    return out;
}

Field masked_log(const Field& f) { return (f > 0).select(f.max(std::numeric_limits<double>::min()).log(), 0.0); }

Norms norms(const HitchinData& d, const HitchinState& s) {
    same_shape(d.alpha0sq, s.v1, "state v1 does not match the grid");
    same_shape(d.alpha0sq, s.v2, "state v2 does not match the grid");
    return {d.alpha0sq * (s.v2 - s.v1).exp(), d.beta0sq * s.v1.exp(), d.delta0sq * (-s.v1 - 2 * s.v2).exp()};
}

Residual residual(const HitchinData& d, const HitchinState& s) {
    d.validate();
    return residual_with(d, prepare(d), s);
}

Field delta_residual(const HitchinData& d, const HitchinState& s) {
    d.validate();
    const Norms nm = norms(d, s);
    const Field log_delta = masked_log(d.delta0sq) - s.v1 - 2 * s.v2;
    return 2 * nm.delta - nm.alpha + d.kappa - laplacian(log_delta, d.spacing());
}

Field compatibility_defect(const HitchinData& d) {
    const Field combo = masked_log(d.delta0sq) + 2 * masked_log(d.alpha0sq) + 3 * masked_log(d.beta0sq);
    return 6 * d.kappa - laplacian(combo, d.spacing());
}

SolveReport solve(const HitchinData& d, const HitchinState& init, const SolveOptions& opt) {
    d.validate();
    if (!(opt.tol > 0)) throw SolverError(Kind::invalid_data, "tolerance must be positive");
    const int n = d.n(), nn = n * n;
    const double ih2 = 1.0 / (d.spacing() * d.spacing());
    const Prepared prep = prepare(d);
    HitchinState s = init;
    Residual r = residual_with(d, prep, s);
    if (!finite(r.alpha) || !finite(r.beta)) throw SolverError(Kind::invalid_data, "initial residual is not finite");
    SolveReport rep;
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    for (int it = 0; it < opt.max_iterations; ++it) {
        if (r.max_norm() < opt.tol) {
            rep.state = s;
            rep.iterations = it;
            rep.final_residual = r.max_norm();
            return rep;
        }
        const Norms nm = norms(d, s);
        std::vector<Eigen::Triplet<double>> trip;
        trip.reserve(size_t(nn) * 14);
        auto idx = [n](int r0, int c0) { return r0 * n + c0; };
        for (int r0 = 0; r0 < n; ++r0)
            for (int c0 = 0; c0 < n; ++c0) {
                const int i = idx(r0, c0);
                const double a = nm.alpha(r0, c0), b = nm.beta(r0, c0), dd = nm.delta(r0, c0);
                // r_alpha: d/dv1 = -2a - 3b + d + Lap, d/dv2 = 2a + 2d - Lap
                trip.emplace_back(i, i, -2 * a - 3 * b + dd - 4 * ih2);
                trip.emplace_back(i, nn + i, 2 * a + 2 * dd + 4 * ih2);
                // r_beta: d/dv1 = 2b + a - Lap, d/dv2 = -a
                trip.emplace_back(nn + i, i, 2 * b + a + 4 * ih2);
                trip.emplace_back(nn + i, nn + i, -a);
                const int nb[4] = {idx((r0 + 1) % n, c0), idx((r0 + n - 1) % n, c0), idx(r0, (c0 + 1) % n),
                                   idx(r0, (c0 + n - 1) % n)};
                for (int j : nb) {
                    trip.emplace_back(i, j, ih2);
                    trip.emplace_back(i, nn + j, -ih2);
                    trip.emplace_back(nn + i, j, -ih2);
                }
            }
        Eigen::SparseMatrix<double> J(2 * nn, 2 * nn);
        J.setFromTriplets(trip.begin(), trip.end());
        if (it == 0) lu.analyzePattern(J);
        lu.factorize(J);
        if (lu.info() != Eigen::Success) throw SolverError(Kind::singular, "Jacobian is singular");
        const Eigen::VectorXd F = pack(r.alpha, r.beta);
        const Eigen::VectorXd dx = lu.solve(-F);
        if (lu.info() != Eigen::Success || !dx.allFinite()) throw SolverError(Kind::singular, "Jacobian solve failed");
        const Field d1 = unknown_field(dx, n, 0), d2 = unknown_field(dx, n, 1);
        const double m0 = merit(r);
        double t = 1;
        bool accepted = false;
        for (int k = 0; k <= opt.max_halvings; ++k, t *= 0.5) {
            HitchinState trial{s.v1 + t * d1, s.v2 + t * d2};
            Residual rt = residual_with(d, prep, trial);
            if (!finite(rt.alpha) || !finite(rt.beta)) continue;
            if (merit(rt) <= (1 - 1e-4 * t) * m0 || rt.max_norm() < opt.tol) {
                s = std::move(trial);
                r = std::move(rt);
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            std::ostringstream os;
            os << "line search failed at iteration " << it << ", residual " << r.max_norm();
            throw SolverError(Kind::diverged, os.str());
        }
    }
    if (r.max_norm() < opt.tol) {
        rep.state = s;
        rep.iterations = opt.max_iterations;
        rep.final_residual = r.max_norm();
        return rep;
    }
    std::ostringstream os;
    os << "no convergence after " << opt.max_iterations << " iterations, residual " << r.max_norm();
    throw SolverError(Kind::diverged, os.str());
}

HitchinState zero_state(int n) { return {Field::Zero(n, n), Field::Zero(n, n)}; }

HitchinState constant_state(int n, double v1, double v2) { return {Field::Constant(n, n, v1), Field::Constant(n, n, v2)}; }

HitchinData flat_constant_preset(int n) {
    return {Field::Ones(n, n), Field::Ones(n, n), Field::Ones(n, n), Field::Zero(n, n)};
}

HitchinData hitchin_preset(int n) {
    return {Field::Ones(n, n), Field::Ones(n, n), Field::Zero(n, n), Field::Constant(n, n, -1.0)};
}

HitchinState flat_constant_solution(int n) {
    const double l2 = std::log(2.0);
    return constant_state(n, -l2 / 3, l2 / 3);
}

HitchinState hitchin_constant_solution(int n) { return constant_state(n, std::log(3.0), std::log(15.0)); }

Field smooth_random_field(int n, std::mt19937_64& rng, double amplitude, int modes) {
    std::uniform_real_distribution<double> u(-1, 1);
    Field f = Field::Zero(n, n);
    double total = 0;
    for (int kx = 0; kx <= modes; ++kx)
        for (int ky = -modes; ky <= modes; ++ky) {
            if (kx == 0 && ky <= 0) continue;
            const double a = u(rng), b = u(rng), w = 1.0 / (kx * kx + ky * ky);
            total += w * (std::abs(a) + std::abs(b));
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) {
                    const double ph = 2 * kPi * (kx * r + ky * c) / n;
                    f(r, c) += w * (a * std::cos(ph) + b * std::sin(ph));
                }
        }
    return total > 0 ? Field(f * (amplitude / total)) : f;
}

HitchinData random_beta_family_data(int n, std::mt19937_64& rng, double amplitude) {
    HitchinData d;
    const Field la = smooth_random_field(n, rng, amplitude), lb = smooth_random_field(n, rng, amplitude),
                ld = smooth_random_field(n, rng, amplitude);
    d.alpha0sq = la.exp();
    d.beta0sq = lb.exp();
    d.delta0sq = ld.exp();
    d.kappa = laplacian(ld + 2 * la + 3 * lb, d.extent / n) / 6;
    return d;
}

HitchinData random_alpha_family_data(int n, std::mt19937_64& rng, double amplitude) {
    HitchinData d;
    d.alpha0sq = smooth_random_field(n, rng, amplitude).exp();
    d.beta0sq = smooth_random_field(n, rng, amplitude).exp();
    d.delta0sq = Field::Zero(n, n);
    d.kappa = -1 + smooth_random_field(n, rng, 0.5 * amplitude);
    return d;
}

const char* to_string(Family f) { return f == Family::beta ? "beta" : "alpha"; }

bool MaxPrincipleReport::pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

MaxPrincipleReport check_max_principles(const HitchinState& s, const HitchinData& d, Family family) {
    const Norms nm = norms(d, s);
    MaxPrincipleReport rep{family, {}};
    auto add = [&](const char* name, const Field& num, const Field& den, double bound) {
        RatioCheck c{name, (num / den).sqrt().maxCoeff(), bound, false};
        c.pass = c.sup <= bound + kMaxPrincipleSlack;
        rep.checks.push_back(c);
    };
    if (family == Family::beta) {
        add("alpha_over_beta", nm.alpha, nm.beta, std::sqrt(2.0));
        add("delta_over_beta", nm.delta, nm.beta, 1.0);
    } else {
        add("beta_over_alpha", nm.beta, nm.alpha, std::sqrt(3.0 / 5.0));
    }
    return rep;
}

const char* to_string(Stability s) {
    switch (s) {
        case Stability::stable: return "stable";
        case Stability::strictly_polystable: return "strictly_polystable";
        case Stability::not_polystable: return "not_polystable";
    }
    return "?";
}

Stability classify_stability(const StabilityInput& in) {
    const int g = in.genus, d = in.degree;
    if (g < 2) throw std::invalid_argument("genus must be at least 2");
    using S = Stability;
    if (in.family == Family::beta) {
        // B -> BK^-1 with beta = 1; alpha in H^0(B^-1 K^3), delta in H^0(B^2).
        if (!in.beta_nonzero) throw std::invalid_argument("beta-family bundles have beta = 1");
        if (in.alpha_nonzero && d > 6 * g - 6) throw std::invalid_argument("alpha != 0 needs deg B <= 6g-6");
        if (in.delta_nonzero && d < 0) throw std::invalid_argument("delta != 0 needs deg B >= 0");
        if (in.same_divisor) throw std::invalid_argument("same_divisor applies to the alpha family only");
        if (d < 0 || d > 6 * g - 6) return S::not_polystable;
        if (in.alpha_nonzero) {
            if (d > g - 1) return S::stable;
            if (d > 0) return in.delta_nonzero ? S::stable : S::not_polystable;
            return in.delta_nonzero ? S::strictly_polystable : S::not_polystable;
        }
        if (!in.delta_nonzero) return d == g - 1 ? S::strictly_polystable : S::not_polystable;
        if (d >= 2 * g - 2) return S::not_polystable;
        return d > 0 ? S::stable : S::strictly_polystable;
    }
    // alpha = 1; beta in H^0(K T^-1), delta in H^0(T^3 K^3).
    if (!in.alpha_nonzero) throw std::invalid_argument("alpha-family bundles have alpha = 1");
    if (in.beta_nonzero && d > 2 * g - 2) throw std::invalid_argument("beta != 0 needs deg T <= 2g-2");
    if (in.delta_nonzero && d < -2 * g + 2) throw std::invalid_argument("delta != 0 needs deg T >= -2g+2");
    if (in.same_divisor && !(in.beta_nonzero && in.delta_nonzero))
        throw std::invalid_argument("same_divisor needs beta and delta nonzero");
    if (in.same_divisor && d != -g + 1) throw std::invalid_argument("equal divisors force deg T = -g+1");
    if (d < -2 * g + 2 || d > 2 * g - 2) return S::not_polystable;
    if (in.beta_nonzero && in.delta_nonzero)
        return (d == -g + 1 && in.same_divisor) ? S::strictly_polystable : S::stable;
    if (in.beta_nonzero) return d > -g + 1 ? S::stable : S::not_polystable;
    if (in.delta_nonzero) return d < -g + 1 ? S::strictly_polystable : S::not_polystable;
    return d == -g + 1 ? S::strictly_polystable : S::not_polystable;
}

void write_field_csv(std::ostream& os, const Field& f) {
    os << "# g2-forge grid v1 " << f.rows() << " " << f.cols() << "\n";
    os << std::setprecision(17);
    for (int r = 0; r < f.rows(); ++r) {
        for (int c = 0; c < f.cols(); ++c) os << (c ? "," : "") << f(r, c);
        os << "\n";
    }
}

Field read_field_csv(std::istream& is) {
    std::string line;
    while (std::getline(is, line) && line.find_first_not_of(" \t\r") == std::string::npos) {
    }
    std::istringstream hs(line);
    std::string hash, tag, grid, ver;
    long rows = 0, cols = 0;
    if (!(hs >> hash >> tag >> grid >> ver >> rows >> cols) || hash != "#" || tag != "g2-forge" || grid != "grid" ||
        ver.size() < 2 || ver[0] != 'v' || rows <= 0 || cols <= 0)
        throw std::runtime_error("missing or malformed grid header");
    Field f(rows, cols);
    for (long r = 0; r < rows; ++r) {
        if (!std::getline(is, line)) throw std::runtime_error("grid truncated");
        std::istringstream ls(line);
        std::string cell;
        for (long c = 0; c < cols; ++c) {
            if (!std::getline(ls, cell, ',')) throw std::runtime_error("grid row too short");
            try {
                size_t used = 0;
                f(r, c) = std::stod(cell, &used);
            } catch (const std::exception&) {
                throw std::runtime_error("grid cell is not a number");
            }
        }
    }
    return f;
}

HitchinData read_data_csv(const std::string& path, double extent) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open data file: " + path);
    HitchinData d;
    d.alpha0sq = read_field_csv(in);
    d.beta0sq = read_field_csv(in);
    d.delta0sq = read_field_csv(in);
    d.kappa = read_field_csv(in);
    d.extent = extent;
    return d;
}

void write_data_csv(const std::string& path, const HitchinData& d) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write data file: " + path);
    for (const Field* f : {&d.alpha0sq, &d.beta0sq, &d.delta0sq, &d.kappa}) write_field_csv(out, *f);
}

}  // namespace g2f::hitchin

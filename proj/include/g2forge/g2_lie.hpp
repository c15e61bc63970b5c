#pragma once

/**
 * @file g2_lie.hpp
 * @brief The Lie algebra g2 as derivations of the cross product: Leibniz
 * system, derivation defect, extension from a null triple, root vectors,
 * Cartan projection, regularity invariant and the five sl2 classes.
 *
 * Matrices act on coordinate columns of a cross-product basis. A root is
 * written as the functional cr*r + cs*s on the Cartan element
 * diag(r+s, r, s, 0, -s, -r, -r-s); alpha = r - s, beta = s.
 */

#include "g2forge/cross_bases.hpp"

#include <algorithm>
#include <array>
#include <complex>
#include <random>
#include <string>
#include <vector>

namespace g2f {

struct Root {
    int cr, cs;
    friend bool operator==(const Root&, const Root&) = default;
};

inline constexpr Root kAlpha{1, -1};
inline constexpr Root kBeta{0, 1};
/// Highest root 2 alpha + 3 beta.
inline constexpr Root kDelta{2, 1};

inline constexpr std::array<Root, 12> kRoots{{{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, 1},
                                              {-1, 0}, {0, -1}, {-1, -1}, {-1, 1}, {-1, -2}, {-2, -1}}};

/// Weight of the basis vector at position p, as (cr, cs).
inline constexpr Root weight_of(int p) {
    constexpr Root w[7] = {{1, 1}, {1, 0}, {0, 1}, {0, 0}, {0, -1}, {-1, 0}, {-1, -1}};
    return w[p];
}

template <class S>
Mat7<S> cartan_element(const S& r, const S& s) {
    Mat7<S> H = Mat7<S>::Zero();
    for (int p = 0; p < 7; ++p) H(p, p) = S(weight_of(p).cr) * r + S(weight_of(p).cs) * s;
    return H;
}

/// Linear system whose nullspace is g2: rows (a, b, component), unknown i*7+j for D(i, j).
template <class S>
MatX<S> leibniz_system(const CrossBasis<S>& b) {
    MatX<S> L = MatX<S>::Zero(343, 49);
    for (int a = 0; a < 7; ++a)
        for (int c = 0; c < 7; ++c) {
            const int row0 = (a * 7 + c) * 7;
            const Vec7<S> cab = cross_in<S>(b, Vec7<S>::Unit(a), Vec7<S>::Unit(c));
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j < 7; ++j) {
                    const int col = i * 7 + j;
                    // D(e_a x e_c) - D e_a x e_c - e_a x D e_c with D = E_ij
                    L(row0 + i, col) += cab(j);
                    if (j == a) L.block(row0, col, 7, 1) -= cross_in<S>(b, Vec7<S>::Unit(i), Vec7<S>::Unit(c));
                    if (j == c) L.block(row0, col, 7, 1) -= cross_in<S>(b, Vec7<S>::Unit(a), Vec7<S>::Unit(i));
                }
        }
    return L;
}

/// Dimension of the derivation algebra of the cross product in basis b.
template <class S>
int derivation_dimension(const CrossBasis<S>& b, double tol = kDefaultTol) {
    return 49 - rank(leibniz_system(b), tol);
}

/// Max magnitude of D(u x v) - Du x v - u x Dv over basis pairs.
template <class S>
double derivation_defect(const Mat7<S>& D, const CrossBasis<S>& b) {
    double m = 0;
    for (int a = 0; a < 7; ++a)
        for (int c = 0; c < 7; ++c) {
            const Vec7<S> ea = Vec7<S>::Unit(a), ec = Vec7<S>::Unit(c);
            const Vec7<S> r = D * cross_in<S>(b, ea, ec) - cross_in<S>(b, D * ea, ec) - cross_in<S>(b, ea, D * ec);
            for (int p = 0; p < 7; ++p) m = std::max(m, ScalarTraits<S>::magnitude(r(p)));
        }
    return m;
}

/// Exact (or tolerance) membership in g2.
template <class S>
bool is_derivation(const Mat7<S>& D, const CrossBasis<S>& b, double tol = kDefaultTol) {
    for (int a = 0; a < 7; ++a)
        for (int c = 0; c < 7; ++c) {
            const Vec7<S> ea = Vec7<S>::Unit(a), ec = Vec7<S>::Unit(c);
            const Vec7<S> r = D * cross_in<S>(b, ea, ec) - cross_in<S>(b, D * ea, ec) - cross_in<S>(b, ea, D * ec);
            for (int p = 0; p < 7; ++p)
                if (!ScalarTraits<S>::is_zero(r(p), tol)) return false;
        }
    return true;
}

/// Root vector for `root`, normalized so its first support entry (row-major) is 1.
template <class S>
Mat7<S> root_vector(const MatX<S>& L, Root root, double tol = kDefaultTol) {
    std::vector<std::pair<int, int>> supp;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            const Root wi = weight_of(i), wj = weight_of(j);
            if (wi.cr - wj.cr == root.cr && wi.cs - wj.cs == root.cs) supp.push_back({i, j});
        }
    if (supp.empty()) throw std::invalid_argument("root_vector: not a root");
    MatX<S> Ls(L.rows(), supp.size());
    for (size_t k = 0; k < supp.size(); ++k) Ls.col(k) = L.col(supp[k].first * 7 + supp[k].second);
    const MatX<S> N = nullspace(Ls, tol);
    if (N.cols() != 1) throw std::logic_error("root space is not one-dimensional");
    int lead = 0;
    while (ScalarTraits<S>::is_zero(N(lead, 0), tol)) ++lead;
    const S scale = S(1) / N(lead, 0);
    Mat7<S> E = Mat7<S>::Zero();
    for (size_t k = 0; k < supp.size(); ++k) E(supp[k].first, supp[k].second) = N(k, 0) * scale;
    return E;
}

template <class S>
Mat7<S> root_vector(const CrossBasis<S>& b, Root root, double tol = kDefaultTol) {
    return root_vector<S>(leibniz_system(b), root, tol);
}

/// Thrown when a proposed infinitesimal action violates one of the seven linearized relations.
struct ConstraintViolation : std::invalid_argument {
    int index;
    ConstraintViolation(int i, const std::string& what) : std::invalid_argument(what), index(i) {}
};

/// The derivation restricting to (u -> du, v -> dv, w -> dw) on a null orthogonal triple
/// with Omega(u, v, w) != 0. Returned in the coordinates of the triple's basis.
template <class S>
Mat7<S> extend_derivation(const ImOct<S>& u0, const ImOct<S>& v0, const ImOct<S>& w0, const ImOct<S>& du0,
                          const ImOct<S>& dv0, const ImOct<S>& dw0, double tol = kDefaultTol) {
    detail::same_basis(u0, v0, w0);
    detail::same_basis(u0, du0, dv0);
    ImOct<S>::check(u0, dw0);
    const Vec7<S> u = to_m(u0), v = to_m(v0), w = to_m(w0);
    const Vec7<S> du = to_m(du0), dv = to_m(dv0), dw = to_m(dw0);
    using T = ScalarTraits<S>;
    auto q = [](const Vec7<S>& x, const Vec7<S>& y) { return qform_m<S>(x, y); };
    if (!T::is_zero(q(u, u), tol) || !T::is_zero(q(v, v), tol) || !T::is_zero(q(w, w), tol) ||
        !T::is_zero(q(u, v), tol) || !T::is_zero(q(u, w), tol) || !T::is_zero(q(v, w), tol) ||
        T::is_zero(triple_m<S>(u, v, w), tol))
        throw TripleError("extend_derivation: (u, v, w) is not a null orthogonal triple with Omega != 0");
    const std::array<S, 7> rel{q(u, du),
                               q(v, dv),
                               q(w, dw),
                               q(du, v) + q(u, dv),
                               q(du, w) + q(u, dw),
                               q(dv, w) + q(v, dw),
                               triple_m<S>(du, v, w) + triple_m<S>(u, dv, w) + triple_m<S>(u, v, dw)};
    const char* names[7] = {"u.du", "v.dv", "w.dw", "du.v + u.dv", "du.w + u.dw", "dv.w + v.dw",
                            "Omega(du,v,w) + Omega(u,dv,w) + Omega(u,v,dw)"};
    for (int k = 0; k < 7; ++k)
        if (!T::is_zero(rel[k], tol))
            throw ConstraintViolation(k + 1, std::string("extend_derivation: relation ") + std::to_string(k + 1) +
                                                 " fails (" + names[k] + " != 0)");
    const Mat7<S> F = null_frame_m<S>(u, v, w);
    const Vec7<S> uv = cross_m<S>(u, v);
    const Vec7<S> duv = cross_m<S>(du, v) + cross_m<S>(u, dv);
    Mat7<S> Img;
    Img.col(0) = duv;
    Img.col(1) = du;
    Img.col(2) = dv;
    Img.col(3) = cross_m<S>(duv, w) + cross_m<S>(uv, dw);
    Img.col(4) = cross_m<S>(du, w) + cross_m<S>(u, dw);
    Img.col(5) = cross_m<S>(dv, w) + cross_m<S>(v, dw);
    Img.col(6) = dw;
    auto Finv = inverse(F, tol);
    if (!Finv) throw TripleError("extend_derivation: degenerate frame");
    return detail::to_basis<S>(Img * *Finv, u0.basis);
}

// ---------------------------------------------------------------------------
// Cartan projection and the regularity invariant.

struct CartanVector {
    double r = 0, s = 0;
    double alpha() const { return r - s; }
    double beta() const { return s; }
};

/// Sorts the eigenvalues of a semisimple element with real spectrum into
/// (r+s, r, s, 0, -s, -r, -r-s) with r >= s >= 0. Throws on pattern mismatch beyond tol.
CartanVector cartan_projection(const Mat7<std::complex<double>>& Psi, double tol = 1e-9);
CartanVector cartan_projection(const Mat7<double>& Psi, double tol = 1e-9);

/// Coefficients c_0..c_n of det(X I - M), via Faddeev-LeVerrier.
template <class S>
std::vector<S> char_poly(const MatX<S>& M) {
    const int n = int(M.rows());
    std::vector<S> c(n + 1, S(0));
    c[n] = S(1);
    MatX<S> Mk = MatX<S>::Zero(n, n);
    MatX<S> I = MatX<S>::Identity(n, n);
    for (int k = 1; k <= n; ++k) {
        Mk = M * Mk + c[n - k + 1] * I;
        MatX<S> MMk = M * Mk;
        S tr(0);
        for (int i = 0; i < n; ++i) tr += MMk(i, i);
        c[n - k] = -tr / S(k);
    }
    return c;
}

/// I = 54 C / A^3 where det(X - Psi) = X^7 - A X^5 + B X^3 - C X.
template <class S>
S regularity_invariant(const Mat7<S>& Psi) {
    const auto c = char_poly<S>(MatX<S>(Psi));
    const S A = -c[5], C = -c[1];
    if (ScalarTraits<S>::is_zero(A, 1e-300)) throw std::invalid_argument("regularity_invariant: A = 0 (zero or nilpotent input)");
    return S(54) * C / (A * A * A);
}

/// The semisimple element Psi(a, b) = a E_{-alpha} + b E_{-beta} + its adjoint, in the model C-basis.
template <class S>
Mat7<S> psi_matrix(const S& a, const S& b) {
    using T = ScalarTraits<S>;
    const S r2i = T::sqrt2() * T::imag_unit();
    Mat7<S> P = Mat7<S>::Zero();
    const S ac = T::conj(a), bc = T::conj(b);
    P(0, 1) = bc;
    P(1, 0) = b;
    P(1, 2) = ac;
    P(2, 1) = a;
    P(2, 3) = r2i * bc;
    P(3, 2) = -r2i * b;
    P(3, 4) = r2i * bc;
    P(4, 3) = -r2i * b;
    P(4, 5) = ac;
    P(5, 4) = a;
    P(5, 6) = bc;
    P(6, 5) = b;
    return P;
}

/// Exact I(Psi(a, b)) from |a|^2 and |b|^2 alone: the characteristic polynomial of a
/// tridiagonal matrix only sees the products of opposite off-diagonal entries.
ExactScalar regularity_invariant_ab(const QSqrt2& abs_a2, const QSqrt2& abs_b2);

// ---------------------------------------------------------------------------
// sl2 subalgebras.

enum class Sl2Class { principal, short_beta, long_alpha, class4, class5 };

inline constexpr std::array<Sl2Class, 5> kSl2Classes{Sl2Class::principal, Sl2Class::short_beta,
                                                     Sl2Class::long_alpha, Sl2Class::class4, Sl2Class::class5};

const char* to_string(Sl2Class c);
/// Dimensions of the irreducible summands, descending.
std::vector<int> expected_splitting(Sl2Class c);

/// Nilpotent representative: e_{-a}+e_{-b}, e_{-b}, e_{-a}, e_{-b}+e_d, e_{-a}+e_d in basis b.
template <class S>
Mat7<S> sl2_nilpotent(Sl2Class c, const CrossBasis<S>& b) {
    const MatX<S> L = leibniz_system(b);
    const Root ma{-1, 1}, mb{0, -1};
    switch (c) {
        case Sl2Class::principal: return root_vector<S>(L, ma) + root_vector<S>(L, mb);
        case Sl2Class::short_beta: return root_vector<S>(L, mb);
        case Sl2Class::long_alpha: return root_vector<S>(L, ma);
        case Sl2Class::class4: return root_vector<S>(L, mb) + root_vector<S>(L, kDelta);
        case Sl2Class::class5: return root_vector<S>(L, ma) + root_vector<S>(L, kDelta);
    }
    throw std::invalid_argument("sl2_nilpotent: unknown class");
}

/// Jordan block sizes (descending) of a nilpotent matrix from the ranks of its powers.
template <class S>
std::vector<int> jordan_type(const Mat7<S>& N, double tol = kDefaultTol) {
    std::vector<int> r{7};
    Mat7<S> P = Mat7<S>::Identity();
    for (int k = 1; k <= 7; ++k) {
        P = P * N;
        r.push_back(rank(P, tol));
    }
    if (r[7] != 0) throw std::invalid_argument("jordan_type: matrix is not nilpotent");
    std::vector<int> blocks;
    for (int k = 1; k <= 7; ++k) {
        const int at_least_k = r[k - 1] - r[k];
        const int at_least_k1 = (k < 7) ? r[k] - r[k + 1] : 0;
        for (int m = 0; m < at_least_k - at_least_k1; ++m) blocks.push_back(k);
    }
    std::sort(blocks.rbegin(), blocks.rend());
    return blocks;
}

/// Cartan element h with [h, N] = -2 N, for N a sum of negative-ish root vectors.
template <class S>
Mat7<S> neutral_element(const Mat7<S>& N, double tol = kDefaultTol) {
    std::vector<std::pair<int, int>> nz;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j)
            if (!ScalarTraits<S>::is_zero(N(i, j), tol)) nz.push_back({i, j});
    MatX<S> A(nz.size(), 2), rhs(nz.size(), 1);
    for (size_t k = 0; k < nz.size(); ++k) {
        const Root wi = weight_of(nz[k].first), wj = weight_of(nz[k].second);
        A(k, 0) = S(wi.cr - wj.cr);
        A(k, 1) = S(wi.cs - wj.cs);
        rhs(k, 0) = S(-2);
    }
    auto x = solve(A, rhs, tol);
    if (!x) throw std::invalid_argument("neutral_element: no diagonal neutral element");
    return cartan_element<S>((*x)(0, 0), (*x)(1, 0));
}

/// Sign of q on the trivial summand ker N cap ker h of the real form (model R-basis):
/// +1 spacelike, -1 timelike, 0 when there is no one-dimensional trivial summand.
int trivial_summand_sign(Sl2Class c);

// ---------------------------------------------------------------------------
// Exact group elements.

template <class S>
S pow_scalar(const S& t, int k) {
    S r(1);
    for (int i = 0; i < k; ++i) r = r * t;
    return r;
}

/// exp(t N) for nilpotent N, as a finite sum.
template <class S>
Mat7<S> exp_nilpotent(const Mat7<S>& N, const S& t) {
    Mat7<S> E = Mat7<S>::Identity(), P = Mat7<S>::Identity();
    S fact(1);
    for (int k = 1; k <= 6; ++k) {
        P = P * N;
        fact = fact * S(k);
        E += (S(1) / fact) * P * pow_scalar(t, k);
    }
    return E;
}

/// Root vectors for all twelve roots, in the order of kRoots.
template <class S>
std::vector<Mat7<S>> root_vectors(const CrossBasis<S>& b) {
    const MatX<S> L = leibniz_system(b);
    std::vector<Mat7<S>> out;
    for (Root r : kRoots) out.push_back(root_vector<S>(L, r));
    return out;
}

/// Random group element in the coordinates of a cross-product basis: a product of root unipotents with small
/// rational parameters and a rational torus element. Exact for ExactScalar.
/// `roots` as returned by root_vectors(b).
template <class S>
Mat7<S> random_g2_element(std::mt19937_64& rng, const std::vector<Mat7<S>>& roots) {
    std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
    Mat7<S> g = Mat7<S>::Identity();
    for (const auto& E : roots) g = g * exp_nilpotent<S>(E, ScalarTraits<S>::rational(num(rng), den(rng)));
    std::uniform_int_distribution<long> pick(1, 3);
    const S lr = ScalarTraits<S>::rational(pick(rng), pick(rng)), ls = ScalarTraits<S>::rational(pick(rng), pick(rng));
    Mat7<S> D = Mat7<S>::Identity();
    for (int p = 0; p < 7; ++p) {
        const Root w = weight_of(p);
        S x(1);
        for (int k = 0; k < std::abs(w.cr); ++k) x = w.cr > 0 ? x * lr : x / lr;
        for (int k = 0; k < std::abs(w.cs); ++k) x = w.cs > 0 ? x * ls : x / ls;
        D(p, p) = x;
    }
    return g * D;
}

}  // namespace g2f

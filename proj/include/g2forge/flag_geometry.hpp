#pragma once

/**
 * @file flag_geometry.hpp
 * @brief Points of the G2' symmetric space, the flag manifolds Ein^{2,3}
 * (null lines) and Pho^x (annihilator photons), tangent vectors and the
 * pointing-toward characterizations, orbit classifiers and duality.
 *
 * All vectors are imaginary M-coordinates (i, j, k, l, li, lj, lk). Scalars
 * are real: double, or ExactScalar with real entries.
 */

#include "g2forge/cross_bases.hpp"
#include "g2forge/linalg.hpp"
#include "g2forge/octonion.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace g2f {

template <class S>
using Mat73 = Eigen::Matrix<S, 7, 3>;

struct GeometryError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

/// Sign of a real scalar; floating values within tol count as zero.
template <class S>
int real_sign(const S& x, double tol) {
    if constexpr (ScalarTraits<S>::is_exact) {
        (void)tol;
        if (!x.is_real()) throw GeometryError("expected a real scalar");
        return x.real().sign();
    } else {
        return std::abs(x) <= tol ? 0 : (x > 0 ? 1 : -1);
    }
}

inline Inertia gram_inertia(const MatX<double>& G, double tol) { return inertia(G, tol); }
inline Inertia gram_inertia(const MatX<ExactScalar>& G, double) { return inertia(G); }

template <class S>
MatX<S> gram(const MatX<S>& A) {
    return A.transpose() * eta_matrix<S>() * A;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Points of the symmetric space.

/// Spacelike 3-plane P closed under the cross product, framed by (u, v, u x v).
template <class S>
struct SpacePoint {
    Vec7<S> u, v;

    Vec7<S> w() const { return cross_m<S>(u, v); }
    Mat73<S> frame() const {
        Mat73<S> F;
        F << u, v, w();
        return F;
    }
    /// Orthogonal projection onto P.
    Vec7<S> project(const Vec7<S>& x) const {
        const Mat73<S> F = frame();
        Vec7<S> p = Vec7<S>::Zero();
        for (int c = 0; c < 3; ++c) p += qform_m<S>(x, F.col(c)) * F.col(c);
        return p;
    }
    /// Basis of the negative definite complement P^perp (columns).
    MatX<S> complement(double tol = kDefaultTol) const {
        const MatX<S> A = frame().transpose() * eta_matrix<S>();
        return nullspace(A, tol);
    }
    bool contains(const Vec7<S>& x, double tol = kDefaultTol) const {
        const Vec7<S> r = x - project(x);
        for (int a = 0; a < 7; ++a)
            if (!ScalarTraits<S>::is_zero(r(a), tol)) return false;
        return true;
    }
};

template <class S>
SpacePoint<S> make_space_point(const Vec7<S>& u, const Vec7<S>& v, double tol = kDefaultTol) {
    if (!ScalarTraits<S>::is_zero(qform_m<S>(u, u) - S(1), tol) || !ScalarTraits<S>::is_zero(qform_m<S>(v, v) - S(1), tol))
        throw GeometryError("space point: frame vectors must satisfy q = 1");
    if (!ScalarTraits<S>::is_zero(qform_m<S>(u, v), tol)) throw GeometryError("space point: u and v not orthogonal");
    return {u, v};
}

/// The base point <i, j, k>.
template <class S>
SpacePoint<S> standard_space_point() {
    return {Vec7<S>::Unit(0), Vec7<S>::Unit(1)};
}

template <class S>
bool same_space_point(const SpacePoint<S>& P, const SpacePoint<S>& Q, double tol = kDefaultTol) {
    return Q.contains(P.u, tol) && Q.contains(P.v, tol);
}

// ---------------------------------------------------------------------------
// Ein^{2,3} and Pho^x.

template <class S>
struct NullLine {
    Vec7<S> rep;
};

template <class S>
NullLine<S> make_null_line(const Vec7<S>& x, double tol = kDefaultTol) {
    if (!ScalarTraits<S>::is_zero(qform_m<S>(x, x), tol)) throw GeometryError("null line: q(x) != 0");
    if (rank(MatX<S>(x), tol) == 0) throw GeometryError("null line: zero vector");
    return {x};
}

template <class S>
bool same_line(const NullLine<S>& a, const NullLine<S>& b, double tol = kDefaultTol) {
    MatX<S> M(7, 2);
    M << a.rep, b.rep;
    return rank(M, tol) == 1;
}

/// Annihilator photon, stored as the reduced row echelon form of its spanning pair.
template <class S>
struct Photon {
    Eigen::Matrix<S, 2, 7> rows;

    Vec7<S> w1() const { return rows.row(0).transpose(); }
    Vec7<S> w2() const { return rows.row(1).transpose(); }
    MatX<S> basis() const {
        MatX<S> B(7, 2);
        B << w1(), w2();
        return B;
    }
    bool contains(const Vec7<S>& x, double tol = kDefaultTol) const {
        MatX<S> M(7, 3);
        M << w1(), w2(), x;
        return rank(M, tol) == 2;
    }
};

template <class S>
Photon<S> make_photon(const Vec7<S>& a, const Vec7<S>& b, double tol = kDefaultTol) {
    using T = ScalarTraits<S>;
    if (!T::is_zero(qform_m<S>(a, a), tol) || !T::is_zero(qform_m<S>(b, b), tol) || !T::is_zero(qform_m<S>(a, b), tol))
        throw GeometryError("photon: span is not isotropic");
    const Vec7<S> c = cross_m<S>(a, b);
    for (int k = 0; k < 7; ++k)
        if (!T::is_zero(c(k), tol)) throw GeometryError("photon: w1 x w2 != 0");
    MatX<S> R(2, 7);
    R.row(0) = a.transpose();
    R.row(1) = b.transpose();
    if (rref(R, tol).size() != 2) throw GeometryError("photon: spanning vectors are dependent");
    return {R};
}

template <class S>
bool same_photon(const Photon<S>& a, const Photon<S>& b, double tol = kDefaultTol) {
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 7; ++c)
            if (!ScalarTraits<S>::is_zero(a.rows(r, c) - b.rows(r, c), tol)) return false;
    return true;
}

/// Annihilator 3-plane ker(C_x) of a null vector, as the graph of
/// v -> -z(uv)/q(u) over P, where x = u + z with u in P and z in P^perp.
template <class S>
Mat73<S> annihilator(const NullLine<S>& x, const SpacePoint<S>& P, double tol = kDefaultTol) {
    if (!ScalarTraits<S>::is_zero(qform_m<S>(x.rep, x.rep), tol)) throw GeometryError("annihilator: x is not null");
    const Vec7<S> u = P.project(x.rep);
    const Vec7<S> z = x.rep - u;
    const S qu = qform_m<S>(u, u);
    if (ScalarTraits<S>::is_zero(qu, tol)) throw GeometryError("annihilator: zero vector");
    const Mat73<S> F = P.frame();
    Vec8<S> zo = Vec8<S>::Zero(), uo = Vec8<S>::Zero();
    zo.template tail<7>() = z;
    uo.template tail<7>() = u;
    Mat73<S> A;
    for (int c = 0; c < 3; ++c) {
        Vec8<S> vo = Vec8<S>::Zero();
        vo.template tail<7>() = F.col(c);
        const Vec8<S> p = oct_mul<S>(zo, oct_mul<S>(uo, vo));
        A.col(c) = F.col(c) - Vec7<S>(p.template tail<7>()) / qu;
    }
    return A;
}

template <class S>
Mat73<S> annihilator(const NullLine<S>& x, double tol = kDefaultTol) {
    return annihilator(x, standard_space_point<S>(), tol);
}

// ---------------------------------------------------------------------------
// Tangent vectors T_P X = Hom(P, P^perp).

template <class S>
struct TangentVector {
    SpacePoint<S> base;
    /// Images of the frame (u, v, u x v), each in P^perp.
    Mat73<S> images;

    /// q-skew 7x7 operator: phi on P, minus its adjoint on P^perp.
    Mat7<S> op() const {
        const Mat73<S> F = base.frame();
        const Mat7<S> E = eta_matrix<S>();
        Mat7<S> X = Mat7<S>::Zero();
        for (int c = 0; c < 3; ++c)
            X += images.col(c) * (F.col(c).transpose() * E) - F.col(c) * (images.col(c).transpose() * E);
        return X;
    }
    /// phi applied to any vector of P.
    Vec7<S> apply(const Vec7<S>& x) const { return op() * x; }
};

template <class S>
TangentVector<S> make_tangent(const SpacePoint<S>& P, const Mat73<S>& images, double tol = kDefaultTol) {
    const Mat73<S> F = P.frame();
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (!ScalarTraits<S>::is_zero(qform_m<S>(images.col(a), F.col(b)), tol))
                throw GeometryError("tangent vector: image leaves P^perp");
    return {P, images};
}

/// Restriction to P of a q-skew operator.
template <class S>
TangentVector<S> tangent_from_operator(const SpacePoint<S>& P, const Mat7<S>& X, double tol = kDefaultTol) {
    return make_tangent<S>(P, X * P.frame(), tol);
}

/// C_z restricted to P, for z in P^perp.
template <class S>
TangentVector<S> cross_tangent(const SpacePoint<S>& P, const Vec7<S>& z, double tol = kDefaultTol) {
    const Mat73<S> F = P.frame();
    Mat73<S> I;
    for (int c = 0; c < 3; ++c) I.col(c) = cross_m<S>(z, F.col(c));
    return make_tangent<S>(P, I, tol);
}

/// Invariant metric -sum_i q(phi u_i, psi u_i) over an orthonormal frame of P.
template <class S>
S tangent_metric(const TangentVector<S>& phi, const TangentVector<S>& psi, double tol = kDefaultTol) {
    if (!same_space_point(phi.base, psi.base, tol)) throw GeometryError("tangent_metric: base points differ");
    const Mat73<S> F = phi.base.frame();
    const Mat7<S> Y = psi.op();
    S s(0);
    for (int c = 0; c < 3; ++c) s -= qform_m<S>(phi.images.col(c), Y * F.col(c));
    return s;
}

/// Max magnitude of X(a x b) - Xa x b - a x Xb over M-basis pairs.
template <class S>
double derivation_defect_m(const Mat7<S>& X) {
    double m = 0;
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b) {
            const Vec7<S> ea = Vec7<S>::Unit(a), eb = Vec7<S>::Unit(b);
            const Vec7<S> r = X * cross_m<S>(ea, eb) - cross_m<S>(X * ea, eb) - cross_m<S>(ea, X * eb);
            for (int p = 0; p < 7; ++p) m = std::max(m, ScalarTraits<S>::magnitude(r(p)));
        }
    return m;
}

template <class S>
bool is_g2_tangent(const TangentVector<S>& phi, double tol = kDefaultTol) {
    const Mat7<S> X = phi.op();
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b) {
            const Vec7<S> ea = Vec7<S>::Unit(a), eb = Vec7<S>::Unit(b);
            const Vec7<S> r = X * cross_m<S>(ea, eb) - cross_m<S>(X * ea, eb) - cross_m<S>(ea, X * eb);
            for (int p = 0; p < 7; ++p)
                if (!ScalarTraits<S>::is_zero(r(p), tol)) return false;
        }
    return true;
}

template <class S>
int tangent_rank(const TangentVector<S>& phi, double tol = kDefaultTol) {
    return rank(MatX<S>(phi.images), tol);
}

/// Orthogonal projection T_P X_SO(3,4) -> T_P X_G2, removing the C_{P^perp} component.
template <class S>
TangentVector<S> project_to_g2(const TangentVector<S>& phi, double tol = kDefaultTol) {
    const MatX<S> Z = phi.base.complement(tol);
    const int n = int(Z.cols());
    std::vector<TangentVector<S>> C;
    for (int k = 0; k < n; ++k) C.push_back(cross_tangent<S>(phi.base, Z.col(k), tol));
    MatX<S> G(n, n);
    MatX<S> rhs(n, 1);
    for (int a = 0; a < n; ++a) {
        rhs(a, 0) = tangent_metric(phi, C[a], tol);
        for (int b = 0; b < n; ++b) G(a, b) = tangent_metric(C[a], C[b], tol);
    }
    const auto coef = solve(G, rhs, tol);
    if (!coef) throw std::logic_error("project_to_g2: singular Gram matrix");
    TangentVector<S> out = phi;
    for (int k = 0; k < n; ++k) out.images -= (*coef)(k, 0) * C[k].images;
    return out;
}

/// Rank-one SO(3,4) tangent vector u -> z for l = [u + z], u in P, z in P^perp.
template <class S>
TangentVector<S> so34_pointing_vector(const SpacePoint<S>& P, const NullLine<S>& l, double tol = kDefaultTol) {
    const Vec7<S> u = P.project(l.rep);
    const Vec7<S> z = l.rep - u;
    const S qu = qform_m<S>(u, u);
    const Mat73<S> F = P.frame();
    Mat73<S> I;
    for (int c = 0; c < 3; ++c) I.col(c) = (qform_m<S>(F.col(c), u) / qu) * z;
    return make_tangent<S>(P, I, tol);
}

/// G2 tangent vector at P pointing toward l: the projection of the rank-one vector.
template <class S>
TangentVector<S> ein_pointing_vector(const SpacePoint<S>& P, const NullLine<S>& l, double tol = kDefaultTol) {
    return project_to_g2(so34_pointing_vector(P, l, tol), tol);
}

/// graph(phi restricted to (ker phi)^perp), as columns.
template <class S>
MatX<S> graph_star(const TangentVector<S>& phi, double tol = kDefaultTol) {
    const MatX<S> K = nullspace(MatX<S>(phi.images), tol);
    MatX<S> L;
    if (K.cols() == 0) {
        L = MatX<S>::Identity(3, 3);
    } else {
        L = nullspace(MatX<S>(K.transpose()), tol);
    }
    const Mat73<S> F = phi.base.frame();
    return MatX<S>(F) * L + MatX<S>(phi.images) * L;
}

/// Target of a rank-one SO(3,4) tangent vector.
template <class S>
NullLine<S> ein_target(const TangentVector<S>& phi, double tol = kDefaultTol) {
    if (tangent_rank(phi, tol) != 1) throw GeometryError("ein_target: tangent vector is not rank one");
    return make_null_line<S>(graph_star(phi, tol).col(0), tol);
}

/// G2 tangent vector x -> z, y -> (xy)z, xy -> 0 whose graph* is omega.
template <class S>
TangentVector<S> pointing_vector_pho(const SpacePoint<S>& P, const Photon<S>& omega, double tol = kDefaultTol) {
    const Vec7<S> a[2] = {omega.w1(), omega.w2()};
    Vec7<S> p[2], n[2];
    for (int i = 0; i < 2; ++i) {
        p[i] = P.project(a[i]);
        n[i] = a[i] - p[i];
    }
    MatX<S> G(2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) G(i, j) = qform_m<S>(p[i], p[j]);
    const auto Ginv = inverse(G, tol);
    if (!Ginv) throw GeometryError("pointing_vector_pho: projection of the photon to P is degenerate");
    const Mat73<S> F = P.frame();
    Mat73<S> I;
    for (int c = 0; c < 3; ++c) {
        Vec7<S> img = Vec7<S>::Zero();
        for (int i = 0; i < 2; ++i) {
            S ci(0);
            for (int j = 0; j < 2; ++j) ci += (*Ginv)(i, j) * qform_m<S>(p[j], F.col(c));
            img += ci * n[i];
        }
        I.col(c) = img;
    }
    return make_tangent<S>(P, I, tol);
}

/// Target photon of a rank-two tangent vector.
template <class S>
Photon<S> pho_target(const TangentVector<S>& phi, double tol = kDefaultTol) {
    if (tangent_rank(phi, tol) != 2) throw GeometryError("pho_target: tangent vector is not rank two");
    const MatX<S> B = graph_star(phi, tol);
    return make_photon<S>(B.col(0), B.col(1), tol);
}

namespace detail {

// X x = lambda x with lambda > 0 and lambda^2 = c * |phi|^2.
template <class S>
bool positive_eigen(const Mat7<S>& X, const Vec7<S>& x, const S& norm2, const S& c, double tol) {
    int lead = 0;
    while (lead < 7 && ScalarTraits<S>::is_zero(x(lead), tol)) ++lead;
    if (lead == 7) return false;
    const Vec7<S> y = X * x;
    const S lam = y(lead) / x(lead);
    const Vec7<S> r = y - lam * x;
    for (int a = 0; a < 7; ++a)
        if (!ScalarTraits<S>::is_zero(r(a), tol)) return false;
    return real_sign(lam, tol) > 0 && ScalarTraits<S>::is_zero(lam * lam - c * norm2, tol);
}

}  // namespace detail

/// A G2 tangent vector points toward l iff l is its top eigenline with
/// eigenvalue lambda satisfying lambda^2 = (2/3)|phi|^2.
template <class S>
bool points_toward_ein(const TangentVector<S>& phi, const NullLine<S>& l, double tol = kDefaultTol) {
    if (!is_g2_tangent(phi, tol)) return false;
    return detail::positive_eigen<S>(phi.op(), l.rep, tangent_metric(phi, phi, tol), S(2) / S(3), tol);
}

/// Photon version: omega is the top eigenplane with lambda^2 = |phi|^2 / 2.
template <class S>
bool points_toward_pho(const TangentVector<S>& phi, const Photon<S>& omega, double tol = kDefaultTol) {
    if (!is_g2_tangent(phi, tol)) return false;
    const Mat7<S> X = phi.op();
    const S n2 = tangent_metric(phi, phi, tol);
    const S half = S(1) / S(2);
    if (!detail::positive_eigen<S>(X, omega.w1(), n2, half, tol)) return false;
    if (!detail::positive_eigen<S>(X, omega.w2(), n2, half, tol)) return false;
    // common eigenvalue
    const Vec7<S> s = omega.w1() + omega.w2();
    return detail::positive_eigen<S>(X, s, n2, half, tol);
}

// ---------------------------------------------------------------------------
// Two-fold models.

/// Decomposition l = [u + z] with q(u) = 1, q(z) = -1 (floating point).
template <class S>
std::pair<Vec7<S>, Vec7<S>> ein_split(const SpacePoint<S>& P, const NullLine<S>& l) {
    static_assert(!ScalarTraits<S>::is_exact, "ein_split needs square roots");
    const Vec7<S> x = l.rep / l.rep.norm();
    const Vec7<S> u = P.project(x);
    const S s = S(1) / std::sqrt(qform_m<S>(u, u));
    return {s * u, s * (x - u)};
}

/// span{x + z, y + (xy)z} for orthonormal x, y in P and z in P^perp with q(z) = -1.
template <class S>
Photon<S> photon_over(const Vec7<S>& x, const Vec7<S>& y, const Vec7<S>& z, double tol = kDefaultTol) {
    const Vec7<S> xy = cross_m<S>(x, y);
    return make_photon<S>(x + z, y + cross_m<S>(xy, z), tol);
}

// ---------------------------------------------------------------------------
// Orbits, thickenings and duality.

enum class Iso3Orbit { O0, O1 };

inline const char* to_string(Iso3Orbit o) { return o == Iso3Orbit::O0 ? "O0" : "O1"; }

template <class S>
struct Iso3Class {
    Iso3Orbit orbit;
    /// For O0: the null x with T = Ann(x).
    std::optional<NullLine<S>> generator;
};

template <class S>
Iso3Class<S> iso3_orbit(const Mat73<S>& T, double tol = kDefaultTol) {
    const MatX<S> Tm = T;
    if (rank(Tm, tol) != 3) throw GeometryError("iso3_orbit: columns are dependent");
    const MatX<S> G = detail::gram<S>(Tm);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (!ScalarTraits<S>::is_zero(G(a, b), tol)) throw GeometryError("iso3_orbit: not isotropic");
    const S om = triple_m<S>(T.col(0), T.col(1), T.col(2));
    if (!ScalarTraits<S>::is_zero(om, tol)) return {Iso3Orbit::O1, std::nullopt};
    // x = sum a_i t_i with x x t_j = 0 for all j
    MatX<S> A(21, 3);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) A.block(7 * j, i, 7, 1) = cross_m<S>(T.col(i), T.col(j));
    const MatX<S> N = nullspace(A, tol);
    if (N.cols() != 1) throw std::logic_error("iso3_orbit: annihilator generator is not unique");
    return {Iso3Orbit::O0, make_null_line<S>(Vec7<S>(Tm * N.col(0)), tol)};
}

/// Tits angle k * pi / 3, kept symbolic.
struct TitsAngle {
    int k;
    std::string str() const;
};

/// Orbit index of a pair of photons: 0 equal, 1 meeting in a line,
/// 2 for signature (1,1,2) of the sum, 3 for (2,2,0).
template <class S>
TitsAngle photon_pair_orbit(const Photon<S>& a, const Photon<S>& b, double tol = kDefaultTol) {
    MatX<S> M(7, 4);
    M << a.w1(), a.w2(), b.w1(), b.w2();
    const int d = rank(M, tol);
    if (d == 2) return {0};
    if (d == 3) return {1};
    const Inertia in = detail::gram_inertia(detail::gram<S>(M), tol);
    if (in.positive == 1 && in.negative == 1 && in.zero == 2) return {2};
    if (in.positive == 2 && in.negative == 2 && in.zero == 0) return {3};
    throw std::logic_error("photon_pair_orbit: unexpected signature");
}

/// omega in the thickening of the limit photon, i.e. omega is orthogonal to it.
template <class S>
bool in_thickening(const Photon<S>& limit, const Photon<S>& omega, double tol = kDefaultTol) {
    const MatX<S> A = limit.basis(), B = omega.basis();
    const MatX<S> G = A.transpose() * eta_matrix<S>() * B;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            if (!ScalarTraits<S>::is_zero(G(r, c), tol)) return false;
    return true;
}

/// A null x with omega + omega' inside Ann(x), when one exists.
template <class S>
std::optional<NullLine<S>> common_annihilator(const Photon<S>& a, const Photon<S>& b, double tol = kDefaultTol) {
    const Vec7<S> v[4] = {a.w1(), a.w2(), b.w1(), b.w2()};
    MatX<S> A(28, 7);
    for (int i = 0; i < 4; ++i) A.block(7 * i, 0, 7, 7) = cross_matrix_m<S>(v[i]);
    const MatX<S> N = nullspace(A, tol);
    for (int c = 0; c < N.cols(); ++c)
        if (ScalarTraits<S>::is_zero(qform_m<S>(N.col(c), N.col(c)), tol)) return NullLine<S>{N.col(c)};
    return std::nullopt;
}

/// Photons through x: span{x, cos t a + sin t b} for (x, a, b) a basis of Ann(x), t in [0, pi).
template <class S>
std::vector<Photon<S>> duality_circle(const NullLine<S>& x, int n_samples, double tol = kDefaultTol) {
    static_assert(!ScalarTraits<S>::is_exact, "duality_circle samples with trigonometric functions");
    const Mat73<S> A = annihilator(x, tol);
    MatX<S> M(7, 4);
    M << x.rep, A;
    MatX<S> R = M;
    const std::vector<int> piv = rref(R, tol);
    std::vector<Vec7<S>> ab;
    for (int c : piv)
        if (c > 0) ab.push_back(M.col(c));
    if (ab.size() != 2) throw std::logic_error("duality_circle: annihilator is not 3-dimensional");
    std::vector<Photon<S>> out;
    for (int s = 0; s < n_samples; ++s) {
        const double t = M_PI * s / n_samples;
        out.push_back(make_photon<S>(x.rep, std::cos(t) * ab[0] + std::sin(t) * ab[1], tol));
    }
    return out;
}

/// Null lines of a photon: [cos t w1 + sin t w2], t in [0, pi).
template <class S>
std::vector<NullLine<S>> duality_circle(const Photon<S>& omega, int n_samples, double tol = kDefaultTol) {
    static_assert(!ScalarTraits<S>::is_exact, "duality_circle samples with trigonometric functions");
    std::vector<NullLine<S>> out;
    for (int s = 0; s < n_samples; ++s) {
        const double t = M_PI * s / n_samples;
        out.push_back(make_null_line<S>(std::cos(t) * omega.w1() + std::sin(t) * omega.w2(), tol));
    }
    return out;
}

}  // namespace g2f

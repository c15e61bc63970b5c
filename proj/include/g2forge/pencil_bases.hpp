#pragma once

/**
 * @file pencil_bases.hpp
 * @brief Frenet splittings, the standard beta- and alpha-pencils, bases of
 * pencils in Ein^{2,3} and Pho^x, the R-spaces with their graph maps, and
 * explicit fiber points.
 */

#include "g2forge/flag_geometry.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <vector>

namespace g2f {

template <class S>
using Mat72 = Eigen::Matrix<S, 7, 2>;

/// Splitting Im(O') = L + T + N + B with L = <x>, q(x) = 1, and P = L + N spacelike.
template <class S>
struct FrenetSplitting {
    Vec7<S> x;
    Mat72<S> T, N, B;

    /// P = L + N, framed by (x, n1, x n1).
    SpacePoint<S> space_point() const { return {x, N.col(0)}; }
    Vec7<S> project_L(const Vec7<S>& v) const { return qform_m<S>(v, x) * x; }
    Vec7<S> project_N(const Vec7<S>& v) const { return proj(N, v); }
    Vec7<S> project_T(const Vec7<S>& v) const { return proj(T, v); }
    Vec7<S> project_B(const Vec7<S>& v) const { return proj(B, v); }

private:
    // Orthogonal projection onto a definite plane with columns of equal |q| = 1, orthogonal.
    static Vec7<S> proj(const Mat72<S>& A, const Vec7<S>& v) {
        Vec7<S> p = Vec7<S>::Zero();
        for (int c = 0; c < 2; ++c) p += (qform_m<S>(v, A.col(c)) / qform_m<S>(A.col(c), A.col(c))) * A.col(c);
        return p;
    }
};

/// L = <i>, T = <l, li>, N = <j, k>, B = <lj, lk>.
template <class S>
FrenetSplitting<S> model_frenet() {
    FrenetSplitting<S> f;
    f.x = Vec7<S>::Unit(0);
    f.T << Vec7<S>::Unit(3), Vec7<S>::Unit(4);
    f.N << Vec7<S>::Unit(1), Vec7<S>::Unit(2);
    f.B << Vec7<S>::Unit(5), Vec7<S>::Unit(6);
    return f;
}

/// Image of a splitting under a group element given in M-coordinates.
template <class S>
FrenetSplitting<S> moved(const FrenetSplitting<S>& f, const Mat7<S>& g) {
    return {g * f.x, g * f.T, g * f.N, g * f.B};
}

/// A 2-plane of G2 tangent vectors at a point.
template <class S>
struct Pencil {
    SpacePoint<S> base;
    std::array<TangentVector<S>, 2> psi;
};

/// All G2 tangent vectors at P whose frame images lie in the given column spans
/// (an empty matrix forces a zero image). Exact nullspace computation.
template <class S>
std::vector<TangentVector<S>> g2_tangents_with_images(const SpacePoint<S>& P, const std::array<MatX<S>, 3>& targets,
                                                      double tol = kDefaultTol) {
    std::vector<std::pair<int, int>> params;
    for (int c = 0; c < 3; ++c)
        for (int k = 0; k < targets[c].cols(); ++k) params.push_back({c, k});
    const int np = int(params.size());
    auto images_of = [&](int p) {
        Mat73<S> I = Mat73<S>::Zero();
        I.col(params[p].first) = targets[params[p].first].col(params[p].second);
        return I;
    };
    // Leibniz residuals are linear in the parameters.
    MatX<S> A(7 * 21, np);
    for (int p = 0; p < np; ++p) {
        const Mat7<S> X = TangentVector<S>{P, images_of(p)}.op();
        int row = 0;
        for (int a = 0; a < 7; ++a)
            for (int b = a + 1; b < 7; ++b, row += 7) {
                const Vec7<S> ea = Vec7<S>::Unit(a), eb = Vec7<S>::Unit(b);
                A.block(row, p, 7, 1) = X * cross_m<S>(ea, eb) - cross_m<S>(X * ea, eb) - cross_m<S>(ea, X * eb);
            }
    }
    const MatX<S> K = nullspace(A, tol);
    std::vector<TangentVector<S>> out;
    for (int c = 0; c < K.cols(); ++c) {
        Mat73<S> I = Mat73<S>::Zero();
        for (int p = 0; p < np; ++p) I += K(p, c) * images_of(p);
        out.push_back(make_tangent<S>(P, I, tol));
    }
    return out;
}

namespace detail {

template <class S>
Pencil<S> pencil_from(const SpacePoint<S>& P, const std::vector<TangentVector<S>>& v, const char* what) {
    if (v.size() != 2) throw std::logic_error(std::string(what) + ": expected a 2-dimensional solution space");
    return {P, {v[0], v[1]}};
}

}  // namespace detail

/// Pencil of maps with an L -> T block and an N -> B block, both nonzero. The G2 tangents of this
/// shape form a 4-space containing the pure N -> B tangents; the pencil is their orthogonal complement.
template <class S>
Pencil<S> beta_pencil(const FrenetSplitting<S>& f, double tol = kDefaultTol) {
    const SpacePoint<S> P = f.space_point();
    const auto V = g2_tangents_with_images<S>(P, {MatX<S>(f.T), MatX<S>(f.B), MatX<S>(f.B)}, tol);
    const auto V3 = g2_tangents_with_images<S>(P, {MatX<S>(7, 0), MatX<S>(f.B), MatX<S>(f.B)}, tol);
    if (V.size() != 4 || V3.size() != 2) throw std::logic_error("beta_pencil: unexpected solution spaces");
    MatX<S> G(2, 4);
    for (int b = 0; b < 2; ++b)
        for (int a = 0; a < 4; ++a) G(b, a) = tangent_metric(V[a], V3[b], tol);
    const MatX<S> K = nullspace(G, tol);
    std::vector<TangentVector<S>> out;
    for (int c = 0; c < K.cols(); ++c) {
        Mat73<S> I = Mat73<S>::Zero();
        for (int a = 0; a < 4; ++a) I += K(a, c) * V[a].images;
        out.push_back(make_tangent<S>(P, I, tol));
    }
    return detail::pencil_from(P, out, "beta_pencil");
}

/// Pencil Hom_C(N, T), extended by zero on L.
template <class S>
Pencil<S> alpha_pencil(const FrenetSplitting<S>& f, double tol = kDefaultTol) {
    const SpacePoint<S> P = f.space_point();
    return detail::pencil_from(P, g2_tangents_with_images<S>(P, {MatX<S>(7, 0), MatX<S>(f.T), MatX<S>(f.T)}, tol),
                               "alpha_pencil");
}

// ---------------------------------------------------------------------------
// beta-bases in Ein^{2,3}.

/// Gram matrix of h = q|_P - q|_{P^perp}.
template <class S>
Mat7<S> harmonic_metric(const SpacePoint<S>& P) {
    const Mat73<S> F = P.frame();
    const Mat7<S> E = eta_matrix<S>();
    Mat7<S> proj = Mat7<S>::Zero();
    for (int c = 0; c < 3; ++c) proj += F.col(c) * (F.col(c).transpose() * E);
    return E * (S(2) * proj - Mat7<S>::Identity());
}

/// [Z] is in the beta-base iff h(Z, psi Z) = 0 for both spanning psi.
template <class S>
bool beta_base_membership(const Pencil<S>& pen, const NullLine<S>& l, double tol = kDefaultTol) {
    const Mat7<S> H = harmonic_metric(pen.base);
    for (const auto& psi : pen.psi) {
        const S v = l.rep.dot(H * (psi.op() * l.rep));
        if (!ScalarTraits<S>::is_zero(v, tol)) return false;
    }
    return true;
}

/// Membership via the rank-one SO(3,4) pointing vector.
template <class S>
bool beta_base_membership_so34(const Pencil<S>& pen, const NullLine<S>& l, double tol = kDefaultTol) {
    const TangentVector<S> t = so34_pointing_vector(pen.base, l, tol);
    for (const auto& psi : pen.psi)
        if (!ScalarTraits<S>::is_zero(tangent_metric(t, psi, tol), tol)) return false;
    return true;
}

/// Membership via the projected G2 pointing vector.
template <class S>
bool beta_base_membership_g2(const Pencil<S>& pen, const NullLine<S>& l, double tol = kDefaultTol) {
    const TangentVector<S> t = ein_pointing_vector(pen.base, l, tol);
    for (const auto& psi : pen.psi)
        if (!ScalarTraits<S>::is_zero(tangent_metric(t, psi, tol), tol)) return false;
    return true;
}

/// [u + (2 u_L x v - u_N x v) / sqrt(4|u_L|^2 + |u_N|^2)] for u in Q+(L + N), v in Q-(B).
template <class S>
NullLine<S> ein_fiber_point(const FrenetSplitting<S>& f, const Vec7<S>& u, const Vec7<S>& v, double tol = 1e-12) {
    static_assert(!ScalarTraits<S>::is_exact, "ein_fiber_point normalizes with a square root");
    if (std::abs(qform_m<S>(u, u) - 1) > tol) throw GeometryError("ein_fiber_point: q(u) != 1");
    if (std::abs(qform_m<S>(v, v) + 1) > tol) throw GeometryError("ein_fiber_point: q(v) != -1");
    const SpacePoint<S> P = f.space_point();
    if (!P.contains(u, tol)) throw GeometryError("ein_fiber_point: u not in L + N");
    if ((v - f.project_B(v)).norm() > tol) throw GeometryError("ein_fiber_point: v not in B");
    const Vec7<S> uL = f.project_L(u), uN = f.project_N(u);
    const Vec7<S> y = S(2) * cross_m<S>(uL, v) - cross_m<S>(uN, v);
    const S n = std::sqrt(S(4) * qform_m<S>(uL, uL) + qform_m<S>(uN, uN));
    return {u + y / n};
}

// ---------------------------------------------------------------------------
// R-spaces and alpha-bases in Pho^x.

template <class S>
struct RSpace {
    /// Columns spanning the plane in P^perp.
    Mat72<S> plane;
    /// Linear map B -> T (zero on B^perp) whose graph is the plane; empty when u lies in L.
    std::optional<Mat7<S>> gamma;
};

namespace detail {

/// Unit-free complement of u in W: q(v) need not be 1.
template <class S>
Vec7<S> complement_in(const Mat72<S>& W, const Vec7<S>& u, double tol) {
    const S qu = qform_m<S>(u, u);
    Vec7<S> best = Vec7<S>::Zero();
    double bm = -1;
    for (int c = 0; c < 2; ++c) {
        const Vec7<S> v = W.col(c) - (qform_m<S>(W.col(c), u) / qu) * u;
        const double m = ScalarTraits<S>::magnitude(qform_m<S>(v, v));
        if (m > bm) {
            bm = m;
            best = v;
        }
    }
    if (ScalarTraits<S>::is_zero(qform_m<S>(best, best), tol)) throw GeometryError("r_space: W is degenerate");
    return best;
}

}  // namespace detail

/// {z in P^perp : q(v) psi(u).z + ((uv)z).psi(v) = 0 for all psi}, v the complement of u in W.
template <class S>
RSpace<S> r_space(const FrenetSplitting<S>& f, const Pencil<S>& pen, const Mat72<S>& W, const Vec7<S>& u,
                  double tol = kDefaultTol) {
    const SpacePoint<S>& P = pen.base;
    for (int c = 0; c < 2; ++c)
        if (!P.contains(W.col(c), tol)) throw GeometryError("r_space: W is not inside P");
    {
        MatX<S> M(7, 3);
        M << W, u;
        if (rank(M, tol) != 2 || rank(MatX<S>(W), tol) != 2) throw GeometryError("r_space: u is not in the plane W");
    }
    const Vec7<S> v = detail::complement_in<S>(W, u, tol);
    const S qv = qform_m<S>(v, v);
    const Vec7<S> uv = cross_m<S>(u, v);
    const MatX<S> Z = P.complement(tol);
    MatX<S> A(2, Z.cols());
    for (int i = 0; i < 2; ++i) {
        const Mat7<S> X = pen.psi[i].op();
        const Vec7<S> pu = X * u, pv = X * v;
        for (int k = 0; k < Z.cols(); ++k)
            A(i, k) = qv * qform_m<S>(pu, Z.col(k)) + qform_m<S>(cross_m<S>(uv, Z.col(k)), pv);
    }
    const MatX<S> K = nullspace(A, tol);
    if (K.cols() != 2) throw std::logic_error("r_space: the defining system does not have rank 2");
    RSpace<S> out;
    out.plane = Z * K;
    // graph over B
    Eigen::Matrix<S, 2, 2> Mb;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            Mb(r, c) = qform_m<S>(f.B.col(r), out.plane.col(c)) / qform_m<S>(f.B.col(r), f.B.col(r));
    const auto inv = inverse(MatX<S>(Mb), tol);
    if (inv) {
        // sigma(b_r) = plane * inv.col(r); gamma = pi_T o sigma
        const Mat7<S> E = eta_matrix<S>();
        Mat7<S> G = Mat7<S>::Zero();
        for (int r = 0; r < 2; ++r) {
            const Vec7<S> s = out.plane * inv->col(r);
            const Vec7<S> t = f.project_T(s);
            const Vec7<S> br = f.B.col(r);
            G += t * (br.transpose() * E) / qform_m<S>(br, br);
        }
        out.gamma = G;
    }
    return out;
}

/// sigma = inverse of the projection plane -> B, applied to b in B.
template <class S>
Vec7<S> r_lift(const FrenetSplitting<S>& f, const RSpace<S>& r, const Vec7<S>& b) {
    if (!r.gamma) throw GeometryError("r_lift: the R-space is not a graph over B");
    return f.project_B(b) + *r.gamma * b;
}

/// Complex-linear map N -> B given by the image of n1; n = a n1 + c (x n1) maps to a b + c (x b).
template <class S>
struct ComplexMapNB {
    Vec7<S> image_n1;

    Vec7<S> apply(const FrenetSplitting<S>& f, const Vec7<S>& n) const {
        const Vec7<S> n1 = f.N.col(0), xn1 = cross_m<S>(f.x, n1);
        const S a = qform_m<S>(n, n1) / qform_m<S>(n1, n1), c = qform_m<S>(n, xn1) / qform_m<S>(xn1, xn1);
        return a * image_n1 + c * cross_m<S>(f.x, image_n1);
    }
};

namespace detail {

/// Unit vector of N inside W (any unit vector of N when W = N).
template <class S>
Vec7<S> n_in_w(const FrenetSplitting<S>& f, const Vec7<S>& normal, double tol) {
    const Vec7<S> n1 = f.N.col(0), n2 = f.N.col(1);
    const S a = qform_m<S>(n2, normal), b = -qform_m<S>(n1, normal);
    Vec7<S> u = (std::abs(a) <= tol && std::abs(b) <= tol) ? n1 : Vec7<S>(a * n1 + b * n2);
    return u / std::sqrt(qform_m<S>(u, u));
}

}  // namespace detail

/// span{u + s, xu + x s} with u in Q+(N cap W), x the unit normal of W in P, and s the
/// normalized lift sigma_{u,W}(L(u)).
template <class S>
Photon<S> pho_fiber_point(const FrenetSplitting<S>& f, const Pencil<S>& pen, const Mat72<S>& W,
                          const ComplexMapNB<S>& Lmap, double tol = 1e-12) {
    static_assert(!ScalarTraits<S>::is_exact, "pho_fiber_point normalizes with square roots");
    if (std::abs(qform_m<S>(Lmap.image_n1, Lmap.image_n1) / qform_m<S>(f.N.col(0), f.N.col(0)) + 1) > 1e-10)
        throw GeometryError("pho_fiber_point: the map N -> B is not of unit norm");
    Vec7<S> x = cross_m<S>(W.col(0), W.col(1));
    x /= std::sqrt(qform_m<S>(x, x));
    const Vec7<S> u = detail::n_in_w<S>(f, x, 1e-10);
    Mat72<S> Wb;
    Wb << u, cross_m<S>(x, u);
    const RSpace<S> r = r_space<S>(f, pen, Wb, u, 1e-10);
    const Vec7<S> s = r_lift<S>(f, r, Lmap.apply(f, u));
    const S qs = qform_m<S>(s, s);
    if (std::abs(qs) <= tol) throw GeometryError("pho_fiber_point: null lift");
    const Vec7<S> sh = s / std::sqrt(std::abs(qs));
    return make_photon<S>(u + sh, cross_m<S>(x, u) + cross_m<S>(x, sh), 1e-9);
}

/// Trace pairing of the photon's pointing vector with psi, via Gram-Schmidt on the P-parts of (w1, w2).
/// A fixed nonzero multiple of the tangent metric against the photon's pointing vector.
template <class S>
S pho_pairing(const SpacePoint<S>& P, const Photon<S>& omega, const TangentVector<S>& psi, double tol = kDefaultTol) {
    const Vec7<S> u1 = P.project(omega.w1()), u2 = P.project(omega.w2());
    const Vec7<S> z1 = omega.w1() - u1, z2 = omega.w2() - u2;
    const S q11 = qform_m<S>(u1, u1);
    if (ScalarTraits<S>::is_zero(q11, tol)) throw GeometryError("pho_pairing: degenerate projection to P");
    const S f3 = qform_m<S>(u2, u1) / q11;
    const Vec7<S> u2p = u2 - f3 * u1;
    const S q22 = qform_m<S>(u2p, u2p);
    if (ScalarTraits<S>::is_zero(q22, tol)) throw GeometryError("pho_pairing: degenerate projection to P");
    const Vec7<S> z2p = z2 - f3 * z1;
    const Mat7<S> X = psi.op();
    return qform_m<S>(X * u1, z1) / q11 + qform_m<S>(X * u2p, z2p) / q22;
}

template <class S>
bool pho_base_membership(const Pencil<S>& pen, const Photon<S>& omega, double tol = kDefaultTol) {
    for (const auto& psi : pen.psi)
        if (!ScalarTraits<S>::is_zero(pho_pairing(pen.base, omega, psi, tol), tol)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Fiber samplers by angles.

/// Beta-base fiber point at u = cos t x + sin t (cos p n1 + sin p n2), v = cos s b1 + sin s b2.
template <class S>
NullLine<S> ein_fiber_sample(const FrenetSplitting<S>& f, double t, double p, double s) {
    const Vec7<S> u = std::cos(t) * f.x + std::sin(t) * (std::cos(p) * f.N.col(0) + std::sin(p) * f.N.col(1));
    const Vec7<S> v = std::cos(s) * f.B.col(0) + std::sin(s) * f.B.col(1);
    return ein_fiber_point(f, u, v, 1e-9);
}

/// Alpha-base fiber point over W = x^perp in P, x = cos t x0 + sin t (cos p n1 + sin p n2),
/// with the map N -> B sending n1 to cos s b1 + sin s b2.
template <class S>
Photon<S> pho_fiber_sample(const FrenetSplitting<S>& f, const Pencil<S>& pen, double t, double p, double s) {
    const Vec7<S> x = std::cos(t) * f.x + std::sin(t) * (std::cos(p) * f.N.col(0) + std::sin(p) * f.N.col(1));
    Vec7<S> w1 = Vec7<S>::Zero();
    for (const Vec7<S>& e : {f.x, Vec7<S>(f.N.col(0)), Vec7<S>(f.N.col(1))}) {
        const Vec7<S> c = cross_m<S>(x, e);
        if (qform_m<S>(c, c) > qform_m<S>(w1, w1)) w1 = c;
    }
    w1 /= std::sqrt(qform_m<S>(w1, w1));
    Mat72<S> W;
    W << w1, cross_m<S>(x, w1);
    const ComplexMapNB<S> Lm{std::cos(s) * f.B.col(0) + std::sin(s) * f.B.col(1)};
    return pho_fiber_point(f, pen, W, Lm);
}

}  // namespace g2f

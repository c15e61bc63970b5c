#pragma once

/**
 * @file cross_bases.hpp
 * @brief Cross-product bases (x_3, ..., x_{-3}) with x_k x x_l = c_{k,l} x_{k+l},
 * the model C- and R-bases, and the two Stiefel frame models: null triples
 * and (+,+,-) triples.
 *
 * Basis vectors are indexed by position p = 3 - k. Frames always hold
 * imaginary M-coordinates in their columns.
 */

#include "g2forge/linalg.hpp"
#include "g2forge/octonion.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace g2f {

inline constexpr int pos_of(int k) { return 3 - k; }
inline constexpr int label_of(int p) { return 3 - p; }

/// A verified cross-product basis.
template <class S>
struct CrossBasis {
    Mat7<S> frame;
    /// constants(p, q) = c_{k,l} for k = label_of(p), l = label_of(q); zero when |k+l| > 3.
    Mat7<S> constants;

    S constant(int k, int l) const { return constants(pos_of(k), pos_of(l)); }
    Vec7<S> vec(int k) const { return frame.col(pos_of(k)); }
    Mat7<S> gram() const { return frame.transpose() * eta_matrix<S>() * frame; }
};

/// Outcome of verify_cross_basis: the basis, or the first violated relation.
template <class S>
struct CrossCheck {
    std::optional<CrossBasis<S>> basis;
    int k = 0, l = 0;
    std::string reason;
    bool ok() const { return basis.has_value(); }
};

template <class S>
CrossCheck<S> verify_cross_basis(const Mat7<S>& frame, double tol = kDefaultTol) {
    using T = ScalarTraits<S>;
    CrossCheck<S> out;
    auto inv = inverse(frame, tol);
    if (!inv) {
        out.reason = "vectors are linearly dependent";
        return out;
    }
    CrossBasis<S> b;
    b.frame = frame;
    b.constants = Mat7<S>::Zero();
    for (int p = 0; p < 7; ++p)
        for (int q = 0; q < 7; ++q) {
            const int k = label_of(p), l = label_of(q);
            Vec7<S> c = *inv * cross_m<S>(frame.col(p), frame.col(q));
            const int target = (k + l >= -3 && k + l <= 3) ? pos_of(k + l) : -1;
            for (int r = 0; r < 7; ++r) {
                if (r == target) continue;
                if (!T::is_zero(c(r), tol)) {
                    out.k = k;
                    out.l = l;
                    out.reason = "x_k x x_l has a component off x_{k+l}";
                    return out;
                }
            }
            if (target >= 0) b.constants(p, q) = c(target);
        }
    out.basis = b;
    return out;
}

/// Model C-cross-product basis e_{+-3} = (jl +- i kl)/sqrt2, e_{+-2} = (j +- i k)/sqrt2,
/// e_{+-1} = (l +- i il)/sqrt2, e_0 = i.
template <class S>
const CrossBasis<S>& model_c_basis() {
    static const CrossBasis<S> b = [] {
        auto r = verify_cross_basis<S>(basis_frame<S>(Basis::ModelC));
        if (!r.ok()) throw std::logic_error("model C-basis failed verification");
        return *r.basis;
    }();
    return b;
}

/// Model R-cross-product basis ((i+li)/sqrt2, (j-lj)/sqrt2, (k-lk)/sqrt2, l, ...).
template <class S>
const CrossBasis<S>& model_r_basis() {
    static const CrossBasis<S> b = [] {
        auto r = verify_cross_basis<S>(basis_frame<S>(Basis::ModelR));
        if (!r.ok()) throw std::logic_error("model R-basis failed verification");
        return *r.basis;
    }();
    return b;
}

// ---------------------------------------------------------------------------
// Stiefel triples. Vectors are given in any built-in basis and checked for a common tag.

struct TripleError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

template <class S>
struct NullTriple {
    ImOct<S> u, v, w;
};

template <class S>
struct PqrTriple {
    ImOct<S> u, v, w;
};

namespace detail {

template <class S>
void same_basis(const ImOct<S>& u, const ImOct<S>& v, const ImOct<S>& w) {
    ImOct<S>::check(u, v);
    ImOct<S>::check(u, w);
}

template <class S>
bool near(const S& a, const S& b, double tol) {
    return ScalarTraits<S>::is_zero(a - b, tol);
}

}  // namespace detail

/// Empty when (u, v, w) is null, pairwise orthogonal and Omega(u, v, w) = sqrt2.
template <class S>
std::optional<std::string> null_triple_violation(const NullTriple<S>& n, double tol = kDefaultTol) {
    detail::same_basis(n.u, n.v, n.w);
    const Vec7<S> u = to_m(n.u), v = to_m(n.v), w = to_m(n.w);
    const S z(0);
    if (!detail::near(qform_m<S>(u, u), z, tol)) return "q(u) != 0";
    if (!detail::near(qform_m<S>(v, v), z, tol)) return "q(v) != 0";
    if (!detail::near(qform_m<S>(w, w), z, tol)) return "q(w) != 0";
    if (!detail::near(qform_m<S>(u, v), z, tol)) return "u.v != 0";
    if (!detail::near(qform_m<S>(u, w), z, tol)) return "u.w != 0";
    if (!detail::near(qform_m<S>(v, w), z, tol)) return "v.w != 0";
    if (!detail::near(triple_m<S>(u, v, w), ScalarTraits<S>::sqrt2(), tol)) return "Omega(u,v,w) != sqrt2";
    return std::nullopt;
}

/// Empty when q(u) = q(v) = 1, q(w) = -1, pairwise orthogonal and Omega(u, v, w) = 0.
template <class S>
std::optional<std::string> pqr_triple_violation(const PqrTriple<S>& p, double tol = kDefaultTol) {
    detail::same_basis(p.u, p.v, p.w);
    const Vec7<S> u = to_m(p.u), v = to_m(p.v), w = to_m(p.w);
    const S z(0);
    if (!detail::near(qform_m<S>(u, u), S(1), tol)) return "q(u) != 1";
    if (!detail::near(qform_m<S>(v, v), S(1), tol)) return "q(v) != 1";
    if (!detail::near(qform_m<S>(w, w), S(-1), tol)) return "q(w) != -1";
    if (!detail::near(qform_m<S>(u, v), z, tol)) return "u.v != 0";
    if (!detail::near(qform_m<S>(u, w), z, tol)) return "u.w != 0";
    if (!detail::near(qform_m<S>(v, w), z, tol)) return "v.w != 0";
    if (!detail::near(triple_m<S>(u, v, w), z, tol)) return "Omega(u,v,w) != 0";
    return std::nullopt;
}

/// Frame (u x v, u, v, (u x v) x w, u x w, v x w, w) in M-coordinates, unchecked.
template <class S>
Mat7<S> null_frame_m(const Vec7<S>& u, const Vec7<S>& v, const Vec7<S>& w) {
    Mat7<S> F;
    const Vec7<S> uv = cross_m<S>(u, v);
    F.col(0) = uv;
    F.col(1) = u;
    F.col(2) = v;
    F.col(3) = cross_m<S>(uv, w);
    F.col(4) = cross_m<S>(u, w);
    F.col(5) = cross_m<S>(v, w);
    F.col(6) = w;
    return F;
}

/// Frame (u, v, u x v, w, w x u, w x v, w x (u x v)) in M-coordinates, unchecked.
template <class S>
Mat7<S> pqr_frame_m(const Vec7<S>& u, const Vec7<S>& v, const Vec7<S>& w) {
    Mat7<S> F;
    const Vec7<S> uv = cross_m<S>(u, v);
    F.col(0) = u;
    F.col(1) = v;
    F.col(2) = uv;
    F.col(3) = w;
    F.col(4) = cross_m<S>(w, u);
    F.col(5) = cross_m<S>(w, v);
    F.col(6) = cross_m<S>(w, uv);
    return F;
}

template <class S>
CrossBasis<S> basis_from_null_triple(const NullTriple<S>& n, double tol = kDefaultTol) {
    if (auto err = null_triple_violation(n, tol)) throw TripleError("null triple: " + *err);
    auto r = verify_cross_basis<S>(null_frame_m<S>(to_m(n.u), to_m(n.v), to_m(n.w)), tol);
    if (!r.ok()) throw std::logic_error("null frame is not a cross-product basis: " + r.reason);
    return *r.basis;
}

/// The (+,+,-) frame as 7 imaginary octonions in M-coordinates (columns).
template <class S>
Mat7<S> basis_from_pqr_triple(const PqrTriple<S>& p, double tol = kDefaultTol) {
    if (auto err = pqr_triple_violation(p, tol)) throw TripleError("(+,+,-) triple: " + *err);
    return pqr_frame_m<S>(to_m(p.u), to_m(p.v), to_m(p.w));
}

namespace detail {

template <class S>
Mat7<S> to_basis(const Mat7<S>& Tm, Basis b) {
    if (b == Basis::MImag) return Tm;
    return basis_frame_inverse<S>(b) * Tm * basis_frame<S>(b);
}

template <class S>
Mat7<S> transport(const Mat7<S>& Fsrc, const Mat7<S>& Fdst, Basis b, double tol) {
    auto inv = inverse(Fsrc, tol);
    if (!inv) throw TripleError("source frame is degenerate");
    return to_basis<S>(Fdst * *inv, b);
}

}  // namespace detail

/// The unique group element sending the frame of src to the frame of dst,
/// as a matrix in the coordinates of the triples' basis.
template <class S>
Mat7<S> transporter(const NullTriple<S>& src, const NullTriple<S>& dst, double tol = kDefaultTol) {
    ImOct<S>::check(src.u, dst.u);
    return detail::transport<S>(basis_from_null_triple(src, tol).frame, basis_from_null_triple(dst, tol).frame,
                                src.u.basis, tol);
}

template <class S>
Mat7<S> transporter(const PqrTriple<S>& src, const PqrTriple<S>& dst, double tol = kDefaultTol) {
    ImOct<S>::check(src.u, dst.u);
    return detail::transport<S>(basis_from_pqr_triple(src, tol), basis_from_pqr_triple(dst, tol), src.u.basis, tol);
}

template <class S>
using AnyTriple = std::variant<NullTriple<S>, PqrTriple<S>>;

/// Runtime-typed variant; throws when src and dst are of different kinds.
template <class S>
Mat7<S> transporter(const AnyTriple<S>& src, const AnyTriple<S>& dst, double tol = kDefaultTol) {
    if (src.index() != dst.index()) throw TripleError("transporter: triple kinds differ");
    if (src.index() == 0) return transporter(std::get<0>(src), std::get<0>(dst), tol);
    return transporter(std::get<1>(src), std::get<1>(dst), tol);
}

/// Cross product of coordinate vectors in a verified cross-product basis.
template <class S>
Vec7<S> cross_in(const CrossBasis<S>& b, const Vec7<S>& u, const Vec7<S>& v) {
    Vec7<S> w = Vec7<S>::Zero();
    for (int p = 0; p < 7; ++p) {
        if (ScalarTraits<S>::is_zero(u(p), 0.0)) continue;
        for (int q = 0; q < 7; ++q) {
            const int s = label_of(p) + label_of(q);
            if (s < -3 || s > 3) continue;
            w(pos_of(s)) += b.constants(p, q) * u(p) * v(q);
        }
    }
    return w;
}

}  // namespace g2f

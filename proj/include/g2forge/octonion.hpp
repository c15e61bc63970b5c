#pragma once

/**
 * @file octonion.hpp
 * @brief Split octonions in the multiplication basis M = (1, i, j, k, l, li, lj, lk),
 * their imaginary part with its (3,4) quadratic form, the cross product,
 * the associator and the scalar triple product.
 *
 * Products are read row-times-column from the 8x8 table: i*j = k, l*l = 1.
 */

#include "g2forge/exact_scalar.hpp"

#include <Eigen/Core>

#include <array>
#include <stdexcept>
#include <string>

namespace g2f {

template <class S>
using Vec7 = Eigen::Matrix<S, 7, 1>;
template <class S>
using Vec8 = Eigen::Matrix<S, 8, 1>;
template <class S>
using Mat7 = Eigen::Matrix<S, 7, 7>;

/// Index and sign of e_a * e_b in the multiplication basis.
struct TableEntry {
    int index;
    int sign;
};

namespace detail {
// rows: left factor, columns: right factor, order 1,i,j,k,l,li,lj,lk
inline constexpr int kIdx[8][8] = {
    {0, 1, 2, 3, 4, 5, 6, 7}, {1, 0, 3, 2, 5, 4, 7, 6}, {2, 3, 0, 1, 6, 7, 4, 5}, {3, 2, 1, 0, 7, 6, 5, 4},
    {4, 5, 6, 7, 0, 1, 2, 3}, {5, 4, 7, 6, 1, 0, 3, 2}, {6, 7, 4, 5, 2, 3, 0, 1}, {7, 6, 5, 4, 3, 2, 1, 0}};
inline constexpr int kSgn[8][8] = {
    {1, 1, 1, 1, 1, 1, 1, 1},         {1, -1, 1, -1, -1, 1, -1, 1},   {1, -1, -1, 1, -1, 1, 1, -1},
    {1, 1, -1, -1, -1, -1, 1, 1},     {1, 1, 1, 1, 1, 1, 1, 1},       {1, -1, -1, 1, -1, 1, 1, -1},
    {1, 1, -1, -1, -1, -1, 1, 1},     {1, -1, 1, -1, -1, 1, -1, 1}};
// q on imaginary coordinates (i, j, k, l, li, lj, lk)
inline constexpr int kEta[7] = {1, 1, 1, -1, -1, -1, -1};
}  // namespace detail

inline constexpr TableEntry table_entry(int a, int b) { return {detail::kIdx[a][b], detail::kSgn[a][b]}; }

/// Names of the multiplication basis elements.
inline const std::array<std::string, 8>& basis_names() {
    static const std::array<std::string, 8> n{"1", "i", "j", "k", "l", "li", "lj", "lk"};
    return n;
}

/// Which basis the coordinates of an imaginary octonion refer to.
enum class Basis { MImag, ModelC, ModelR, User };

inline const char* to_string(Basis b) {
    switch (b) {
        case Basis::MImag: return "M-imaginary";
        case Basis::ModelC: return "model-C";
        case Basis::ModelR: return "model-R";
        case Basis::User: return "user";
    }
    return "?";
}

struct BasisMismatch : std::invalid_argument {
    BasisMismatch(Basis a, Basis b)
        : std::invalid_argument(std::string("basis mismatch: ") + to_string(a) + " vs " + to_string(b)) {}
};

// ---------------------------------------------------------------------------
// Raw coordinate kernels in the multiplication basis.

template <class S>
Vec8<S> oct_mul(const Vec8<S>& x, const Vec8<S>& y) {
    Vec8<S> z = Vec8<S>::Zero();
    for (int a = 0; a < 8; ++a) {
        if (ScalarTraits<S>::is_zero(x(a), 0.0)) continue;
        for (int b = 0; b < 8; ++b) {
            const int s = detail::kSgn[a][b];
            if (s > 0) z(detail::kIdx[a][b]) += x(a) * y(b);
            else z(detail::kIdx[a][b]) -= x(a) * y(b);
        }
    }
    return z;
}

template <class S>
Vec8<S> oct_conj(const Vec8<S>& x) {
    Vec8<S> y = -x;
    y(0) = x(0);
    return y;
}

/// Bilinear form on imaginary M-coordinates, signature (3,4).
template <class S, class D1, class D2>
S qform_m(const Eigen::MatrixBase<D1>& u, const Eigen::MatrixBase<D2>& v) {
    S r(0);
    for (int a = 0; a < 7; ++a) {
        if (detail::kEta[a] > 0) r += u(a) * v(a);
        else r -= u(a) * v(a);
    }
    return r;
}

/// Diagonal Gram matrix of the imaginary multiplication basis.
template <class S>
Mat7<S> eta_matrix() {
    Mat7<S> G = Mat7<S>::Zero();
    for (int a = 0; a < 7; ++a) G(a, a) = S(detail::kEta[a]);
    return G;
}

/// Cross product Im(uv) on imaginary M-coordinates.
template <class S>
Vec7<S> cross_m(const Vec7<S>& u, const Vec7<S>& v) {
    Vec7<S> w = Vec7<S>::Zero();
    for (int a = 0; a < 7; ++a) {
        if (ScalarTraits<S>::is_zero(u(a), 0.0)) continue;
        for (int b = 0; b < 7; ++b) {
            if (a == b) continue;
            const int idx = detail::kIdx[a + 1][b + 1];
            if (detail::kSgn[a + 1][b + 1] > 0) w(idx - 1) += u(a) * v(b);
            else w(idx - 1) -= u(a) * v(b);
        }
    }
    return w;
}

template <class S>
S triple_m(const Vec7<S>& u, const Vec7<S>& v, const Vec7<S>& w) {
    return qform_m<S>(cross_m<S>(u, v), w);
}

/// Matrix of the left cross product v -> u x v.
template <class S>
Mat7<S> cross_matrix_m(const Vec7<S>& u) {
    Mat7<S> C;
    for (int b = 0; b < 7; ++b) C.col(b) = cross_m<S>(u, Vec7<S>::Unit(b));
    return C;
}

// ---------------------------------------------------------------------------
// Value types.

/// Split octonion with coordinates in the multiplication basis.
template <class S>
struct Oct {
    Vec8<S> c = Vec8<S>::Zero();

    static Oct unit(int a) {
        Oct x;
        x.c(a) = S(1);
        return x;
    }
    S re() const { return c(0); }
    Vec7<S> im() const { return c.template tail<7>(); }
    Oct conj() const { return {oct_conj<S>(c)}; }

    friend Oct operator*(const Oct& x, const Oct& y) { return {oct_mul<S>(x.c, y.c)}; }
    friend Oct operator+(const Oct& x, const Oct& y) { return {x.c + y.c}; }
    friend Oct operator-(const Oct& x, const Oct& y) { return {x.c - y.c}; }
    friend Oct operator*(const S& s, const Oct& y) { return {s * y.c}; }
    friend bool operator==(const Oct& x, const Oct& y) { return x.c == y.c; }
};

template <class S>
Oct<S> mul(const Oct<S>& x, const Oct<S>& y) {
    return x * y;
}

/// Polarized norm form Re(x conj(y)); q(x) = x conj(x).
template <class S>
S qform(const Oct<S>& x, const Oct<S>& y) {
    return (x * y.conj()).re();
}

template <class S>
Oct<S> associator(const Oct<S>& x, const Oct<S>& y, const Oct<S>& z) {
    return x * (y * z) - (x * y) * z;
}

/// Imaginary split octonion with coordinates in a declared basis.
template <class S>
struct ImOct {
    Vec7<S> c = Vec7<S>::Zero();
    Basis basis = Basis::MImag;

    static ImOct unit(int a, Basis b = Basis::MImag) {
        ImOct x;
        x.c(a) = S(1);
        x.basis = b;
        return x;
    }
    Oct<S> as_oct() const;

    friend ImOct operator+(const ImOct& x, const ImOct& y) { check(x, y); return {x.c + y.c, x.basis}; }
    friend ImOct operator-(const ImOct& x, const ImOct& y) { check(x, y); return {x.c - y.c, x.basis}; }
    friend ImOct operator*(const S& s, const ImOct& y) { return {s * y.c, y.basis}; }
    friend bool operator==(const ImOct& x, const ImOct& y) { return x.basis == y.basis && x.c == y.c; }

    static void check(const ImOct& x, const ImOct& y) {
        if (x.basis != y.basis) throw BasisMismatch(x.basis, y.basis);
    }
};

namespace detail {

template <class S>
Vec7<S> im_prod(int a, int b) {
    return oct_mul<S>(Vec8<S>::Unit(a), Vec8<S>::Unit(b)).template tail<7>();
}

template <class S>
Mat7<S> build_frame(Basis b) {
    using T = ScalarTraits<S>;
    const S h = T::sqrt2() / S(2);  // 1/sqrt2
    auto m = [](int a) { return Vec7<S>(Vec7<S>::Unit(a - 1)); };
    Mat7<S> F;
    if (b == Basis::ModelC) {
        if constexpr (!T::is_complex) {
            throw std::domain_error("model C-basis needs a complex scalar type");
        } else {
            const S I = T::imag_unit();
            const Vec7<S> jl = im_prod<S>(2, 4), kl = im_prod<S>(3, 4), il = im_prod<S>(1, 4);
            F.col(0) = h * (jl + I * kl);
            F.col(1) = h * (m(2) + I * m(3));
            F.col(2) = h * (m(4) + I * il);
            F.col(3) = m(1);
            F.col(4) = h * (m(4) - I * il);
            F.col(5) = h * (m(2) - I * m(3));
            F.col(6) = h * (jl - I * kl);
        }
    } else if (b == Basis::ModelR) {
        F.col(0) = h * (m(1) + m(5));
        F.col(1) = h * (m(2) - m(6));
        F.col(2) = h * (m(3) - m(7));
        F.col(3) = m(4);
        F.col(4) = h * (m(3) + m(7));
        F.col(5) = h * (m(2) + m(6));
        F.col(6) = h * (m(1) - m(5));
    } else if (b == Basis::MImag) {
        F = Mat7<S>::Identity();
    } else {
        throw std::invalid_argument("a user basis has no built-in frame");
    }
    return F;
}

// Both model frames have anti-diagonal Gram matrices G with entries +-1, so
// the inverse is G^{-1} F^T diag(eta).
template <class S>
Mat7<S> build_frame_inverse(Basis b) {
    const Mat7<S> F = build_frame<S>(b);
    const Mat7<S> G = F.transpose() * eta_matrix<S>() * F;
    Mat7<S> Ginv = Mat7<S>::Zero();
    for (int k = 0; k < 7; ++k) Ginv(k, 6 - k) = S(1) / G(6 - k, k);
    return Ginv * F.transpose() * eta_matrix<S>();
}

}  // namespace detail

/// Columns: the basis vectors of a declared basis in imaginary M-coordinates.
template <class S>
const Mat7<S>& basis_frame(Basis b) {
    static const Mat7<S> id = Mat7<S>::Identity();
    if (b == Basis::MImag) return id;
    if (b == Basis::ModelC) {
        static const Mat7<S> fc = detail::build_frame<S>(Basis::ModelC);
        return fc;
    }
    if (b == Basis::ModelR) {
        static const Mat7<S> fr = detail::build_frame<S>(Basis::ModelR);
        return fr;
    }
    throw std::invalid_argument("a user basis has no built-in frame");
}

/// Inverse of basis_frame.
template <class S>
const Mat7<S>& basis_frame_inverse(Basis b) {
    static const Mat7<S> id = Mat7<S>::Identity();
    if (b == Basis::MImag) return id;
    if (b == Basis::ModelC) {
        static const Mat7<S> fc = detail::build_frame_inverse<S>(Basis::ModelC);
        return fc;
    }
    if (b == Basis::ModelR) {
        static const Mat7<S> fr = detail::build_frame_inverse<S>(Basis::ModelR);
        return fr;
    }
    throw std::invalid_argument("a user basis has no built-in frame");
}

template <class S>
Vec7<S> to_m(const ImOct<S>& x) {
    if (x.basis == Basis::MImag) return x.c;
    return basis_frame<S>(x.basis) * x.c;
}

template <class S>
ImOct<S> from_m(const Vec7<S>& m, Basis b) {
    if (b == Basis::MImag) return {m, b};
    return {basis_frame_inverse<S>(b) * m, b};
}

template <class S>
Oct<S> ImOct<S>::as_oct() const {
    Oct<S> o;
    o.c.template tail<7>() = to_m(*this);
    return o;
}

template <class S>
S qform(const ImOct<S>& u, const ImOct<S>& v) {
    ImOct<S>::check(u, v);
    return qform_m<S>(to_m(u), to_m(v));
}

template <class S>
ImOct<S> cross(const ImOct<S>& u, const ImOct<S>& v) {
    ImOct<S>::check(u, v);
    return from_m<S>(cross_m<S>(to_m(u), to_m(v)), u.basis);
}

template <class S>
S triple_product(const ImOct<S>& u, const ImOct<S>& v, const ImOct<S>& w) {
    ImOct<S>::check(u, v);
    ImOct<S>::check(u, w);
    return triple_m<S>(to_m(u), to_m(v), to_m(w));
}

}  // namespace g2f

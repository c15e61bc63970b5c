#pragma once

// Shared helpers for the geometry suites.

#include "g2forge/flag_geometry.hpp"
#include "g2forge/g2_lie.hpp"
#include "g2forge/random.hpp"

#include <random>

namespace g2f::testing {

using X = ExactScalar;

enum { I, J, K, L, LI, LJ, LK };

template <class S>
Vec7<S> m(int a) {
    return Vec7<S>::Unit(a);
}

// x_k of the model R-basis in M-coordinates.
template <class S>
Vec7<S> xr(int k) {
    return basis_frame<S>(Basis::ModelR).col(pos_of(k));
}

template <class S>
bool zero_vec(const Vec7<S>& v, double tol = 1e-10) {
    for (int a = 0; a < 7; ++a)
        if (!ScalarTraits<S>::is_zero(v(a), tol)) return false;
    return true;
}

template <class S>
bool same_span(const MatX<S>& A, const MatX<S>& B, double tol = 1e-10) {
    MatX<S> M(A.rows(), A.cols() + B.cols());
    M << A, B;
    return rank(A, tol) == rank(B, tol) && rank(M, tol) == rank(A, tol);
}

// Random group element in M-coordinates.
template <class S>
Mat7<S> random_g2_m(std::mt19937_64& rng) {
    static const std::vector<Mat7<S>> roots = root_vectors(model_r_basis<S>());
    return basis_frame<S>(Basis::ModelR) * random_g2_element<S>(rng, roots) * basis_frame_inverse<S>(Basis::ModelR);
}

inline Mat7<double> to_double(const Mat7<X>& A) {
    Mat7<double> D;
    for (int r = 0; r < 7; ++r)
        for (int c = 0; c < 7; ++c) D(r, c) = A(r, c).to_complex().real();
    return D;
}

}  // namespace g2f::testing

#pragma once

/**
 * @file linalg.hpp
 * @brief Row reduction over a field: rank, nullspace, solve, inverse and
 * inertia. Works for double, std::complex<double> and ExactScalar; in the
 * exact case the tolerance argument is ignored.
 */

#include "g2forge/exact_scalar.hpp"

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace g2f {

template <class S>
using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using VecX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

inline constexpr double kDefaultTol = 1e-10;

/// In-place reduced row echelon form; returns pivot columns.
template <class Derived>
std::vector<int> rref(Eigen::MatrixBase<Derived>& A, double tol = kDefaultTol) {
    using S = typename Derived::Scalar;
    using T = ScalarTraits<S>;
    std::vector<int> piv;
    const int rows = int(A.rows()), cols = int(A.cols());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int best = -1;
        double bestmag = 0;
        for (int i = r; i < rows; ++i) {
            if (T::is_zero(A(i, c), tol)) continue;
            double m = T::magnitude(A(i, c));
            if (best < 0 || m > bestmag) { best = i; bestmag = m; }
            if constexpr (T::is_exact) break;
        }
        if (best < 0) continue;
        if (best != r) A.row(best).swap(A.row(r));
        S inv = S(1) / A(r, c);
        for (int j = c; j < cols; ++j) A(r, j) = A(r, j) * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || T::is_zero(A(i, c), 0.0)) continue;
            S f = A(i, c);
            for (int j = c; j < cols; ++j) A(i, j) = A(i, j) - f * A(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

template <class Derived>
int rank(const Eigen::MatrixBase<Derived>& A, double tol = kDefaultTol) {
    MatX<typename Derived::Scalar> B = A;
    return int(rref(B, tol).size());
}

/// Columns span the right nullspace of A.
template <class Derived>
MatX<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& A, double tol = kDefaultTol) {
    using S = typename Derived::Scalar;
    MatX<S> R = A;
    auto piv = rref(R, tol);
    const int n = int(A.cols());
    std::vector<bool> is_piv(n, false);
    for (int p : piv) is_piv[p] = true;
    MatX<S> N = MatX<S>::Zero(n, n - int(piv.size()));
    int k = 0;
    for (int f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        N(f, k) = S(1);
        for (size_t i = 0; i < piv.size(); ++i) N(piv[i], k) = -R(i, f);
        ++k;
    }
    return N;
}

/// Solves A x = b when consistent; the returned x sets free variables to 0.
template <class DA, class DB>
std::optional<MatX<typename DA::Scalar>> solve(const Eigen::MatrixBase<DA>& A, const Eigen::MatrixBase<DB>& b,
                                               double tol = kDefaultTol) {
    using S = typename DA::Scalar;
    using T = ScalarTraits<S>;
    const int n = int(A.cols()), m = int(b.cols());
    MatX<S> Ab(A.rows(), n + m);
    Ab << A, b;
    auto piv = rref(Ab, tol);
    for (int p : piv)
        if (p >= n) return std::nullopt;
    for (int i = int(piv.size()); i < Ab.rows(); ++i)
        for (int j = n; j < n + m; ++j)
            if (!T::is_zero(Ab(i, j), tol * 1e2)) return std::nullopt;
    MatX<S> x = MatX<S>::Zero(n, m);
    for (size_t i = 0; i < piv.size(); ++i) x.row(piv[i]) = Ab.row(int(i)).tail(m);
    return x;
}

template <class Derived>
std::optional<MatX<typename Derived::Scalar>> inverse(const Eigen::MatrixBase<Derived>& A, double tol = kDefaultTol) {
    using S = typename Derived::Scalar;
    if (A.rows() != A.cols()) return std::nullopt;
    if (rank(A, tol) != A.rows()) return std::nullopt;
    return solve(A, MatX<S>::Identity(A.rows(), A.cols()), tol);
}

struct Inertia {
    int positive = 0, negative = 0, zero = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Sylvester inertia of a real symmetric matrix. ExactScalar entries must be real.
Inertia inertia(const MatX<double>& A, double tol = kDefaultTol);
Inertia inertia(const MatX<ExactScalar>& A);

}  // namespace g2f

#include "g2forge/linalg.hpp"

#include <stdexcept>

namespace g2f {

Inertia inertia(const MatX<double>& A, double tol) {
    Eigen::SelfAdjointEigenSolver<MatX<double>> es(0.5 * (A + A.transpose()));
    Inertia r;
    double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        double l = es.eigenvalues()(i);
        if (std::abs(l) <= tol * scale) ++r.zero;
        else if (l > 0) ++r.positive;
        else ++r.negative;
    }
    return r;
}

Inertia inertia(const MatX<ExactScalar>& A0) {
    const int n = int(A0.rows());
    std::vector<std::vector<QSqrt2>> A(n, std::vector<QSqrt2>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!A0(i, j).is_real()) throw std::domain_error("inertia: complex entry");
            A[i][j] = A0(i, j).real();
        }
    Inertia r;
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
        int p = -1;
        for (int i = 0; i < n && p < 0; ++i)
            if (!done[i] && !A[i][i].is_zero()) p = i;
        if (p < 0) {
            // all remaining diagonal entries vanish; fold an off-diagonal pair
            int pi = -1, pj = -1;
            for (int i = 0; i < n && pi < 0; ++i)
                for (int j = 0; j < n; ++j)
                    if (!done[i] && !done[j] && i != j && !A[i][j].is_zero()) { pi = i; pj = j; break; }
            if (pi < 0) break;
            for (int k = 0; k < n; ++k) A[pi][k] += A[pj][k];
            for (int k = 0; k < n; ++k) A[k][pi] += A[k][pj];
            p = pi;
        }
        const QSqrt2 d = A[p][p];
        d.sign() > 0 ? ++r.positive : ++r.negative;
        done[p] = true;
        for (int i = 0; i < n; ++i) {
            if (done[i] || A[i][p].is_zero()) continue;
            QSqrt2 f = A[i][p] / d;
            for (int k = 0; k < n; ++k) A[i][k] -= f * A[p][k];
        }
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            A[p][i] = QSqrt2();
        }
    }
    r.zero = n - r.positive - r.negative;
    return r;
}

}  // namespace g2f

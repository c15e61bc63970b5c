#include "g2forge/g2_lie.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace g2f {

CartanVector cartan_projection(const Mat7<std::complex<double>>& Psi, double tol) {
    Eigen::ComplexEigenSolver<Mat7<std::complex<double>>> es(Psi, false);
    if (es.info() != Eigen::Success) throw std::runtime_error("cartan_projection: eigen solve failed");
    std::array<double, 7> lam;
    double scale = 1.0;
    for (int k = 0; k < 7; ++k) scale = std::max(scale, std::abs(es.eigenvalues()(k)));
    for (int k = 0; k < 7; ++k) {
        const auto z = es.eigenvalues()(k);
        if (std::abs(z.imag()) > tol * scale) throw std::invalid_argument("cartan_projection: non-real eigenvalue");
        lam[k] = z.real();
    }
    std::sort(lam.rbegin(), lam.rend());
    CartanVector cv{lam[1], lam[2]};
    const std::array<double, 7> pattern{cv.r + cv.s, cv.r, cv.s, 0.0, -cv.s, -cv.r, -cv.r - cv.s};
    for (int k = 0; k < 7; ++k)
        if (std::abs(pattern[k] - lam[k]) > tol * scale)
            throw std::invalid_argument("cartan_projection: spectrum does not fit the Weyl chamber pattern");
    if (cv.s < 0) cv.s = 0;
    return cv;
}

CartanVector cartan_projection(const Mat7<double>& Psi, double tol) {
    return cartan_projection(Mat7<std::complex<double>>(Psi.cast<std::complex<double>>()), tol);
}

ExactScalar regularity_invariant_ab(const QSqrt2& a2, const QSqrt2& b2) {
    Mat7<ExactScalar> T = Mat7<ExactScalar>::Zero();
    const QSqrt2 two(2);
    const std::array<QSqrt2, 6> prod{b2, a2, two * b2, two * b2, a2, b2};
    for (int k = 0; k < 6; ++k) {
        T(k, k + 1) = ExactScalar(1);
        T(k + 1, k) = ExactScalar(prod[k]);
    }
    return regularity_invariant<ExactScalar>(T);
}

const char* to_string(Sl2Class c) {
    switch (c) {
        case Sl2Class::principal: return "principal";
        case Sl2Class::short_beta: return "short_beta";
        case Sl2Class::long_alpha: return "long_alpha";
        case Sl2Class::class4: return "class4";
        case Sl2Class::class5: return "class5";
    }
    return "?";
}

std::vector<int> expected_splitting(Sl2Class c) {
    switch (c) {
        case Sl2Class::principal: return {7};
        case Sl2Class::short_beta: return {3, 2, 2};
        case Sl2Class::long_alpha: return {2, 2, 1, 1, 1};
        case Sl2Class::class4:
        case Sl2Class::class5: return {3, 3, 1};
    }
    return {};
}

int trivial_summand_sign(Sl2Class c) {
    using X = ExactScalar;
    const auto& b = model_r_basis<X>();
    const Mat7<X> N = sl2_nilpotent(c, b);
    const Mat7<X> h = neutral_element(N);
    MatX<X> stack(14, 7);
    stack << N, h;
    const MatX<X> K = nullspace(stack);
    if (K.cols() != 1) return 0;
    const X val = (K.transpose() * b.gram() * K)(0, 0);
    return val.real().sign();
}

}  // namespace g2f

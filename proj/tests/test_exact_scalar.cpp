#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2forge/linalg.hpp"
#include "g2forge/random.hpp"

using namespace g2f;

TEST_CASE("constants square to the expected rationals") {
    CHECK(ExactScalar::sqrt2() * ExactScalar::sqrt2() == ExactScalar(2));
    CHECK(ExactScalar::i() * ExactScalar::i() == ExactScalar(-1));
    ExactScalar isq2 = ExactScalar::i() * ExactScalar::sqrt2();
    CHECK(isq2.im_sqrt2() == 1);
    CHECK(isq2.re_rat() == 0);
    CHECK(isq2 * isq2 == ExactScalar(-2));
}

TEST_CASE("field operations are exact on random elements") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 300; ++t) {
        ExactScalar a = random_scalar<ExactScalar>(rng), b = random_scalar<ExactScalar>(rng),
                    c = random_scalar<ExactScalar>(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).conj() == a.conj() * b.conj());
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
        }
        auto z = a.to_complex() * b.to_complex();
        CHECK(std::abs((a * b).to_complex() - z) < 1e-9 * (1 + std::abs(z)));
    }
    CHECK_THROWS(ExactScalar(0).inverse());
}

TEST_CASE("sign of a real surd is decided exactly") {
    CHECK(QSqrt2(mpq_class(3, 2), -1).sign() == 1);   // 1.5 - 1.414
    CHECK(QSqrt2(mpq_class(7, 5), -1).sign() == -1);  // 1.4 - 1.414
    CHECK(QSqrt2(-3, 2).to_double() < 0);
    CHECK(QSqrt2(-3, 2).sign() == (QSqrt2(-3, 2).to_double() > 0 ? 1 : -1));
    CHECK(QSqrt2(0, 0).sign() == 0);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 500; ++t) {
        QSqrt2 x(random_rational(rng), random_rational(rng));
        double d = x.to_double();
        if (std::abs(d) > 1e-12) CHECK(x.sign() == (d > 0 ? 1 : -1));
    }
}

TEST_CASE("row reduction over the exact field") {
    MatX<ExactScalar> A(3, 3);
    A << 1, 2, 3, 4, 5, 6, 7, 8, 9;
    CHECK(rank(A) == 2);
    auto N = nullspace(A);
    REQUIRE(N.cols() == 1);
    MatX<ExactScalar> AN = A * N;
    for (int i = 0; i < 3; ++i) CHECK(AN(i, 0).is_zero());
    MatX<ExactScalar> B(2, 2);
    B << ExactScalar::sqrt2(), ExactScalar::i(), 1, 2;
    auto Binv = inverse(B);
    REQUIRE(Binv);
    MatX<ExactScalar> I = B * *Binv;
    CHECK(I(0, 0) == ExactScalar(1));
    CHECK(I(0, 1).is_zero());
    CHECK(I(1, 0).is_zero());
    CHECK(I(1, 1) == ExactScalar(1));
}

TEST_CASE("exact and floating inertia agree") {
    MatX<ExactScalar> A = MatX<ExactScalar>::Zero(4, 4);
    A(0, 3) = A(3, 0) = 1;
    A(1, 2) = A(2, 1) = ExactScalar::sqrt2();
    A(1, 1) = 1;
    auto r = inertia(A);
    CHECK(r.positive == 2);
    CHECK(r.negative == 2);
    CHECK(r.zero == 0);
    MatX<double> Ad(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) Ad(i, j) = A(i, j).to_complex().real();
    CHECK(inertia(Ad) == r);
    MatX<ExactScalar> Z = MatX<ExactScalar>::Zero(3, 3);
    Z(0, 0) = 1;
    CHECK(inertia(Z) == Inertia{1, 0, 2});
}

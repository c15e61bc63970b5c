#pragma once

/**
 * @file exact_scalar.hpp
 * @brief Exact arithmetic in Q(i, sqrt2) and the scalar traits used by
 * every templated routine in the library.
 *
 * An ExactScalar stores (re_rat + re_sqrt2*sqrt2) + i*(im_rat + im_sqrt2*sqrt2)
 * with GMP rationals. Equality is component-wise and therefore decidable.
 */

#include <gmpxx.h>

#include <Eigen/Core>

#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace g2f {

/// Real quadratic surd r + s*sqrt2 with rational r, s.
class QSqrt2 {
public:
    QSqrt2() = default;
    QSqrt2(long v) : r_(v), s_(0) {}
    QSqrt2(mpq_class r, mpq_class s = 0) : r_(std::move(r)), s_(std::move(s)) {
        r_.canonicalize();
        s_.canonicalize();
    }

    const mpq_class& rat() const { return r_; }
    const mpq_class& sqrt2_part() const { return s_; }

    bool is_zero() const { return sgn(r_) == 0 && sgn(s_) == 0; }
    /// Exact sign of r + s*sqrt2.
    int sign() const;
    double to_double() const;

    QSqrt2 operator-() const { return {-r_, -s_}; }
    QSqrt2& operator+=(const QSqrt2& o) { r_ += o.r_; s_ += o.s_; return *this; }
    QSqrt2& operator-=(const QSqrt2& o) { r_ -= o.r_; s_ -= o.s_; return *this; }
    QSqrt2& operator*=(const QSqrt2& o);
    QSqrt2& operator/=(const QSqrt2& o);

    /// Galois conjugate r - s*sqrt2.
    QSqrt2 galois() const { return {r_, -s_}; }
    /// Field norm r^2 - 2 s^2.
    mpq_class norm() const { return r_ * r_ - 2 * s_ * s_; }
    QSqrt2 inverse() const;

    friend QSqrt2 operator+(QSqrt2 a, const QSqrt2& b) { return a += b; }
    friend QSqrt2 operator-(QSqrt2 a, const QSqrt2& b) { return a -= b; }
    friend QSqrt2 operator*(QSqrt2 a, const QSqrt2& b) { return a *= b; }
    friend QSqrt2 operator/(QSqrt2 a, const QSqrt2& b) { return a /= b; }
    friend bool operator==(const QSqrt2& a, const QSqrt2& b) { return a.r_ == b.r_ && a.s_ == b.s_; }
    friend bool operator<(const QSqrt2& a, const QSqrt2& b) { return (a - b).sign() < 0; }

private:
    mpq_class r_{0}, s_{0};
};

/// Element of Q(i, sqrt2).
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(long v) : re_(v) {}
    ExactScalar(int v) : re_(long(v)) {}
    ExactScalar(QSqrt2 re, QSqrt2 im = QSqrt2()) : re_(std::move(re)), im_(std::move(im)) {}
    ExactScalar(const mpq_class& re_rat, const mpq_class& re_sqrt2,
                const mpq_class& im_rat, const mpq_class& im_sqrt2)
        : re_(re_rat, re_sqrt2), im_(im_rat, im_sqrt2) {}

    static ExactScalar rational(long num, long den = 1) { return {QSqrt2(mpq_class(num, den))}; }
    static ExactScalar sqrt2() { return {QSqrt2(0, 1)}; }
    static ExactScalar i() { return {QSqrt2(), QSqrt2(1)}; }

    const mpq_class& re_rat() const { return re_.rat(); }
    const mpq_class& re_sqrt2() const { return re_.sqrt2_part(); }
    const mpq_class& im_rat() const { return im_.rat(); }
    const mpq_class& im_sqrt2() const { return im_.sqrt2_part(); }
    const QSqrt2& real() const { return re_; }
    const QSqrt2& imag() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_rational() const { return im_.is_zero() && sgn(re_.sqrt2_part()) == 0; }

    ExactScalar conj() const { return {re_, -im_}; }
    /// |z|^2 as an element of Q(sqrt2).
    QSqrt2 abs2() const { return re_ * re_ + im_ * im_; }
    ExactScalar inverse() const;
    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    ExactScalar operator-() const { return {-re_, -im_}; }
    ExactScalar& operator+=(const ExactScalar& o) { re_ += o.re_; im_ += o.im_; return *this; }
    ExactScalar& operator-=(const ExactScalar& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator/=(const ExactScalar& o) { return *this *= o.inverse(); }

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
    friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    std::string str() const;

private:
    QSqrt2 re_, im_;
};

std::ostream& operator<<(std::ostream& os, const QSqrt2& x);
std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

/// Uniform access to the constants and predicates that differ between
/// double, std::complex<double> and ExactScalar.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr bool is_exact = false;
    static constexpr bool is_complex = false;
    static double sqrt2() { return 1.4142135623730951; }
    static double rational(long p, long q = 1) { return double(p) / double(q); }
    static double imag_unit() { throw std::domain_error("imaginary unit requested for a real scalar"); }
    static double conj(double x) { return x; }
    static bool is_zero(double x, double tol) { return std::abs(x) <= tol; }
    static double magnitude(double x) { return std::abs(x); }
    static std::complex<double> to_complex(double x) { return x; }
};

template <>
struct ScalarTraits<std::complex<double>> {
    using C = std::complex<double>;
    static constexpr bool is_exact = false;
    static constexpr bool is_complex = true;
    static C sqrt2() { return 1.4142135623730951; }
    static C rational(long p, long q = 1) { return double(p) / double(q); }
    static C imag_unit() { return {0.0, 1.0}; }
    static C conj(const C& x) { return std::conj(x); }
    static bool is_zero(const C& x, double tol) { return std::abs(x) <= tol; }
    static double magnitude(const C& x) { return std::abs(x); }
    static C to_complex(const C& x) { return x; }
};

template <>
struct ScalarTraits<ExactScalar> {
    static constexpr bool is_exact = true;
    static constexpr bool is_complex = true;
    static ExactScalar sqrt2() { return ExactScalar::sqrt2(); }
    static ExactScalar rational(long p, long q = 1) { return ExactScalar::rational(p, q); }
    static ExactScalar imag_unit() { return ExactScalar::i(); }
    static ExactScalar conj(const ExactScalar& x) { return x.conj(); }
    /// Exact test; the tolerance is ignored.
    static bool is_zero(const ExactScalar& x, double) { return x.is_zero(); }
    static double magnitude(const ExactScalar& x) { return std::abs(x.to_complex()); }
    static std::complex<double> to_complex(const ExactScalar& x) { return x.to_complex(); }
};

}  // namespace g2f

namespace Eigen {

template <>
struct NumTraits<g2f::ExactScalar> : GenericNumTraits<g2f::ExactScalar> {
    using Real = g2f::ExactScalar;
    using NonInteger = g2f::ExactScalar;
    using Literal = g2f::ExactScalar;
    using Nested = g2f::ExactScalar;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 40,
        MulCost = 120
    };
    static inline int digits10() { return 0; }
    static inline g2f::ExactScalar dummy_precision() { return g2f::ExactScalar(0); }
};

}  // namespace Eigen

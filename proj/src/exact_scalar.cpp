#include "g2forge/exact_scalar.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

namespace g2f {

int QSqrt2::sign() const {
    int a = sgn(r_), b = sgn(s_);
    if (b == 0) return a;
    if (a == 0 || a == b) return b;
    // opposite signs: compare r^2 with 2 s^2
    mpq_class lhs = r_ * r_, rhs = 2 * s_ * s_;
    return lhs > rhs ? a : b;
}

double QSqrt2::to_double() const {
    return r_.get_d() + s_.get_d() * std::sqrt(2.0);
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
    const bool s0 = sgn(s_) == 0, os0 = sgn(o.s_) == 0;
    if (s0 && os0) {
        r_ *= o.r_;
        return *this;
    }
    if (os0) {
        r_ *= o.r_;
        s_ *= o.r_;
        return *this;
    }
    if (s0 && sgn(r_) == 0) return *this;
    mpq_class r = r_ * o.r_ + 2 * s_ * o.s_;
    mpq_class s = r_ * o.s_ + s_ * o.r_;
    r_ = r;
    s_ = s;
    return *this;
}

QSqrt2 QSqrt2::inverse() const {
    if (is_zero()) throw std::domain_error("QSqrt2: division by zero");
    mpq_class n = norm();
    return {r_ / n, -s_ / n};
}

QSqrt2& QSqrt2::operator/=(const QSqrt2& o) { return *this *= o.inverse(); }

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) {
        *this = ExactScalar();
        return *this;
    }
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    QSqrt2 re = re_ * o.re_ - im_ * o.im_;
    QSqrt2 im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

ExactScalar ExactScalar::inverse() const {
    if (is_zero()) throw std::domain_error("ExactScalar: division by zero");
    QSqrt2 n = abs2().inverse();
    return {re_ * n, -im_ * n};
}

std::ostream& operator<<(std::ostream& os, const QSqrt2& x) {
    bool any = false;
    if (sgn(x.rat()) != 0) {
        os << x.rat();
        any = true;
    }
    if (sgn(x.sqrt2_part()) != 0) {
        if (any && sgn(x.sqrt2_part()) > 0) os << "+";
        os << x.sqrt2_part() << "*sqrt2";
        any = true;
    }
    if (!any) os << "0";
    return os;
}

std::string ExactScalar::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) {
    if (x.imag().is_zero()) return os << x.real();
    if (!x.real().is_zero()) os << "(" << x.real() << ")+";
    return os << "i*(" << x.imag() << ")";
}

}  // namespace g2f

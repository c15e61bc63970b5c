#pragma once

/// Random samples with exact coordinates, for identity suites.

#include "g2forge/octonion.hpp"

#include <random>

namespace g2f {

/// Small rational p/q with |p| <= 9, 1 <= q <= 4.
inline mpq_class random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    return mpq_class(num(rng), den(rng));
}

template <class S>
S random_scalar(std::mt19937_64& rng) {
    if constexpr (ScalarTraits<S>::is_exact) {
        return ExactScalar(random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng));
    } else if constexpr (ScalarTraits<S>::is_complex) {
        std::normal_distribution<double> n;
        return S(n(rng), n(rng));
    } else {
        std::normal_distribution<double> n;
        return n(rng);
    }
}

/// Real-coordinate sample: rational in exact mode, Gaussian otherwise.
template <class S>
S random_real(std::mt19937_64& rng) {
    if constexpr (ScalarTraits<S>::is_exact) {
        return ExactScalar(QSqrt2(random_rational(rng)));
    } else {
        std::normal_distribution<double> n;
        return S(n(rng));
    }
}

template <class S>
Oct<S> random_oct(std::mt19937_64& rng, bool real_coords = true) {
    Oct<S> x;
    for (int a = 0; a < 8; ++a) x.c(a) = real_coords ? random_real<S>(rng) : random_scalar<S>(rng);
    return x;
}

template <class S>
ImOct<S> random_imoct(std::mt19937_64& rng, Basis b = Basis::MImag, bool real_coords = true) {
    ImOct<S> x;
    x.basis = b;
    for (int a = 0; a < 7; ++a) x.c(a) = real_coords ? random_real<S>(rng) : random_scalar<S>(rng);
    return x;
}

}  // namespace g2f

#include "g2forge/suites.hpp"

#include "g2forge/cross_bases.hpp"
#include "g2forge/flag_geometry.hpp"
#include "g2forge/g2_lie.hpp"
#include "g2forge/pencil_bases.hpp"
#include "g2forge/random.hpp"

#include <chrono>
#include <numbers>
#include <sstream>

namespace g2f::suites {

namespace {

using X = ExactScalar;

// Row a, column b: e_a e_b for a, b in i, j, k, l, li, lj, lk.
const char* kProductTable =
    "-1 k -j -li l -lk lj\n"
    "-k -1 i -lj lk l -li\n"
    "j -i -1 -lk -lj li l\n"
    "li lj lk 1 i j k\n"
    "-l -lk lj -i 1 k -j\n"
    "lk -l -li -j -k 1 i\n"
    "-lj li -l -k j -i 1\n";

// Model C-basis cross products, rows and columns e3 .. e-3. "c:k" is c e_k, c in {i, -i, s2, -s2}.
const char* kCrossTable =
    "0 0 0 -i:3 s2:2 s2:1 -i:0\n"
    "0 0 s2:3 i:2 0 -i:0 -s2:-1\n"
    "0 -s2:3 0 i:1 i:0 0 -s2:-2\n"
    "i:3 -i:2 -i:1 0 i:-1 i:-2 -i:-3\n"
    "-s2:2 0 -i:0 -i:-1 0 -s2:-3 0\n"
    "-s2:1 i:0 0 -i:-2 s2:-3 0 0\n"
    "i:0 s2:-1 s2:-2 i:-3 0 0 0\n";

Oct<X> product_cell(std::string s) {
    int sign = 1;
    if (s[0] == '-') {
        sign = -1;
        s = s.substr(1);
    }
    for (int a = 0; a < 8; ++a)
        if (basis_names()[a] == s) return X(sign) * Oct<X>::unit(a);
    throw std::logic_error("product table: unknown label " + s);
}

Vec7<X> cross_cell(const std::string& tok) {
    Vec7<X> v = Vec7<X>::Zero();
    if (tok == "0") return v;
    const auto colon = tok.find(':');
    const std::string c = tok.substr(0, colon);
    v(pos_of(std::stoi(tok.substr(colon + 1)))) =
        c == "i" ? X::i() : c == "-i" ? -X::i() : c == "s2" ? X::sqrt2() : -X::sqrt2();
    return v;
}

ImOct<X> ec(int k) { return ImOct<X>::unit(pos_of(k), Basis::ModelC); }

// e2 -> e1, e_{-1} -> e_{-2}
Mat7<X> e_minus_alpha() {
    Mat7<X> E = Mat7<X>::Zero();
    E(pos_of(1), pos_of(2)) = 1;
    E(pos_of(-2), pos_of(-1)) = 1;
    return E;
}

// e3 -> e2, e1 -> -sqrt2 i e0, e0 -> -sqrt2 i e_{-1}, e_{-2} -> e_{-3}
Mat7<X> e_minus_beta() {
    const X m = -X::sqrt2() * X::i();
    Mat7<X> E = Mat7<X>::Zero();
    E(pos_of(2), pos_of(3)) = 1;
    E(pos_of(0), pos_of(1)) = m;
    E(pos_of(-1), pos_of(0)) = m;
    E(pos_of(-3), pos_of(-2)) = 1;
    return E;
}

template <class S>
bool same(const Oct<S>& a, const Oct<S>& b) {
    if constexpr (ScalarTraits<S>::is_exact)
        return a == b;
    else
        return (a.c - b.c).norm() <= 1e-9 * (1 + a.c.norm());
}

template <class S>
IdentityReport run_identities(int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    IdentityReport r;
    r.samples = samples;
    r.exact = ScalarTraits<S>::is_exact;
    const S minus1(-1);
    for (int t = 0; t < samples; ++t) {
        const auto x = random_oct<S>(rng), y = random_oct<S>(rng), z = random_oct<S>(rng);
        const S lhs = qform(x * y, x * y), rhs = qform(x, x) * qform(y, y);
        if constexpr (ScalarTraits<S>::is_exact)
            r.composition += !(lhs == rhs);
        else
            r.composition += std::abs(lhs - rhs) > 1e-9 * (1 + std::abs(rhs));
        const auto u = random_imoct<S>(rng), v = random_imoct<S>(rng);
        const Oct<S> dcp = cross(u, cross(u, v)).as_oct();
        const Oct<S> expect = (minus1 * qform(u, u) * v + qform(u, v) * u).as_oct();
        r.double_cross += !same(dcp, expect);
        const auto A = associator(x, y, z);
        const bool alt = same(associator(y, x, z), minus1 * A) && same(associator(x, z, y), minus1 * A) &&
                         same(associator(z, y, x), minus1 * A) && same(associator(x, x, z), Oct<S>());
        r.alternating += !alt;
        r.conjugation += !same((x * y).conj(), y.conj() * x.conj());
    }
    return r;
}

Photon<X> photon_r(int a, int b) {
    return make_photon<X>(basis_frame<X>(Basis::ModelR).col(pos_of(a)), basis_frame<X>(Basis::ModelR).col(pos_of(b)));
}

// Product of root unipotents with parameters in [-1/2, 1/2], moderate enough for absolute tolerances.
Mat7<double> random_g2_m(std::mt19937_64& rng) {
    static const std::vector<Mat7<double>> roots = root_vectors(model_r_basis<double>());
    std::uniform_real_distribution<double> t(-0.5, 0.5);
    Mat7<double> g = Mat7<double>::Identity();
    for (const auto& E : roots) g = g * exp_nilpotent<double>(E, t(rng));
    return basis_frame<double>(Basis::ModelR) * g * basis_frame_inverse<double>(Basis::ModelR);
}

double photon_residual(const Photon<double>& w) {
    const Vec7<double> a = w.w1(), b = w.w2();
    const double s = a.norm() * b.norm();
    return std::max({std::abs(qform_m<double>(a, a)) / a.squaredNorm(), std::abs(qform_m<double>(b, b)) / b.squaredNorm(),
                     std::abs(qform_m<double>(a, b)) / s, cross_m<double>(a, b).norm() / s});
}

}  // namespace

TableReport table_reproduction() {
    const auto t0 = std::chrono::steady_clock::now();
    TableReport r;
    std::istringstream pin(kProductTable);
    for (int a = 1; a < 8; ++a)
        for (int b = 1; b < 8; ++b) {
            std::string tok;
            pin >> tok;
            r.product_matched += mul(Oct<X>::unit(a), Oct<X>::unit(b)) == product_cell(tok);
        }
    std::istringstream cin(kCrossTable);
    for (int p = 0; p < 7; ++p)
        for (int q = 0; q < 7; ++q) {
            std::string tok;
            cin >> tok;
            r.cross_matched += cross(ec(label_of(p)), ec(label_of(q))).c == cross_cell(tok);
        }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

IdentityReport identity_suite(int samples, bool exact, std::uint64_t seed) {
    return exact ? run_identities<X>(samples, seed) : run_identities<double>(samples, seed);
}

G2Report g2_checks() {
    G2Report r;
    const auto& b = model_c_basis<X>();
    r.dimension = derivation_dimension(b);
    r.defect_alpha = derivation_defect(e_minus_alpha(), b);
    r.defect_beta = derivation_defect(e_minus_beta(), b);
    const ImOct<X> u = ec(2), v = ec(1), w = ec(-3);
    auto roundtrip = [&](const Mat7<X>& D) {
        const ImOct<X> du{D * u.c, Basis::ModelC}, dv{D * v.c, Basis::ModelC}, dw{D * w.c, Basis::ModelC};
        return extend_derivation(u, v, w, du, dv, dw) == D;
    };
    r.roundtrip_alpha = roundtrip(e_minus_alpha());
    r.roundtrip_beta = roundtrip(e_minus_beta());
    return r;
}

RegularityReport regularity_checks() {
    RegularityReport r;
    const QSqrt2 one(1), zero(0);
    r.at_alpha = regularity_invariant_ab(one, zero).re_rat().get_str();
    r.at_beta = regularity_invariant_ab(zero, one).re_rat().get_str();
    r.at_hitchin = regularity_invariant_ab(QSqrt2(mpq_class(5, 3)), one).re_rat().get_str();
    // |a|^2 = k/20 for k = 0..99 against |b|^2 in {1/2, 1, 3}
    const mpq_class bs[3] = {mpq_class(1, 2), mpq_class(1), mpq_class(3)};
    for (int k = 0; k < 100; ++k) {
        const mpq_class a2(k, 20);
        const ExactScalar I = regularity_invariant_ab(QSqrt2(a2), QSqrt2(bs[k % 3]));
        const bool alpha_regular = I != X(1);
        r.mismatches += alpha_regular != (k != 0);
        ++r.sweep;
    }
    return r;
}

FiberReport fiber_validity(int ein_samples, int pho_samples, int null_lines, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0, 2 * std::numbers::pi);
    FiberReport r;
    const auto f0 = model_frenet<double>();
    FrenetSplitting<double> f = f0;
    Pencil<double> beta = beta_pencil(f), alpha = alpha_pencil(f);
    auto refresh = [&] {
        f = moved(f0, random_g2_m(rng));
        beta = beta_pencil(f, 1e-9);
        alpha = alpha_pencil(f, 1e-9);
    };
    constexpr int kPerSplitting = 50;
    for (int n = 0; n < ein_samples; ++n) {
        if (n % kPerSplitting == 0) refresh();
        ++r.ein_samples;
        try {
            const NullLine<double> l = ein_fiber_sample(f, ang(rng), ang(rng), ang(rng));
            const double res = std::abs(qform_m<double>(l.rep, l.rep)) / l.rep.squaredNorm();
            r.max_null_residual = std::max(r.max_null_residual, res);
            const bool h = beta_base_membership(beta, l, 1e-8), so = beta_base_membership_so34(beta, l, 1e-8),
                       g2 = beta_base_membership_g2(beta, l, 1e-8);
            r.ein_failures += !(res < 1e-10 && h && so && g2);
        } catch (const std::exception&) {
            ++r.ein_failures;
        }
    }
    for (int n = 0; n < pho_samples; ++n) {
        if (n % kPerSplitting == 0) refresh();
        ++r.pho_samples;
        try {
            // keep x away from the poles of the angle chart
            const double t = 0.05 + (std::numbers::pi - 0.1) * ang(rng) / (2 * std::numbers::pi);
            const Photon<double> w = pho_fiber_sample(f, alpha, t, ang(rng), ang(rng));
            const double res = photon_residual(w);
            r.max_photon_residual = std::max(r.max_photon_residual, res);
            r.pho_failures += !(res < 1e-10 && pho_base_membership(alpha, w, 1e-8));
        } catch (const std::exception&) {
            ++r.pho_failures;
        }
    }
    // random null lines [u + z], u in Q+(P), z in Q-(P^perp): the three base tests must coincide
    for (int n = 0; n < null_lines; ++n) {
        if (n % kPerSplitting == 0) refresh();
        NullLine<double> l;
        if (n % 2 == 0) {
            // half of the samples on the fiber to exercise both outcomes
            l = ein_fiber_sample(f, ang(rng), ang(rng), ang(rng));
        } else {
            Vec7<double> z = Vec7<double>::Zero();
            const Vec7<double> u = std::cos(ang(rng)) * f.x + std::sin(ang(rng)) * f.N.col(0) + std::cos(ang(rng)) * f.N.col(1);
            for (int c = 0; c < 2; ++c) z += std::cos(ang(rng)) * f.T.col(c) + std::sin(ang(rng)) * f.B.col(c);
            const double qu = qform_m<double>(u, u), qz = qform_m<double>(z, z);
            if (qu < 1e-6 || qz > -1e-6) continue;
            l.rep = u / std::sqrt(qu) + z / std::sqrt(-qz);
        }
        ++r.equivalence_samples;
        const bool h = beta_base_membership(beta, l, 1e-8);
        r.equivalence_members += h;
        r.equivalence_failures +=
            !(h == beta_base_membership_so34(beta, l, 1e-8) && h == beta_base_membership_g2(beta, l, 1e-8));
    }
    return r;
}

OrbitReport orbit_classifiers(int pairs, std::uint64_t seed) {
    OrbitReport r;
    {
        auto xr = [](int k) { return Vec7<X>(basis_frame<X>(Basis::ModelR).col(pos_of(k))); };
        Mat73<X> T0, T1;
        T0 << xr(3), xr(2), xr(1);
        T1 << xr(-3), xr(2), xr(1);
        const auto c0 = iso3_orbit(T0);
        r.iso3_representatives = c0.orbit == Iso3Orbit::O0 && c0.generator &&
                                 same_line(*c0.generator, make_null_line<X>(xr(3))) &&
                                 iso3_orbit(T1).orbit == Iso3Orbit::O1;
        const Photon<X> w = photon_r(3, 2);
        r.pair_representatives = photon_pair_orbit(w, w).k == 0 && photon_pair_orbit(w, photon_r(3, 1)).k == 1 &&
                                 photon_pair_orbit(w, photon_r(-3, -1)).k == 2 &&
                                 photon_pair_orbit(w, photon_r(-2, -3)).k == 3;
    }
    std::mt19937_64 rng(seed);
    const int reps[4][2] = {{3, 2}, {3, 1}, {-3, -1}, {-2, -3}};
    const Mat7<double>& F = basis_frame<double>(Basis::ModelR);
    for (int t = 0; t < pairs; ++t) {
        const int k = int(rng() % 4);
        const Mat7<double> g = random_g2_m(rng);
        const Photon<double> a = make_photon<double>(g * F.col(pos_of(3)), g * F.col(pos_of(2)), 1e-8);
        const Photon<double> b =
            make_photon<double>(g * F.col(pos_of(reps[k][0])), g * F.col(pos_of(reps[k][1])), 1e-8);
        ++r.pairs;
        r.orbit_mismatches += photon_pair_orbit(a, b, 1e-8).k != k;
        // thickening: k <= 1, a common annihilator, and b orthogonal to a all coincide
        double m = 0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const Vec7<double> ai = i ? a.w2() : a.w1(), bj = j ? b.w2() : b.w1();
                m = std::max(m, std::abs(qform_m<double>(ai, bj)) / (ai.norm() * bj.norm()));
            }
        const bool near = k <= 1;
        r.thickening_mismatches += in_thickening(a, b, 1e-8) != near || (m < 1e-8) != near ||
                                   common_annihilator(a, b, 1e-8).has_value() != near;
    }
    return r;
}

nlohmann::json to_json(const TableReport& r) {
    return {{"table1", std::to_string(r.product_matched) + "/49"},
            {"table2", std::to_string(r.cross_matched) + "/49"},
            {"seconds", r.seconds},
            {"verdict", r.pass() ? "pass" : "fail"}};
}

nlohmann::json to_json(const IdentityReport& r) {
    return {{"samples", r.samples},
            {"exact", r.exact},
            {"composition_failures", r.composition},
            {"dcp_failures", r.double_cross},
            {"alternating_failures", r.alternating},
            {"conjugation_failures", r.conjugation},
            {"verdict", r.pass() ? "pass" : "fail"}};
}

nlohmann::json to_json(const G2Report& r) {
    return {{"g2_dim", r.dimension},
            {"defect_e_minus_alpha", r.defect_alpha},
            {"defect_e_minus_beta", r.defect_beta},
            {"roundtrip_e_minus_alpha", r.roundtrip_alpha},
            {"roundtrip_e_minus_beta", r.roundtrip_beta},
            {"verdict", r.pass() ? "pass" : "fail"}};
}

nlohmann::json to_json(const RegularityReport& r) {
    return {{"I_a1_b0", r.at_alpha},
            {"I_a0_b1", r.at_beta},
            {"I_hitchin", r.at_hitchin},
            {"sweep", r.sweep},
            {"sweep_mismatches", r.mismatches},
            {"verdict", r.pass() ? "pass" : "fail"}};
}

nlohmann::json to_json(const FiberReport& r) {
    return {{"ein_samples", r.ein_samples},
            {"ein_failures", r.ein_failures},
            {"pho_samples", r.pho_samples},
            {"pho_failures", r.pho_failures},
            {"equivalence_samples", r.equivalence_samples},
            {"equivalence_failures", r.equivalence_failures},
            {"equivalence_members", r.equivalence_members},
            {"max_null_residual", r.max_null_residual},
            {"max_photon_residual", r.max_photon_residual},
            {"verdict", r.pass() ? "pass" : "fail"}};
}

nlohmann::json to_json(const OrbitReport& r) {
    return {{"iso3_representatives", r.iso3_representatives},
            {"pair_representatives", r.pair_representatives},
            {"pairs", r.pairs},
            {"orbit_mismatches", r.orbit_mismatches},
            {"thickening_mismatches", r.thickening_mismatches},
            {"verdict", r.pass() ? "pass" : "fail"}};
}

}  // namespace g2f::suites

#pragma once

/// Self-contained verification suites over the algebra and geometry layers, shared by the
/// command-line tool and the acceptance runner.

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

namespace g2f::suites {

struct TableReport {
    int product_matched = 0;  // of 49 imaginary-unit products
    int cross_matched = 0;    // of 49 model C-basis cross products
    double seconds = 0;
    bool pass() const { return product_matched == 49 && cross_matched == 49; }
};
TableReport table_reproduction();

/// Failure counts over random samples; exact uses Q(sqrt2)[i] coordinates, otherwise doubles at 1e-9.
struct IdentityReport {
    int samples = 0;
    bool exact = true;
    int composition = 0, double_cross = 0, alternating = 0, conjugation = 0;
    bool pass() const { return composition + double_cross + alternating + conjugation == 0; }
};
IdentityReport identity_suite(int samples, bool exact, std::uint64_t seed = 2024);

struct G2Report {
    int dimension = 0;
    double defect_alpha = -1, defect_beta = -1;
    bool roundtrip_alpha = false, roundtrip_beta = false;
    bool pass() const {
        return dimension == 14 && defect_alpha == 0 && defect_beta == 0 && roundtrip_alpha && roundtrip_beta;
    }
};
G2Report g2_checks();

struct RegularityReport {
    std::string at_alpha, at_beta, at_hitchin;  // exact rationals at (1,0), (0,1), (sqrt(5/3),1)
    int sweep = 0, mismatches = 0;
    bool pass() const {
        return at_alpha == "0" && at_beta == "1" && at_hitchin == "243/343" && sweep == 100 && mismatches == 0;
    }
};
RegularityReport regularity_checks();

struct FiberReport {
    int ein_samples = 0, ein_failures = 0;
    int pho_samples = 0, pho_failures = 0;
    int equivalence_samples = 0, equivalence_failures = 0, equivalence_members = 0;
    double max_null_residual = 0, max_photon_residual = 0;
    bool pass() const { return ein_failures == 0 && pho_failures == 0 && equivalence_failures == 0; }
};
/// Random Frenet splittings (random group images of the model) and random fiber parameters.
FiberReport fiber_validity(int ein_samples, int pho_samples, int null_lines, std::uint64_t seed = 7);

struct OrbitReport {
    bool iso3_representatives = false, pair_representatives = false;
    int pairs = 0, orbit_mismatches = 0, thickening_mismatches = 0;
    bool pass() const {
        return iso3_representatives && pair_representatives && orbit_mismatches == 0 && thickening_mismatches == 0;
    }
};
OrbitReport orbit_classifiers(int pairs, std::uint64_t seed = 37);

nlohmann::json to_json(const TableReport& r);
nlohmann::json to_json(const IdentityReport& r);
nlohmann::json to_json(const G2Report& r);
nlohmann::json to_json(const RegularityReport& r);
nlohmann::json to_json(const FiberReport& r);
nlohmann::json to_json(const OrbitReport& r);

}  // namespace g2f::suites

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "g2forge/suites.hpp"

using namespace g2f::suites;

TEST_CASE("multiplication tables") {
    const TableReport r = table_reproduction();
    CHECK(r.product_matched == 49);
    CHECK(r.cross_matched == 49);
    CHECK(r.seconds < 1.0);
    CHECK(to_json(r)["table1"] == "49/49");
}

TEST_CASE("identity suite, exact and floating") {
    const IdentityReport e = identity_suite(50, true);
    CHECK(e.exact);
    CHECK(e.pass());
    const IdentityReport d = identity_suite(200, false);
    CHECK_FALSE(d.exact);
    CHECK(d.pass());
}

TEST_CASE("derivation algebra checks") {
    const G2Report r = g2_checks();
    CHECK(r.dimension == 14);
    CHECK(r.defect_alpha == 0);
    CHECK(r.defect_beta == 0);
    CHECK(r.roundtrip_alpha);
    CHECK(r.roundtrip_beta);
}

TEST_CASE("regularity invariant values") {
    const RegularityReport r = regularity_checks();
    CHECK(r.at_alpha == "0");
    CHECK(r.at_beta == "1");
    CHECK(r.at_hitchin == "243/343");
    CHECK(r.sweep == 100);
    CHECK(r.mismatches == 0);
}

TEST_CASE("fiber samples lie over their bases") {
    const FiberReport r = fiber_validity(300, 300, 300);
    CHECK(r.ein_samples == 300);
    CHECK(r.pho_samples == 300);
    CHECK(r.equivalence_samples > 200);
    CHECK(r.ein_failures == 0);
    CHECK(r.pho_failures == 0);
    CHECK(r.equivalence_failures == 0);
    CHECK(r.max_null_residual < 1e-10);
    CHECK(r.max_photon_residual < 1e-10);
}

TEST_CASE("off-fiber null lines are rejected by all three tests") {
    // odd samples are generic null lines, off the fiber
    const FiberReport r = fiber_validity(0, 0, 100, 99);
    CHECK(r.equivalence_failures == 0);
    CHECK(r.equivalence_members == 50);
    CHECK(r.equivalence_samples > 90);
}

TEST_CASE("orbit classifiers") {
    const OrbitReport r = orbit_classifiers(200);
    CHECK(r.iso3_representatives);
    CHECK(r.pair_representatives);
    CHECK(r.pairs == 200);
    CHECK(r.orbit_mismatches == 0);
    CHECK(r.thickening_mismatches == 0);
}

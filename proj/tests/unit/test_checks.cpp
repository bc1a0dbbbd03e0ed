#include "cgqed/checks.hpp"

#include <doctest.h>

using namespace cgqed;

TEST_SUITE("checks") {

TEST_CASE("ward at rest") {
    const WardReport w = ward_residual(FourVector{}, 1.0);
    CHECK(w.passed());
    CHECK(w.delta_residual == 0.0);
}

TEST_CASE("richardson tightens the finite residual") {
    const FourVector p(0.5, 0.3, 0.0, 0.0);
    const WardReport a = ward_residual(p, 1.0, 1e-3);
    const WardReport b = ward_residual(p, 1.0, 1e-3, {}, true);
    CHECK(a.passed());
    CHECK(b.finite_residual <= a.finite_residual);
}

TEST_CASE("partsum at one point") {
    const PartsumReport r = partsum_audit(FourVector(0.4, 0.2, -0.1, 0.3), 1.0);
    CHECK(r.delta_exact);
    CHECK(r.constants_exact);
    CHECK(r.max_residual() <= r.tolerance);
}

TEST_CASE("random kinematics are deterministic and in range") {
    const auto a = random_kinematics(6, 2.0, 7);
    const auto b = random_kinematics(6, 2.0, 7);
    REQUIRE(a.size() == 6);
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(a[k].t == b[k].t);
        CHECK(minkowski_square(a[k]) <= 0.8 * 4.0 + 1e-12);
    }
}

TEST_CASE("closed-form integral rows") {
    const IntegralReport r = integral_checks(false);
    CHECK(r.passed());
    CHECK_FALSE(r.fi9.has_value());
}

TEST_CASE("identity tables") {
    const IdentityReport r = identity_checks();
    CHECK(r.rows.size() == 25);
    CHECK(r.passed());
}

}

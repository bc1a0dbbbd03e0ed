#include "cgqed/errors.hpp"
#include "cgqed/selfenergy.hpp"

#include <doctest.h>

using namespace cgqed;

namespace {
const SEPart kParts[] = {SEPart::coulomb, SEPart::gaunt, SEPart::scalar_retardation, SEPart::total_renormalized};
}

TEST_SUITE("selfenergy") {

TEST_CASE("Delta coefficient tables") {
    using R = Rational;
    CHECK(self_energy_delta_rational(SEPart::coulomb) == RationalBasis{R(2), R(0), R(4, 3)});
    CHECK(self_energy_delta_rational(SEPart::gaunt) == RationalBasis{R(3), R(-3, 2), R(1, 2)});
    CHECK(self_energy_delta_rational(SEPart::scalar_retardation) == RationalBasis{R(-1), R(1, 2), R(-5, 6)});
    // -(pslash - m) = m - g0 p0 + g.p
    CHECK(self_energy_delta_rational(SEPart::total_renormalized) == RationalBasis{R(1), R(-1), R(1)});
    for (SEPart p : kParts) {
        CAPTURE(to_string(p));
        CHECK(derive_delta_rational(p) == self_energy_delta_rational(p));
    }
}

TEST_CASE("finite constants follow from the part sum") {
    using R = Rational;
    RationalBasis sum;
    for (SEPart p : {SEPart::coulomb, SEPart::gaunt, SEPart::scalar_retardation}) sum = sum + self_energy_constant_rational(p);
    CHECK(sum.c_gp == R(19, 6));
    CHECK(sum.c_g0p0 == R(-1, 2));
    CHECK(sum.c_m == R(4));
    CHECK(sum - RationalBasis{onshell_subtraction_constant().c_m, R(0), R(0)} ==
          self_energy_constant_rational(SEPart::total_renormalized));
    for (SEPart p : kParts) CHECK(derive_constant_rational(p) == self_energy_constant_rational(p));
}

TEST_CASE("zero momentum") {
    const SelfEnergyResult r = self_energy(SEKinematics{FourVector{}, 1.0}, SEPart::total_renormalized);
    CHECK(frobenius(r.value.delta_coeff - identity()) < 1e-14);
    CHECK(frobenius(r.value.finite) <= 1e-8);
}

TEST_CASE("delta matrix matches the rational table") {
    const SEKinematics k{FourVector(0.5, 0.2, -0.1, 0.0), 1.2};
    for (SEPart p : kParts) {
        const RationalBasis b = self_energy_delta_rational(p);
        const BasisCoefficients c{boost::rational_cast<double>(b.c_m), boost::rational_cast<double>(b.c_g0p0),
                                  boost::rational_cast<double>(b.c_gp)};
        CHECK(frobenius(self_energy_delta(k, p) - reconstruct(c, k.p, k.m)) < 1e-14);
    }
}

TEST_CASE("printed scalar-retardation logs break the part sum") {
    const SEKinematics k{FourVector(0.5, 0.3, 0.0, 0.0), 1.0};
    const SelfEnergyResult a = self_energy(k, SEPart::scalar_retardation);
    const SelfEnergyResult b = self_energy(k, SEPart::scalar_retardation, {}, ScalarRetardationForm::as_printed);
    CHECK(frobenius(a.value.finite - b.value.finite) > 1e-3);
}

TEST_CASE("domain") {
    CHECK(SEKinematics{FourVector(1.0, 0.0, 0.0, 0.0), 1.0}.domain_valid());
    CHECK_FALSE(SEKinematics{FourVector(1.5, 0.0, 0.0, 0.0), 1.0}.domain_valid());
    CHECK_THROWS_AS(self_energy(SEKinematics{FourVector(1.5, 0.0, 0.0, 0.0), 1.0}, SEPart::coulomb),
                    KinematicsOutOfDomain);
}

TEST_CASE("on-shell sandwich vanishes") {
    const SandwichResult s = onshell_sandwich({0.3, 0.0, 0.0}, 1.0);
    CHECK(std::abs(s.finite) <= 1e-5);
    CHECK(std::abs(s.delta) <= 1e-12);
}

}

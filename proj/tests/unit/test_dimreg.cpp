#include "cgqed/dimreg.hpp"
#include "cgqed/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace cgqed;

namespace {
double max_diff(const ComplexTensor& a, const ComplexTensor& b) {
    double d = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k) d = std::max(d, std::abs(a.data()[k] - b.data()[k]));
    return d;
}
}  // namespace

TEST_SUITE("dimreg") {

TEST_CASE("gamma_w expansion") {
    const EpsScalar a2 = gamma_w_expansion(2, 3.0, 1.0);
    CHECK(a2.delta_coeff == Complex(1.0));
    CHECK(a2.finite.real() == doctest::Approx(-std::log(3.0)));
    const EpsScalar a1 = gamma_w_expansion(1, 2.0, 1.0);
    CHECK(a1.delta_coeff.real() == doctest::Approx(-2.0));
    CHECK(a1.finite.real() == doctest::Approx(-2.0 * (1.0 - std::log(2.0))));
    const EpsScalar a4 = gamma_w_expansion(4, 2.0, 1.0);
    CHECK(a4.delta_coeff == Complex(0.0));
    CHECK(a4.finite.real() == doctest::Approx(0.25));
    CHECK_THROWS_AS(gamma_w_expansion(0, 1.0, 1.0), OutsideValidity);
    CHECK_THROWS_AS(gamma_w_expansion(2, 0.0, 1.0), NonpositiveW);
}

TEST_CASE("FI4 closed form") {
    // int d^4k 1/(k^2 + s)^3 = i pi^2 / (2 s)
    const ComplexTensor t = fi_closed(IntegralKind::FI4, 3.0, FourVector{}, -2.0);
    CHECK(std::abs(t.at() - Complex(0.0, std::numbers::pi * std::numbers::pi / (2.0 * -2.0))) < 1e-14);
}

TEST_CASE("rank-2 derived form agrees with FI9 at n = 4, not with FI14") {
    const FourVector q(0.0, 0.2, -0.1, 0.4);
    CHECK(max_diff(fi_rank2_derived(4.0, q, -1.5), fi9_printed(q, -1.5)) < 1e-15);
    CHECK(max_diff(fi_rank2_derived(4.0, q, -1.5), fi_closed(IntegralKind::FI14, 4.0, q, -1.5)) > 1e-3);
}

TEST_CASE("covariant DI at D = 4 match the closed forms") {
    const FourVector q(0.5, 0.1, -0.2, 0.3);
    const double norm = 1.0 / std::pow(2.0 * std::numbers::pi, 4);
    const EpsTensor di = di_covariant(IntegralKind::DI4, 4, q, -1.0);
    const ComplexTensor fi = fi_closed(IntegralKind::FI10, 4.0, q, -1.0);
    CHECK(di.at().delta_coeff == Complex(0.0));
    CHECK(std::abs(di.at().finite - norm * fi.at()) < 1e-15);
    const EpsTensor d2 = di_covariant(IntegralKind::DI4, 2, q, -1.0);
    CHECK(std::abs(d2.at().delta_coeff) > 0.0);
    CHECK_THROWS_AS(di_covariant(IntegralKind::DI4, 2, FourVector(0.5, 0, 0, 0), 1.0), NonpositiveW);
}

TEST_CASE("DI7k printed table differs from the derived one") {
    const FourVector q(0.3, 0.2, 0.0, 0.1);
    const EpsTensor a = di_coulomb(IntegralKind::DI7k, 3, q, -1.0);
    const EpsTensor b = di_coulomb(IntegralKind::DI7k, 3, q, -1.0, {}, 1.0, Di7kForm::as_printed);
    double d = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k) d = std::max(d, std::abs(a.data()[k].finite - b.data()[k].finite));
    CHECK(d > 1e-6);
}

TEST_CASE("Feynman combination") {
    CHECK(combined_scalar({1.0, 3.0}, 0.25) == doctest::Approx(1.5));
    CHECK(combined_scalar({1.0, 3.0, 2.0}, 0.5, 0.5) == doctest::Approx(1.5));
    const FeynmanParametrization f =
        feynman_combine({Denominator{FourVector{}, 0.0}, Denominator{FourVector(1.0, 0.0, 0.0, 0.0), 1.0}}, {1, 1});
    CHECK(f.parameters == 1);
    CHECK(f.power == 2);
    CHECK_THROWS_AS(feynman_combine({Denominator{}, Denominator{}}, {3, 1}), UnsupportedArity);
}

}

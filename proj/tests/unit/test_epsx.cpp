#include "cgqed/epsx.hpp"
#include "cgqed/errors.hpp"

#include <doctest.h>

using namespace cgqed;

TEST_SUITE("epsx") {

TEST_CASE("scalar arithmetic") {
    const EpsScalar a(Complex(2.0), Complex(0.5));
    const EpsScalar b = EpsScalar::constant(Complex(3.0));
    const EpsScalar prod = a * b;
    CHECK(prod.delta_coeff == Complex(6.0));
    CHECK(prod.finite == Complex(1.5));
    const EpsScalar diff = a - a;
    CHECK(diff.delta_coeff == Complex(0.0));
    CHECK(diff.finite == Complex(0.0));
    CHECK(epsilon_times_delta_limit() == 2.0);
}

TEST_CASE("Delta squared is refused") {
    CHECK_THROWS_AS(EpsScalar::delta() * EpsScalar::delta(), DeltaSquared);
    CHECK_NOTHROW(EpsScalar::delta() * identity());
}

TEST_CASE("matrix products keep both parts") {
    const EpsMatrix m(gamma(0), 0.5 * gamma(0));
    const EpsMatrix sq = gamma(0) * m;
    CHECK(frobenius(sq.delta_coeff - identity()) < 1e-15);
    CHECK(frobenius(sq.finite - 0.5 * identity()) < 1e-15);
    const EpsMatrix sum = eps_combine(m, m, CombineOp::add);
    CHECK(frobenius(sum.delta_coeff - 2.0 * gamma(0)) < 1e-15);
}

TEST_CASE("json round trip") {
    const EpsMatrix m(gamma(2), Complex(0.25, -1.0) * gamma(1) * gamma(3));
    const EpsMatrix back = eps_matrix_from_json(to_json(m));
    CHECK(frobenius(back.delta_coeff - m.delta_coeff) == 0.0);
    CHECK(frobenius(back.finite - m.finite) == 0.0);
}

}

#include "cgqed/dimreg.hpp"
#include "cgqed/errors.hpp"
#include "cgqed/oracle.hpp"

#include <doctest.h>

using namespace cgqed;

TEST_SUITE("oracle") {

TEST_CASE("FI7 at a moving point") {
    OracleRequest r;
    r.n = 3;
    r.kin = {FourVector(0.0, 0.3, 0.0, 0.0), -1.0};
    const OracleResult o = wick_direct(r);
    const Complex ref = fi_closed(IntegralKind::FI7, 3.0, r.kin.q, r.kin.s).at();
    CHECK(o.converged);
    CHECK(std::abs(o.value - ref) <= 1e-6 * std::abs(ref));
    CHECK(o.tail_bound < 1e-9);
}

TEST_CASE("reflection zeros are exact") {
    OracleRequest r;
    r.n = 3;
    r.numerator = {0};
    r.kin = {FourVector(0.0, 0.3, 0.0, 0.0), -1.0};
    CHECK(wick_direct(r).value == Complex(0.0));
    r.numerator = {2};
    CHECK(wick_direct(r).value == Complex(0.0));
}

TEST_CASE("refused requests") {
    OracleRequest r;
    r.n = 2;  // log divergent
    CHECK_THROWS_AS(wick_direct(r), NonconvergentPowerCounting);
    r.n = 3;
    r.kin.q = FourVector(0.1, 0.0, 0.0, 0.0);
    CHECK_THROWS_AS(wick_direct(r), DenominatorVanishes);
    r.kin = {FourVector{}, 0.5};
    CHECK_THROWS_AS(wick_direct(r), DenominatorVanishes);
}

}

#include "cgqed/errors.hpp"
#include "cgqed/quad.hpp"

#include "../common/quad_corpus.hpp"

#include <doctest.h>

#include <cmath>

using namespace cgqed;

TEST_SUITE("quad") {

TEST_CASE("closed-form corpus entries") {
    for (const corpus::Entry& e : corpus::entries()) {
        if (std::isnan(e.exact)) continue;
        CAPTURE(e.name);
        const QuadResult r = integrate(e.f, e.dim, QuadSpec{}.with_tolerance(1e-12, 1e-14).with_transforms(e.transforms));
        CHECK(r.converged);
        CHECK(std::abs(r.value - e.exact) <= 1e-12 * std::max(1.0, std::abs(e.exact)));
    }
}

TEST_CASE("matrix integrands") {
    const MatrixQuadResult r = integrate_matrix([](const Point& x) -> DiracMatrix { return std::log(x[0]) * gamma(0); }, 1,
                                                QuadSpec{}.with_transforms({AxisTransform::tanh_sinh}));
    CHECK(frobenius(r.value + gamma(0)) < 1e-10);
    const DiracMatrix gp = gamma_dot({1.0, 0.0, 0.0});
    const MatrixQuadResult c = integrate_matrix([&](const Point&) -> DiracMatrix { return gp; }, 2);
    CHECK(frobenius(c.value - gp) < 1e-14);
}

TEST_CASE("halving rel_tol stays within the previous error estimate") {
    for (const corpus::Entry& e : corpus::entries()) {
        CAPTURE(e.name);
        for (double tol : {1e-6, 1e-8}) {
            const QuadSpec s = QuadSpec{}.with_tolerance(tol, 1e-14).with_transforms(e.transforms);
            const QuadResult a = integrate(e.f, e.dim, s);
            const QuadResult b = integrate(e.f, e.dim, s.with_tolerance(tol / 2, 1e-14));
            CHECK(std::abs(a.value - b.value) <= a.err_estimate);
        }
    }
}

TEST_CASE("failure modes") {
    CHECK_THROWS_AS(integrate([](const Point&) { return 1.0; }, 1, QuadSpec{}.with_tolerance(-1.0, 1e-12)),
                    InvalidQuadSpec);
    CHECK_THROWS_AS(integrate([](const Point&) { return 1.0; }, 4), InvalidQuadSpec);
    CHECK_THROWS_AS(integrate([](const Point& x) { return x[0] < 0.5 ? NAN : 1.0; }, 1), NonFiniteIntegrand);
    CHECK_THROWS_AS(require_converged(false, "test"), ToleranceNotReached);
    QuadSpec tiny = QuadSpec{}.with_tolerance(1e-15, 1e-300);
    tiny.max_subdivisions = 3;
    const QuadResult r = integrate([](const Point& x) { return 1.0 / std::sqrt(x[0]); }, 1, tiny);
    CHECK_FALSE(r.converged);
}

}

#include "cgqed/errors.hpp"
#include "cgqed/vertex.hpp"

#include <doctest.h>

using namespace cgqed;

TEST_SUITE("vertex") {

TEST_CASE("zero momenta") {
    const VKinematics k{FourVector{}, FourVector{}, 1.0};
    const VertexResult g = vertex(k, VertexPart::gaunt_like);
    CHECK(frobenius(g.value.delta_coeff - gamma(0)) < 1e-14);
    CHECK(frobenius(g.value.finite - 0.5 * gamma(0)) <= 1e-6);
    const VertexResult t = vertex(k, VertexPart::total);
    CHECK(frobenius(t.value.delta_coeff - gamma(0)) < 1e-14);
    CHECK(frobenius(t.value.finite - 0.5 * gamma(0)) <= 1e-6);
}

TEST_CASE("Delta parts") {
    CHECK(frobenius(vertex_delta(VertexPart::total) - gamma(0)) < 1e-15);
    CHECK(frobenius(vertex_delta(VertexPart::coulomb) + vertex_delta(VertexPart::gaunt_like) +
                    vertex_delta(VertexPart::non_gaunt_like) - vertex_delta(VertexPart::total)) < 1e-15);
}

TEST_CASE("parts add up") {
    const VKinematics k{FourVector(0.3, 0.1, 0.0, 0.0), FourVector(0.2, 0.0, 0.1, 0.0), 1.0};
    DiracMatrix sum = DiracMatrix::Zero();
    for (VertexPart p : {VertexPart::coulomb, VertexPart::gaunt_like, VertexPart::non_gaunt_like})
        sum += vertex(k, p).value.finite;
    const VertexResult t = vertex(k, VertexPart::total);
    CHECK(frobenius(sum - t.value.finite) < 1e-6);
    const VertexBasisDecomposition d = decompose_vertex_basis(t.value.finite, k);
    CHECK(d.residual < 1e-8);
}

TEST_CASE("domain") {
    const VKinematics bad{FourVector(1.2, 0.0, 0.0, 0.0), FourVector(1.2, 0.0, 0.0, 0.0), 1.0};
    CHECK_FALSE(bad.domain_valid());
    CHECK_FALSE(bad.domain_violation().empty());
    CHECK_THROWS_AS(vertex(bad, VertexPart::total), KinematicsOutOfDomain);
}

}

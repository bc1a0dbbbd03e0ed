#include "cgqed/dirac.hpp"

#include "cgqed/errors.hpp"

#include <cmath>

namespace cgqed {

namespace {

std::array<DiracMatrix, 4> build_gammas() {
    const Complex I(0.0, 1.0);
    std::array<DiracMatrix, 4> g;
    g[0] = DiracMatrix::Zero();
    g[0].diagonal() << 1.0, 1.0, -1.0, -1.0;

    // gamma^i = [[0, sigma_i], [-sigma_i, 0]]
    Eigen::Matrix2cd sigma[3];
    sigma[0] << 0.0, 1.0, 1.0, 0.0;
    sigma[1] << 0.0, -I, I, 0.0;
    sigma[2] << 1.0, 0.0, 0.0, -1.0;
    for (int i = 0; i < 3; ++i) {
        g[i + 1] = DiracMatrix::Zero();
        g[i + 1].topRightCorner<2, 2>() = sigma[i];
        g[i + 1].bottomLeftCorner<2, 2>() = -sigma[i];
    }
    return g;
}

const std::array<DiracMatrix, 4>& gammas() {
    static const std::array<DiracMatrix, 4> g = build_gammas();
    return g;
}

}  // namespace

const DiracMatrix& gamma(int mu) { return gammas().at(static_cast<std::size_t>(mu)); }

const DiracMatrix& identity() {
    static const DiracMatrix one = DiracMatrix::Identity();
    return one;
}

DiracMatrix gamma_dot(const ThreeVector& a) {
    return gamma(1) * a.x + gamma(2) * a.y + gamma(3) * a.z;
}

DiracMatrix slash(const FourVector& a) { return gamma(0) * a.t - gamma_dot(a.spatial()); }

DiracMatrix tilde(const FourVector& a) { return gamma(0) * a.t + gamma_dot(a.spatial()); }

Spinor spinor_u(const ThreeVector& p, double mass, bool spin_up) {
    const double energy = std::sqrt(mass * mass + dot(p, p));
    const Complex I(0.0, 1.0);
    Eigen::Vector2cd chi = spin_up ? Eigen::Vector2cd(1.0, 0.0) : Eigen::Vector2cd(0.0, 1.0);
    Eigen::Matrix2cd sigma_p;
    sigma_p << p.z, p.x - I * p.y, p.x + I * p.y, -p.z;

    Spinor u;
    u.head<2>() = chi;
    u.tail<2>() = sigma_p * chi / (energy + mass);
    return u * std::sqrt((energy + mass) / (2.0 * mass));
}

Complex sandwich(const Spinor& u, const DiracMatrix& a) {
    return (u.adjoint() * gamma(0) * a * u)(0, 0);
}

DiracMatrix reconstruct(const BasisCoefficients& c, const FourVector& p, double mass) {
    return identity() * (c.c_m * mass) + gamma(0) * (c.c_g0p0 * p.t) + gamma_dot(p.spatial()) * c.c_gp;
}

double frobenius(const DiracMatrix& m) { return m.norm(); }

BasisDecomposition decompose_basis(const DiracMatrix& mat, const FourVector& p, double mass) {
    if (!(mass > 0.0)) throw DegenerateKinematics("decompose_basis: mass must be positive");
    const ThreeVector pv = p.spatial();
    const double p2 = dot(pv, pv);

    BasisDecomposition out;
    out.coefficients.c_m = (mat.trace() / (4.0 * mass)).real();

    const Complex tr0 = (gamma(0) * mat).trace() / 4.0;
    if (p.t != 0.0) {
        out.coefficients.c_g0p0 = (tr0 / p.t).real();
    } else if (std::abs(tr0) > 1e-12 * (1.0 + mat.norm())) {
        throw DegenerateKinematics("decompose_basis: gamma^0 component present but p_0 = 0");
    }

    const Complex trp = -(gamma_dot(pv) * mat).trace() / 4.0;
    if (p2 != 0.0) {
        out.coefficients.c_gp = (trp / p2).real();
    } else if (std::abs(trp) > 1e-12 * (1.0 + mat.norm())) {
        throw DegenerateKinematics("decompose_basis: gamma.p component present but p = 0");
    }

    out.residual = (mat - reconstruct(out.coefficients, p, mass)).norm();
    if (out.residual > 1e-8 * mat.norm()) {
        throw ResidualOutsideBasis("decompose_basis: matrix not in span{1, gamma^0, gamma.p}, residual " +
                                   std::to_string(out.residual));
    }
    return out;
}

}  // namespace cgqed

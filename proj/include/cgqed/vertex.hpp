#pragma once

// Zeroth component of the one-loop free-electron vertex Lambda^0(p, p') in
// Coulomb gauge, in units of K = alpha/4pi:
//   coulomb          int dx int dy/sqrt(y) R_x/Delta_x
//   gaunt_like       g0 [Delta + int dx du (NumG - x(2x w' + 3w''))/Delta_y
//                         - int du ln((m^2 - u(1-u) d^2)/m^2)]
//   non_gaunt_like   g0 int dx du dz sqrt(z) [2xz R'_z/Delta_z^2 + R_z/Delta_z]
// All numerators are built as 4x4 matrix products.

#include "cgqed/dirac.hpp"
#include "cgqed/epsx.hpp"
#include "cgqed/quad.hpp"

#include <array>
#include <string>

namespace cgqed {

enum class VertexPart { coulomb, gaunt_like, non_gaunt_like, total };

std::string to_string(VertexPart part);

struct VKinematics {
    FourVector p;
    FourVector pp;  // p'
    double m = 1.0;

    FourVector d() const { return p - pp; }
    FourVector qA(double u) const { return (1.0 - u) * p + u * pp; }

    double delta_x(double x, double y) const;
    double delta_y(double x, double u) const;
    double delta_z(double x, double u, double z) const;

    // Delta_x, Delta_y, Delta_z > 0 on 64-point-per-axis midpoint grids and
    // >= 0 at the corners.
    bool domain_valid() const;
    std::string domain_violation() const;
};

// Matrix building blocks, exposed for tests.
DiracMatrix coulomb_numerator(const VKinematics& k, double x, double y);       // NumC
DiracMatrix coulomb_remainder(const VKinematics& k, double x, double y);       // R_x
DiracMatrix gaunt_numerator(const VKinematics& k, double x, double u);         // NumG at k = x qA
DiracMatrix non_gaunt_rz_prime(const VKinematics& k, double x, double u);      // R'_z
DiracMatrix non_gaunt_rz(const VKinematics& k, double x, double u);            // R_z

DiracMatrix vertex_delta(VertexPart part);

struct VertexResult {
    EpsMatrix value;
    double quad_error = 0.0;
};

// Throws KinematicsOutOfDomain, ToleranceNotReached.
VertexResult vertex(const VKinematics& kin, VertexPart part, const QuadSpec& spec = {});

// Least-squares coefficients on
// {1, g0, g.p, g.p', g0 g.p, g0 g.p', g.p g.p', g0 g.p g.p'}.
struct VertexBasisDecomposition {
    std::array<Complex, 8> coefficients{};
    double residual = 0.0;
};

VertexBasisDecomposition decompose_vertex_basis(const DiracMatrix& mat, const VKinematics& kin);

}  // namespace cgqed

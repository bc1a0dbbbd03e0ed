#pragma once

// One-loop free-electron self-energy in Coulomb gauge, in units of
// K = alpha/4pi, split by photon-propagator part:
//   coulomb             instantaneous 1/k_vec^2 part
//   gaunt               transverse delta_ij part
//   scalar_retardation  k_i k_j/(k_vec^2 k^2) part
//   total_renormalized  sum of the three minus the on-shell value m(3 Delta + 4)
//
// Feynman-parameter functions:
//   X(y)   = 1 + (p_vec^2/m^2)(1 - y)
//   Y(x)   = 1 - (p^2/m^2)(1 - x)
//   Z(x,y) = [p_vec^2 (1 - xy) - p0^2 (1 - x) + m^2] / m^2

#include "cgqed/dirac.hpp"
#include "cgqed/epsx.hpp"
#include "cgqed/quad.hpp"

#include <boost/rational.hpp>

#include <string>

namespace cgqed {

enum class SEPart { coulomb, gaunt, scalar_retardation, total_renormalized };

std::string to_string(SEPart part);

struct SEKinematics {
    FourVector p;
    double m = 1.0;

    double X(double y) const;
    double Y(double x) const;
    double Z(double x, double y) const;

    // p^2 <= m^2, X > 0 on a 64x64 grid plus corners, Y and Z >= 0 on the
    // boundary and > 0 at the interior grid points.
    bool domain_valid() const;
    std::string domain_violation() const;  // empty when valid
};

// Selects the logarithmic integrals of the scalar-retardation part:
//   corrected   -int (g0 p0 (1-x) + g.p (1-x) - m) lnY + 2 int int sqrt(y) g.p lnZ
//   as_printed  -int (g0 p0 (1-x) - g.p (1-x) - m) lnY - 3 int int sqrt(y) g.p lnZ
// Only the corrected form is consistent with the renormalized total.
enum class ScalarRetardationForm { corrected, as_printed };

using Rational = boost::rational<long long>;

// Exact coefficients on {m*1, g0 p0, g.p}.
struct RationalBasis {
    Rational c_m{0};
    Rational c_g0p0{0};
    Rational c_gp{0};

    bool operator==(const RationalBasis&) const = default;
};

RationalBasis operator+(const RationalBasis& a, const RationalBasis& b);
RationalBasis operator-(const RationalBasis& a, const RationalBasis& b);

// Delta coefficients of each part (total: the renormalized one, -(pslash - m)).
RationalBasis self_energy_delta_rational(SEPart part);
// Rational constants of the finite parts.
RationalBasis self_energy_constant_rational(SEPart part);
// The on-shell subtraction m(3 Delta + 4) as (Delta, finite) m-coefficients.
RationalBasis onshell_subtraction_delta();
RationalBasis onshell_subtraction_constant();

// Derivations of the finite constants from the Feynman-parameter moments
// int y^a dy = 1/(a+1) and int y^a (-ln y) dy = 1/(a+1)^2.
RationalBasis derive_constant_rational(SEPart part);
RationalBasis derive_delta_rational(SEPart part);

DiracMatrix self_energy_delta(const SEKinematics& kin, SEPart part);

struct SelfEnergyResult {
    EpsMatrix value;
    double quad_error = 0.0;
};

// Throws KinematicsOutOfDomain, ToleranceNotReached.
SelfEnergyResult self_energy(const SEKinematics& kin, SEPart part, const QuadSpec& spec = {},
                             ScalarRetardationForm form = ScalarRetardationForm::corrected);

struct SandwichResult {
    Complex finite{0.0, 0.0};
    Complex delta{0.0, 0.0};
    double quad_error = 0.0;
};

// ubar(p) Sigma_ren(p) u(p) at E = sqrt(m^2 + p_vec^2), spin up along z.
SandwichResult onshell_sandwich(const ThreeVector& p_vec, double m, const QuadSpec& spec = {});

}  // namespace cgqed

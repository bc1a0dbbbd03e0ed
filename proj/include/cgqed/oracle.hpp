#pragma once

// Brute-force evaluation of
//   int d^4k  k^{mu1}...k^{mur} / (k^2 + 2kq + s + i0)^n  [ / k_vec^2 ]
// by Wick rotation k^0 = i k_4 and direct quadrature in Euclidean
// hyperspherical coordinates (R, chi, theta) with the azimuth summed by an
// 8-point trapezoid rule (exact for the numerators allowed here). The radial
// axis is mapped by R = sqrt|s| tan(psi) and cut at `cutoff`; the neglected
// tail is bounded from the leading power law.
//
// Only q^0 = 0, s < 0 and q_vec^2 < |s| are supported. Values use the
// four-dimensional measure d^4k; divide by (2pi)^4 to compare with the
// d^Dk/(2pi)^D master integrals.

#include "cgqed/dirac.hpp"
#include "cgqed/quad.hpp"

#include <optional>
#include <vector>

namespace cgqed {

struct OracleKinematics {
    FourVector q;
    double s = -1.0;
};

struct OracleRequest {
    bool coulomb_factor = false;
    int n = 3;
    std::vector<int> numerator;  // upper indices, at most 3
    OracleKinematics kin;
    // When set, the integrand at `subtract` is subtracted pointwise; used for
    // integrals that only converge as a difference.
    std::optional<OracleKinematics> subtract;
    double cutoff = 0.0;  // 0 selects 1e6 sqrt|s|
    QuadSpec spec = QuadSpec{}.with_tolerance(1e-8, 1e-10);
};

struct OracleResult {
    Complex value{0.0, 0.0};
    double err_estimate = 0.0;
    double tail_bound = 0.0;
    bool converged = true;
};

// Throws NonconvergentPowerCounting, DenominatorVanishes.
OracleResult wick_direct(const OracleRequest& req);

// (2pi)^-4, converting the d^4k oracle value to the master-integral normalization.
double dimreg_normalization();

}  // namespace cgqed
